// gcon: solve, reduce and verify generalized connectivity instances.
//
// Exit codes: 0 success, 1 verification failure, 2 bad input or flags,
// 3 size guard refusal. GCON_FORCE=1 in the environment lifts the order
// guard of the global measures.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "gcon/errors.hpp"
#include "gcon/io.hpp"
#include "gcon/reductions.hpp"
#include "gcon/solver.hpp"
#include "gcon/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitGuard = 3;

struct SolveArgs {
  std::string measure;
  std::string graph;
  std::string terminals;
  std::optional<int> k;
  std::optional<int> decide;
  bool witness = false;
  bool force = false;
};

struct ReduceArgs {
  std::string kind;
  std::string input;
  std::string output;
  std::string terminals;
  std::optional<int> k;
  std::optional<int> ell;
};

struct VerifyArgs {
  std::string reduction;
  std::optional<int> max_n;
  std::optional<int> max_m;
  std::uint64_t seed = gcon::kDefaultSeed;
  std::string out;
  std::string artifacts;
  bool no_timing = false;
  bool serial = false;
};

bool env_force() {
  const char* v = std::getenv("GCON_FORCE");
  return v != nullptr && *v != '\0' && std::string(v) != "0";
}

gcon::VertexSet terminals_for(const std::string& flag, const gcon::GraphDocument& doc) {
  if (!flag.empty()) {
    gcon::VertexSet s = gcon::parse_vertex_list(flag);
    s.check_within(doc.graph.order());
    return s;
  }
  if (doc.terminals) return *doc.terminals;
  throw gcon::ValidationError("terminal set required (-S or a set line in the graph file)");
}

int require(const std::optional<int>& v, const char* name) {
  if (!v) throw gcon::ValidationError(std::string(name) + " is required for this subcommand");
  return *v;
}

void print_witness(const std::vector<gcon::SteinerTree>& trees) {
  for (const auto& t : trees) std::cout << gcon::format_tree(t) << "\n";
}

int run_solve(const SolveArgs& a) {
  const gcon::GraphDocument doc = gcon::parse_graph_document(gcon::read_file(a.graph));
  const gcon::Graph& g = doc.graph;
  const bool force = a.force || env_force();
  const std::string& m = a.measure;

  if (m == "kappa-set" || m == "lambda-set") {
    const gcon::VertexSet s = terminals_for(a.terminals, doc);
    const bool kappa = m == "kappa-set";
    if (a.decide) {
      const auto found = kappa ? gcon::find_kappa_packing(g, s, *a.decide) : gcon::find_lambda_packing(g, s, *a.decide);
      std::cout << (found ? "yes" : "no") << "\n";
      if (a.witness && found) print_witness(*found);
      return kExitOk;
    }
    const gcon::PackingResult r = kappa ? gcon::kappa_set(g, s) : gcon::lambda_set(g, s);
    std::cout << r.value << "\n";
    if (a.witness) print_witness(r.witness);
    return kExitOk;
  }

  int value = 0;
  if (m == "kappa-k" || m == "lambda-k") {
    const int k = require(a.k, "-k");
    value = m == "kappa-k" ? gcon::kappa_k(g, k, force) : gcon::lambda_k(g, k, force);
  } else {
    value = m == "kappa" ? gcon::classical_kappa(g) : gcon::classical_lambda(g);
  }
  if (a.decide) {
    std::cout << (value >= *a.decide ? "yes" : "no") << "\n";
  } else {
    std::cout << value << "\n";
  }
  return kExitOk;
}

int run_reduce(const ReduceArgs& a) {
  const std::string text = gcon::read_file(a.input);
  gcon::ReductionOutput out;
  if (a.kind == "3dm-p1") {
    out = gcon::reduce_3dm_to_p1(gcon::parse_3dm(text));
  } else if (a.kind == "3sat-lambda2") {
    out = gcon::reduce_3sat_to_lambda2(gcon::parse_cnf(text));
  } else {
    const gcon::GraphDocument doc = gcon::parse_graph_document(text);
    if (a.kind == "p1-kappa") {
      out = gcon::reduce_p1_to_kappa(doc.graph);
    } else if (a.kind == "linegraph") {
      out = gcon::reduce_lambda_to_kappa(doc.graph, terminals_for(a.terminals, doc));
    } else if (a.kind == "expand-k") {
      out = gcon::reduce_lambda3_to_lambdak(doc.graph, terminals_for(a.terminals, doc), require(a.ell, "--l"),
                                            require(a.k, "--k"));
    } else {
      out = gcon::reduce_lambda2_to_lambdal(doc.graph, terminals_for(a.terminals, doc), require(a.ell, "--l"));
    }
  }

  if (!a.output.empty()) gcon::write_file(a.output, gcon::serialize_reduction(out));
  std::cout << "V=" << out.graph.order() << " E=" << out.graph.size() << " ";
  if (a.kind == "3dm-p1") {
    std::cout << "q=" << *out.threshold;
  } else {
    std::cout << "l=" << (out.threshold ? std::to_string(*out.threshold) : "-");
  }
  std::cout << "\n";
  return kExitOk;
}

int run_verify(const VerifyArgs& a) {
  std::vector<std::string> names;
  if (a.reduction == "all") {
    names = gcon::reduction_names();
  } else {
    const auto& known = gcon::reduction_names();
    if (std::find(known.begin(), known.end(), a.reduction) == known.end()) {
      throw gcon::ValidationError("unknown reduction " + a.reduction);
    }
    names.push_back(a.reduction);
  }

  gcon::VerifyBudget budget;
  budget.max_n = a.max_n;
  budget.max_m = a.max_m;
  budget.seed = a.seed;
  budget.parallel = !a.serial;
  budget.timing = !a.no_timing;

  std::string text;
  std::string summaries;
  bool ok = true;
  for (const auto& name : names) {
    const gcon::VerificationReport r = gcon::verify_reduction(name, budget);
    const std::string block = gcon::serialize_report(r);
    text += block;
    summaries += block.substr(block.rfind('\n', block.size() - 2) + 1);
    if (!a.artifacts.empty()) gcon::write_failure_artifacts(r, a.artifacts);
    ok = ok && r.passed();
  }
  if (a.out.empty()) {
    std::cout << text;
  } else {
    gcon::write_file(a.out, text);
    std::cout << summaries;
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact generalized connectivity solver and reduction checker", "gcon"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Compute kappa/lambda values");
  s->add_option("measure", solve.measure, "kappa-set | lambda-set | kappa-k | lambda-k | kappa | lambda")
      ->required()
      ->check(CLI::IsMember({"kappa-set", "lambda-set", "kappa-k", "lambda-k", "kappa", "lambda"}));
  s->add_option("-g,--graph", solve.graph, "Graph file")->required();
  s->add_option("-S,--set", solve.terminals, "Terminal set, comma separated");
  s->add_option("-k", solve.k, "Terminal set size for the global measures");
  s->add_option("--decide", solve.decide, "Print yes/no for value >= l")->check(CLI::NonNegativeNumber);
  s->add_flag("--witness", solve.witness, "Print the packing trees");
  s->add_flag("--force", solve.force, "Lift the size guards");

  ReduceArgs reduce;
  auto* r = app.add_subcommand("reduce", "Build a reduction instance");
  r->add_option("kind", reduce.kind, "3dm-p1 | p1-kappa | linegraph | expand-k | 3sat-lambda2 | expand-l")
      ->required()
      ->check(CLI::IsMember({"3dm-p1", "p1-kappa", "linegraph", "expand-k", "3sat-lambda2", "expand-l"}));
  r->add_option("-i,-g,--input", reduce.input, "Source instance file")->required();
  r->add_option("-o,--output", reduce.output, "Write the constructed instance here");
  r->add_option("-S,--set", reduce.terminals, "Terminal set, comma separated");
  r->add_option("--k", reduce.k, "Target terminal count (expand-k)");
  r->add_option("--l", reduce.ell, "Packing size (expand-k, expand-l)");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check reductions against brute-force oracles");
  v->add_option("--reduction", verify.reduction, "R1..R6 or all")->required();
  v->add_option("--max-n", verify.max_n, "Size bound of the source family");
  v->add_option("--max-m", verify.max_m, "Triple bound (R1) or clause bound (R5)");
  v->add_option("--seed", verify.seed, "Seed for the random families");
  v->add_option("--out", verify.out, "Write the report here; print only summaries");
  v->add_option("--artifacts", verify.artifacts, "Directory for failing instances");
  v->add_flag("--no-timing", verify.no_timing, "Print '-' instead of seconds");
  v->add_flag("--serial", verify.serial, "Check instances on one thread");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*s) return run_solve(solve);
    if (*r) return run_reduce(reduce);
    return run_verify(verify);
  } catch (const gcon::GuardError& e) {
    std::cerr << "gcon: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "gcon: " << e.what() << "\n";
    return kExitBadInput;
  }
}

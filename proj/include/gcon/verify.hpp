#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gcon/graph.hpp"

namespace gcon {

inline constexpr std::uint64_t kDefaultSeed = 1729;

/// Every labeled connected graph with 1 <= n <= max_n vertices, ordered by n
/// and then by the bitmask of present pairs (pairs in (u,v) order).
/// GuardError unless 1 <= max_n <= 6.
std::vector<Graph> gen_connected_graphs(int max_n);

/// Every 3-DM instance with 1 <= n <= max_n and at most max_m distinct
/// triples, ordered by n, then m, then lexicographic triple choice.
/// GuardError unless max_n <= 2 and max_m <= 8.
std::vector<ThreeDMInstance> gen_3dm(int max_n, int max_m);

/// Every formula with 1..max_vars variables and 1..max_clauses clauses, with
/// clauses and formulas taken as multisets. GuardError above 2 and 2.
std::vector<CnfFormula> gen_cnf_exhaustive(int max_vars, int max_clauses);

/// `count` formulas with variable and clause counts uniform in 1..max_vars
/// and 1..max_clauses, literals uniform, drawn from mt19937_64(seed).
std::vector<CnfFormula> gen_cnf_random(int count, int max_vars, int max_clauses, std::uint64_t seed);

/// The exhaustive n <= 2, m <= 2 family followed by 200 random formulas.
std::vector<CnfFormula> gen_cnf(int max_vars, int max_clauses, std::uint64_t seed);

/// Every tripartite graph with parts {0..q-1}, {q..2q-1}, {2q..3q-1} for
/// 1 <= q <= max_q, one per subset of cross-part pairs. GuardError above 2.
std::vector<Graph> gen_tripartite_graphs(int max_q);

struct VerifyBudget {
  std::optional<int> max_n;  // size bound of the reduction's source family
  std::optional<int> max_m;  // R1 triples, R5 random clauses
  std::uint64_t seed = kDefaultSeed;
  bool parallel = true;
  bool timing = true;
};

struct VerificationFailure {
  std::string instance;  // replayable serialization of the source instance
  std::string extension;  // file suffix for the serialization
  std::string lhs;
  std::string rhs;
  std::string note;
};

struct VerificationReport {
  std::string reduction;
  std::string family;
  std::uint64_t seed = kDefaultSeed;
  long instances_checked = 0;
  std::vector<VerificationFailure> failures;  // sorted by instance
  double seconds = 0.0;
  bool timing = true;

  bool passed() const { return failures.empty(); }
};

/// R1..R6 in order.
const std::vector<std::string>& reduction_names();

/// Runs one reduction over its family. ValidationError for an unknown name,
/// GuardError when the budget exceeds a generator guard.
VerificationReport verify_reduction(const std::string& name, const VerifyBudget& budget);

/// Header, one block per failure, then `PASS|FAIL <name> <checked>
/// <failures> <seconds>` (seconds printed as `-` without timing).
std::string serialize_report(const VerificationReport& report);

/// Writes each failure as `<dir>/<name>-<index>.<ext>`.
void write_failure_artifacts(const VerificationReport& report, const std::filesystem::path& dir);

}  // namespace gcon

#include "gcon/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "gcon/errors.hpp"

namespace gcon {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    lines.push_back({number, tokenize(text.substr(pos, end - pos))});
    pos = end + 1;
  }
  return lines;
}

std::optional<long long> to_int(std::string_view token) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

int int_or(ParseErrorKind kind, const Line& line, std::string_view token) {
  auto v = to_int(token);
  if (!v || *v < -(1LL << 31) || *v > (1LL << 31) - 1) {
    throw ParseError(kind, line.number, "expected an integer, got '" + std::string(token) + "'");
  }
  return static_cast<int>(*v);
}

std::string rest_of(const Line& line, std::size_t from) {
  std::string out;
  for (std::size_t i = from; i < line.tokens.size(); ++i) {
    if (!out.empty()) out += ' ';
    out += line.tokens[i];
  }
  return out;
}

void read_comment(const Line& line, GraphDocument& doc) {
  // tokens[0] is "#" or starts with '#'
  if (line.tokens.size() < 2 || line.tokens[0] != "#") return;
  const auto& t = line.tokens;
  if (t[1] == "role" && t.size() >= 4) {
    if (auto id = to_int(t[2])) doc.roles[static_cast<Vertex>(*id)] = rest_of(line, 3);
  } else if (t[1] == "threshold" && t.size() == 3) {
    if (auto v = to_int(t[2])) doc.threshold = static_cast<int>(*v);
  } else if (t[1] == "reduction" && t.size() == 3) {
    doc.reduction = std::string(t[2]);
  }
}

}  // namespace

GraphDocument parse_graph_document(std::string_view text) {
  GraphDocument doc;
  const auto lines = split_lines(text);

  int n = -1;
  int declared_m = 0;
  int header_line = 0;
  std::vector<Edge> edges;
  std::vector<int> edge_lines;
  std::set<std::pair<int, int>> seen;
  std::optional<std::vector<Part>> parts;
  int parts_line = 0;

  for (const Line& line : lines) {
    if (line.tokens.empty()) continue;
    const auto& t = line.tokens;
    if (t[0].front() == '#') {
      read_comment(line, doc);
      continue;
    }
    if (n < 0) {
      if (t.size() != 3 || t[0] != "graph") {
        throw ParseError(ParseErrorKind::MalformedHeader, line.number, "expected 'graph <n> <m>'");
      }
      n = int_or(ParseErrorKind::MalformedHeader, line, t[1]);
      declared_m = int_or(ParseErrorKind::MalformedHeader, line, t[2]);
      if (n < 0 || declared_m < 0) {
        throw ParseError(ParseErrorKind::MalformedHeader, line.number, "negative count");
      }
      header_line = line.number;
      continue;
    }
    if (t[0] == "e") {
      if (t.size() != 3) throw ParseError(ParseErrorKind::MalformedLine, line.number, "expected 'e <u> <v>'");
      int u = int_or(ParseErrorKind::MalformedLine, line, t[1]);
      int v = int_or(ParseErrorKind::MalformedLine, line, t[2]);
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw ParseError(ParseErrorKind::IndexOutOfRange, line.number,
                         "vertex outside 0.." + std::to_string(n - 1));
      }
      if (u == v) throw ParseError(ParseErrorKind::SelfLoop, line.number, "vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
      if (!seen.emplace(u, v).second) {
        throw ParseError(ParseErrorKind::DuplicateEdge, line.number,
                         std::to_string(u) + " " + std::to_string(v));
      }
      if (static_cast<int>(edges.size()) == declared_m) {
        throw ParseError(ParseErrorKind::CountMismatch, line.number,
                         "more than " + std::to_string(declared_m) + " edges");
      }
      edges.emplace_back(u, v);
      edge_lines.push_back(line.number);
    } else if (t[0] == "parts") {
      if (parts) throw ParseError(ParseErrorKind::MalformedLine, line.number, "second parts line");
      if (static_cast<int>(t.size()) - 1 != n) {
        throw ParseError(ParseErrorKind::IncompleteTripartition, line.number,
                         "expected " + std::to_string(n) + " part labels");
      }
      std::vector<Part> tags(n);
      for (int i = 0; i < n; ++i) {
        int p = int_or(ParseErrorKind::IncompleteTripartition, line, t[i + 1]);
        if (p < 0 || p > 2) {
          throw ParseError(ParseErrorKind::IncompleteTripartition, line.number, "part label must be 0, 1 or 2");
        }
        tags[i] = static_cast<Part>(p);
      }
      parts = std::move(tags);
      parts_line = line.number;
    } else if (t[0] == "set") {
      if (doc.terminals) throw ParseError(ParseErrorKind::BadTerminalSet, line.number, "second set line");
      if (t.size() < 2) throw ParseError(ParseErrorKind::BadTerminalSet, line.number, "missing size");
      int k = int_or(ParseErrorKind::BadTerminalSet, line, t[1]);
      if (k < 0 || static_cast<int>(t.size()) - 2 != k) {
        throw ParseError(ParseErrorKind::BadTerminalSet, line.number, "size does not match member count");
      }
      std::vector<Vertex> members;
      for (int i = 0; i < k; ++i) {
        int v = int_or(ParseErrorKind::BadTerminalSet, line, t[i + 2]);
        if (v < 0 || v >= n) {
          throw ParseError(ParseErrorKind::IndexOutOfRange, line.number, "terminal " + std::to_string(v));
        }
        members.push_back(v);
      }
      try {
        doc.terminals = VertexSet(std::move(members));
      } catch (const ValidationError& e) {
        throw ParseError(ParseErrorKind::BadTerminalSet, line.number, e.what());
      }
    } else {
      throw ParseError(ParseErrorKind::MalformedLine, line.number, "unknown record '" + std::string(t[0]) + "'");
    }
  }

  if (n < 0) throw ParseError(ParseErrorKind::MalformedHeader, lines.empty() ? 1 : lines.back().number, "missing header");
  if (static_cast<int>(edges.size()) != declared_m) {
    throw ParseError(ParseErrorKind::CountMismatch, header_line,
                     "header declares " + std::to_string(declared_m) + " edges, found " +
                         std::to_string(edges.size()));
  }
  if (parts) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if ((*parts)[edges[i].u] == (*parts)[edges[i].v]) {
        throw ParseError(ParseErrorKind::NonTripartiteEdge, edge_lines[i],
                         "declared on line " + std::to_string(parts_line));
      }
    }
  }
  doc.graph = Graph(n, std::move(edges), std::move(parts));
  return doc;
}

Graph parse_graph(std::string_view text) { return parse_graph_document(text).graph; }

std::string serialize_graph(const Graph& g, const std::optional<VertexSet>& terminals) {
  std::ostringstream out;
  out << "graph " << g.order() << ' ' << g.size() << '\n';
  auto edges = g.edges();
  std::sort(edges.begin(), edges.end());
  for (const Edge& e : edges) out << "e " << e.u << ' ' << e.v << '\n';
  if (g.parts()) {
    out << "parts";
    for (Part p : *g.parts()) out << ' ' << static_cast<int>(p);
    out << '\n';
  }
  if (terminals) {
    out << "set " << terminals->size();
    for (Vertex v : *terminals) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

std::string serialize_document(const GraphDocument& doc) {
  std::string out = serialize_graph(doc.graph, doc.terminals);
  if (!doc.reduction.empty()) out += "# reduction " + doc.reduction + "\n";
  if (doc.threshold) out += "# threshold " + std::to_string(*doc.threshold) + "\n";
  for (const auto& [id, label] : doc.roles) out += "# role " + std::to_string(id) + " " + label + "\n";
  return out;
}

ThreeDMInstance parse_3dm(std::string_view text) {
  ThreeDMInstance inst;
  int declared_m = -1;
  int header_line = 0;
  std::set<Triple> seen;
  for (const Line& line : split_lines(text)) {
    if (line.tokens.empty() || line.tokens[0].front() == '#') continue;
    const auto& t = line.tokens;
    if (declared_m < 0) {
      if (t.size() != 3 || t[0] != "3dm") {
        throw ParseError(ParseErrorKind::MalformedHeader, line.number, "expected '3dm <n> <m>'");
      }
      inst.n = int_or(ParseErrorKind::MalformedHeader, line, t[1]);
      declared_m = int_or(ParseErrorKind::MalformedHeader, line, t[2]);
      if (inst.n < 0 || declared_m < 0) throw ParseError(ParseErrorKind::MalformedHeader, line.number, "negative count");
      header_line = line.number;
      continue;
    }
    if (t[0] != "t" || t.size() != 4) {
      throw ParseError(ParseErrorKind::MalformedLine, line.number, "expected 't <u> <v> <w>'");
    }
    Triple tr{int_or(ParseErrorKind::MalformedLine, line, t[1]), int_or(ParseErrorKind::MalformedLine, line, t[2]),
              int_or(ParseErrorKind::MalformedLine, line, t[3])};
    for (int x : {tr.u, tr.v, tr.w}) {
      if (x < 0 || x >= inst.n) throw ParseError(ParseErrorKind::IndexOutOfRange, line.number, std::to_string(x));
    }
    if (!seen.insert(tr).second) throw ParseError(ParseErrorKind::DuplicateTriple, line.number, "");
    if (inst.m() == declared_m) {
      throw ParseError(ParseErrorKind::CountMismatch, line.number, "more than " + std::to_string(declared_m) + " triples");
    }
    inst.triples.push_back(tr);
  }
  if (declared_m < 0) throw ParseError(ParseErrorKind::MalformedHeader, 1, "missing header");
  if (inst.m() != declared_m) {
    throw ParseError(ParseErrorKind::CountMismatch, header_line,
                     "header declares " + std::to_string(declared_m) + " triples, found " + std::to_string(inst.m()));
  }
  return inst;
}

std::string serialize_3dm(const ThreeDMInstance& inst) {
  std::ostringstream out;
  out << "3dm " << inst.n << ' ' << inst.m() << '\n';
  for (const Triple& t : inst.triples) out << "t " << t.u << ' ' << t.v << ' ' << t.w << '\n';
  return out.str();
}

CnfFormula parse_cnf(std::string_view text) {
  CnfFormula phi;
  int declared = -1;
  int header_line = 0;
  std::vector<int> pending;
  int pending_line = 0;
  for (const Line& line : split_lines(text)) {
    if (line.tokens.empty()) continue;
    const auto& t = line.tokens;
    if (t[0] == "c" || t[0].front() == 'c') continue;
    if (t[0] == "%") break;
    if (declared < 0) {
      if (t.size() != 4 || t[0] != "p" || t[1] != "cnf") {
        throw ParseError(ParseErrorKind::MalformedHeader, line.number, "expected 'p cnf <vars> <clauses>'");
      }
      phi.num_vars = int_or(ParseErrorKind::MalformedHeader, line, t[2]);
      declared = int_or(ParseErrorKind::MalformedHeader, line, t[3]);
      if (phi.num_vars < 0 || declared < 0) throw ParseError(ParseErrorKind::MalformedHeader, line.number, "negative count");
      header_line = line.number;
      continue;
    }
    for (auto token : t) {
      int lit = int_or(ParseErrorKind::MalformedLine, line, token);
      if (pending.empty()) pending_line = line.number;
      if (lit != 0) {
        if (lit > phi.num_vars || -lit > phi.num_vars) {
          throw ParseError(ParseErrorKind::IndexOutOfRange, line.number, "literal " + std::to_string(lit));
        }
        pending.push_back(lit);
        continue;
      }
      if (pending.size() != 3) {
        throw ParseError(ParseErrorKind::BadClause, pending_line,
                         "clause has " + std::to_string(pending.size()) + " literals, expected 3");
      }
      if (phi.num_clauses() == declared) {
        throw ParseError(ParseErrorKind::CountMismatch, line.number, "more than " + std::to_string(declared) + " clauses");
      }
      phi.clauses.push_back({pending[0], pending[1], pending[2]});
      pending.clear();
    }
  }
  if (declared < 0) throw ParseError(ParseErrorKind::MalformedHeader, 1, "missing header");
  if (!pending.empty()) throw ParseError(ParseErrorKind::BadClause, pending_line, "clause not terminated by 0");
  if (phi.num_clauses() != declared) {
    throw ParseError(ParseErrorKind::CountMismatch, header_line,
                     "header declares " + std::to_string(declared) + " clauses, found " +
                         std::to_string(phi.num_clauses()));
  }
  return phi;
}

std::string serialize_cnf(const CnfFormula& phi) {
  std::ostringstream out;
  out << "p cnf " << phi.num_vars << ' ' << phi.num_clauses() << '\n';
  for (const auto& c : phi.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << contents;
}

}  // namespace gcon

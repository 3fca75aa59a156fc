#include <sstream>

#include "hdrr/io.hpp"

namespace hdrr::io {

Instance parse_dimacs_cnf(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  long nvars = -1, nclauses = -1;
  std::vector<std::array<int, 3>> clauses;
  std::vector<int> cur;

  auto fail = [&](const std::string& msg) {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      if (!(ls >> p >> fmt >> nvars >> nclauses) || fmt != "cnf" || nvars < 0 ||
          nclauses < 0)
        fail("malformed header");
      continue;
    }
    if (nvars < 0) fail("clause before header");
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        if (cur.empty()) fail("empty clause");
        if (cur.size() > 3) fail("clause wider than three literals");
        while (cur.size() < 3) cur.push_back(cur.back());
        clauses.push_back({cur[0], cur[1], cur[2]});
        cur.clear();
      } else {
        if (std::abs(lit) > nvars) fail("literal outside declared variables");
        cur.push_back(lit);
      }
    }
    if (ls.fail() && !ls.eof()) fail("bad token");
  }
  if (!cur.empty()) fail("unterminated clause");
  if (nvars < 0) throw ParseError("missing header");
  if (nclauses >= 0 && static_cast<long>(clauses.size()) != nclauses)
    throw ParseError("clause count differs from header");
  return sat::make(clauses, nvars);
}

std::string emit_qdimacs(const QaeFormula& f) {
  // Deterministic numbering: variables renumbered consecutively in block
  // order; empty blocks are dropped.
  std::map<int, int> renum;
  int next = 0;
  for (const auto& b : f.blocks)
    for (int v : b) renum[v] = ++next;
  std::ostringstream os;
  os << "p cnf " << next << " " << f.clauses.size() << "\n";
  for (std::size_t b = 0; b < f.blocks.size(); ++b) {
    if (f.blocks[b].empty()) continue;
    os << (b % 2 == 0 ? "e" : "a");
    for (int v : f.blocks[b]) os << " " << renum.at(v);
    os << " 0\n";
  }
  for (const auto& c : f.clauses) {
    for (int l : c) os << (l > 0 ? renum.at(l) : -renum.at(-l)) << " ";
    os << "0\n";
  }
  return os.str();
}

}  // namespace hdrr::io

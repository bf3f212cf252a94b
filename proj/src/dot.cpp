#include "slrep/dot.hpp"

#include <sstream>

namespace slrep {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string poset_dot(const FinitePoset& P) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (int p = 0; p < P.size(); ++p)
    out << "  n" << p << " [label=" << quote(P.label(p)) << "];\n";
  for (auto& [p, q] : P.covers())
    out << "  n" << p << " -> n" << q << " [arrowhead=none];\n";
  out << "}\n";
  return out.str();
}

std::string semilattice_dot(const FiniteSemilattice& S) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (int x = 0; x < S.size(); ++x)
    out << "  n" << x << " [label=" << quote(S.label(x)) << "];\n";
  for (int x = 0; x < S.size(); ++x)
    for (int y : S.upper_covers(x))
      out << "  n" << x << " -> n" << y << " [arrowhead=none];\n";
  out << "}\n";
  return out.str();
}

std::string bratteli_dot(const BratteliTower& tower) {
  std::ostringstream out;
  out << "digraph bratteli {\n  rankdir=TB;\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < tower.levels.size(); ++i) {
    out << "  { rank=same;";
    for (int j = 0; j < tower.levels[i].block_count(); ++j)
      out << " L" << i << "_" << j;
    out << " }\n";
    for (int j = 0; j < tower.levels[i].block_count(); ++j)
      out << "  L" << i << "_" << j << " [label=\"" << tower.levels[i].sizes[j]
          << "\"];\n";
  }
  for (std::size_t i = 0; i < tower.maps.size(); ++i) {
    const auto& s = tower.maps[i];
    for (int a = 0; a < s.rows(); ++a)
      for (int b = 0; b < s.cols(); ++b) {
        long long mult = s.s[a][b];
        if (mult == 0) continue;
        if (mult <= 3) {
          for (long long r = 0; r < mult; ++r)
            out << "  L" << i << "_" << a << " -> L" << i + 1 << "_" << b
                << " [arrowhead=none];\n";
        } else {
          out << "  L" << i << "_" << a << " -> L" << i + 1 << "_" << b
              << " [arrowhead=none, label=\"" << mult << "\"];\n";
        }
      }
  }
  out << "}\n";
  return out.str();
}

}  // namespace slrep

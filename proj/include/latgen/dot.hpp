#pragma once

#include <sstream>
#include <string>

#include "latgen/closure.hpp"
#include "latgen/finite_lattice.hpp"

namespace latgen {

enum class DotHighlight { None, Gamma, Phi, Maximal };

inline DotHighlight dot_highlight_from_string(const std::string& s) {
  if (s == "none") return DotHighlight::None;
  if (s == "gamma") return DotHighlight::Gamma;
  if (s == "phi") return DotHighlight::Phi;
  if (s == "maximal") return DotHighlight::Maximal;
  raise(ErrorKind::ParseError, "highlight must be none|gamma|phi|maximal");
}

/** Hasse diagram in DOT: cover edges only (transitive reduction), nodes in
 *  index order, bottom-to-top ranking. Highlighted classes come from the
 *  generator report; `maximal` marks the members of every maximal proper
 *  substructure (the intersection) and lists the substructures as comments. */
inline std::string export_dot(const FiniteLattice& l, DotHighlight highlight = DotHighlight::None,
                              const GeneratorReport* report = nullptr) {
  std::ostringstream os;
  os << "digraph lattice {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=circle, fontsize=10];\n";
  SubsetMask marked(l.n);
  if (report) {
    if (highlight == DotHighlight::Gamma) marked = report->gamma;
    if (highlight == DotHighlight::Phi) marked = report->phi;
    if (highlight == DotHighlight::Maximal) {
      marked = report->phi;
      for (const auto& m : report->maximal) {
        os << "  // maximal substructure:";
        m.for_each([&](int i) { os << ' ' << i; });
        os << "\n";
      }
    }
  }
  for (int i = 0; i < l.n; ++i) {
    os << "  n" << i << " [label=\"";
    os << (static_cast<std::size_t>(i) < l.labels.size() ? l.labels[i] : std::to_string(i));
    os << "\"";
    if (marked.test(i)) os << ", style=filled, fillcolor=lightblue";
    os << "];\n";
  }
  for (auto [lo, hi] : covers_of(Poset{l.n, l.leq})) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace latgen

#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "lattice.hpp"
#include "sh.hpp"
#include "topology.hpp"

namespace shlat {

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

// Hasse diagram, edges are cover pairs pointing upwards. Strongly hollow
// elements are drawn filled. With strata, each point of X is tagged S_k.
inline std::string hasse_dot(const FiniteLattice& lat, const ShAnalysis& sh,
                             const std::vector<ElementSet>* strata = nullptr) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=ellipse];\n";
  if (strata) {
    out << "  label=\"strata: " << (strata->empty() ? "none" : std::to_string(strata->size())) << "\";\n";
  }
  for (Element x = 0; x < lat.size(); ++x) {
    std::string label = lat.label(x);
    if (strata) {
      for (std::size_t k = 0; k < strata->size(); ++k)
        if ((*strata)[k].contains(x)) label += "\\nS_" + std::to_string(k);
    }
    out << "  n" << x << " [label=\"" << detail::dot_escape(label) << "\"";
    if (sh.is_sh(x)) out << ", style=filled, fillcolor=lightblue";
    out << "];\n";
  }
  for (auto [a, b] : lat.covers()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

// Hasse diagram of the closed-set family ordered by inclusion.
inline std::string topology_dot(const FiniteLattice& lat, const FiniteTopology& top) {
  const auto& closed = top.closed_masks();
  std::ostringstream out;
  out << "digraph topology {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < closed.size(); ++i) {
    std::string label = "{";
    bool first = true;
    for (Element x : top.set_of(closed[i])) {
      label += (first ? "" : ",") + lat.label(x);
      first = false;
    }
    out << "  c" << i << " [label=\"" << detail::dot_escape(label + "}") << "\"];\n";
  }
  auto strict_subset = [](PointMask a, PointMask b) { return a != b && (a & b) == a; };
  for (std::size_t i = 0; i < closed.size(); ++i)
    for (std::size_t j = 0; j < closed.size(); ++j) {
      if (!strict_subset(closed[i], closed[j])) continue;
      bool between = false;
      for (std::size_t k = 0; k < closed.size() && !between; ++k)
        between = strict_subset(closed[i], closed[k]) && strict_subset(closed[k], closed[j]);
      if (!between) out << "  c" << i << " -> c" << j << ";\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace shlat

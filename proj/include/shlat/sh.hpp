#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lattice.hpp"

namespace shlat {

// A pair (a, b) with l <= a v b but neither l <= a nor l <= b.
struct WitnessPair {
  Element a;
  Element b;

  friend bool operator==(const WitnessPair&, const WitnessPair&) = default;
};

// First witness against strong hollowness in (a, b) lexicographic order with
// a <= b, or nullopt when l is strongly hollow.
inline std::optional<WitnessPair> sh_witness(const FiniteLattice& lat, Element l) {
  const int n = lat.size();
  for (Element a = 0; a < n; ++a) {
    if (lat.le(l, a)) continue;
    for (Element b = a; b < n; ++b) {
      if (lat.le(l, b)) continue;
      if (lat.le(l, lat.join(a, b))) return WitnessPair{a, b};
    }
  }
  return std::nullopt;
}

// l <= a v b implies l <= a or l <= b, for every pair (a, b).
inline bool is_strongly_hollow(const FiniteLattice& lat, Element l) { return !sh_witness(lat, l).has_value(); }

struct ShAnalysis {
  std::vector<bool> sh_flags;
  ElementSet x_points;  // strongly hollow elements other than bottom
  std::vector<std::optional<WitnessPair>> witnesses;

  bool is_sh(Element x) const { return sh_flags[static_cast<std::size_t>(x)]; }

  // Every strongly hollow element, bottom included.
  ElementSet sh_elements(const FiniteLattice& lat) const {
    ElementSet out = x_points;
    out.insert(lat.bottom());
    return out;
  }
};

inline ShAnalysis sh_set(const FiniteLattice& lat) {
  ShAnalysis out;
  const auto n = static_cast<std::size_t>(lat.size());
  out.sh_flags.assign(n, false);
  out.witnesses.assign(n, std::nullopt);
  for (Element x = 0; x < lat.size(); ++x) {
    auto w = sh_witness(lat, x);
    out.sh_flags[static_cast<std::size_t>(x)] = !w.has_value();
    out.witnesses[static_cast<std::size_t>(x)] = w;
    if (!w && x != lat.bottom()) out.x_points.insert(x);
  }
  return out;
}

// V(i): nonzero strongly hollow elements below i.
inline ElementSet v_of(const FiniteLattice& lat, const ShAnalysis& sh, Element i) {
  ElementSet out;
  for (Element l : sh.x_points)
    if (lat.le(l, i)) out.insert(l);
  return out;
}

// Join of V(i); bottom when V(i) is empty.
inline Element underline(const FiniteLattice& lat, const ShAnalysis& sh, Element i) {
  return lat.join_all(v_of(lat, sh, i));
}

inline bool is_semi_sh(const FiniteLattice& lat, const ShAnalysis& sh, Element i) {
  return underline(lat, sh, i) == i;
}

inline bool is_sh_ring(const FiniteLattice& lat, const ShAnalysis& sh) { return sh.is_sh(lat.top()); }

// Top is the join of all strongly hollow elements. This is the "sum" reading;
// the "top is strongly hollow" reading is is_sh_ring.
inline bool is_semi_sh_ring(const FiniteLattice& lat, const ShAnalysis& sh) {
  return underline(lat, sh, lat.top()) == lat.top();
}

}  // namespace shlat

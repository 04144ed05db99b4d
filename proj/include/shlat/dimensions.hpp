#pragma once

#include <vector>

#include "lattice.hpp"
#include "sh.hpp"

namespace shlat {

struct YFiltration {
  // levels[k] is Y_k for k = 0..dimension; empty when dimension is -1.
  // Every level contains bottom.
  std::vector<ElementSet> levels;
  int dimension = -1;
};

// Y_{-1} = {bottom}; Y_k holds the strongly hollow elements all of whose
// strictly smaller strongly hollow elements lie in Y_{-1} u ... u Y_{k-1}.
// The dimension is the least k >= -1 with Y_k equal to every strongly hollow
// element.
inline YFiltration y_filtration(const FiniteLattice& lat, const ShAnalysis& sh) {
  YFiltration out;
  const ElementSet all = sh.sh_elements(lat);
  ElementSet earlier{lat.bottom()};
  if (earlier == all) return out;
  // Each pass admits at least one new element (a minimal one among those left),
  // so the loop ends after at most |all| passes.
  for (int k = 0;; ++k) {
    ElementSet level;
    for (Element l : all) {
      bool admitted = true;
      for (Element below : all)
        if (lat.lt(below, l) && !earlier.contains(below)) {
          admitted = false;
          break;
        }
      if (admitted) level.insert(l);
    }
    out.levels.push_back(level);
    if (level == all) {
      out.dimension = k;
      return out;
    }
    earlier = earlier | level;
  }
}

// Longest chain of nonzero strongly hollow elements, minus one.
inline int dclk_dimension_oracle(const FiniteLattice& lat, const ShAnalysis& sh) {
  return longest_chain_length(lat, sh.x_points) - 1;
}

}  // namespace shlat

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace shlat;
using shlat::testing::by_label;
using shlat::testing::by_labels;

namespace {

std::vector<ElementSet> sorted(std::vector<ElementSet> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(ShTopology, Z12ClosedSets) {
  const auto z12 = ideal_lattice_zn(12);
  const auto top = sh_topology(z12, sh_set(z12));
  const std::vector<ElementSet> expected{{},
                                         by_labels(z12, {"(6)"}),
                                         by_labels(z12, {"(4)"}),
                                         by_labels(z12, {"(6)", "(4)"}),
                                         by_labels(z12, {"(6)", "(3)"}),
                                         by_labels(z12, {"(6)", "(4)", "(3)"})};
  EXPECT_EQ(sorted(top.closed_sets()), sorted(expected));
  EXPECT_TRUE(is_t0(top));
  EXPECT_FALSE(is_t1(top));
  EXPECT_FALSE(is_hausdorff(top));
}

TEST(ShTopology, SquarefreeProductOfTwoPrimesIsDiscrete) {
  for (long n : {6L, 15L, 35L, 77L}) {
    const auto z = ideal_lattice_zn(n);
    const auto top = sh_topology(z, sh_set(z));
    EXPECT_EQ(top.point_count(), 2u);
    EXPECT_EQ(top.closed_masks().size(), 4u);
    EXPECT_TRUE(is_t1(top));
    EXPECT_TRUE(is_hausdorff(top));
  }
}

TEST(ShTopology, PrimePowerIsAnAlexandrovChain) {
  const auto z8 = ideal_lattice_zn(8);
  const auto top = sh_topology(z8, sh_set(z8));
  const std::vector<ElementSet> expected{{},
                                         by_labels(z8, {"(4)"}),
                                         by_labels(z8, {"(4)", "(2)"}),
                                         by_labels(z8, {"(4)", "(2)", "(1)"})};
  EXPECT_EQ(sorted(top.closed_sets()), sorted(expected));
  EXPECT_TRUE(is_t0(top));
  EXPECT_FALSE(is_t1(top));
}

TEST(ShTopology, EmptySpaceForM3) {
  const auto m3 = m3_lattice();
  const auto top = sh_topology(m3, sh_set(m3));
  EXPECT_EQ(top.point_count(), 0u);
  EXPECT_EQ(top.closed_sets(), (std::vector<ElementSet>{ElementSet{}}));
  EXPECT_TRUE(is_t0(top));
  EXPECT_TRUE(is_hausdorff(top));
  const auto cb = cantor_bendixson(w_topology(m3, sh_set(m3)));
  EXPECT_EQ(cb.derived_dimension, 0);
  EXPECT_TRUE(cb.strata.empty());
}

TEST(ShTopology, ClosureOfAPointIsItsV) {
  for (const auto& lat : shlat::testing::random_corpus(150, 12, 31)) {
    const auto sh = sh_set(lat);
    const auto top = sh_topology(lat, sh);
    const auto wt = w_topology(lat, sh);
    for (Element l : sh.x_points) {
      const PointMask point = top.mask_of(ElementSet{l});
      EXPECT_EQ(top.set_of(top.closure(point)), v_of(lat, sh, l));
      // V(l) is the smallest W-open set around l.
      const auto pos = static_cast<std::size_t>(std::popcount(point - 1));
      EXPECT_EQ(wt.set_of(wt.minimal_neighbourhood(pos)), v_of(lat, sh, l));
    }
  }
}

TEST(FiniteTopology, IndiscreteTwoPointsIsNotT0) {
  const ElementSet pts{3, 7};
  const auto top = FiniteTopology::from_closed_sets(pts, {ElementSet{}, pts});
  EXPECT_FALSE(is_t0(top));
  EXPECT_FALSE(is_t1(top));
  EXPECT_EQ(top.open_sets(), top.closed_sets());
}

TEST(FiniteTopology, SierpinskiSpace) {
  const ElementSet pts{0, 1};
  const auto top = FiniteTopology::from_closed_sets(pts, {ElementSet{}, ElementSet{0}, pts});
  EXPECT_TRUE(is_t0(top));
  EXPECT_FALSE(is_t1(top));
  EXPECT_TRUE(top.is_open(ElementSet{1}));
  EXPECT_FALSE(top.is_open(ElementSet{0}));
  EXPECT_EQ(top.set_of(top.closure(top.mask_of(ElementSet{1}))), pts);
}

TEST(FiniteTopology, RejectsBadFamilies) {
  const ElementSet pts{0, 1, 2};
  EXPECT_THROW(FiniteTopology::from_closed_sets(pts, {ElementSet{}, ElementSet{0}, ElementSet{1}, pts}),
               AxiomViolation);
  EXPECT_THROW(FiniteTopology::from_closed_sets(pts, {ElementSet{0}, pts}), AxiomViolation);
  EXPECT_THROW(FiniteTopology::from_closed_sets(pts, {ElementSet{}, ElementSet{0, 1}}), AxiomViolation);
  EXPECT_THROW(
      FiniteTopology::from_closed_sets(pts, {ElementSet{}, ElementSet{0, 1}, ElementSet{1, 2}, ElementSet{0, 1, 2}}),
      AxiomViolation);
  EXPECT_THROW(FiniteTopology::from_open_base(pts, {ElementSet{0}, ElementSet{1}}), AxiomViolation);
  EXPECT_THROW(FiniteTopology::from_closed_sets(pts, {ElementSet{}, ElementSet{5}, pts}), std::invalid_argument);
}

TEST(WTopology, Z12OpenSetsAndDerivedSets) {
  const auto z12 = ideal_lattice_zn(12);
  const auto sh = sh_set(z12);
  const auto wt = w_topology(z12, sh);
  EXPECT_FALSE(wt.is_open(by_labels(z12, {"(3)"})));
  EXPECT_TRUE(wt.is_open(by_labels(z12, {"(6)", "(3)"})));
  EXPECT_EQ(isolated_points(wt, sh.x_points), by_labels(z12, {"(6)", "(4)"}));
  EXPECT_EQ(derived_set(wt, sh.x_points), by_labels(z12, {"(3)"}));
  EXPECT_EQ(derived_set(wt, by_labels(z12, {"(6)", "(3)"})), by_labels(z12, {"(3)"}));
  EXPECT_TRUE(derived_set(wt, by_labels(z12, {"(3)"})).empty());
  EXPECT_TRUE(derived_set(wt, ElementSet{}).empty());
}

TEST(WTopology, CantorBendixsonZ12) {
  const auto z12 = ideal_lattice_zn(12);
  const auto cb = cantor_bendixson(w_topology(z12, sh_set(z12)));
  EXPECT_EQ(cb.derived_dimension, 2);
  ASSERT_EQ(cb.strata.size(), 2u);
  EXPECT_EQ(cb.strata[0], by_labels(z12, {"(6)", "(4)"}));
  EXPECT_EQ(cb.strata[1], by_labels(z12, {"(3)"}));
  ASSERT_EQ(cb.levels.size(), 3u);
  EXPECT_TRUE(cb.levels[2].empty());
}

TEST(WTopology, CantorBendixsonPrimePowers) {
  for (long p : {2L, 3L, 5L}) {
    long n = 1;
    for (int k = 1; k <= 5; ++k) {
      n *= p;
      const auto z = ideal_lattice_zn(n);
      const auto cb = cantor_bendixson(w_topology(z, sh_set(z)));
      EXPECT_EQ(cb.derived_dimension, k) << "n = " << n;
      for (const auto& s : cb.strata) EXPECT_EQ(s.size(), 1u);
    }
  }
}

TEST(WTopology, StrataPartitionTheCarrier) {
  for (const auto& lat : all_lattices(6, true)) {
    const auto sh = sh_set(lat);
    const auto cb = cantor_bendixson(w_topology(lat, sh));
    ElementSet seen;
    for (const auto& s : cb.strata) {
      EXPECT_FALSE(s.empty());
      EXPECT_TRUE((seen & s).empty());
      seen = seen | s;
    }
    EXPECT_EQ(seen, sh.x_points);
    EXPECT_EQ(static_cast<std::size_t>(cb.derived_dimension), cb.strata.size());
  }
}

TEST(WTopology, NonScatteredSpaceIsReported) {
  const ElementSet pts{0, 1};
  const auto indiscrete = FiniteTopology::from_closed_sets(pts, {ElementSet{}, pts});
  EXPECT_THROW(cantor_bendixson(indiscrete), std::logic_error);
}

#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace shlat;
using shlat::testing::by_label;
using shlat::testing::by_labels;

namespace {

bool has_violation(const Validation& v, ViolationKind kind) {
  return std::any_of(v.violations.begin(), v.violations.end(), [&](const Violation& x) { return x.kind == kind; });
}

}  // namespace

TEST(Validate, TwoChain) {
  const std::vector<std::pair<Element, Element>> covers{{0, 1}};
  auto v = FiniteLattice::validate(2, RelationKind::covers, covers);
  ASSERT_TRUE(v.ok());
  EXPECT_EQ(v.lattice->bottom(), 0);
  EXPECT_EQ(v.lattice->top(), 1);
}

TEST(Validate, FenceHasNoTop) {
  // 0 < 2, 0 < 3, 1 < 3, with 1 also above 0: two maximal elements 2 and 3.
  const std::vector<std::pair<Element, Element>> covers{{0, 1}, {0, 2}, {1, 3}};
  auto v = FiniteLattice::validate(4, RelationKind::covers, covers);
  EXPECT_FALSE(v.ok());
  EXPECT_FALSE(v.lattice.has_value());
  EXPECT_TRUE(has_violation(v, ViolationKind::no_top));
  EXPECT_FALSE(has_violation(v, ViolationKind::no_bottom));
  EXPECT_TRUE(has_violation(v, ViolationKind::no_unique_join));
}

TEST(Validate, M3HasUniqueJoinsAndMeets) {
  const auto m3 = m3_lattice();
  // Exhaustive oracle over all 25 ordered pairs: the join is the unique least
  // upper bound found by scanning.
  for (Element a = 0; a < 5; ++a)
    for (Element b = 0; b < 5; ++b) {
      std::vector<Element> least;
      for (Element c = 0; c < 5; ++c) {
        if (!m3.le(a, c) || !m3.le(b, c)) continue;
        bool below_all = true;
        for (Element d = 0; d < 5; ++d)
          if (m3.le(a, d) && m3.le(b, d)) below_all = below_all && m3.le(c, d);
        if (below_all) least.push_back(c);
      }
      ASSERT_EQ(least.size(), 1u);
      EXPECT_EQ(m3.join(a, b), least[0]);
    }
}

TEST(Validate, NonTransitiveLeRelation) {
  const std::vector<std::pair<Element, Element>> le{{0, 1}, {1, 2}};
  auto v = FiniteLattice::validate(3, RelationKind::le, le);
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.violations.size(), 1u);
  EXPECT_EQ(v.violations[0].kind, ViolationKind::not_a_partial_order);
  EXPECT_EQ(v.violations[0].a, 0);
  EXPECT_EQ(v.violations[0].b, 2);
}

TEST(Validate, CycleIsNotAPartialOrder) {
  const std::vector<std::pair<Element, Element>> covers{{0, 1}, {1, 2}, {2, 1}};
  auto v = FiniteLattice::validate(3, RelationKind::covers, covers);
  EXPECT_TRUE(has_violation(v, ViolationKind::not_a_partial_order));
}

TEST(Validate, OutOfRangePairAndEmpty) {
  const std::vector<std::pair<Element, Element>> covers{{0, 5}};
  EXPECT_TRUE(has_violation(FiniteLattice::validate(2, RelationKind::covers, covers), ViolationKind::not_a_partial_order));
  auto empty = FiniteLattice::validate(0, RelationKind::le, {});
  EXPECT_TRUE(has_violation(empty, ViolationKind::no_bottom));
  EXPECT_TRUE(has_violation(empty, ViolationKind::no_top));
}

TEST(Validate, FromRelationThrowsWithViolations) {
  const std::vector<std::pair<Element, Element>> covers{{0, 1}, {0, 2}};
  try {
    FiniteLattice::from_relation(3, RelationKind::covers, covers);
    FAIL() << "expected LatticeError";
  } catch (const LatticeError& e) {
    EXPECT_FALSE(e.violations().empty());
  }
}

TEST(JoinMeet, Z12) {
  const auto z12 = ideal_lattice_zn(12);
  EXPECT_EQ(z12.join(by_label(z12, "(4)"), by_label(z12, "(3)")), by_label(z12, "(1)"));
  EXPECT_EQ(z12.meet(by_label(z12, "(4)"), by_label(z12, "(6)")), by_label(z12, "(12)"));
  for (Element x = 0; x < z12.size(); ++x) {
    EXPECT_EQ(z12.join(z12.bottom(), x), x);
    EXPECT_EQ(z12.meet(z12.top(), x), x);
  }
}

TEST(JoinMeet, M3AndN5) {
  const auto m3 = m3_lattice();
  EXPECT_EQ(m3.join(by_label(m3, "a"), by_label(m3, "b")), m3.top());
  const auto n5 = n5_lattice();
  EXPECT_EQ(n5.meet(by_label(n5, "a"), by_label(n5, "b")), n5.bottom());
}

TEST(JoinMeet, EmptyFamilyConventions) {
  const auto z12 = ideal_lattice_zn(12);
  EXPECT_EQ(z12.join_all({}), z12.bottom());
  EXPECT_EQ(z12.meet_all({}), z12.top());
}

TEST(Classify, DistributiveAndModular) {
  EXPECT_TRUE(is_distributive(chain_lattice(5)));
  EXPECT_FALSE(is_distributive(m3_lattice()));
  EXPECT_TRUE(is_modular(m3_lattice()));
  EXPECT_FALSE(is_distributive(n5_lattice()));
  EXPECT_FALSE(is_modular(n5_lattice()));
  EXPECT_TRUE(is_distributive(ideal_lattice_zn(12)));
  EXPECT_TRUE(is_modular(ideal_lattice_zn(12)));
}

TEST(MinimalElements, Basics) {
  const auto z12 = ideal_lattice_zn(12);
  const auto x = by_labels(z12, {"(6)", "(4)", "(3)"});
  EXPECT_EQ(minimal_elements(z12, x), by_labels(z12, {"(6)", "(4)"}));
  EXPECT_EQ(minimal_elements(z12, ElementSet{3}), ElementSet{3});
  EXPECT_TRUE(minimal_elements(z12, {}).empty());
  const auto c = chain_lattice(6);
  EXPECT_EQ(minimal_elements(c, ElementSet{2, 4, 5}), ElementSet{2});
}

TEST(LongestChain, Basics) {
  const auto z12 = ideal_lattice_zn(12);
  EXPECT_EQ(longest_chain_length(z12, {}), 0);
  EXPECT_EQ(longest_chain_length(z12, by_labels(z12, {"(6)", "(4)", "(3)"})), 2);
  const auto z8 = ideal_lattice_zn(8);
  EXPECT_EQ(longest_chain_length(z8, by_labels(z8, {"(4)", "(2)", "(1)"})), 3);
  EXPECT_EQ(longest_chain_length(z12, z12.elements()), 4);
}

TEST(Covers, AreTheTransitiveReduction) {
  const auto z12 = ideal_lattice_zn(12);
  const auto covers = z12.covers();
  EXPECT_EQ(covers.size(), 7u);  // 2-chain x 3-chain grid
  // Closing the covers again gives back the order.
  auto rebuilt = FiniteLattice::from_relation(z12.size(), RelationKind::covers, covers, z12.labels());
  EXPECT_EQ(rebuilt, z12);
}

// Lattice laws on a random corpus.
TEST(LatticeProperties, AbsorptionMonotonicityAndClassification) {
  for (const auto& lat : shlat::testing::random_corpus(120, 12, 1000)) {
    const int n = lat.size();
    for (Element a = 0; a < n; ++a) {
      EXPECT_TRUE(lat.le(lat.bottom(), a) && lat.le(a, lat.top()));
      for (Element b = 0; b < n; ++b) {
        EXPECT_EQ(lat.join(a, lat.meet(a, b)), a);
        EXPECT_EQ(lat.meet(a, lat.join(a, b)), a);
        EXPECT_EQ(lat.join(a, b), lat.join(b, a));
        for (Element c = 0; c < n; ++c) {
          if (!lat.le(a, b)) continue;
          EXPECT_TRUE(lat.le(lat.join(a, c), lat.join(b, c)));
          EXPECT_TRUE(lat.le(lat.meet(a, c), lat.meet(b, c)));
        }
      }
    }
    if (is_distributive(lat)) {
      EXPECT_TRUE(is_modular(lat));
    }
  }
}

TEST(LatticeProperties, MinimalElementsFormAnAntichainInsideTheInput) {
  std::mt19937_64 rng(5);
  for (const auto& lat : shlat::testing::random_corpus(60, 10, 77)) {
    for (int trial = 0; trial < 20; ++trial) {
      ElementSet s;
      for (Element x = 0; x < lat.size(); ++x)
        if (rng() & 1u) s.insert(x);
      const auto m = minimal_elements(lat, s);
      EXPECT_TRUE(m.is_subset_of(s));
      EXPECT_EQ(m.empty(), s.empty());
      for (Element a : m)
        for (Element b : m)
          if (a != b) {
            EXPECT_FALSE(lat.comparable(a, b));
          }
    }
  }
}

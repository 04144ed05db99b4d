#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"
#include "sh.hpp"

namespace shlat {

// Subsets of a topology's carrier as bit masks over point positions.
using PointMask = std::uint64_t;

inline constexpr std::size_t kMaxPoints = 64;
// Upper bound on the size of a materialized open/closed family.
inline constexpr std::size_t kMaxFamily = std::size_t{1} << 20;

// A topology on a finite set of lattice elements, materialized as its full
// closed-set family (and the complementary open-set family). Both families
// are sorted by mask value.
class FiniteTopology {
 public:
  // Validates that the family contains the empty set and the carrier and is
  // closed under pairwise union and intersection. Throws AxiomViolation.
  static FiniteTopology from_closed_sets(ElementSet points, const std::vector<ElementSet>& family) {
    FiniteTopology t(std::move(points));
    std::set<PointMask> closed;
    for (const auto& s : family) closed.insert(t.mask_of(s));
    t.closed_.assign(closed.begin(), closed.end());
    t.check_axioms(t.closed_, "closed");
    for (PointMask c : t.closed_) t.open_.push_back(t.full_ & ~c);
    std::sort(t.open_.begin(), t.open_.end());
    return t;
  }

  // Topology whose open sets are the unions of base members. Throws
  // AxiomViolation when the base does not cover the carrier or its unions are
  // not closed under intersection.
  static FiniteTopology from_open_base(ElementSet points, const std::vector<ElementSet>& base) {
    FiniteTopology t(std::move(points));
    std::set<PointMask> open{0};
    for (const auto& b : base) {
      const PointMask m = t.mask_of(b);
      std::vector<PointMask> added;
      for (PointMask o : open)
        if (!open.count(o | m)) added.push_back(o | m);
      open.insert(added.begin(), added.end());
      if (open.size() > kMaxFamily) throw std::length_error("open-set family exceeds materialization limit");
    }
    t.open_.assign(open.begin(), open.end());
    if (!open.count(t.full_)) throw AxiomViolation("open base does not cover the carrier");
    t.check_axioms(t.open_, "open");
    for (PointMask o : t.open_) t.closed_.push_back(t.full_ & ~o);
    std::sort(t.closed_.begin(), t.closed_.end());
    return t;
  }

  const ElementSet& points() const { return points_; }
  std::size_t point_count() const { return points_.size(); }
  PointMask full_mask() const { return full_; }

  const std::vector<PointMask>& closed_masks() const { return closed_; }
  const std::vector<PointMask>& open_masks() const { return open_; }

  std::vector<ElementSet> closed_sets() const { return sets_of(closed_); }
  std::vector<ElementSet> open_sets() const { return sets_of(open_); }

  bool is_closed(PointMask m) const { return std::binary_search(closed_.begin(), closed_.end(), m); }
  bool is_open(PointMask m) const { return std::binary_search(open_.begin(), open_.end(), m); }
  bool is_closed(const ElementSet& s) const { return is_closed(mask_of(s)); }
  bool is_open(const ElementSet& s) const { return is_open(mask_of(s)); }

  // Smallest closed superset.
  PointMask closure(PointMask m) const {
    PointMask acc = full_;
    for (PointMask c : closed_)
      if ((c & m) == m) acc &= c;
    return acc;
  }

  // Smallest open set containing the point at position p.
  PointMask minimal_neighbourhood(std::size_t p) const {
    const PointMask bit = PointMask{1} << p;
    PointMask acc = full_;
    for (PointMask o : open_)
      if (o & bit) acc &= o;
    return acc;
  }

  PointMask mask_of(const ElementSet& s) const {
    PointMask m = 0;
    for (Element x : s) {
      auto it = std::lower_bound(points_.begin(), points_.end(), x);
      if (it == points_.end() || *it != x)
        throw std::invalid_argument("element " + std::to_string(x) + " is not a point of the space");
      m |= PointMask{1} << static_cast<std::size_t>(it - points_.begin());
    }
    return m;
  }

  ElementSet set_of(PointMask m) const {
    std::vector<Element> xs;
    for (std::size_t p = 0; p < points_.size(); ++p)
      if (m >> p & 1u) xs.push_back(points_.members()[p]);
    return ElementSet(std::move(xs));
  }

 private:
  explicit FiniteTopology(ElementSet points) : points_(std::move(points)) {
    if (points_.size() > kMaxPoints)
      throw std::length_error("finite topology supports at most " + std::to_string(kMaxPoints) + " points");
    full_ = points_.size() == kMaxPoints ? ~PointMask{0} : (PointMask{1} << points_.size()) - 1;
  }

  void check_axioms(const std::vector<PointMask>& family, const char* what) const {
    auto has = [&](PointMask m) { return std::binary_search(family.begin(), family.end(), m); };
    if (!has(0)) throw AxiomViolation(std::string(what) + " family misses the empty set");
    if (!has(full_)) throw AxiomViolation(std::string(what) + " family misses the whole space");
    for (std::size_t i = 0; i < family.size(); ++i)
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        if (!has(family[i] | family[j]))
          throw AxiomViolation(std::string(what) + " family not closed under union: " + to_string(set_of(family[i])) +
                               " | " + to_string(set_of(family[j])));
        if (!has(family[i] & family[j]))
          throw AxiomViolation(std::string(what) + " family not closed under intersection: " +
                               to_string(set_of(family[i])) + " & " + to_string(set_of(family[j])));
      }
  }

  std::vector<ElementSet> sets_of(const std::vector<PointMask>& family) const {
    std::vector<ElementSet> out;
    out.reserve(family.size());
    for (PointMask m : family) out.push_back(set_of(m));
    return out;
  }

  ElementSet points_;
  PointMask full_ = 0;
  std::vector<PointMask> closed_;
  std::vector<PointMask> open_;
};

inline std::vector<ElementSet> v_family(const FiniteLattice& lat, const ShAnalysis& sh) {
  std::set<ElementSet> family;
  for (Element i = 0; i < lat.size(); ++i) family.insert(v_of(lat, sh, i));
  return {family.begin(), family.end()};
}

// Closed sets are exactly the V(i).
inline FiniteTopology sh_topology(const FiniteLattice& lat, const ShAnalysis& sh) {
  return FiniteTopology::from_closed_sets(sh.x_points, v_family(lat, sh));
}

// The V(i) form a base of open sets.
inline FiniteTopology w_topology(const FiniteLattice& lat, const ShAnalysis& sh) {
  return FiniteTopology::from_open_base(sh.x_points, v_family(lat, sh));
}

// Distinct points have distinct closures.
inline bool is_t0(const FiniteTopology& top) {
  std::set<PointMask> closures;
  for (std::size_t p = 0; p < top.point_count(); ++p)
    if (!closures.insert(top.closure(PointMask{1} << p)).second) return false;
  return true;
}

// Every singleton is closed.
inline bool is_t1(const FiniteTopology& top) {
  for (std::size_t p = 0; p < top.point_count(); ++p)
    if (!top.is_closed(PointMask{1} << p)) return false;
  return true;
}

// Distinct points have disjoint open neighbourhoods. Any open set around a
// point contains its minimal neighbourhood, so it suffices to test those.
inline bool is_hausdorff(const FiniteTopology& top) {
  std::vector<PointMask> nbhd;
  for (std::size_t p = 0; p < top.point_count(); ++p) nbhd.push_back(top.minimal_neighbourhood(p));
  for (std::size_t p = 0; p < nbhd.size(); ++p)
    for (std::size_t q = p + 1; q < nbhd.size(); ++q)
      if (nbhd[p] & nbhd[q]) return false;
  return true;
}

inline PointMask isolated_points(const FiniteTopology& top, PointMask s) {
  PointMask out = 0;
  for (PointMask g : top.open_masks()) {
    const PointMask hit = g & s;
    if (std::popcount(hit) == 1) out |= hit;
  }
  return out;
}

// Points x of s admitting an open G with G & s == {x}.
inline ElementSet isolated_points(const FiniteTopology& top, const ElementSet& s) {
  return top.set_of(isolated_points(top, top.mask_of(s)));
}

// Limit points of s taken inside the subspace s: s minus its isolated points.
inline PointMask derived_set(const FiniteTopology& top, PointMask s) { return s & ~isolated_points(top, s); }

inline ElementSet derived_set(const FiniteTopology& top, const ElementSet& s) {
  return top.set_of(derived_set(top, top.mask_of(s)));
}

struct CBFiltration {
  std::vector<ElementSet> strata;  // S_0, S_1, ...: isolated points of each level
  std::vector<ElementSet> levels;  // X_0 = carrier, ..., X_k = empty
  int derived_dimension = 0;       // least k with X_k empty
};

// Iterates the derived set from the whole carrier until nothing is left.
// Terminates on every finite space whose nonempty subsets have isolated
// points; anything else is reported as a logic error.
inline CBFiltration cantor_bendixson(const FiniteTopology& top) {
  CBFiltration out;
  PointMask level = top.full_mask();
  out.levels.push_back(top.set_of(level));
  while (level != 0) {
    const PointMask isolated = isolated_points(top, level);
    if (isolated == 0) throw std::logic_error("space is not scattered: a nonempty level has no isolated point");
    out.strata.push_back(top.set_of(isolated));
    level &= ~isolated;
    out.levels.push_back(top.set_of(level));
    ++out.derived_dimension;
  }
  return out;
}

}  // namespace shlat

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "element_set.hpp"

namespace shlat {

enum class RelationKind { covers, le };

enum class ViolationKind { not_a_partial_order, no_unique_join, no_unique_meet, no_bottom, no_top };

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::not_a_partial_order: return "NotAPartialOrder";
    case ViolationKind::no_unique_join: return "NoUniqueJoin";
    case ViolationKind::no_unique_meet: return "NoUniqueMeet";
    case ViolationKind::no_bottom: return "NoBottom";
    case ViolationKind::no_top: return "NoTop";
  }
  return "?";
}

struct Violation {
  ViolationKind kind;
  Element a = -1;
  Element b = -1;
  std::string detail;
};

inline std::string to_string(const Violation& v) {
  std::string out = to_string(v.kind);
  if (v.a >= 0) {
    out += "(" + std::to_string(v.a);
    if (v.b >= 0) out += "," + std::to_string(v.b);
    out += ")";
  }
  if (!v.detail.empty()) out += ": " + v.detail;
  return out;
}

class LatticeError : public std::runtime_error {
 public:
  explicit LatticeError(std::vector<Violation> violations)
      : std::runtime_error(describe(violations)), violations_(std::move(violations)) {}

  const std::vector<Violation>& violations() const { return violations_; }

 private:
  static std::string describe(const std::vector<Violation>& vs) {
    std::string out = "not a bounded lattice";
    std::size_t shown = 0;
    for (const auto& v : vs) {
      out += (shown == 0 ? ": " : "; ") + to_string(v);
      if (++shown == 5) {
        if (vs.size() > shown) out += "; ... (" + std::to_string(vs.size() - shown) + " more)";
        break;
      }
    }
    return out;
  }

  std::vector<Violation> violations_;
};

struct Validation;

// A finite bounded lattice on dense indices 0..n-1. Immutable once built;
// the order relation and the join/meet tables are materialized as n x n arrays.
class FiniteLattice {
 public:
  // Checks the candidate relation and returns either a lattice or every axiom
  // violation found. Covers are closed transitively and reflexively; an "le"
  // relation gets reflexive pairs added but must already be transitive.
  static Validation validate(int n, RelationKind kind, std::span<const std::pair<Element, Element>> pairs,
                             std::vector<std::string> labels = {});

  static FiniteLattice from_relation(int n, RelationKind kind, std::span<const std::pair<Element, Element>> pairs,
                                     std::vector<std::string> labels = {});

  // Builds from a full reflexive order matrix (row-major, n*n).
  static FiniteLattice from_order_matrix(int n, const std::vector<std::uint8_t>& le,
                                         std::vector<std::string> labels = {});

  int size() const { return n_; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  bool le(Element a, Element b) const { return le_[idx(a, b)] != 0; }
  bool lt(Element a, Element b) const { return a != b && le(a, b); }
  bool comparable(Element a, Element b) const { return le(a, b) || le(b, a); }

  Element join(Element a, Element b) const { return join_[idx(a, b)]; }
  Element meet(Element a, Element b) const { return meet_[idx(a, b)]; }

  // Empty joins are bottom, empty meets are top.
  Element join_all(const ElementSet& s) const {
    Element acc = bottom_;
    for (Element x : s) acc = join(acc, x);
    return acc;
  }
  Element meet_all(const ElementSet& s) const {
    Element acc = top_;
    for (Element x : s) acc = meet(acc, x);
    return acc;
  }

  const std::string& label(Element x) const { return labels_[static_cast<std::size_t>(x)]; }
  const std::vector<std::string>& labels() const { return labels_; }

  ElementSet elements() const { return ElementSet::range(n_); }

  // Cover pairs (a, b): a < b with nothing strictly between.
  std::vector<std::pair<Element, Element>> covers() const {
    std::vector<std::pair<Element, Element>> out;
    for (Element a = 0; a < n_; ++a) {
      for (Element b = 0; b < n_; ++b) {
        if (!lt(a, b)) continue;
        bool between = false;
        for (Element c = 0; c < n_ && !between; ++c) between = lt(a, c) && lt(c, b);
        if (!between) out.emplace_back(a, b);
      }
    }
    return out;
  }

  // Coatoms: elements covered by top.
  ElementSet coatoms() const {
    ElementSet out;
    for (auto [a, b] : covers())
      if (b == top_) out.insert(a);
    return out;
  }

  const std::vector<std::uint8_t>& order_matrix() const { return le_; }

  friend bool operator==(const FiniteLattice& x, const FiniteLattice& y) {
    return x.n_ == y.n_ && x.le_ == y.le_ && x.labels_ == y.labels_;
  }

 private:
  FiniteLattice() = default;

  std::size_t idx(Element a, Element b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
  }

  static Validation check_matrix(int n, std::vector<std::uint8_t> le, std::vector<std::string> labels,
                                 std::vector<Violation> violations);

  int n_ = 0;
  Element bottom_ = 0;
  Element top_ = 0;
  std::vector<std::uint8_t> le_;
  std::vector<Element> join_;
  std::vector<Element> meet_;
  std::vector<std::string> labels_;
};

struct Validation {
  std::optional<FiniteLattice> lattice;  // engaged iff violations is empty
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

inline Validation FiniteLattice::validate(int n, RelationKind kind,
                                          std::span<const std::pair<Element, Element>> pairs,
                                          std::vector<std::string> labels) {
  Validation result;
  if (n < 1) {
    result.violations.push_back({ViolationKind::no_bottom, -1, -1, "lattice has no elements"});
    result.violations.push_back({ViolationKind::no_top, -1, -1, "lattice has no elements"});
    return result;
  }
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::uint8_t> le(un * un, 0);
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      result.violations.push_back(
          {ViolationKind::not_a_partial_order, a, b, "pair references an element outside 0.." + std::to_string(n - 1)});
      continue;
    }
    le[static_cast<std::size_t>(a) * un + static_cast<std::size_t>(b)] = 1;
  }
  if (!result.violations.empty()) return result;
  for (std::size_t i = 0; i < un; ++i) le[i * un + i] = 1;

  if (kind == RelationKind::covers) {
    for (std::size_t k = 0; k < un; ++k)
      for (std::size_t i = 0; i < un; ++i)
        if (le[i * un + k])
          for (std::size_t j = 0; j < un; ++j)
            if (le[k * un + j]) le[i * un + j] = 1;
  } else {
    for (std::size_t i = 0; i < un; ++i)
      for (std::size_t j = 0; j < un; ++j) {
        if (!le[i * un + j]) continue;
        for (std::size_t k = 0; k < un; ++k) {
          if (le[j * un + k] && !le[i * un + k]) {
            result.violations.push_back({ViolationKind::not_a_partial_order, static_cast<Element>(i),
                                         static_cast<Element>(k),
                                         "transitivity: missing via " + std::to_string(j)});
          }
        }
      }
  }
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = i + 1; j < un; ++j)
      if (le[i * un + j] && le[j * un + i])
        result.violations.push_back(
            {ViolationKind::not_a_partial_order, static_cast<Element>(i), static_cast<Element>(j), "antisymmetry"});
  if (!result.violations.empty()) {
    // Transitivity failures may repeat a target pair through several witnesses.
    auto& vs = result.violations;
    std::vector<Violation> dedup;
    for (auto& v : vs) {
      bool seen = false;
      for (const auto& d : dedup) seen = seen || (d.kind == v.kind && d.a == v.a && d.b == v.b);
      if (!seen) dedup.push_back(std::move(v));
    }
    vs = std::move(dedup);
    return result;
  }
  return check_matrix(n, std::move(le), std::move(labels), {});
}

inline FiniteLattice FiniteLattice::from_relation(int n, RelationKind kind,
                                                 std::span<const std::pair<Element, Element>> pairs,
                                                 std::vector<std::string> labels) {
  auto v = validate(n, kind, pairs, std::move(labels));
  if (!v.ok()) throw LatticeError(std::move(v.violations));
  return std::move(*v.lattice);
}

inline FiniteLattice FiniteLattice::from_order_matrix(int n, const std::vector<std::uint8_t>& le,
                                                      std::vector<std::string> labels) {
  std::vector<std::pair<Element, Element>> pairs;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (le[static_cast<std::size_t>(a * n + b)]) pairs.emplace_back(a, b);
  return from_relation(n, RelationKind::le, pairs, std::move(labels));
}

inline Validation FiniteLattice::check_matrix(int n, std::vector<std::uint8_t> le, std::vector<std::string> labels,
                                              std::vector<Violation> violations) {
  const auto un = static_cast<std::size_t>(n);
  auto leq = [&](std::size_t a, std::size_t b) { return le[a * un + b] != 0; };

  Element bottom = -1;
  Element top = -1;
  for (std::size_t i = 0; i < un; ++i) {
    bool is_bottom = true;
    bool is_top = true;
    for (std::size_t j = 0; j < un; ++j) {
      is_bottom = is_bottom && leq(i, j);
      is_top = is_top && leq(j, i);
    }
    if (is_bottom) bottom = static_cast<Element>(i);
    if (is_top) top = static_cast<Element>(i);
  }
  if (bottom < 0) violations.push_back({ViolationKind::no_bottom, -1, -1, ""});
  if (top < 0) violations.push_back({ViolationKind::no_top, -1, -1, ""});

  // A least upper bound, if any, is the upper bound with the smallest down-set.
  std::vector<int> down(un, 0);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j) down[i] += leq(j, i) ? 1 : 0;

  std::vector<Element> join(un * un, -1);
  std::vector<Element> meet(un * un, -1);
  for (std::size_t a = 0; a < un; ++a) {
    for (std::size_t b = a; b < un; ++b) {
      std::size_t lub = un;
      std::size_t glb = un;
      for (std::size_t c = 0; c < un; ++c) {
        if (leq(a, c) && leq(b, c) && (lub == un || down[c] < down[lub])) lub = c;
        if (leq(c, a) && leq(c, b) && (glb == un || down[c] > down[glb])) glb = c;
      }
      for (std::size_t d = 0; d < un && lub < un; ++d)
        if (leq(a, d) && leq(b, d) && !leq(lub, d)) lub = un;
      for (std::size_t d = 0; d < un && glb < un; ++d)
        if (leq(d, a) && leq(d, b) && !leq(d, glb)) glb = un;
      if (lub == un)
        violations.push_back({ViolationKind::no_unique_join, static_cast<Element>(a), static_cast<Element>(b), ""});
      if (glb == un)
        violations.push_back({ViolationKind::no_unique_meet, static_cast<Element>(a), static_cast<Element>(b), ""});
      join[a * un + b] = join[b * un + a] = lub == un ? -1 : static_cast<Element>(lub);
      meet[a * un + b] = meet[b * un + a] = glb == un ? -1 : static_cast<Element>(glb);
    }
  }

  Validation result;
  result.violations = std::move(violations);
  if (!result.violations.empty()) return result;

  if (labels.empty()) {
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  } else if (labels.size() != un) {
    throw std::invalid_argument("label count " + std::to_string(labels.size()) + " does not match n = " +
                                std::to_string(n));
  }

  FiniteLattice lat;
  lat.n_ = n;
  lat.bottom_ = bottom;
  lat.top_ = top;
  lat.le_ = std::move(le);
  lat.join_ = std::move(join);
  lat.meet_ = std::move(meet);
  lat.labels_ = std::move(labels);
  result.lattice = std::move(lat);
  return result;
}

// x ^ (y v z) == (x ^ y) v (x ^ z) for every triple.
inline bool is_distributive(const FiniteLattice& lat) {
  const int n = lat.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (lat.meet(x, lat.join(y, z)) != lat.join(lat.meet(x, y), lat.meet(x, z))) return false;
  return true;
}

// a <= c implies a v (b ^ c) == (a v b) ^ c.
inline bool is_modular(const FiniteLattice& lat) {
  const int n = lat.size();
  for (Element a = 0; a < n; ++a)
    for (Element c = 0; c < n; ++c) {
      if (!lat.le(a, c)) continue;
      for (Element b = 0; b < n; ++b)
        if (lat.join(a, lat.meet(b, c)) != lat.meet(lat.join(a, b), c)) return false;
    }
  return true;
}

inline ElementSet minimal_elements(const FiniteLattice& lat, const ElementSet& s) {
  ElementSet out;
  for (Element x : s) {
    bool minimal = true;
    for (Element y : s) {
      if (lat.lt(y, x)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.insert(x);
  }
  return out;
}

// Number of elements in a longest chain x_1 < ... < x_k inside s.
inline int longest_chain_length(const FiniteLattice& lat, const ElementSet& s) {
  // Sorting by down-set size gives a linear extension of the order.
  std::vector<std::pair<int, Element>> order;
  for (Element x : s) {
    int below = 0;
    for (Element y = 0; y < lat.size(); ++y) below += lat.le(y, x) ? 1 : 0;
    order.emplace_back(below, x);
  }
  std::sort(order.begin(), order.end());
  std::vector<int> best(static_cast<std::size_t>(lat.size()), 0);
  int longest = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Element x = order[i].second;
    int here = 1;
    for (std::size_t j = 0; j < i; ++j) {
      const Element y = order[j].second;
      if (lat.lt(y, x)) here = std::max(here, best[static_cast<std::size_t>(y)] + 1);
    }
    best[static_cast<std::size_t>(x)] = here;
    longest = std::max(longest, here);
  }
  return longest;
}

}  // namespace shlat

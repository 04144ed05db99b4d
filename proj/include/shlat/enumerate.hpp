#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lattice.hpp"

namespace shlat {

inline constexpr int kMaxExhaustiveSize = 7;

namespace detail {

using OrderBits = std::vector<std::uint8_t>;

inline OrderBits permuted(const OrderBits& le, int n, const std::vector<int>& perm) {
  OrderBits out(le.size(), 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      out[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)] * n + perm[static_cast<std::size_t>(b)])] =
          le[static_cast<std::size_t>(a * n + b)];
  return out;
}

// Smallest order matrix over relabelings that keep 0 as bottom and n-1 as top.
inline OrderBits canonical_form(const OrderBits& le, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  OrderBits best = le;
  if (n <= 2) return best;
  do {
    auto candidate = permuted(le, n, perm);
    if (candidate < best) best = std::move(candidate);
  } while (std::next_permutation(perm.begin() + 1, perm.end() - 1));
  return best;
}

// Every naturally labelled poset on m elements (i <_P j implies i < j),
// built by appending a new maximal element whose strict down-set is a
// down-closed subset of the earlier elements. Strict relation as m*m bits.
template <class Visitor>
void natural_posets(int m, int next, OrderBits& lt, Visitor& visit) {
  if (next == m) {
    visit(static_cast<const OrderBits&>(lt));
    return;
  }
  const auto um = static_cast<std::size_t>(m);
  const std::uint32_t subsets = 1u << next;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    bool down_closed = true;
    for (int i = 0; i < next && down_closed; ++i) {
      if (!(mask >> i & 1u)) continue;
      for (int k = 0; k < i && down_closed; ++k)
        if (lt[static_cast<std::size_t>(k) * um + static_cast<std::size_t>(i)] && !(mask >> k & 1u))
          down_closed = false;
    }
    if (!down_closed) continue;
    for (int i = 0; i < next; ++i)
      lt[static_cast<std::size_t>(i) * um + static_cast<std::size_t>(next)] = (mask >> i & 1u) ? 1 : 0;
    natural_posets(m, next + 1, lt, visit);
  }
  for (int i = 0; i < next; ++i) lt[static_cast<std::size_t>(i) * um + static_cast<std::size_t>(next)] = 0;
}

// Canonical order matrices of all lattices with exactly n elements, sorted.
inline std::vector<OrderBits> lattice_classes(int n) {
  const auto un = static_cast<std::size_t>(n);
  if (n == 1) return {OrderBits{1}};
  const int m = n - 2;
  std::set<OrderBits> classes;
  OrderBits lt(static_cast<std::size_t>(m * m), 0);
  auto visit = [&](const OrderBits& inner) {
    OrderBits le(un * un, 0);
    for (std::size_t i = 0; i < un; ++i) {
      le[i * un + i] = 1;
      le[i] = 1;
      le[i * un + un - 1] = 1;
    }
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (inner[static_cast<std::size_t>(i * m + j)])
          le[static_cast<std::size_t>(i + 1) * un + static_cast<std::size_t>(j + 1)] = 1;
    std::vector<std::pair<Element, Element>> pairs;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (le[static_cast<std::size_t>(a * n + b)]) pairs.emplace_back(a, b);
    if (FiniteLattice::validate(n, RelationKind::le, pairs).ok()) classes.insert(canonical_form(le, n));
  };
  natural_posets(m, 0, lt, visit);
  return {classes.begin(), classes.end()};
}

}  // namespace detail

// Visits every bounded lattice with 1..max_size elements in a deterministic
// order: by size, then by isomorphism class, then by order matrix. With
// unique = true only one canonical representative per class is visited;
// otherwise every labelled lattice on the index set 0..n-1 is visited.
template <class Visitor>
void enumerate_lattices(int max_size, bool unique, Visitor&& visit) {
  if (max_size > kMaxExhaustiveSize)
    throw std::invalid_argument("exhaustive enumeration is limited to " + std::to_string(kMaxExhaustiveSize) +
                                " elements (requested " + std::to_string(max_size) + ")");
  for (int n = 1; n <= max_size; ++n) {
    for (const auto& rep : detail::lattice_classes(n)) {
      if (unique) {
        visit(FiniteLattice::from_order_matrix(n, rep));
        continue;
      }
      std::set<detail::OrderBits> variants;
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      do {
        variants.insert(detail::permuted(rep, n, perm));
      } while (std::next_permutation(perm.begin(), perm.end()));
      for (const auto& v : variants) visit(FiniteLattice::from_order_matrix(n, v));
    }
  }
}

inline std::vector<FiniteLattice> all_lattices(int max_size, bool unique) {
  std::vector<FiniteLattice> out;
  enumerate_lattices(max_size, unique, [&](FiniteLattice lat) { out.push_back(std::move(lat)); });
  return out;
}

}  // namespace shlat

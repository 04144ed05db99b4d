#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lattice.hpp"

namespace shlat {

inline constexpr long kMaxZn = 1'000'000;

// Ideal lattice of Z_n. Elements are the principal ideals (d) for d | n,
// listed from (n) = 0 up to (1) = Z_n, with (d1) <= (d2) iff d2 | d1.
inline FiniteLattice ideal_lattice_zn(long n) {
  if (n < 2) throw std::invalid_argument("zn: n must be at least 2, got " + std::to_string(n));
  if (n > kMaxZn) throw std::invalid_argument("zn: n must be at most " + std::to_string(kMaxZn));
  std::vector<long> small;
  std::vector<long> large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  // Descending divisors so bottom = (n) gets index 0.
  std::vector<long> divisors(large.begin(), large.end());
  divisors.insert(divisors.end(), small.rbegin(), small.rend());

  const int size = static_cast<int>(divisors.size());
  std::vector<std::pair<Element, Element>> pairs;
  std::vector<std::string> labels;
  for (int i = 0; i < size; ++i) {
    labels.push_back("(" + std::to_string(divisors[static_cast<std::size_t>(i)]) + ")");
    for (int j = 0; j < size; ++j)
      if (divisors[static_cast<std::size_t>(i)] % divisors[static_cast<std::size_t>(j)] == 0) pairs.emplace_back(i, j);
  }
  return FiniteLattice::from_relation(size, RelationKind::le, pairs, std::move(labels));
}

// k-element chain 0 < 1 < ... < k-1.
inline FiniteLattice chain_lattice(int k) {
  if (k < 1) throw std::invalid_argument("chain: k must be at least 1, got " + std::to_string(k));
  std::vector<std::pair<Element, Element>> covers;
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) {
    labels.push_back("c" + std::to_string(i));
    if (i + 1 < k) covers.emplace_back(i, i + 1);
  }
  return FiniteLattice::from_relation(k, RelationKind::covers, covers, std::move(labels));
}

// Componentwise order on the cartesian product; the first factor varies slowest.
inline FiniteLattice product(const std::vector<FiniteLattice>& factors) {
  if (factors.empty()) throw std::invalid_argument("product: needs at least one factor");
  std::vector<std::vector<Element>> tuples{{}};
  for (const auto& f : factors) {
    std::vector<std::vector<Element>> next;
    for (const auto& t : tuples)
      for (Element x = 0; x < f.size(); ++x) {
        next.push_back(t);
        next.back().push_back(x);
      }
    tuples = std::move(next);
  }
  const int size = static_cast<int>(tuples.size());
  std::vector<std::string> labels;
  for (const auto& t : tuples) {
    std::string l = "(";
    for (std::size_t i = 0; i < t.size(); ++i) l += (i ? "," : "") + factors[i].label(t[i]);
    labels.push_back(l + ")");
  }
  std::vector<std::pair<Element, Element>> pairs;
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) {
      bool le = true;
      for (std::size_t i = 0; i < factors.size() && le; ++i)
        le = factors[i].le(tuples[static_cast<std::size_t>(a)][i], tuples[static_cast<std::size_t>(b)][i]);
      if (le) pairs.emplace_back(a, b);
    }
  return FiniteLattice::from_relation(size, RelationKind::le, pairs, std::move(labels));
}

// Diamond: 0 < a, b, c < 1.
inline FiniteLattice m3_lattice() {
  const std::vector<std::pair<Element, Element>> covers{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
  return FiniteLattice::from_relation(5, RelationKind::covers, covers, {"0", "a", "b", "c", "1"});
}

// Pentagon: 0 < a < c < 1 and 0 < b < 1.
inline FiniteLattice n5_lattice() {
  const std::vector<std::pair<Element, Element>> covers{{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}};
  return FiniteLattice::from_relation(5, RelationKind::covers, covers, {"0", "a", "b", "c", "1"});
}

// Boolean square: 0 < a, b < 1.
inline FiniteLattice b2_lattice() {
  const std::vector<std::pair<Element, Element>> covers{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  return FiniteLattice::from_relation(4, RelationKind::covers, covers, {"0", "a", "b", "1"});
}

// Random lattice, deterministic in (size, seed) and NOT uniformly distributed.
// Random covers are inserted between the inner elements of a naturally
// labelled bounded poset; pairs without a unique join (meet) are then repaired
// by ordering two of their minimal upper (maximal lower) bounds, which always
// terminates in a lattice. Indices are shuffled at the end.
inline FiniteLattice random_lattice(int size, std::uint64_t seed) {
  if (size < 1) throw std::invalid_argument("random lattice: size must be at least 1");
  if (size == 1) return chain_lattice(1);
  std::mt19937_64 rng(seed);
  const auto un = static_cast<std::size_t>(size);
  const Element top = size - 1;
  std::vector<std::uint8_t> le(un * un, 0);
  auto at = [&](Element a, Element b) -> std::uint8_t& {
    return le[static_cast<std::size_t>(a) * un + static_cast<std::size_t>(b)];
  };
  for (Element i = 0; i < size; ++i) {
    at(i, i) = 1;
    at(0, i) = 1;
    at(i, top) = 1;
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double density = 0.15 + 0.45 * unit(rng);
  for (Element i = 1; i < top; ++i)
    for (Element j = i + 1; j < top; ++j)
      if (unit(rng) < density) at(i, j) = 1;

  auto close = [&] {
    for (Element k = 0; k < size; ++k)
      for (Element i = 0; i < size; ++i)
        if (at(i, k))
          for (Element j = 0; j < size; ++j)
            if (at(k, j)) at(i, j) = 1;
  };
  // Returns false once no pair needs repair.
  auto repair_once = [&]() -> bool {
    for (Element a = 0; a < size; ++a)
      for (Element b = a + 1; b < size; ++b) {
        std::vector<Element> upper;
        std::vector<Element> lower;
        for (Element c = 0; c < size; ++c) {
          if (at(a, c) && at(b, c)) upper.push_back(c);
          if (at(c, a) && at(c, b)) lower.push_back(c);
        }
        std::vector<Element> minimal_upper;
        for (Element u : upper) {
          bool minimal = true;
          for (Element v : upper) minimal = minimal && !(v != u && at(v, u));
          if (minimal) minimal_upper.push_back(u);
        }
        if (minimal_upper.size() > 1) {
          at(minimal_upper[0], minimal_upper[1]) = 1;
          return true;
        }
        std::vector<Element> maximal_lower;
        for (Element l : lower) {
          bool maximal = true;
          for (Element v : lower) maximal = maximal && !(v != l && at(l, v));
          if (maximal) maximal_lower.push_back(l);
        }
        if (maximal_lower.size() > 1) {
          at(maximal_lower[0], maximal_lower[1]) = 1;
          return true;
        }
      }
    return false;
  };

  const int max_rounds = size * size * size + 16;
  bool done = false;
  for (int round = 0; round < max_rounds && !done; ++round) {
    close();
    done = !repair_once();
  }
  if (!done)
    throw std::runtime_error("random lattice: no lattice after " + std::to_string(max_rounds) + " repair rounds");

  std::vector<Element> perm(un);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::uint8_t> shuffled(un * un, 0);
  for (Element a = 0; a < size; ++a)
    for (Element b = 0; b < size; ++b)
      shuffled[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)]) * un +
               static_cast<std::size_t>(perm[static_cast<std::size_t>(b)])] = at(a, b);
  return FiniteLattice::from_order_matrix(size, shuffled);
}

}  // namespace shlat

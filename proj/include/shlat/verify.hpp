#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dimensions.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "lattice.hpp"
#include "lattice_json.hpp"
#include "sh.hpp"
#include "spec.hpp"
#include "topology.hpp"

namespace shlat {

// Everything a claim checker may look at for one lattice, computed once.
struct Instance {
  std::string name;
  FiniteLattice lattice;
  ShAnalysis sh;
  YFiltration y;
  bool distributive = false;
  bool modular = false;
  std::optional<FiniteTopology> sh_top;
  std::optional<FiniteTopology> w_top;
  std::optional<CBFiltration> cb;  // of the W-topology
  std::string build_error;         // set when a topology or the filtration failed to build
  std::uint64_t seed = 0;          // drives subset sampling
};

inline Instance prepare(FiniteLattice lat, std::string name, std::uint64_t seed = 0) {
  Instance inst{std::move(name), std::move(lat), {}, {}, false, false, std::nullopt, std::nullopt, std::nullopt, {},
                seed};
  const auto& l = inst.lattice;
  inst.sh = sh_set(l);
  inst.y = y_filtration(l, inst.sh);
  inst.distributive = is_distributive(l);
  inst.modular = inst.distributive || is_modular(l);
  try {
    inst.sh_top = sh_topology(l, inst.sh);
  } catch (const std::exception& e) {
    inst.build_error += std::string("SH-topology: ") + e.what() + "; ";
  }
  try {
    inst.w_top = w_topology(l, inst.sh);
    inst.cb = cantor_bendixson(*inst.w_top);
  } catch (const std::exception& e) {
    inst.build_error += std::string("W-topology: ") + e.what() + "; ";
  }
  return inst;
}

enum class Hypothesis { any, modular, distributive };

inline const char* to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::any: return "any";
    case Hypothesis::modular: return "modular";
    case Hypothesis::distributive: return "distributive";
  }
  return "?";
}

inline bool satisfies(const Instance& inst, Hypothesis h) {
  switch (h) {
    case Hypothesis::any: return true;
    case Hypothesis::modular: return inst.modular;
    case Hypothesis::distributive: return inst.distributive;
  }
  return false;
}

struct CheckResult {
  bool pass = true;
  std::string detail;

  static CheckResult ok() { return {}; }
  static CheckResult fail(std::string why) { return {false, std::move(why)}; }
};

struct Claim {
  std::string id;
  std::string statement;
  Hypothesis hypothesis = Hypothesis::any;
  std::function<CheckResult(const Instance&)> check;
};

// Runs a checker, turning exceptions into failures.
inline CheckResult evaluate(const Claim& claim, const Instance& inst) {
  try {
    return claim.check(inst);
  } catch (const std::exception& e) {
    return CheckResult::fail(std::string("checker threw: ") + e.what());
  }
}

class ClaimRegistry {
 public:
  void add(Claim claim) {
    if (find(claim.id)) throw std::invalid_argument("duplicate claim id: " + claim.id);
    claims_.push_back(std::move(claim));
  }

  const Claim* find(const std::string& id) const {
    for (const auto& c : claims_)
      if (c.id == id) return &c;
    return nullptr;
  }

  const Claim& at(const std::string& id) const {
    if (const Claim* c = find(id)) return *c;
    throw std::out_of_range("unknown claim id: " + id);
  }

  const std::vector<Claim>& claims() const { return claims_; }

  static const ClaimRegistry& standard();

 private:
  std::vector<Claim> claims_;
};

namespace detail {

inline std::string labels_of(const FiniteLattice& lat, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (Element x : s) {
    out += (first ? "" : ",") + lat.label(x);
    first = false;
  }
  return out + "}";
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline constexpr int kExhaustiveSubsetPoints = 12;
inline constexpr int kSampledSubsets = 1000;
inline constexpr int kExhaustiveFamilyElements = 10;
inline constexpr int kSampledFamilies = 200;

// All subsets of `full` when it has at most 12 points, otherwise 1000 seeded
// random subsets. Stops at the first subset for which fn returns a failure.
template <class Fn>
CheckResult over_point_subsets(PointMask full, std::uint64_t seed, Fn&& fn) {
  if (std::popcount(full) <= kExhaustiveSubsetPoints) {
    PointMask s = 0;
    while (true) {
      if (auto r = fn(s); !r.pass) return r;
      if (s == full) break;
      s = (s - full) & full;  // next submask in increasing order
    }
    return CheckResult::ok();
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < kSampledSubsets; ++i)
    if (auto r = fn(rng() & full); !r.pass) return r;
  return CheckResult::ok();
}

// Families of lattice elements: every subset for small lattices, otherwise
// the empty family, all pairs and 200 seeded random subsets.
template <class Fn>
CheckResult over_families(const FiniteLattice& lat, std::uint64_t seed, Fn&& fn) {
  const int n = lat.size();
  if (n <= kExhaustiveFamilyElements) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      ElementSet fam;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1u) fam.insert(i);
      if (auto r = fn(fam); !r.pass) return r;
    }
    return CheckResult::ok();
  }
  if (auto r = fn(ElementSet{}); !r.pass) return r;
  for (Element a = 0; a < n; ++a)
    for (Element b = a; b < n; ++b)
      if (auto r = fn(ElementSet{a, b}); !r.pass) return r;
  std::mt19937_64 rng(seed);
  for (int k = 0; k < kSampledFamilies; ++k) {
    ElementSet fam;
    for (Element i = 0; i < n; ++i)
      if (rng() & 1u) fam.insert(i);
    if (auto r = fn(fam); !r.pass) return r;
  }
  return CheckResult::ok();
}

inline CheckResult need_topologies(const Instance& inst) {
  if (inst.sh_top && inst.w_top && inst.cb) return CheckResult::ok();
  return CheckResult::fail("topology unavailable: " + inst.build_error);
}

inline ClaimRegistry make_standard_registry() {
  ClaimRegistry reg;
  using I = const Instance&;

  reg.add({"zero_is_sh", "bottom is strongly hollow", Hypothesis::any, [](I inst) {
             return inst.sh.is_sh(inst.lattice.bottom()) ? CheckResult::ok()
                                                          : CheckResult::fail("bottom not strongly hollow");
           }});

  reg.add({"simple_ring_is_sh_ring", "a two-element lattice has a strongly hollow top", Hypothesis::any, [](I inst) {
             if (inst.lattice.size() != 2 || is_sh_ring(inst.lattice, inst.sh)) return CheckResult::ok();
             return CheckResult::fail("top of a 2-element lattice is not strongly hollow");
           }});

  reg.add({"sh_ring_is_semi_sh_ring", "strongly hollow top implies top = join of SH", Hypothesis::any, [](I inst) {
             if (!is_sh_ring(inst.lattice, inst.sh) || is_semi_sh_ring(inst.lattice, inst.sh)) return CheckResult::ok();
             return CheckResult::fail("sh-ring that is not a semi-sh-ring");
           }});

  reg.add({"chain_elements_all_sh", "in a chain every element is strongly hollow", Hypothesis::any, [](I inst) {
             const auto& lat = inst.lattice;
             for (Element a = 0; a < lat.size(); ++a)
               for (Element b = 0; b < lat.size(); ++b)
                 if (!lat.comparable(a, b)) return CheckResult::ok();
             for (Element a = 0; a < lat.size(); ++a)
               if (!inst.sh.is_sh(a)) return CheckResult::fail("chain element " + lat.label(a) + " not sh");
             return CheckResult::ok();
           }});

  reg.add({"y0_is_zero_and_minimal_sh", "Y_0 = {0} u minimal nonzero sh-elements", Hypothesis::any, [](I inst) {
             if (inst.y.dimension < 0) return CheckResult::ok();
             ElementSet expected = minimal_elements(inst.lattice, inst.sh.x_points);
             expected.insert(inst.lattice.bottom());
             if (inst.y.levels.front() == expected) return CheckResult::ok();
             return CheckResult::fail("Y_0 = " + labels_of(inst.lattice, inst.y.levels.front()) + ", expected " +
                                      labels_of(inst.lattice, expected));
           }});

  reg.add({"y_levels_strictly_increase", "Y_0 < Y_1 < ... strictly until Y = SH", Hypothesis::any, [](I inst) {
             const auto& lv = inst.y.levels;
             const ElementSet all = inst.sh.sh_elements(inst.lattice);
             if (inst.y.dimension < 0) {
               return lv.empty() && all.size() == 1 ? CheckResult::ok()
                                                    : CheckResult::fail("dimension -1 with nonzero sh-elements");
             }
             if (static_cast<int>(lv.size()) != inst.y.dimension + 1 || lv.back() != all)
               return CheckResult::fail("last level is not SH");
             if (lv.front().size() < 2) return CheckResult::fail("Y_0 adds nothing to Y_-1");
             for (std::size_t k = 0; k + 1 < lv.size(); ++k)
               if (!lv[k].is_subset_of(lv[k + 1]) || lv[k] == lv[k + 1])
                 return CheckResult::fail("Y_" + std::to_string(k) + " not strictly below Y_" + std::to_string(k + 1));
             return CheckResult::ok();
           }});

  reg.add({"dclk_minus_one_iff_no_sh", "dclk = -1 iff SH = {0}", Hypothesis::any, [](I inst) {
             if ((inst.y.dimension == -1) == inst.sh.x_points.empty()) return CheckResult::ok();
             return CheckResult::fail("dclk " + std::to_string(inst.y.dimension) + " with |X| = " +
                                      std::to_string(inst.sh.x_points.size()));
           }});

  reg.add({"dclk_equals_chain_oracle", "Y-filtration index = longest chain in X minus 1", Hypothesis::any,
           [](I inst) {
             const int oracle = dclk_dimension_oracle(inst.lattice, inst.sh);
             if (oracle == inst.y.dimension) return CheckResult::ok();
             return CheckResult::fail("filtration " + std::to_string(inst.y.dimension) + " vs chain oracle " +
                                      std::to_string(oracle));
           }});

  reg.add({"coatoms_meet_zero_bounds_dclk", "meet of coatoms = 0 implies dclk <= 0", Hypothesis::modular,
           [](I inst) {
             const auto& lat = inst.lattice;
             if (lat.meet_all(lat.coatoms()) != lat.bottom() || inst.y.dimension <= 0) return CheckResult::ok();
             return CheckResult::fail("coatoms meet to bottom but dclk = " + std::to_string(inst.y.dimension));
           }});

  reg.add({"v_empty_iff_no_sh_below", "V(I) empty iff no nonzero sh-element below I", Hypothesis::any, [](I inst) {
             const auto& lat = inst.lattice;
             for (Element i = 0; i < lat.size(); ++i) {
               bool some_below = false;
               for (Element l = 0; l < lat.size(); ++l)
                 some_below = some_below || (l != lat.bottom() && is_strongly_hollow(lat, l) && lat.le(l, i));
               if (v_of(lat, inst.sh, i).empty() == some_below) return CheckResult::fail("I = " + lat.label(i));
             }
             return CheckResult::ok();
           }});

  reg.add({"v_singleton_iff_minimal_sh", "V(I) = {I} iff I is a minimal nonzero sh-element", Hypothesis::any,
           [](I inst) {
             const auto& lat = inst.lattice;
             const ElementSet minimal = minimal_elements(lat, inst.sh.x_points);
             for (Element i = 0; i < lat.size(); ++i) {
               const bool singleton = v_of(lat, inst.sh, i) == ElementSet{i};
               if (singleton != minimal.contains(i)) return CheckResult::fail("I = " + lat.label(i));
             }
             return CheckResult::ok();
           }});

  reg.add({"v_is_carrier_iff_above_all_sh", "V(I) = X iff I contains every sh-element; V(top) = X", Hypothesis::any,
           [](I inst) {
             const auto& lat = inst.lattice;
             if (v_of(lat, inst.sh, lat.top()) != inst.sh.x_points) return CheckResult::fail("V(top) != X");
             for (Element i = 0; i < lat.size(); ++i) {
               bool above_all = true;
               for (Element l = 0; l < lat.size(); ++l)
                 above_all = above_all && (!inst.sh.is_sh(l) || lat.le(l, i));
               if ((v_of(lat, inst.sh, i) == inst.sh.x_points) != above_all)
                 return CheckResult::fail("I = " + lat.label(i));
             }
             return CheckResult::ok();
           }});

  reg.add({"v_of_join_is_union", "V(I v J) = V(I) u V(J)", Hypothesis::any, [](I inst) {
             const auto& lat = inst.lattice;
             for (Element i = 0; i < lat.size(); ++i)
               for (Element j = 0; j < lat.size(); ++j)
                 if (v_of(lat, inst.sh, lat.join(i, j)) != (v_of(lat, inst.sh, i) | v_of(lat, inst.sh, j)))
                   return CheckResult::fail("I = " + lat.label(i) + ", J = " + lat.label(j));
             return CheckResult::ok();
           }});

  reg.add({"v_of_meet_is_intersection", "V(meet of a family) = intersection of the V's", Hypothesis::any,
           [](I inst) {
             const auto& lat = inst.lattice;
             return over_families(lat, inst.seed, [&](const ElementSet& fam) {
               ElementSet expected = inst.sh.x_points;
               for (Element f : fam) expected = expected & v_of(lat, inst.sh, f);
               if (v_of(lat, inst.sh, lat.meet_all(fam)) == expected) return CheckResult::ok();
               return CheckResult::fail("family " + labels_of(lat, fam));
             });
           }});

  reg.add({"v_of_underline", "V(I) = V(underline I)", Hypothesis::any, [](I inst) {
             const auto& lat = inst.lattice;
             for (Element i = 0; i < lat.size(); ++i)
               if (v_of(lat, inst.sh, i) != v_of(lat, inst.sh, underline(lat, inst.sh, i)))
                 return CheckResult::fail("I = " + lat.label(i));
             return CheckResult::ok();
           }});

  reg.add({"fixed_by_underline_iff_semi_sh", "I = underline I iff I is the join of the sh-elements below it",
           Hypothesis::any, [](I inst) {
             const auto& lat = inst.lattice;
             for (Element i = 0; i < lat.size(); ++i) {
               ElementSet below;
               for (Element l = 0; l < lat.size(); ++l)
                 if (lat.le(l, i) && is_strongly_hollow(lat, l)) below.insert(l);
               const bool semi_sh = lat.join_all(below) == i;
               if (semi_sh != (underline(lat, inst.sh, i) == i)) return CheckResult::fail("I = " + lat.label(i));
             }
             return CheckResult::ok();
           }});

  reg.add({"equal_v_equal_underline", "V(I) = V(J) implies underline I = underline J", Hypothesis::any, [](I inst) {
             const auto& lat = inst.lattice;
             for (Element i = 0; i < lat.size(); ++i)
               for (Element j = i + 1; j < lat.size(); ++j)
                 if (v_of(lat, inst.sh, i) == v_of(lat, inst.sh, j) &&
                     underline(lat, inst.sh, i) != underline(lat, inst.sh, j))
                   return CheckResult::fail("I = " + lat.label(i) + ", J = " + lat.label(j));
             return CheckResult::ok();
           }});

  reg.add({"underline_of_meet_is_meet_of_underlines", "underline(meet of a nonempty family) = meet of underlines",
           Hypothesis::distributive, [](I inst) {
             const auto& lat = inst.lattice;
             return over_families(lat, inst.seed, [&](const ElementSet& fam) {
               if (fam.empty()) return CheckResult::ok();
               ElementSet underlines;
               for (Element f : fam) underlines.insert(underline(lat, inst.sh, f));
               if (underline(lat, inst.sh, lat.meet_all(fam)) == lat.meet_all(underlines)) return CheckResult::ok();
               return CheckResult::fail("family " + labels_of(lat, fam));
             });
           }});

  reg.add({"underline_is_kernel", "underline is deflationary, monotone and idempotent", Hypothesis::any, [](I inst) {
             const auto& lat = inst.lattice;
             for (Element i = 0; i < lat.size(); ++i) {
               const Element u = underline(lat, inst.sh, i);
               if (!lat.le(u, i)) return CheckResult::fail("underline not below I = " + lat.label(i));
               if (underline(lat, inst.sh, u) != u) return CheckResult::fail("not idempotent at " + lat.label(i));
               for (Element j = 0; j < lat.size(); ++j)
                 if (lat.le(i, j) && !lat.le(u, underline(lat, inst.sh, j)))
                   return CheckResult::fail("not monotone at " + lat.label(i) + " <= " + lat.label(j));
             }
             return CheckResult::ok();
           }});

  reg.add({"sh_closed_set_axioms", "the V(I) satisfy the closed-set axioms", Hypothesis::any, [](I inst) {
             if (inst.sh_top) return CheckResult::ok();
             return CheckResult::fail(inst.build_error);
           }});

  reg.add({"sh_topology_t0", "SH-topology is T0", Hypothesis::any, [](I inst) {
             if (!inst.sh_top) return CheckResult::fail(inst.build_error);
             return is_t0(*inst.sh_top) ? CheckResult::ok() : CheckResult::fail("two points share a closure");
           }});

  reg.add({"sh_topology_trivial_iff_single_point", "for nonempty X, SH-topology is indiscrete iff |X| = 1",
           Hypothesis::any, [](I inst) {
             if (!inst.sh_top) return CheckResult::fail(inst.build_error);
             if (inst.sh.x_points.empty()) return CheckResult::ok();
             const bool trivial = inst.sh_top->closed_masks().size() == 2;
             if (trivial == (inst.sh.x_points.size() == 1)) return CheckResult::ok();
             return CheckResult::fail("|X| = " + std::to_string(inst.sh.x_points.size()) + ", closed sets = " +
                                      std::to_string(inst.sh_top->closed_masks().size()));
           }});

  reg.add({"t1_iff_all_sh_minimal", "SH- and W-topology are T1 iff every point of X is minimal", Hypothesis::any,
           [](I inst) {
             if (auto r = need_topologies(inst); !r.pass) return r;
             const bool all_minimal = minimal_elements(inst.lattice, inst.sh.x_points) == inst.sh.x_points;
             if (is_t1(*inst.sh_top) != all_minimal) return CheckResult::fail("SH-topology");
             if (is_t1(*inst.w_top) != all_minimal) return CheckResult::fail("W-topology");
             return CheckResult::ok();
           }});

  reg.add({"hausdorff_gives_covering_pair",
           "Hausdorff SH-topology: each pair of points is separated by V(I1)^c, V(I2)^c with X = V(I1) u V(I2)",
           Hypothesis::any, [](I inst) {
             if (!inst.sh_top) return CheckResult::fail(inst.build_error);
             if (!is_hausdorff(*inst.sh_top)) return CheckResult::ok();
             const auto& lat = inst.lattice;
             const auto& xs = inst.sh.x_points;
             for (Element p : xs)
               for (Element q : xs) {
                 if (p >= q) continue;
                 bool found = false;
                 for (Element i1 = 0; i1 < lat.size() && !found; ++i1) {
                   const ElementSet v1 = v_of(lat, inst.sh, i1);
                   if (v1.contains(p)) continue;
                   for (Element i2 = 0; i2 < lat.size() && !found; ++i2) {
                     const ElementSet v2 = v_of(lat, inst.sh, i2);
                     found = !v2.contains(q) && (v1 | v2) == xs;
                   }
                 }
                 if (!found) return CheckResult::fail("no covering pair for " + lat.label(p) + ", " + lat.label(q));
               }
             return CheckResult::ok();
           }});

  reg.add({"semi_sh_order_isomorphism", "I -> V(I) is an order isomorphism from semi-sh elements onto closed sets",
           Hypothesis::any, [](I inst) {
             if (!inst.sh_top) return CheckResult::fail(inst.build_error);
             const auto& lat = inst.lattice;
             std::vector<Element> semi;
             for (Element i = 0; i < lat.size(); ++i)
               if (is_semi_sh(lat, inst.sh, i)) semi.push_back(i);
             std::vector<ElementSet> image;
             for (Element i : semi) image.push_back(v_of(lat, inst.sh, i));
             for (std::size_t a = 0; a < semi.size(); ++a)
               for (std::size_t b = 0; b < semi.size(); ++b)
                 if (lat.le(semi[a], semi[b]) != image[a].is_subset_of(image[b]))
                   return CheckResult::fail("order not reflected between " + lat.label(semi[a]) + " and " +
                                            lat.label(semi[b]));
             std::sort(image.begin(), image.end());
             if (std::adjacent_find(image.begin(), image.end()) != image.end())
               return CheckResult::fail("two semi-sh elements share V");
             auto closed = inst.sh_top->closed_sets();
             std::sort(closed.begin(), closed.end());
             if (image != closed) return CheckResult::fail("image is not the closed-set family");
             return CheckResult::ok();
           }});

  reg.add({"w_base_axioms", "the V(I) cover X and are closed under pairwise intersection", Hypothesis::any,
           [](I inst) {
             if (!inst.w_top) return CheckResult::fail(inst.build_error);
             const auto& lat = inst.lattice;
             ElementSet cover;
             for (Element i = 0; i < lat.size(); ++i) cover = cover | v_of(lat, inst.sh, i);
             if (cover != inst.sh.x_points) return CheckResult::fail("base does not cover X");
             for (Element i = 0; i < lat.size(); ++i)
               for (Element j = 0; j < lat.size(); ++j)
                 if (v_of(lat, inst.sh, lat.meet(i, j)) != (v_of(lat, inst.sh, i) & v_of(lat, inst.sh, j)))
                   return CheckResult::fail("V(I ^ J) != V(I) & V(J) at " + lat.label(i) + ", " + lat.label(j));
             return CheckResult::ok();
           }});

  reg.add({"isolated_iff_minimal", "in the W-topology the isolated points of S are its minimal elements",
           Hypothesis::any, [](I inst) {
             if (auto r = need_topologies(inst); !r.pass) return r;
             const auto& w = *inst.w_top;
             return over_point_subsets(w.full_mask(), inst.seed, [&](PointMask s) {
               const PointMask minimal = w.mask_of(minimal_elements(inst.lattice, w.set_of(s)));
               if (isolated_points(w, s) == minimal) return CheckResult::ok();
               return CheckResult::fail("S = " + labels_of(inst.lattice, w.set_of(s)));
             });
           }});

  reg.add({"isolated_points_open_in_subspace",
           "the union of V(L) over the isolated points L of S is W-open and meets S in exactly those points",
           Hypothesis::any, [](I inst) {
             if (auto r = need_topologies(inst); !r.pass) return r;
             const auto& w = *inst.w_top;
             return over_point_subsets(w.full_mask(), inst.seed, [&](PointMask s) {
               const ElementSet isolated = w.set_of(isolated_points(w, s));
               ElementSet g;
               for (Element l : isolated) g = g | v_of(inst.lattice, inst.sh, l);
               if (w.is_open(g) && (g & w.set_of(s)) == isolated) return CheckResult::ok();
               return CheckResult::fail("S = " + labels_of(inst.lattice, w.set_of(s)));
             });
           }});

  reg.add({"every_subset_has_isolated_point", "every nonempty subset of X has an isolated point (W-topology)",
           Hypothesis::any, [](I inst) {
             if (auto r = need_topologies(inst); !r.pass) return r;
             const auto& w = *inst.w_top;
             return over_point_subsets(w.full_mask(), inst.seed, [&](PointMask s) {
               if (s == 0 || isolated_points(w, s) != 0) return CheckResult::ok();
               return CheckResult::fail("S = " + labels_of(inst.lattice, w.set_of(s)));
             });
           }});

  reg.add({"derived_levels_closed", "every level X_b of the derived filtration is W-closed", Hypothesis::any,
           [](I inst) {
             if (auto r = need_topologies(inst); !r.pass) return r;
             for (std::size_t b = 0; b < inst.cb->levels.size(); ++b)
               if (!inst.w_top->is_closed(inst.cb->levels[b]))
                 return CheckResult::fail("X_" + std::to_string(b) + " = " +
                                          labels_of(inst.lattice, inst.cb->levels[b]) + " not closed");
             return CheckResult::ok();
           }});

  reg.add({"derived_dimension_exists", "the derived filtration reaches the empty set (and so dclk exists)",
           Hypothesis::any, [](I inst) {
             if (auto r = need_topologies(inst); !r.pass) return r;
             const auto& cb = *inst.cb;
             if (cb.levels.empty() || !cb.levels.back().empty())
               return CheckResult::fail("filtration did not reach the empty set");
             if (cb.derived_dimension > static_cast<int>(inst.sh.x_points.size()))
               return CheckResult::fail("more strata than points");
             ElementSet all;
             for (const auto& s : cb.strata) {
               if (!(all & s).empty()) return CheckResult::fail("strata overlap");
               all = all | s;
             }
             if (all != inst.sh.x_points) return CheckResult::fail("strata do not cover X");
             if (inst.y.dimension > static_cast<int>(inst.sh.x_points.size()) - 1)
               return CheckResult::fail("dclk exceeds |X| - 1");
             return CheckResult::ok();
           }});

  reg.add({"y_levels_are_strata_unions", "Y_a - {0} = union of the strata S_b, b <= a", Hypothesis::any,
           [](I inst) {
             if (auto r = need_topologies(inst); !r.pass) return r;
             const auto& lat = inst.lattice;
             const auto& strata = inst.cb->strata;
             if (inst.y.dimension < 0)
               return strata.empty() ? CheckResult::ok() : CheckResult::fail("dclk -1 with nonempty strata");
             ElementSet acc;
             for (int a = 0; a <= inst.y.dimension; ++a) {
               if (a < static_cast<int>(strata.size())) acc = acc | strata[static_cast<std::size_t>(a)];
               ElementSet level = inst.y.levels[static_cast<std::size_t>(a)];
               level.erase(lat.bottom());
               if (level != acc)
                 return CheckResult::fail("a = " + std::to_string(a) + ": " + labels_of(lat, level) + " vs " +
                                          labels_of(lat, acc));
             }
             return CheckResult::ok();
           }});

  reg.add({"derived_is_dclk_plus_one", "X nonempty: dclk <= d(X) <= dclk + 1 and d(X) = dclk + 1",
           Hypothesis::distributive, [](I inst) {
             if (auto r = need_topologies(inst); !r.pass) return r;
             if (inst.sh.x_points.empty()) return CheckResult::ok();
             const int d = inst.cb->derived_dimension;
             const int k = inst.y.dimension;
             if (k <= d && d <= k + 1 && d == k + 1) return CheckResult::ok();
             return CheckResult::fail("dclk = " + std::to_string(k) + ", derived = " + std::to_string(d));
           }});

  return reg;
}

}  // namespace detail

inline const ClaimRegistry& ClaimRegistry::standard() {
  static const ClaimRegistry registry = detail::make_standard_registry();
  return registry;
}

// Claim ids that must be present for every testable statement to be covered.
inline const std::vector<std::string>& required_claim_ids() {
  static const std::vector<std::string> ids{
      "zero_is_sh",                       // 0 is always strongly hollow
      "simple_ring_is_sh_ring",           //
      "sh_ring_is_semi_sh_ring",          //
      "y0_is_zero_and_minimal_sh",        // dual-classical Krull filtration
      "y_levels_strictly_increase",       //
      "dclk_minus_one_iff_no_sh",         //
      "dclk_equals_chain_oracle",         //
      "coatoms_meet_zero_bounds_dclk",    // maximal ideals meeting in zero
      "v_empty_iff_no_sh_below",          // V/underline calculus
      "v_singleton_iff_minimal_sh",       //
      "v_is_carrier_iff_above_all_sh",    //
      "v_of_join_is_union",               //
      "v_of_meet_is_intersection",        //
      "v_of_underline",                   //
      "fixed_by_underline_iff_semi_sh",   //
      "equal_v_equal_underline",          //
      "underline_of_meet_is_meet_of_underlines",
      "sh_closed_set_axioms",             // SH-topology
      "sh_topology_trivial_iff_single_point",
      "sh_topology_t0",                   // separation
      "t1_iff_all_sh_minimal",            //
      "hausdorff_gives_covering_pair",    //
      "semi_sh_order_isomorphism",        // Noetherian / dcc on semi-sh elements
      "w_base_axioms",                    // W-topology
      "isolated_iff_minimal",             //
      "isolated_points_open_in_subspace", //
      "every_subset_has_isolated_point",  // scatteredness
      "derived_dimension_exists",         //
      "derived_levels_closed",            //
      "y_levels_are_strata_unions",       //
      "derived_is_dclk_plus_one",         // dimension relation
  };
  return ids;
}

struct Witness {
  std::string instance;
  int size = 0;
  nlohmann::json lattice;
  std::string detail;
};

struct ClaimTally {
  std::string id;
  std::string statement;
  Hypothesis hypothesis = Hypothesis::any;
  long checked = 0;
  long passes = 0;
  long failures = 0;
  long skipped = 0;        // outside the hypothesis class
  long observed_pass = 0;  // skipped instances evaluated anyway
  long observed_fail = 0;
  std::optional<Witness> witness;      // smallest asserted failure
  std::optional<Witness> observation;  // smallest failure outside the hypothesis
};

struct CorpusConfig {
  int exhaustive = 0;  // all lattices with at most this many elements
  bool unique = false; // one representative per isomorphism class
  std::vector<std::string> rings;
  int random_count = 0;
  int random_min_size = 6;
  int random_max_size = 12;
  std::uint64_t seed = 1;
};

struct VerificationRun {
  CorpusConfig corpus;
  long instances = 0;
  std::vector<ClaimTally> tallies;

  long asserted_failures() const {
    long total = 0;
    for (const auto& t : tallies) total += t.failures;
    return total;
  }
  const ClaimTally& tally(const std::string& id) const {
    for (const auto& t : tallies)
      if (t.id == id) return t;
    throw std::out_of_range("no tally for claim " + id);
  }
};

// Accumulates claim verdicts over a stream of instances.
class SuiteRunner {
 public:
  SuiteRunner(const ClaimRegistry& registry, CorpusConfig config) : registry_(registry) {
    run_.corpus = std::move(config);
    for (const auto& c : registry_.claims()) {
      ClaimTally t;
      t.id = c.id;
      t.statement = c.statement;
      t.hypothesis = c.hypothesis;
      run_.tallies.push_back(std::move(t));
    }
  }

  void add(const Instance& inst) {
    ++run_.instances;
    const auto& claims = registry_.claims();
    for (std::size_t k = 0; k < claims.size(); ++k) {
      auto& t = run_.tallies[k];
      const CheckResult r = evaluate(claims[k], inst);
      if (satisfies(inst, claims[k].hypothesis)) {
        ++t.checked;
        if (r.pass) {
          ++t.passes;
        } else {
          ++t.failures;
          keep_smaller(t.witness, inst, r);
        }
      } else {
        ++t.skipped;
        if (r.pass) {
          ++t.observed_pass;
        } else {
          ++t.observed_fail;
          keep_smaller(t.observation, inst, r);
        }
      }
    }
  }

  const VerificationRun& run() const { return run_; }
  VerificationRun take() { return std::move(run_); }

 private:
  static void keep_smaller(std::optional<Witness>& slot, const Instance& inst, const CheckResult& r) {
    if (slot && slot->size <= inst.lattice.size()) return;
    slot = Witness{inst.name, inst.lattice.size(), to_json(inst.lattice), r.detail};
  }

  const ClaimRegistry& registry_;
  VerificationRun run_;
};

// Executes every registered claim over the configured corpus: the exhaustive
// enumeration first, then the ring specs in order, then the random lattices.
// Deterministic in the configuration.
inline VerificationRun run_suite(const CorpusConfig& config,
                                 const ClaimRegistry& registry = ClaimRegistry::standard()) {
  SuiteRunner runner(registry, config);
  std::uint64_t counter = 0;
  auto next_seed = [&] { return detail::splitmix64(config.seed ^ detail::splitmix64(++counter)); };

  if (config.exhaustive > 0) {
    std::map<int, int> per_size;
    enumerate_lattices(config.exhaustive, config.unique, [&](FiniteLattice lat) {
      const int n = lat.size();
      const std::string name = "exhaustive:n" + std::to_string(n) + "#" + std::to_string(per_size[n]++);
      runner.add(prepare(std::move(lat), name, next_seed()));
    });
  }
  for (const auto& spec : config.rings) runner.add(prepare(build(spec), spec, next_seed()));
  if (config.random_count > 0) {
    if (config.random_min_size < 1 || config.random_max_size < config.random_min_size)
      throw std::invalid_argument("random lattice size range is empty");
    const int span = config.random_max_size - config.random_min_size + 1;
    for (int i = 0; i < config.random_count; ++i) {
      const int size = config.random_min_size + i % span;
      const std::uint64_t seed = detail::splitmix64(config.seed + static_cast<std::uint64_t>(i));
      runner.add(prepare(random_lattice(size, seed), "random:" + std::to_string(size) + "@" + std::to_string(seed),
                         next_seed()));
    }
  }
  return runner.take();
}

// Greedily deletes elements (keeping the induced order, which must still be a
// lattice) while the claim keeps failing. Returns a locally minimal failing
// lattice. Throws ClaimActuallyPasses when the input does not fail.
inline FiniteLattice minimize_witness(const FiniteLattice& lat, const Claim& claim) {
  auto fails = [&](const FiniteLattice& l) { return !evaluate(claim, prepare(l, "minimize")).pass; };
  if (!fails(lat)) throw ClaimActuallyPasses("claim " + claim.id + " holds on the given lattice");
  FiniteLattice current = lat;
  bool shrunk = true;
  while (shrunk && current.size() > 1) {
    shrunk = false;
    for (Element drop = 0; drop < current.size() && !shrunk; ++drop) {
      std::vector<std::pair<Element, Element>> pairs;
      std::vector<std::string> labels;
      const int n = current.size();
      auto renumber = [drop](Element x) { return x < drop ? x : x - 1; };
      for (Element a = 0; a < n; ++a) {
        if (a == drop) continue;
        labels.push_back(current.label(a));
        for (Element b = 0; b < n; ++b)
          if (b != drop && current.le(a, b)) pairs.emplace_back(renumber(a), renumber(b));
      }
      auto v = FiniteLattice::validate(n - 1, RelationKind::le, pairs, std::move(labels));
      if (v.ok() && fails(*v.lattice)) {
        current = std::move(*v.lattice);
        shrunk = true;
      }
    }
  }
  return current;
}

inline FiniteLattice minimize_witness(const FiniteLattice& lat, const std::string& claim_id,
                                      const ClaimRegistry& registry = ClaimRegistry::standard()) {
  return minimize_witness(lat, registry.at(claim_id));
}

inline nlohmann::json to_json(const CorpusConfig& c) {
  return {{"exhaustive", c.exhaustive},
          {"unique", c.unique},
          {"rings", c.rings},
          {"random_count", c.random_count},
          {"random_sizes", {c.random_min_size, c.random_max_size}},
          {"seed", c.seed}};
}

inline nlohmann::json to_json(const Witness& w) {
  return {{"instance", w.instance}, {"size", w.size}, {"lattice", w.lattice}, {"detail", w.detail}};
}

inline nlohmann::json to_json(const VerificationRun& run) {
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& t : run.tallies) {
    claims.push_back({{"id", t.id},
                      {"statement", t.statement},
                      {"hypothesis", to_string(t.hypothesis)},
                      {"checked", t.checked},
                      {"passes", t.passes},
                      {"failures", t.failures},
                      {"skipped", t.skipped},
                      {"observed_pass", t.observed_pass},
                      {"observed_fail", t.observed_fail},
                      {"witness", t.witness ? to_json(*t.witness) : nlohmann::json()},
                      {"observation", t.observation ? to_json(*t.observation) : nlohmann::json()}});
  }
  return {{"corpus", to_json(run.corpus)},
          {"instances", run.instances},
          {"claims", std::move(claims)},
          {"asserted_failures", run.asserted_failures()},
          {"ok", run.asserted_failures() == 0}};
}

inline std::string render_table(const VerificationRun& run) {
  std::ostringstream out;
  out << "instances: " << run.instances << "\n";
  char line[256];
  std::snprintf(line, sizeof line, "%-40s %-12s %8s %8s %8s %8s %10s\n", "claim", "hypothesis", "checked", "pass",
                "fail", "skip", "obs p/f");
  out << line;
  for (const auto& t : run.tallies) {
    const std::string obs = std::to_string(t.observed_pass) + "/" + std::to_string(t.observed_fail);
    std::snprintf(line, sizeof line, "%-40s %-12s %8ld %8ld %8ld %8ld %10s\n", t.id.c_str(), to_string(t.hypothesis),
                  t.checked, t.passes, t.failures, t.skipped, obs.c_str());
    out << line;
  }
  for (const auto& t : run.tallies) {
    if (t.witness)
      out << "FAIL " << t.id << " on " << t.witness->instance << " (n=" << t.witness->size
          << "): " << t.witness->detail << "\n";
    if (t.observation)
      out << "observed outside hypothesis: " << t.id << " on " << t.observation->instance
          << " (n=" << t.observation->size << "): " << t.observation->detail << "\n";
  }
  out << (run.asserted_failures() == 0 ? "all asserted claims pass\n"
                                       : std::to_string(run.asserted_failures()) + " asserted failures\n");
  return out.str();
}

}  // namespace shlat

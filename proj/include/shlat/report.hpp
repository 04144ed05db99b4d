#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "verify.hpp"

namespace shlat {

struct Verdict {
  std::string id;
  bool in_hypothesis = true;  // false: an observation outside the claim's hypothesis
  bool pass = true;
  std::string detail;
};

struct DimensionReport {
  std::string spec;
  FiniteLattice lattice;
  int sh_count = 0;  // |SH|, bottom included
  ElementSet x_points;
  int dclk_dimension = -1;
  int derived_dimension = 0;
  bool distributive = false;
  bool modular = false;
  bool sh_ring = false;
  bool semi_sh_ring = false;
  std::vector<ElementSet> strata;
  std::vector<ElementSet> y_levels;
  std::vector<Verdict> verdicts;

  bool asserted_ok() const {
    for (const auto& v : verdicts)
      if (v.in_hypothesis && !v.pass) return false;
    return true;
  }
};

inline DimensionReport analyze(FiniteLattice lat, std::string spec,
                               const ClaimRegistry& registry = ClaimRegistry::standard()) {
  const Instance inst = prepare(std::move(lat), spec);
  DimensionReport r{std::move(spec), inst.lattice, 0, {}, -1, 0, false, false, false, false, {}, {}, {}};
  r.sh_count = static_cast<int>(inst.sh.x_points.size()) + 1;
  r.x_points = inst.sh.x_points;
  r.dclk_dimension = inst.y.dimension;
  r.derived_dimension = inst.cb ? inst.cb->derived_dimension : -1;
  r.distributive = inst.distributive;
  r.modular = inst.modular;
  r.sh_ring = is_sh_ring(inst.lattice, inst.sh);
  r.semi_sh_ring = is_semi_sh_ring(inst.lattice, inst.sh);
  if (inst.cb) r.strata = inst.cb->strata;
  r.y_levels = inst.y.levels;
  for (const auto& claim : registry.claims()) {
    const CheckResult c = evaluate(claim, inst);
    r.verdicts.push_back({claim.id, satisfies(inst, claim.hypothesis), c.pass, c.detail});
  }
  return r;
}

// Parses and builds the spec, then analyzes it. Propagates SpecError and
// LatticeError.
inline DimensionReport analyze(const std::string& spec) { return analyze(build(spec), spec); }

namespace detail {

inline nlohmann::json labelled(const FiniteLattice& lat, const ElementSet& s) {
  nlohmann::json out = nlohmann::json::array();
  for (Element x : s) out.push_back(lat.label(x));
  return out;
}

inline std::string joined_labels(const FiniteLattice& lat, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (Element x : s) {
    out += (first ? "" : ", ") + lat.label(x);
    first = false;
  }
  return out + "}";
}

}  // namespace detail

inline nlohmann::json to_json(const DimensionReport& r) {
  nlohmann::json strata = nlohmann::json::array();
  for (const auto& s : r.strata) strata.push_back(detail::labelled(r.lattice, s));
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& s : r.y_levels) levels.push_back(detail::labelled(r.lattice, s));
  nlohmann::json verdicts = nlohmann::json::array();
  nlohmann::json observations = nlohmann::json::array();
  for (const auto& v : r.verdicts) {
    nlohmann::json item{{"id", v.id}, {"pass", v.pass}};
    if (!v.detail.empty()) item["detail"] = v.detail;
    (v.in_hypothesis ? verdicts : observations).push_back(std::move(item));
  }
  return {{"spec", r.spec},
          {"n", r.lattice.size()},
          {"sh_count", r.sh_count},
          {"x_points", detail::labelled(r.lattice, r.x_points)},
          {"dclk_dim", r.dclk_dimension},
          {"derived_dim", r.derived_dimension},
          {"distributive", r.distributive},
          {"modular", r.modular},
          {"sh_ring", r.sh_ring},
          {"semi_sh_ring", r.semi_sh_ring},
          {"strata", std::move(strata)},
          {"y_levels", std::move(levels)},
          {"verdicts", std::move(verdicts)},
          {"observations", std::move(observations)}};
}

inline std::string render_text(const DimensionReport& r) {
  std::ostringstream out;
  const auto& lat = r.lattice;
  out << "lattice " << r.spec << ": " << lat.size() << " elements"
      << (r.distributive ? ", distributive" : (r.modular ? ", modular" : ", not modular")) << "\n";
  out << "X = SH - {0} = " << detail::joined_labels(lat, r.x_points) << (r.x_points.empty() ? " (empty)" : "")
      << "\n";
  out << "sh-ring: " << (r.sh_ring ? "yes" : "no") << ", semi-sh-ring: " << (r.semi_sh_ring ? "yes" : "no") << "\n";
  out << "dual-classical Krull dimension: " << r.dclk_dimension << "\n";
  for (std::size_t k = 0; k < r.y_levels.size(); ++k)
    out << "  Y_" << k << " = " << detail::joined_labels(lat, r.y_levels[k]) << "\n";
  out << "derived dimension (W-topology): " << r.derived_dimension << "\n";
  for (std::size_t k = 0; k < r.strata.size(); ++k)
    out << "  S_" << k << " = " << detail::joined_labels(lat, r.strata[k]) << "\n";
  int failed = 0;
  for (const auto& v : r.verdicts) {
    if (v.in_hypothesis && !v.pass) {
      out << "FAIL " << v.id << ": " << v.detail << "\n";
      ++failed;
    }
    if (!v.in_hypothesis)
      out << "observation (outside hypothesis) " << v.id << ": " << (v.pass ? "holds" : "fails")
          << (v.detail.empty() ? "" : " (" + v.detail + ")") << "\n";
  }
  out << "claims: " << (r.verdicts.size()) << " evaluated, " << failed << " asserted failures\n";
  return out.str();
}

}  // namespace shlat

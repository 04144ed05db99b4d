#include <set>

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace shlat;

namespace {

// Test-only claim: the indiscrete topology on X is T0, i.e. |X| <= 1.
Claim indiscrete_t0_claim() {
  return {"indiscrete_t0", "the indiscrete topology on X is T0", Hypothesis::any, [](const Instance& inst) {
            const auto& x = inst.sh.x_points;
            const auto top = FiniteTopology::from_closed_sets(x, {ElementSet{}, x});
            return is_t0(top) ? CheckResult::ok() : CheckResult::fail("|X| = " + std::to_string(x.size()));
          }};
}

CorpusConfig small_config(std::uint64_t seed) {
  CorpusConfig c;
  c.exhaustive = 4;
  c.rings = expand_spec_list("zn:2..20,m3,n5,prod(zn:4,zn:9)");
  c.random_count = 12;
  c.seed = seed;
  return c;
}

}  // namespace

TEST(Registry, StandardCoversEveryRequiredClaim) {
  const auto& reg = ClaimRegistry::standard();
  for (const auto& id : required_claim_ids()) EXPECT_NE(reg.find(id), nullptr) << id;
  std::set<std::string> ids;
  for (const auto& c : reg.claims()) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_FALSE(c.statement.empty());
    EXPECT_TRUE(static_cast<bool>(c.check));
  }
  EXPECT_EQ(reg.at("underline_of_meet_is_meet_of_underlines").hypothesis, Hypothesis::distributive);
  EXPECT_EQ(reg.at("derived_is_dclk_plus_one").hypothesis, Hypothesis::distributive);
  EXPECT_EQ(reg.at("isolated_iff_minimal").hypothesis, Hypothesis::any);
  EXPECT_THROW(reg.at("no_such_claim"), std::out_of_range);
}

TEST(Registry, RejectsDuplicateIds) {
  ClaimRegistry reg;
  reg.add(indiscrete_t0_claim());
  EXPECT_THROW(reg.add(indiscrete_t0_claim()), std::invalid_argument);
}

TEST(Suite, ExhaustiveFivePlusRingsHasNoAssertedFailures) {
  CorpusConfig c;
  c.exhaustive = 5;
  c.rings = expand_spec_list("zn:2..60");
  const auto run = run_suite(c);
  EXPECT_EQ(run.instances, 425 + 59);
  EXPECT_EQ(run.asserted_failures(), 0);
  for (const auto& t : run.tallies) {
    EXPECT_EQ(t.checked + t.skipped, run.instances) << t.id;
    EXPECT_EQ(t.passes + t.failures, t.checked) << t.id;
    EXPECT_EQ(t.observed_pass + t.observed_fail, t.skipped) << t.id;
    EXPECT_FALSE(t.witness.has_value()) << t.id;
  }
}

TEST(Suite, RingsAreDistributive) {
  CorpusConfig c;
  c.rings = expand_spec_list("zn:2..60");
  const auto run = run_suite(c);
  for (const auto& t : run.tallies) EXPECT_EQ(t.skipped, 0) << t.id;
}

TEST(Suite, M3AndN5) {
  CorpusConfig c;
  c.rings = {"m3", "n5"};
  const auto run = run_suite(c);
  EXPECT_EQ(run.instances, 2);
  EXPECT_EQ(run.asserted_failures(), 0);
  // M3 is modular, N5 is not; neither is distributive.
  EXPECT_EQ(run.tally("coatoms_meet_zero_bounds_dclk").checked, 1);
  EXPECT_EQ(run.tally("derived_is_dclk_plus_one").skipped, 2);
}

TEST(Suite, IsDeterministic) {
  const auto a = to_json(run_suite(small_config(7))).dump();
  const auto b = to_json(run_suite(small_config(7))).dump();
  EXPECT_EQ(a, b);
  EXPECT_NE(a, to_json(run_suite(small_config(8))).dump());
}

TEST(Suite, FailingAndThrowingClaimsAreCountedWithSmallestWitness) {
  ClaimRegistry reg;
  reg.add(indiscrete_t0_claim());
  reg.add({"throws", "checker that throws", Hypothesis::any,
           [](const Instance&) -> CheckResult { throw std::runtime_error("boom"); }});
  CorpusConfig c;
  c.exhaustive = 4;
  c.rings = {"zn:30"};
  const auto run = run_suite(c, reg);
  const auto& t0 = run.tally("indiscrete_t0");
  EXPECT_GT(t0.failures, 0);
  ASSERT_TRUE(t0.witness.has_value());
  EXPECT_EQ(t0.witness->size, 3);  // the 3-chain is the smallest lattice with |X| = 2
  EXPECT_EQ(run.tally("throws").failures, run.instances);
  EXPECT_NE(run.tally("throws").witness->detail.find("boom"), std::string::npos);
  EXPECT_EQ(run.asserted_failures(), t0.failures + run.instances);
}

TEST(Suite, ClaimsOutsideTheirHypothesisAreObservationsOnly) {
  ClaimRegistry reg;
  reg.add({"never_distributive", "fails everywhere, asserted on distributive lattices only", Hypothesis::distributive,
           [](const Instance&) { return CheckResult::fail("always"); }});
  CorpusConfig c;
  c.rings = {"m3", "n5"};
  const auto run = run_suite(c, reg);
  EXPECT_EQ(run.asserted_failures(), 0);
  EXPECT_EQ(run.tally("never_distributive").observed_fail, 2);
  EXPECT_TRUE(run.tally("never_distributive").observation.has_value());
}

TEST(Minimize, RaisesWhenTheClaimHolds) {
  EXPECT_THROW(minimize_witness(ideal_lattice_zn(12), "isolated_iff_minimal"), ClaimActuallyPasses);
  EXPECT_THROW(minimize_witness(chain_lattice(2), indiscrete_t0_claim()), ClaimActuallyPasses);
}

TEST(Minimize, ShrinksToALocallyMinimalFailure) {
  const auto claim = indiscrete_t0_claim();
  const auto from_b2 = minimize_witness(b2_lattice(), claim);
  EXPECT_EQ(from_b2.size(), 3);
  EXPECT_TRUE(is_distributive(from_b2));
  const auto from_chain = minimize_witness(chain_lattice(3), claim);
  EXPECT_EQ(from_chain, chain_lattice(3));
  const auto from_z210 = minimize_witness(ideal_lattice_zn(210), claim);
  EXPECT_EQ(from_z210.size(), 3);
}

TEST(Minimize, UnderlineOfMeetObservationOutsideDistributive) {
  // Exhaustive up to 6 elements: the identity holds on every lattice. At 7 it
  // fails on some non-distributive lattices, never on distributive ones.
  CorpusConfig six;
  six.exhaustive = 6;
  six.unique = true;
  const auto run6 = run_suite(six);
  EXPECT_EQ(run6.tally("underline_of_meet_is_meet_of_underlines").observed_fail, 0);

  const auto& claim = ClaimRegistry::standard().at("underline_of_meet_is_meet_of_underlines");
  bool found = false;
  enumerate_lattices(7, true, [&](const FiniteLattice& lat) {
    if (lat.size() != 7 || found) return;
    const auto inst = prepare(lat, "probe");
    if (evaluate(claim, inst).pass) return;
    found = true;
    EXPECT_FALSE(inst.distributive);
    const auto small = minimize_witness(lat, claim);
    EXPECT_LE(small.size(), 7);
    EXPECT_FALSE(evaluate(claim, prepare(small, "small")).pass);
  });
  EXPECT_TRUE(found);
}

TEST(Report, JsonFields) {
  const auto j = to_json(run_suite(small_config(1)));
  for (const char* key : {"corpus", "instances", "claims", "asserted_failures", "ok"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_EQ(j["corpus"]["seed"], 1);
  EXPECT_EQ(j["claims"].size(), ClaimRegistry::standard().claims().size());
  for (const auto& c : j["claims"])
    for (const char* key : {"id", "hypothesis", "checked", "passes", "failures", "skipped", "witness"})
      EXPECT_TRUE(c.contains(key)) << key;
}

TEST(Report, AnalyzeZ12) {
  const auto r = analyze("zn:12");
  EXPECT_EQ(r.dclk_dimension, 1);
  EXPECT_EQ(r.derived_dimension, 2);
  EXPECT_EQ(r.sh_count, 4);
  EXPECT_TRUE(r.distributive);
  EXPECT_TRUE(r.asserted_ok());
  const auto j = to_json(r);
  EXPECT_EQ(j["x_points"], nlohmann::json::parse(R"j(["(6)","(4)","(3)"])j"));
  EXPECT_EQ(j["strata"], nlohmann::json::parse(R"j([["(6)","(4)"],["(3)"]])j"));
  EXPECT_TRUE(j["observations"].empty());
  EXPECT_NE(render_text(r).find("dual-classical Krull dimension: 1"), std::string::npos);
}

TEST(Report, AnalyzeN5LogsObservations) {
  const auto r = analyze("n5");
  EXPECT_EQ(r.dclk_dimension, 0);
  EXPECT_EQ(r.derived_dimension, 1);
  EXPECT_FALSE(to_json(r)["observations"].empty());
  EXPECT_THROW(analyze("zn:1"), SpecError);
}

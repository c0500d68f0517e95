#include <gtest/gtest.h>

#include "support.hpp"

using namespace lgv;
using namespace lgv::testing;

namespace {

using K = PrimeField;

const ReportEntry* find_entry(const VerificationReport& rep, const std::string& check) {
  for (const auto& e : rep.entries)
    if (e.check == check) return &e;
  return nullptr;
}

}  // namespace

TEST(LocalStructure, EveryLengthTwoChart) {
  K k;
  for (int d = 2; d <= 4; ++d)
    for (int r = 1; r < d; ++r)
      for (const auto& pd : valid_point_data(d, r)) {
        ChartSpec spec{d, r, 2, {pd}};
        auto e = verify_local_structure(k, spec);
        EXPECT_EQ(e.status, Status::pass) << d << r << pd.to_string() << " " << e.witness;
        EXPECT_EQ(e.details["ell"], spec.ell());
        EXPECT_EQ(e.details["m"], r * (d - r) - spec.ell() * spec.ell());
      }
  EXPECT_THROW(verify_local_structure(k, default_chart_spec(2, 1, 3)), SpecError);
}

TEST(Flatness, PassAndWitness) {
  K k;
  auto C = commuting_pair_ideal(k, 1);
  EXPECT_EQ(verify_flatness(C).status, Status::pass);
  auto bad = ideal(k, "vars: x s\ns*x\n");
  auto e = verify_flatness(bad);
  EXPECT_EQ(e.status, Status::fail);
  EXPECT_EQ(e.witness, "x");
  EXPECT_THROW(verify_flatness(ideal(k, "vars: x\nx\n")), PreconditionError);
}

TEST(Dimensions, TwoByOne) {
  auto e = verify_dimensions(K{}, 2, 1, 2);
  EXPECT_EQ(e.status, Status::pass) << e.witness;
  EXPECT_EQ(e.details["ambient"], 2);
  EXPECT_EQ(e.details["fiber_dim_s0"], 1);
  EXPECT_EQ(e.details["fiber_dim_s1"], 1);
  EXPECT_EQ(e.details["total_dim"], 2);
  EXPECT_EQ(e.details["codimension_s0"], 1);
}

TEST(Dimensions, Chains) {
  for (auto [d, r] : {std::pair{2, 1}, std::pair{3, 1}}) {
    auto e = verify_dimensions(K{}, d, r, 3);
    EXPECT_EQ(e.status, Status::pass) << e.witness;
    EXPECT_EQ(e.details["fiber_dim_s0"], r * (d - r));
  }
}

TEST(UnitFiber, Affine) {
  for (auto [d, r, n] : {std::tuple{2, 1, 2}, std::tuple{3, 1, 2}, std::tuple{4, 2, 2}, std::tuple{2, 1, 3}}) {
    auto e = verify_unit_fiber(K{}, d, r, n);
    EXPECT_EQ(e.status, Status::pass) << e.witness;
    EXPECT_EQ(e.details["remaining_variables"], r * (d - r));
  }
}

TEST(CohenMacaulay, CommutingFibers) {
  K k;
  for (int ell : {1, 2}) {
    auto e = verify_cm(k, ell, 7);
    EXPECT_EQ(e.status, Status::pass) << e.witness;
    EXPECT_EQ(e.details["total_space"], "PASS-by-composition");
  }
  auto e = verify_cm(k, 2, 7);
  EXPECT_EQ(e.details["dimension"], 4);
  EXPECT_THROW(verify_cm(k, 0, 1), PreconditionError);
}

TEST(CohenMacaulay, TwoPlanesMeetingInAPointFail) {
  K k;
  auto I = ideal(k, "vars: x y z w\nx*z\nx*w\ny*z\ny*w\n");
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    auto e = verify_cm_ideal(I, seed);
    EXPECT_EQ(e.status, Status::fail);
    EXPECT_EQ(e.details["failed_step"], 2);
    EXPECT_EQ(e.details["attempts"], 3);
    EXPECT_EQ(e.witness.rfind("step 2: g = ", 0), 0u) << e.witness;
  }
}

TEST(CohenMacaulay, SimpleRings) {
  K k;
  EXPECT_EQ(verify_cm_ideal(ideal(k, "vars: x y\nx*y\n"), 1).status, Status::pass);
  EXPECT_EQ(verify_cm_ideal(ideal(k, "vars: x y z\ny^2 - x*z\n"), 1).status, Status::pass);
  EXPECT_EQ(verify_cm_ideal(ideal(k, "vars: x y\nx^2\nx*y\n"), 1).status, Status::fail);
}

TEST(ReducedFiber, SquarefreeAndInconclusive) {
  K k;
  auto fiber = specialize(commuting_pair_ideal(k, 2), {{"s", k.zero()}});
  auto e = verify_reduced_fiber(fiber, 3);
  EXPECT_EQ(e.status, Status::pass);
  EXPECT_TRUE(e.details.contains("order"));
  auto fat = verify_reduced_fiber(ideal(k, "vars: x y\nx^2\n"), 3);
  EXPECT_EQ(fat.status, Status::inconclusive);
  EXPECT_EQ(fat.details["orders_tried"], 10);
  EXPECT_THROW(verify_reduced_fiber(ideal(k, "vars: x\n1\n"), 3), PreconditionError);
}

TEST(ReducedFiber, GuardInPropernessCheckPropagates) {
  K k;
  auto fiber = specialize(commuting_pair_ideal(k, 2), {{"s", k.zero()}});
  GbOptions tiny;
  tiny.max_basis = 1;
  EXPECT_THROW(verify_reduced_fiber(fiber, 3, Json::object(), tiny), ResourceError);
}

TEST(InductionStep, Chains) {
  for (auto [d, r] : {std::pair{2, 1}, std::pair{3, 1}}) {
    auto e = verify_induction_step(K{}, d, r, 3);
    EXPECT_EQ(e.status, Status::pass) << e.witness;
    EXPECT_EQ(e.details["diagonal_generators"], r * (d - r));
    EXPECT_EQ(e.details["drop"], r * (d - r));
    EXPECT_EQ(e.details["reassembly"], true);
  }
  EXPECT_THROW(verify_induction_step(K{}, 2, 1, 2), SpecError);
}

TEST(Suite, EmptyConfigGivesEmptyReport) {
  SuiteConfig cfg;
  auto rep = run_full_suite(cfg);
  EXPECT_TRUE(rep.entries.empty());
  EXPECT_FALSE(rep.has_failure());
  EXPECT_EQ(rep.to_json()["summary"]["pass"], 0);
  EXPECT_EQ(rep.field, "fp:32003");
}

TEST(Suite, DeterministicWithoutTimings) {
  SuiteConfig cfg;
  cfg.record_timings = false;
  cfg.instances = {SuiteInstance::chart(2, 1, 2), SuiteInstance::commuting(1)};
  auto a = run_full_suite(cfg), b = run_full_suite(cfg);
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
  EXPECT_EQ(a.to_text(), b.to_text());
  EXPECT_FALSE(a.has_failure()) << a.to_text();
  for (const auto& e : a.entries) EXPECT_EQ(e.millis, 0);
}

TEST(Suite, RationalField) {
  SuiteConfig cfg;
  cfg.field = parse_field_descriptor("rat");
  cfg.instances = {SuiteInstance::chart(2, 1, 2, {{0, 0, 1}})};
  auto rep = run_full_suite(cfg);
  EXPECT_EQ(rep.field, "rat");
  EXPECT_FALSE(rep.has_failure()) << rep.to_text();
}

TEST(Suite, Controls) {
  SuiteConfig cfg;
  cfg.instances = {SuiteInstance::control(SuiteInstance::Kind::zero_maps_control),
                   SuiteInstance::control(SuiteInstance::Kind::non_cm_control)};
  auto rep = run_full_suite(cfg);
  EXPECT_TRUE(rep.has_failure());
  bool condition_two_failed = false;
  for (const auto& e : rep.entries)
    if (e.check == "condition_II") condition_two_failed = e.status == Status::fail;
  EXPECT_TRUE(condition_two_failed);
  auto cm = find_entry(rep, "cohen_macaulay");
  ASSERT_NE(cm, nullptr);
  EXPECT_EQ(cm->status, Status::fail);
  EXPECT_EQ(cm->details["failed_step"], 2);
}

TEST(Suite, ResourceGuardBecomesFail) {
  SuiteConfig cfg;
  cfg.guards.max_basis = 1;
  cfg.instances = {SuiteInstance::commuting(2)};
  auto rep = run_full_suite(cfg);
  auto flat = find_entry(rep, "flatness");
  ASSERT_NE(flat, nullptr);
  EXPECT_EQ(flat->status, Status::fail);
  EXPECT_EQ(flat->witness, "resource guard max_basis exceeded");
}

TEST(Suite, BadChartSpecIsReported) {
  SuiteConfig cfg;
  cfg.instances = {SuiteInstance::chart(2, 2, 2)};
  auto rep = run_full_suite(cfg);
  ASSERT_EQ(rep.entries.size(), 1u);
  EXPECT_EQ(rep.entries[0].check, "chart_spec");
  EXPECT_EQ(rep.entries[0].status, Status::fail);
}

TEST(SuiteConfigJson, Parsing) {
  auto cfg = suite_config_from_json(Json::parse(R"({
    "field": "fp:101", "seed": 9, "record_timings": false,
    "guards": {"max_degree": 20, "max_basis": 500, "timeout_seconds": 5},
    "instances": [{"d": 3, "r": 1, "point_data": [[0, 0, 1]]}, {"ell": 2}, {"control": "non_cm"},
                  {"d": 2, "r": 1, "n": 3}]})"));
  EXPECT_EQ(cfg.field.prime, 101u);
  EXPECT_EQ(cfg.seed, 9u);
  EXPECT_FALSE(cfg.record_timings);
  EXPECT_EQ(cfg.guards.max_degree, 20);
  EXPECT_EQ(cfg.guards.max_basis, 500u);
  EXPECT_DOUBLE_EQ(cfg.guards.timeout_seconds, 5.0);
  ASSERT_EQ(cfg.instances.size(), 4u);
  EXPECT_EQ(cfg.instances[0].point_data, (std::vector<PointData>{{0, 0, 1}}));
  EXPECT_EQ(cfg.instances[1].kind, SuiteInstance::Kind::commuting);
  EXPECT_EQ(cfg.instances[2].kind, SuiteInstance::Kind::non_cm_control);
  EXPECT_EQ(cfg.instances[3].n, 3);
  EXPECT_EQ(suite_config_from_json(Json::object()).instances.size(), SuiteConfig::defaults().instances.size());
}

TEST(SuiteConfigJson, Errors) {
  EXPECT_THROW(suite_config_from_json(Json::parse(R"({"field": "fp:4"})")), ParseError);
  EXPECT_THROW(suite_config_from_json(Json::parse(R"({"seed": "x"})")), ParseError);
  EXPECT_THROW(suite_config_from_json(Json::parse(R"({"instances": [{"control": "nope"}]})")), SpecError);
  EXPECT_THROW(suite_config_from_json(Json::parse(R"({"instances": [{"r": 1}]})")), ParseError);
  EXPECT_THROW(suite_config_from_json(Json::parse(R"({"guards": {"max_basis": 0}})")), SpecError);
}

TEST(Report, TextAndJson) {
  VerificationReport rep;
  rep.seed = 5;
  rep.field = "fp:7";
  ReportEntry e{"flatness", Json{{"ell", 1}}, Status::fail, "x"};
  e.details["quotient_basis_size"] = 1;
  rep.entries.push_back(e);
  rep.entries.emplace_back("reduced_fiber", Json::object(), Status::inconclusive);
  EXPECT_TRUE(rep.has_failure());
  EXPECT_EQ(rep.count(Status::inconclusive), 1u);
  auto j = rep.to_json();
  EXPECT_EQ(j["entries"][0]["status"], "FAIL");
  EXPECT_EQ(j["entries"][1]["status"], "INCONCLUSIVE");
  EXPECT_EQ(j["summary"]["fail"], 1);
  EXPECT_NE(rep.to_text().find("FAIL  flatness {\"ell\":1} {\"quotient_basis_size\":1}  witness: x"), std::string::npos)
      << rep.to_text();
}

#include <fano/scenario.hpp>

#include "fixture_copy.hpp"

#include <gtest/gtest.h>

using namespace fano;

namespace {

const ReportLine* find(const ScenarioReport& r, const std::string& id) {
  for (const auto& l : r.lines)
    if (l.id == id && l.kind == ReportLine::Kind::Computed) return &l;
  return nullptr;
}

}  // namespace

TEST(Scenario, EveryComputedLinePasses) {
  ScenarioReport r = scenario_t237(T237Inputs::load());
  for (const auto& l : r.lines)
    if (l.kind == ReportLine::Kind::Computed) {
      EXPECT_TRUE(l.pass) << l.id << ": " << l.value;
    }
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.count(ReportLine::Kind::Computed), 22u);
  EXPECT_EQ(r.count(ReportLine::Kind::Assumed), 5u);
}

TEST(Scenario, ReportsTheExpectedValues) {
  ScenarioReport r = scenario_t237(T237Inputs::load());
  ASSERT_TRUE(find(r, "Z.D0"));
  EXPECT_NE(find(r, "Z.D0")->value.find("1/2"), std::string::npos);
  EXPECT_NE(find(r, "Z'.class_group")->value.find("Z/4"), std::string::npos);
  EXPECT_NE(find(r, "Z'.theta_pullback")->value.find("lambda (1/4,1/2,3/4,1/2,1/2)"), std::string::npos);
  EXPECT_NE(find(r, "Z'.theta_exclusion")->value.find("-3/2 (NON-INTEGRAL)"), std::string::npos);
  EXPECT_NE(find(r, "Z'.index2_exclusion")->value.find("5/2"), std::string::npos);
  EXPECT_EQ(find(r, "Y.degree")->value, "4");
  EXPECT_EQ(find(r, "Upsilon.selected")->value, "Z/2");
}

TEST(Scenario, SupersingularVariantSelectsAlphaTwo) {
  ScenarioReport r = scenario_t237(T237Inputs::load(), EnriquesKind::Supersingular);
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.variant, "supersingular");
  EXPECT_EQ(find(r, "Upsilon.selected")->value, "alpha_2");
}

TEST(Scenario, OrdinaryVariantFailsTheSelectedLine) {
  // mu_2 has trivial Upsilon, so Upsilon_Y = Pic^tau cannot hold
  ScenarioReport r = scenario_t237(T237Inputs::load(), EnriquesKind::Ordinary);
  EXPECT_FALSE(find(r, "Upsilon.selected")->pass);
}

TEST(Scenario, ByteIdenticalAcrossRuns) {
  auto in = T237Inputs::load();
  EXPECT_EQ(scenario_t237(in).text(), scenario_t237(in).text());
  EXPECT_EQ(scenario_t237(in).json().dump(), scenario_t237(T237Inputs::load()).json().dump());
}

TEST(Scenario, JsonMirrorsTextReport) {
  ScenarioReport r = scenario_t237(T237Inputs::load());
  io::json j = io::json::parse(r.json().dump());
  EXPECT_EQ(j["scenario"], "t237");
  EXPECT_EQ(j["all_pass"], true);
  ASSERT_EQ(j["lines"].size(), r.lines.size());
  for (std::size_t i = 0; i < r.lines.size(); ++i) {
    EXPECT_EQ(j["lines"][i]["id"], r.lines[i].id);
    EXPECT_EQ(j["lines"][i]["claim"], r.lines[i].claim);
    if (r.lines[i].kind == ReportLine::Kind::Computed) {
      EXPECT_EQ(j["lines"][i]["kind"], "COMPUTED");
      EXPECT_EQ(j["lines"][i]["value"], r.lines[i].value);
    } else {
      EXPECT_EQ(j["lines"][i]["kind"], "ASSUMED");
    }
  }
}

TEST(Scenario, TextSeparatesComputedAndAssumed) {
  std::string t = scenario_t237(T237Inputs::load()).text();
  EXPECT_NE(t.find("ASSUMED   Z.rdp:"), std::string::npos);
  EXPECT_NE(t.find("COMPUTED  S.lattice:"), std::string::npos);
  EXPECT_NE(t.find("summary: 22 computed, 0 failed, 5 assumed"), std::string::npos);
  EXPECT_EQ(t.find("FAIL"), std::string::npos);
}

TEST(Scenario, PerturbedFixtureFails) {
  testing_support::FixtureCopy copy;
  copy.set_self("C0", -3);
  ScenarioReport r = scenario_t237(T237Inputs::load(copy.path()));
  EXPECT_FALSE(r.all_pass());
  EXPECT_FALSE(find(r, "S.lattice")->pass);
  EXPECT_FALSE(find(r, "S.fibre")->pass);
  // lines not touching C0 still pass
  EXPECT_TRUE(find(r, "S.e8")->pass);
  EXPECT_TRUE(find(r, "Upsilon.classical")->pass);
}

TEST(Scenario, PerturbedE8CurveFails) {
  testing_support::FixtureCopy copy;
  copy.set_self("C4", -1);
  ScenarioReport r = scenario_t237(T237Inputs::load(copy.path()));
  EXPECT_FALSE(find(r, "S.e8")->pass);
  EXPECT_FALSE(r.all_pass());
}

TEST(Scenario, MissingFixtureThrows) {
  testing_support::FixtureCopy copy;
  std::filesystem::remove(std::filesystem::path(copy.path()) / "weak_dp4.json");
  EXPECT_THROW(T237Inputs::load(copy.path()), Error);
}

TEST(Scenario, MalformedFixtureThrows) {
  testing_support::FixtureCopy copy;
  copy.write("t237.json", "{\"graph\": [1, 2");
  EXPECT_THROW(T237Inputs::load(copy.path()), Error);
}

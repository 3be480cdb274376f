#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "acm/error.hpp"
#include "acm/repro.hpp"
#include "json.hpp"

using namespace acm;

namespace {

const Fixtures& fixtures() {
  static const Fixtures f = Fixtures::standard();
  return f;
}

const Claim* find_claim(const Report& r, const std::string& description) {
  for (const auto& c : r.claims) {
    if (c.description == description) return &c;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("every example reproduces, with the one flagged anomaly") {
  Summary s = verify_all(example_cases(), fixtures());
  CHECK(s.ok());
  REQUIRE(s.reports.size() == 7);
  int anomalies = 0;
  for (const auto& r : s.reports) {
    INFO(render_report(r));
    CHECK(r.ok());
    CHECK(r.count(ClaimStatus::fail) == 0);
    anomalies += r.count(ClaimStatus::anomaly);
    for (const auto& c : r.claims) CHECK(c.anchor.rfind(r.id + "/", 0) == 0);
  }
  CHECK(anomalies == 1);
}

TEST_CASE("ex2.1 reports the printed line as off the surface") {
  Report r = run_example("ex2.1", fixtures());
  const Claim* printed = find_claim(r, "Γ2 as printed (ω^2) lies on X");
  REQUIRE(printed);
  CHECK(printed->computed == "no");
  CHECK(printed->status == ClaimStatus::anomaly);
  CHECK(render_report(r).find("lies on X: no (expected yes) [ex2.1/Γ2] ANOMALY") != std::string::npos);
  const Claim* corrected = find_claim(r, "corrected Γ2 (ω^3) lies on X");
  REQUIRE(corrected);
  CHECK(corrected->status == ClaimStatus::pass);
}

TEST_CASE("named claims from the examples") {
  Report ex31 = run_example("ex3.1", fixtures());
  CHECK(find_claim(ex31, "D1, D2 incidence")->computed == "0 (skew)");
  CHECK(find_claim(ex31, "D1+D2 is 1-connected")->computed == "no");

  Report ex44 = run_example("ex4.4", fixtures());
  CHECK(find_claim(ex44, "Γ1.Γ2")->computed == "0");
  CHECK(find_claim(ex44, "D = C1+C2-Γ1-Γ2: C.D")->computed == "7");
  CHECK(find_claim(ex44, "D = C1+C2-Γ1-Γ2: P_a")->computed == "5");

  Report ex41 = run_example("ex4.1", fixtures());
  CHECK(find_claim(ex41, "H_Y.D~")->computed == "5");
  CHECK(find_claim(ex41, "P_a(D~)")->computed == "1");
  CHECK(find_claim(ex41, "D1 = 3C - D~ on X: (deg, P_a)")->computed == "(10, 11)");

  CHECK_THROWS_AS(run_example("ex9.9", fixtures()), DomainError);
}

TEST_CASE("reports are byte-identical across runs") {
  const auto a = render_summary(verify_all(example_cases(), fixtures()));
  const auto b = render_summary(verify_all(example_cases(), Fixtures::standard()));
  CHECK(a == b);
}

TEST_CASE("a corrupted Gram matrix fails the ex4.4 genus claim") {
  SurfaceModel bad = *fixtures().fermat5;
  const auto i = *bad.generator_index("L[02|13](0,1)");
  const auto j = *bad.generator_index("L[02|13](0,2)");
  REQUIRE(bad.gram[i][j] == 1);
  bad.gram[i][j] = bad.gram[j][i] = 0;
  Fixtures f = fixtures();
  f.fermat5 = std::make_shared<const SurfaceModel>(std::move(bad));

  Report r = run_example("ex4.4", f);
  CHECK_FALSE(r.ok());
  const Claim* g = find_claim(r, "D = C1+C2-Γ1-Γ2: P_a");
  REQUIRE(g);
  CHECK(g->status == ClaimStatus::fail);
  CHECK(g->computed != g->expected);
  CHECK_FALSE(verify_all(example_cases(), f).ok());
}

TEST_CASE("an empty case list succeeds") {
  Summary s = verify_all({}, fixtures());
  CHECK(s.ok());
  CHECK(s.reports.empty());
  CHECK(render_summary(s).find("SUMMARY cases=0 claims=0 failed=0 anomalies=0 PASS") !=
        std::string::npos);
}

TEST_CASE("JSON summary") {
  auto j = nlohmann::json::parse(render_json(verify_all(example_cases(), fixtures())));
  CHECK(j["status"] == "PASS");
  CHECK(j["reports"].size() == 7);
  CHECK(j["reports"][0]["id"] == "ex2.1");
  CHECK(j["reports"][0]["claims"][0].contains("anchor"));
}

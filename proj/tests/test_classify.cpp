#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "acm/classify.hpp"
#include "acm/error.hpp"
#include "json.hpp"

using namespace acm;

namespace {

const ModelPtr& quintic() {
  static const ModelPtr m = fermat_model(5);
  return m;
}

DivClass cls(const std::string& text) { return parse_divisor(quintic(), text); }

Part part(const std::string& label, const std::string& text) {
  return {cls(text), 1, label, std::nullopt};
}

using Pair = std::pair<int, int>;  // (k, d)

const std::set<Pair> kAcmPairs{{2, 1}, {2, 4}, {3, 2}, {3, 3}, {3, 5}, {3, 6}, {4, 3}, {4, 4}};
const std::set<Pair> kNonAcmPairs{{0, 10}, {1, 9}, {2, 7}, {2, 8}, {3, 7}, {4, 5}, {4, 6}};

}  // namespace

TEST_CASE("worked classifications") {
  Verdict a = classify_numeric(SurfaceFamily::quintic, 4, 1);
  CHECK(a.status == Status::acm);
  CHECK(a.rule == "Thm1.2(iii)");
  CHECK(render_report(a).rfind("ACM rule=Thm1.2(iii)\n", 0) == 0);

  Verdict c = classify_numeric(SurfaceFamily::quintic, 7, 5);
  CHECK(c.status == Status::conditional);
  CHECK(c.prop == PropId::P4_7);

  Verdict q = classify_numeric(SurfaceFamily::quartic, 5, 2);
  CHECK(q.status == Status::acm);
  CHECK(q.rule == "Prop2.1(c)");
  CHECK(render_report(q).find("|D-C| = empty") != std::string::npos);

  Verdict q6 = classify_numeric(SurfaceFamily::quartic, 6, 3);
  CHECK(q6.status == Status::conditional);
  CHECK(q6.prop == PropId::P2_2);

  CHECK(classify_numeric(SurfaceFamily::quintic, 0, 0).status == Status::invalid);
  CHECK(classify_numeric(SurfaceFamily::quartic, -2, 0).status == Status::invalid);
  CHECK(classify_numeric(SurfaceFamily::quartic, 7, 3).status == Status::out_of_table);
}

TEST_CASE("the two tables partition the listed pairs") {
  std::set<Pair> acm, nonacm;
  for (const auto& r : acm_table()) acm.insert({r.k, r.degree});
  for (const auto& r : nonacm_table()) nonacm.insert({r.k, r.degree});
  CHECK(acm == kAcmPairs);
  CHECK(nonacm == kNonAcmPairs);

  for (int k = -2; k <= 6; ++k) {
    for (int d = 1; d <= 12; ++d) {
      const Pair p{k, d};
      Verdict v = classify_numeric(SurfaceFamily::quintic, d, d + 1 - k);
      CHECK(nonacm_exists(d, k) == static_cast<bool>(kNonAcmPairs.count(p)));
      if (kAcmPairs.count(p)) {
        CHECK(v.status == Status::acm);
        CHECK_FALSE(nonacm_exists(d, k));
      } else if (kNonAcmPairs.count(p)) {
        CHECK(v.status == Status::conditional);
        REQUIRE(v.prop);
        const auto& spec = witness_spec(*v.prop);
        CHECK(spec.degree == d);
        CHECK(spec.degree + 1 - spec.genus == k);
      } else {
        CHECK(v.status == Status::out_of_table);
      }
    }
  }
  CHECK(nonacm_exists(10, 0));
  CHECK(nonacm_exists(9, 1));
  CHECK_FALSE(nonacm_exists(4, 4));
}

TEST_CASE("every proposition header classifies to itself") {
  for (PropId p : all_prop_ids()) {
    const auto& s = witness_spec(p);
    Verdict v = classify_numeric(s.family, s.degree, s.genus);
    CHECK(v.status == Status::conditional);
    CHECK(v.prop == p);
    CHECK(parse_prop_id(to_string(p)) == p);
    CHECK_FALSE(s.describe().empty());
  }
  CHECK_FALSE(parse_prop_id("P9.9"));
  CHECK(parse_prop_id("Cor4.3") == PropId::C4_3);
}

TEST_CASE("out-of-table verdicts surface Thm1.1 obligations") {
  Verdict v = classify_numeric(SurfaceFamily::quintic, 5, 6);  // k = 0
  CHECK(v.status == Status::out_of_table);
  CHECK(render_report(v).find("h0(O_C(D-C)) = 0: unchecked") != std::string::npos);
  Verdict w = classify_numeric(SurfaceFamily::quintic, 4, 0);  // k = 5
  CHECK(w.has_failed_check("Thm1.1(i)"));
}

TEST_CASE("classify_class needs a quartic or quintic") {
  CHECK(classify_class(cls("2*H - L[01|23](0,0) - L[02|13](0,1) - L[02|13](0,2)")).prop ==
        PropId::P4_7);
  CHECK(classify_class(DivClass::hyperplane(builtin_model("quadric"))).status == Status::invalid);
}

TEST_CASE("effectivity certificates") {
  auto plane = certify_effective(cls("H - L[03|12](4,0)"));
  CHECK(plane.certified);
  CHECK(plane.method == "plane-section residual");
  REQUIRE(plane.combination);
  CHECK(numerically_equal(*plane.combination, cls("H - L[03|12](4,0)")));
  for (auto c : plane.combination->coeffs()) CHECK(c >= 0);

  CHECK(certify_effective(cls("2*H - L[01|23](0,0) - L[02|13](0,1)")).certified);
  CHECK(certify_effective(cls("L[01|23](0,0)")).method == "nonnegative combination");
  CHECK_FALSE(certify_effective(cls("-L[01|23](0,0)")).certified);
  CHECK_FALSE(certify_effective(DivClass::zero(quintic())).certified);
  CHECK_FALSE(certify_effective(cls("H - 2*L[01|23](0,0)")).certified);
}

TEST_CASE("plane quartic plus two skew lines") {
  DivClass target = cls("H - L[03|12](4,0) + L[01|23](0,0) + L[02|13](0,1)");
  Decomposition b2({part("D~", "H - L[03|12](4,0)"), part("L1", "L[01|23](0,0)"),
                    part("L2", "L[02|13](0,1)")});
  Verdict v = check_witness(PropId::P4_6, target, b2);
  CHECK(v.status == Status::not_acm);
  CHECK(v.rule == "Prop4.6(b2)");
  CHECK(numerically_equal(v.witness->total(), target));
  CHECK(render_report(v).find("effectivity policy") != std::string::npos);

  DivClass t3 = cls("H - L[03|12](4,0) + L[01|23](0,0) + L[01|23](0,4)");
  Decomposition b3({part("D~", "H - L[03|12](4,0)"), part("Δ", "L[01|23](0,0) + L[01|23](0,4)")});
  CHECK(check_witness(PropId::P4_6, t3, b3).rule == "Prop4.6(b3)");
}

TEST_CASE("line plus conic") {
  DivClass target = cls("2*H - L[01|23](0,0) - L[02|13](0,1) - L[02|13](0,2)");
  Decomposition w({part("Γ1", "L[01|23](0,0)"), part("Γ2", "L[02|13](0,1) + L[02|13](0,2)")});
  Verdict v = check_witness(PropId::P4_7, target, w);
  CHECK(v.status == Status::not_acm);
  CHECK(numerically_equal(w.total(), link(target, 2)));
}

TEST_CASE("witness rejection names the failing clause") {
  // target of degree 7, genus 6 built from two skew lines
  DivClass target = cls("H + L[01|23](0,0) + L[02|13](0,1)");
  REQUIRE(degree(target) == 7);
  REQUIRE(genus(target) == 6);
  CHECK(check_witness(PropId::P4_4, target,
                      Decomposition({part("Γ1", "L[01|23](0,0)"), part("Γ2", "L[02|13](0,1)")}))
            .status == Status::not_acm);

  REQUIRE(pair(cls("L[01|23](0,0)"), cls("L[01|23](0,1)")) == 1);
  Verdict bad = check_witness(
      PropId::P4_4, target,
      Decomposition({part("Γ1", "L[01|23](0,0)"), part("Γ2", "L[01|23](0,1)")}));
  CHECK(bad.status == Status::conditional);
  CHECK(bad.rule == "Prop4.4");
  CHECK(bad.has_failed_check("Γ1.Γ2"));
  CHECK_FALSE(bad.witness);

  Verdict shape = check_witness(PropId::P4_4, target, Decomposition({part("Γ1", "L[01|23](0,0)")}));
  CHECK(shape.status == Status::conditional);
  CHECK(shape.has_failed_check("witness shape"));

  Verdict header = check_witness(PropId::P4_7, target, Decomposition({part("x", "H")}));
  CHECK(header.status == Status::invalid);
  CHECK(header.has_failed_check("P_a(D)"));
}

TEST_CASE("linkage duality between the line-plus-conic propositions") {
  const ModelPtr& m = quintic();
  int successes = 0;
  for (std::size_t a = 0; a < 15; ++a) {
    const auto g1 = m->lines[a].generator;
    for (std::size_t b = 0; b < m->lines.size(); ++b) {
      for (std::size_t c = b + 1; c < m->lines.size(); ++c) {
        const auto lb = m->lines[b].generator, lc = m->lines[c].generator;
        if (m->gram[lb][lc] != 1 || m->gram[g1][lb] != 0 || m->gram[g1][lc] != 0) continue;
        Decomposition w({{DivClass::generator(m, g1), 1, "Γ1", std::nullopt},
                         {DivClass::generator(m, lb) + DivClass::generator(m, lc), 1, "Γ2",
                          std::nullopt}});
        DivClass t = link(w.total(), 2);
        Verdict v = check_witness(PropId::P4_7, t, w);
        if (v.status != Status::not_acm) continue;
        ++successes;
        CHECK(check_witness(PropId::C4_3, link(t, 3), w).status == Status::not_acm);
      }
    }
  }
  CHECK(successes > 100);
}

TEST_CASE("search finds the printed configurations") {
  auto s3 = search_witness(PropId::P4_6, cls("H - L[03|12](4,0) + L[01|23](0,0) + L[02|13](0,1)"), 10);
  REQUIRE(s3.witness);
  CHECK(s3.verdict.status == Status::not_acm);
  CHECK(s3.witness->to_string() ==
        "D~=(H - L[03|12](4,0)) | Γ1=(L[01|23](0,0)) | Γ2=(L[02|13](0,1))");

  auto s4 = search_witness(PropId::P4_7, cls("2*H - L[01|23](0,0) - L[02|13](0,1) - L[02|13](0,2)"), 10);
  REQUIRE(s4.witness);
  CHECK(s4.witness->to_string() == "Γ1=(L[01|23](0,0)) | Γ2=(L[02|13](0,1) + L[02|13](0,2))");

  // the same search is deterministic
  auto again = search_witness(PropId::P4_7, cls("2*H - L[01|23](0,0) - L[02|13](0,1) - L[02|13](0,2)"), 10);
  CHECK(render_report(again.verdict) == render_report(s4.verdict));
}

TEST_CASE("search on an aCM class finds nothing") {
  // degree 5, genus 3 lies in the aCM table
  DivClass d = cls("H - L[01|23](0,0) + L[02|13](0,1)");
  REQUIRE(degree(d) == 5);
  REQUIRE(genus(d) == 3);
  CHECK(classify_class(d).status == Status::acm);
  for (PropId p : all_prop_ids()) {
    auto s = search_witness(p, d, 20);
    CHECK_FALSE(s.witness);
    CHECK(s.verdict.status != Status::not_acm);
  }
}

TEST_CASE("an unsuccessful search stays conditional") {
  SurfaceModel s;
  s.name = "sublattice";
  s.degree = 5;
  s.generators = {"H", "Dt"};
  s.gram = {{5, 4}, {4, -6}};
  s.hyperplane = {1, 0};
  s.canonical = {1, 0};
  s.chi0 = 5;
  ModelPtr m = make_custom_model(s);
  DivClass d = link(DivClass::generator(m, "Dt"), 2);
  auto r = search_witness(PropId::P4_6, d, 10);
  CHECK_FALSE(r.witness);
  CHECK(r.verdict.status == Status::conditional);
  CHECK(render_report(r.verdict).find("absence of a witness does not prove aCM") != std::string::npos);

  auto bounded = search_witness(PropId::P4_6, cls("H - L[03|12](4,0) + L[01|23](0,0) + L[02|13](0,1)"), 3);
  CHECK_FALSE(bounded.witness);
  CHECK(bounded.verdict.has_failed_check("search (b2:D)"));
}

TEST_CASE("JSON rendering") {
  Verdict v = classify_numeric(SurfaceFamily::quintic, 7, 5);
  auto j = nlohmann::json::parse(render_json(v));
  CHECK(j["status"] == "CONDITIONAL");
  CHECK(j["rule"] == "Prop4.7");
  CHECK(j["prop"] == "P4.7");
  CHECK(j["trace"].is_array());
  CHECK(j["witness"].is_null());
}

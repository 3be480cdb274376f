#include "acm/repro.hpp"

#include <algorithm>
#include <sstream>

#include "acm/classify.hpp"
#include "acm/divcalc.hpp"
#include "acm/error.hpp"
#include "acm/projgeom.hpp"
#include "json.hpp"

namespace acm {

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string num(std::int64_t v) { return std::to_string(v); }

std::string deg_genus(const DivClass& d) {
  return "(" + num(degree(d)) + ", " + num(genus(d)) + ")";
}

std::string verdict_line(const Verdict& v) { return to_string(v.status) + " rule=" + v.rule; }

DivClass atlas_class(const ModelPtr& model, const Line& line) {
  for (const auto& a : model->lines) {
    if (a.line == line) return DivClass::generator(model, a.generator);
  }
  throw DomainError("line '" + line.to_string() + "' is not one of the standard lines of " +
                    model->name);
}

bool plane_contains(const LinearForm& plane, const Line& line) {
  for (const auto& p : line.spanning_points()) {
    if (!plane.evaluate(p).is_zero()) return false;
  }
  return true;
}

class CaseBuilder {
 public:
  CaseBuilder(std::string id, std::string title) {
    r_.id = std::move(id);
    r_.title = std::move(title);
  }

  // The computation may throw; the error text becomes the computed value.
  void claim(std::string description, std::string expected, std::string item,
             const std::function<std::string()>& compute, bool known_anomaly = false) {
    Claim c;
    c.description = std::move(description);
    c.expected = std::move(expected);
    c.anchor = r_.id + "/" + item;
    try {
      c.computed = compute();
    } catch (const Error& e) {
      c.computed = std::string("error: ") + e.what();
    }
    if (c.computed == c.expected) {
      c.status = ClaimStatus::pass;
    } else {
      c.status = known_anomaly ? ClaimStatus::anomaly : ClaimStatus::fail;
    }
    r_.claims.push_back(std::move(c));
  }

  Report done() { return std::move(r_); }

 private:
  Report r_;
};

Report ex2_1(const Fixtures& fx) {
  CaseBuilder b("ex2.1", "non-aCM curves of degree 6 and genus 3 on the Fermat quartic");
  const ModelPtr& m = fx.fermat4;
  const Line g1 = parse_line("x0 + zeta(8)*x1 ; x2 + zeta(8)*x3");
  const Line g2_printed = parse_line("x0 + zeta(8)*x2 ; x1 + zeta(8)^2*x3");
  const Line g2 = parse_line("x0 + zeta(8)*x2 ; x1 + zeta(8)^3*x3");

  b.claim("Γ1 lies on X", "yes", "Γ1", [&] { return yes_no(line_on_fermat(g1, 4)); });
  b.claim("Γ2 as printed (ω^2) lies on X", "yes", "Γ2",
          [&] { return yes_no(line_on_fermat(g2_printed, 4)); }, true);
  b.claim("corrected Γ2 (ω^3) lies on X", "yes", "Γ2'",
          [&] { return yes_no(line_on_fermat(g2, 4)); });
  b.claim("Γ1, corrected Γ2 incidence", to_string(Incidence::skew), "Γ1.Γ2",
          [&] { return to_string(lines_meet(g1, g2)); });
  b.claim("Γ1.Γ2 on the lattice", "0", "Γ1.Γ2",
          [&] { return num(pair(atlas_class(m, g1), atlas_class(m, g2))); });

  auto classes = [&] {
    const DivClass h = DivClass::hyperplane(m);
    const DivClass s = atlas_class(m, g1) + atlas_class(m, g2);
    return std::pair{h + s, 2 * h - s};
  };
  b.claim("D1 = C1+Γ1+Γ2: (deg, P_a)", "(6, 3)", "D1",
          [&] { return deg_genus(classes().first); });
  b.claim("D2 = C1+C2-Γ1-Γ2: (deg, P_a)", "(6, 3)", "D2",
          [&] { return deg_genus(classes().second); });
  b.claim("D1-C1 is effective", "yes", "|D1-C1|", [&] {
    return yes_no(certify_effective(classes().first - DivClass::hyperplane(m)).certified);
  });
  b.claim("2C1-D2 is effective", "yes", "|2C1-D2|", [&] {
    return yes_no(certify_effective(2 * DivClass::hyperplane(m) - classes().second).certified);
  });
  b.claim("classify (quartic, 6, 3)", "CONDITIONAL rule=Prop2.2", "D1",
          [&] { return verdict_line(classify_class(classes().first)); });
  b.claim("D1 witness for P2.2", "NOT_ACM rule=Prop2.2(b)", "D1", [&] {
    Decomposition w({{atlas_class(m, g1), 1, "Γ1", std::nullopt},
                     {atlas_class(m, g2), 1, "Γ2", std::nullopt}});
    return verdict_line(check_witness(PropId::P2_2, classes().first, w));
  });
  b.claim("D2 witness for P2.2", "NOT_ACM rule=Prop2.2(b)", "D2", [&] {
    Decomposition w({{atlas_class(m, g1), 1, "Γ1", std::nullopt},
                     {atlas_class(m, g2), 1, "Γ2", std::nullopt}});
    return verdict_line(check_witness(PropId::P2_2, classes().second, w));
  });
  return b.done();
}

Report ex3_1(const Fixtures& fx) {
  CaseBuilder b("ex3.1", "two skew lines on the Fermat quintic");
  const ModelPtr& m = fx.fermat5;
  const Line d1 = parse_line("x0 + x1 ; x2 + x3");
  const Line d2 = parse_line("x0 + x2 ; x1 + zeta(5)*x3");
  b.claim("D1 lies on X", "yes", "D1", [&] { return yes_no(line_on_fermat(d1, 5)); });
  b.claim("D2 lies on X", "yes", "D2", [&] { return yes_no(line_on_fermat(d2, 5)); });
  b.claim("D1, D2 incidence", to_string(Incidence::skew), "skew",
          [&] { return to_string(lines_meet(d1, d2)); });
  b.claim("D1.D2 on the lattice", "0", "skew",
          [&] { return num(pair(atlas_class(m, d1), atlas_class(m, d2))); });
  b.claim("D1+D2 is 1-connected", "no", "1-connected", [&] {
    Decomposition parts({{atlas_class(m, d1), 1, "D1", std::nullopt},
                         {atlas_class(m, d2), 1, "D2", std::nullopt}});
    return yes_no(is_m_connected(parts, 1).connected);
  });
  return b.done();
}

// Rank-2 sublattice {H, D~} of a quintic containing a curve D~ of the given
// degree and genus; D~^2 follows from adjunction with K = H.
ModelPtr quintic_sublattice(const std::string& name, std::int64_t deg, std::int64_t g) {
  SurfaceModel s;
  s.name = name;
  s.kind = SurfaceKind::custom;
  s.degree = 5;
  s.generators = {"H", "Dt"};
  const std::int64_t self = 2 * g - 2 - deg;
  s.gram = {{5, deg}, {deg, self}};
  s.hyperplane = {1, 0};
  s.canonical = {1, 0};
  s.chi0 = hypersurface_chi0(5);
  s.known_genus = {6, g};
  s.effective = {true, true};
  return make_custom_model(std::move(s));
}

Report ex4_1(const Fixtures& fx) {
  CaseBuilder b("ex4.1", "curves of degree 10 and genus 11 via a cubic surface");
  const ModelPtr& y = fx.cubic;
  auto dt_y = [&] { return DivClass::hyperplane(y) + parse_divisor(y, "E1 + E2"); };
  b.claim("H_Y = 3l - E1 - ... - E6", "yes", "H_Y", [&] {
    return yes_no(DivClass::hyperplane(y) == parse_divisor(y, "3*l-E1-E2-E3-E4-E5-E6"));
  });
  b.claim("K_Y = -H_Y", "yes", "K_Y", [&] {
    return yes_no(numerically_equal(DivClass::canonical(y), -DivClass::hyperplane(y)));
  });
  b.claim("H_Y.D~", "5", "H_Y.D~", [&] { return num(degree(dt_y())); });
  b.claim("P_a(D~)", "1", "P_a(D~)", [&] { return num(genus(dt_y())); });

  auto x = [] { return quintic_sublattice("quintic containing D~ (deg 5, genus 1)", 5, 1); };
  b.claim("D1 = 3C - D~ on X: (deg, P_a)", "(10, 11)", "D1",
          [&] { return deg_genus(link(DivClass::generator(x(), "Dt"), 3)); });
  b.claim("D2 = D~ + C on X: (deg, P_a)", "(10, 11)", "D2", [&] {
    auto m = x();
    return deg_genus(DivClass::generator(m, "Dt") + DivClass::hyperplane(m));
  });
  b.claim("classify D1", "CONDITIONAL rule=Prop4.5", "D1",
          [&] { return verdict_line(classify_class(link(DivClass::generator(x(), "Dt"), 3))); });
  b.claim("D1 witness D~ in |3C-D1| for P4.5", "NOT_ACM rule=Prop4.5(b)", "D1", [&] {
    auto m = x();
    const DivClass dt = DivClass::generator(m, "Dt");
    return verdict_line(
        check_witness(PropId::P4_5, link(dt, 3), Decomposition({{dt, 1, "E", std::nullopt}})));
  });
  return b.done();
}

Report ex4_2(const Fixtures& fx) {
  CaseBuilder b("ex4.2", "a curve of degree 6 and genus 3 via a quadric");
  const ModelPtr& z = fx.quadric;
  auto dt_z = [&] { return DivClass::hyperplane(z) + parse_divisor(z, "2*L2"); };
  b.claim("H_Z = L1 + L2", "yes", "H_Z",
          [&] { return yes_no(DivClass::hyperplane(z) == parse_divisor(z, "L1+L2")); });
  b.claim("K_Z = -2H_Z", "yes", "K_Z", [&] {
    return yes_no(numerically_equal(DivClass::canonical(z), -2 * DivClass::hyperplane(z)));
  });
  b.claim("H_Z.D~", "4", "H_Z.D~", [&] { return num(degree(dt_z())); });
  b.claim("P_a(D~)", "0", "P_a(D~)", [&] { return num(genus(dt_z())); });

  auto x = [] { return quintic_sublattice("quintic containing D~ (deg 4, genus 0)", 4, 0); };
  b.claim("D = 2C - D~ on X: (deg, P_a)", "(6, 3)", "D",
          [&] { return deg_genus(link(DivClass::generator(x(), "Dt"), 2)); });
  b.claim("classify D", "CONDITIONAL rule=Prop4.6", "D",
          [&] { return verdict_line(classify_class(link(DivClass::generator(x(), "Dt"), 2))); });
  b.claim("D witness D~ in |2C-D| for P4.6", "NOT_ACM rule=Prop4.6(b1)", "D", [&] {
    auto m = x();
    const DivClass dt = DivClass::generator(m, "Dt");
    return verdict_line(
        check_witness(PropId::P4_6, link(dt, 2), Decomposition({{dt, 1, "E", std::nullopt}})));
  });
  return b.done();
}

Report ex4_3(const Fixtures& fx) {
  CaseBuilder b("ex4.3", "plane quartic plus two lines on the Fermat quintic");
  const ModelPtr& m = fx.fermat5;
  const Line l1 = parse_line("x0 + x1 ; x2 + x3");
  const Line l2 = parse_line("x0 + x2 ; x1 + zeta(5)*x3");
  const Line gamma = parse_line("x1 + x2 ; x0 + zeta(5)^4*x3");
  const Line l3 = parse_line("x0 + x1 ; x2 + zeta(5)^4*x3");
  const LinearForm plane_ct = parse_linear_form("x1 + x2");
  const LinearForm plane_l1l3 = parse_linear_form("x0 + x1");

  for (const auto& [name, line] : {std::pair{"L1", &l1}, std::pair{"L2", &l2},
                                   std::pair{"Γ", &gamma}, std::pair{"L3", &l3}}) {
    b.claim(std::string(name) + " lies on X", "yes", name,
            [&, line] { return yes_no(line_on_fermat(*line, 5)); });
  }
  b.claim("L1, L2 incidence", to_string(Incidence::skew), "L1.L2",
          [&] { return to_string(lines_meet(l1, l2)); });
  b.claim("Γ lies in the plane x1+x2=0", "yes", "C~", [&] {
    return yes_no(plane_contains(plane_ct, gamma));
  });
  auto cls = [&](const Line& l) { return atlas_class(m, l); };
  auto dt = [&] { return DivClass::hyperplane(m) - cls(gamma); };
  b.claim("L1.Γ", "0", "Li.Γ", [&] { return num(pair(cls(l1), cls(gamma))); });
  b.claim("L2.Γ", "0", "Li.Γ", [&] { return num(pair(cls(l2), cls(gamma))); });
  b.claim("D~ = C~ - Γ: (deg, P_a)", "(4, 3)", "D~", [&] { return deg_genus(dt()); });
  b.claim("D~.L1", "1", "D~.Li", [&] { return num(pair(dt(), cls(l1))); });
  b.claim("D~.L2", "1", "D~.Li", [&] { return num(pair(dt(), cls(l2))); });
  b.claim("D = D~+L1+L2: (deg, P_a)", "(6, 3)", "D (b2)",
          [&] { return deg_genus(dt() + cls(l1) + cls(l2)); });
  b.claim("witness (D~, L1, L2) for P4.6", "NOT_ACM rule=Prop4.6(b2)", "D (b2)", [&] {
    Decomposition w({{dt(), 1, "D~", std::nullopt},
                     {cls(l1), 1, "L1", std::nullopt},
                     {cls(l2), 1, "L2", std::nullopt}});
    return verdict_line(check_witness(PropId::P4_6, dt() + cls(l1) + cls(l2), w));
  });

  b.claim("L3, Γ incidence", to_string(Incidence::meet), "L3.Γ",
          [&] { return to_string(lines_meet(l3, gamma)); });
  b.claim("L3.Γ", "1", "L3.Γ", [&] { return num(pair(cls(l3), cls(gamma))); });
  b.claim("L3.D~", "0", "L3.D~", [&] { return num(pair(cls(l3), dt())); });
  b.claim("L1 and L3 lie in the plane x0+x1=0", "yes", "L1+L3", [&] {
    return yes_no(plane_contains(plane_l1l3, l1) && plane_contains(plane_l1l3, l3));
  });
  b.claim("(L1+L3).D~", "1", "(L1+L3).D~", [&] { return num(pair(cls(l1) + cls(l3), dt())); });
  b.claim("(L1+L3)^2", "-4", "(L1+L3)^2",
          [&] { return num(self_intersection(cls(l1) + cls(l3))); });
  b.claim("D = D~+L1+L3: (deg, P_a)", "(6, 3)", "D (b3)",
          [&] { return deg_genus(dt() + cls(l1) + cls(l3)); });
  b.claim("witness (D~, L1+L3) for P4.6", "NOT_ACM rule=Prop4.6(b3)", "D (b3)", [&] {
    Decomposition w({{dt(), 1, "D~", std::nullopt}, {cls(l1) + cls(l3), 1, "Δ", std::nullopt}});
    return verdict_line(check_witness(PropId::P4_6, dt() + cls(l1) + cls(l3), w));
  });
  return b.done();
}

Report ex4_4(const Fixtures& fx) {
  CaseBuilder b("ex4.4", "a line and a conic on the Fermat quintic");
  const ModelPtr& m = fx.fermat5;
  const Line g1 = parse_line("x0 + x1 ; x2 + x3");
  const Line c_a = parse_line("x0 + x2 ; x1 + zeta(5)*x3");
  const Line c_b = parse_line("x0 + x2 ; x1 + zeta(5)^2*x3");
  auto cls = [&](const Line& l) { return atlas_class(m, l); };
  auto gamma2 = [&] { return cls(c_a) + cls(c_b); };
  auto d = [&] { return 2 * DivClass::hyperplane(m) - cls(g1) - gamma2(); };
  auto witness = [&] {
    return Decomposition({{cls(g1), 1, "Γ1", std::nullopt}, {gamma2(), 1, "Γ2", std::nullopt}});
  };

  b.claim("Γ1 lies on X", "yes", "Γ1", [&] { return yes_no(line_on_fermat(g1, 5)); });
  b.claim("both components of Γ2 lie on X", "yes", "Γ2",
          [&] { return yes_no(line_on_fermat(c_a, 5) && line_on_fermat(c_b, 5)); });
  b.claim("components of Γ2 meet", to_string(Incidence::meet), "Γ2",
          [&] { return to_string(lines_meet(c_a, c_b)); });
  b.claim("no component of Γ2 meets Γ1", "yes", "Γ1.Γ2", [&] {
    return yes_no(lines_meet(g1, c_a) == Incidence::skew &&
                  lines_meet(g1, c_b) == Incidence::skew);
  });
  b.claim("Γ1.Γ2", "0", "Γ1.Γ2", [&] { return num(pair(cls(g1), gamma2())); });
  b.claim("Γ2^2", "-4", "Γ2", [&] { return num(self_intersection(gamma2())); });
  b.claim("D = C1+C2-Γ1-Γ2: C.D", "7", "D", [&] { return num(degree(d())); });
  b.claim("D = C1+C2-Γ1-Γ2: P_a", "5", "D", [&] { return num(genus(d())); });
  b.claim("witness (Γ1, Γ2) for P4.7", "NOT_ACM rule=Prop4.7(b)", "D",
          [&] { return verdict_line(check_witness(PropId::P4_7, d(), witness())); });
  b.claim("linked curve 3C-D: (deg, P_a)", "(8, 7)", "3C-D",
          [&] { return deg_genus(link(d(), 3)); });
  b.claim("same witness for C4.3 on 3C-D", "NOT_ACM rule=Cor4.3(b)", "3C-D",
          [&] { return verdict_line(check_witness(PropId::C4_3, link(d(), 3), witness())); });
  return b.done();
}

Report ex4_5(const Fixtures& fx) {
  CaseBuilder b("ex4.5", "plane quartic plus a line on the Fermat quintic");
  const ModelPtr& m = fx.fermat5;
  const Line g = parse_line("x0 + x1 ; x2 + x3");
  const Line gt = parse_line("x0 + x2 ; x1 + x3");
  auto cls = [&](const Line& l) { return atlas_class(m, l); };
  auto h = [&] { return DivClass::hyperplane(m); };
  auto dt = [&] { return h() - cls(gt); };
  auto d = [&] { return dt() + cls(g); };

  b.claim("Γ lies on X", "yes", "Γ", [&] { return yes_no(line_on_fermat(g, 5)); });
  b.claim("Γ~ lies on X", "yes", "Γ~", [&] { return yes_no(line_on_fermat(gt, 5)); });
  b.claim("Γ, Γ~ incidence", to_string(Incidence::meet), "Γ.Γ~",
          [&] { return to_string(lines_meet(g, gt)); });
  b.claim("Γ.Γ~", "1", "Γ.Γ~", [&] { return num(pair(cls(g), cls(gt))); });
  b.claim("C~.Γ", "1", "C~.Γ", [&] { return num(pair(h(), cls(g))); });
  b.claim("(C~-Γ~).Γ", "0", "D~.Γ", [&] { return num(pair(dt(), cls(g))); });
  b.claim("P_a(D)", "2", "D", [&] { return num(genus(d())); });
  b.claim("C~.D", "5", "D", [&] { return num(degree(d())); });
  b.claim("D0 = C+C~-D: (deg, P_a)", "(5, 2)", "D0",
          [&] { return deg_genus(link(d(), 2)); });
  b.claim("witness (D~, Γ) for P4.8", "NOT_ACM rule=Prop4.8(b)", "D", [&] {
    Decomposition w({{dt(), 1, "D~", std::nullopt}, {cls(g), 1, "Γ", std::nullopt}});
    return verdict_line(check_witness(PropId::P4_8, d(), w));
  });
  return b.done();
}

}  // namespace

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "PASS";
    case ClaimStatus::fail: return "FAIL";
    case ClaimStatus::anomaly: return "ANOMALY";
  }
  return "?";
}

bool Report::ok() const { return count(ClaimStatus::fail) == 0; }

int Report::count(ClaimStatus s) const {
  return static_cast<int>(
      std::count_if(claims.begin(), claims.end(), [s](const Claim& c) { return c.status == s; }));
}

bool Summary::ok() const {
  return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.ok(); });
}

Fixtures Fixtures::standard() {
  return {fermat_model(4), fermat_model(5), builtin_model("quadric"),
          builtin_model("cubic_delpezzo")};
}

const std::vector<ExampleCase>& example_cases() {
  static const std::vector<ExampleCase> cases{
      {"ex2.1", "Fermat quartic, degree 6 genus 3", ex2_1},
      {"ex3.1", "Fermat quintic, skew lines", ex3_1},
      {"ex4.1", "cubic surface liaison, degree 10 genus 11", ex4_1},
      {"ex4.2", "quadric liaison, degree 6 genus 3", ex4_2},
      {"ex4.3", "Fermat quintic, plane quartic and lines", ex4_3},
      {"ex4.4", "Fermat quintic, line and conic", ex4_4},
      {"ex4.5", "Fermat quintic, plane quartic and a line", ex4_5},
  };
  return cases;
}

Report run_example(std::string_view id, const Fixtures& fixtures) {
  for (const auto& c : example_cases()) {
    if (c.id == id) return c.run(fixtures);
  }
  std::string msg = "unknown example '" + std::string(id) + "'; known:";
  for (const auto& c : example_cases()) msg += " " + c.id;
  throw DomainError(msg);
}

Summary verify_all(const std::vector<ExampleCase>& cases, const Fixtures& fixtures) {
  Summary s;
  for (const auto& c : cases) s.reports.push_back(c.run(fixtures));
  std::sort(s.reports.begin(), s.reports.end(),
            [](const Report& a, const Report& b) { return a.id < b.id; });
  return s;
}

std::string render_report(const Report& r) {
  std::ostringstream out;
  out << (r.ok() ? "PASS" : "FAIL") << " rule=" << r.id << " (" << r.title << ")\n";
  for (const auto& c : r.claims) {
    out << "  check " << c.description << ": " << c.computed << " (expected " << c.expected
        << ") [" << c.anchor << "] " << to_string(c.status) << "\n";
  }
  return out.str();
}

std::string render_summary(const Summary& s) {
  std::ostringstream out;
  int claims = 0, fails = 0, anomalies = 0;
  for (const auto& r : s.reports) {
    out << render_report(r);
    claims += static_cast<int>(r.claims.size());
    fails += r.count(ClaimStatus::fail);
    anomalies += r.count(ClaimStatus::anomaly);
  }
  out << "SUMMARY cases=" << s.reports.size() << " claims=" << claims << " failed=" << fails
      << " anomalies=" << anomalies << " " << (s.ok() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

namespace {

nlohmann::ordered_json report_json(const Report& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["title"] = r.title;
  j["status"] = r.ok() ? "PASS" : "FAIL";
  auto claims = nlohmann::ordered_json::array();
  for (const auto& c : r.claims) {
    claims.push_back({{"description", c.description},
                      {"expected", c.expected},
                      {"computed", c.computed},
                      {"anchor", c.anchor},
                      {"status", to_string(c.status)}});
  }
  j["claims"] = claims;
  return j;
}

}  // namespace

std::string render_json(const Report& r) { return report_json(r).dump(2); }

std::string render_json(const Summary& s) {
  nlohmann::ordered_json j;
  j["status"] = s.ok() ? "PASS" : "FAIL";
  auto reports = nlohmann::ordered_json::array();
  for (const auto& r : s.reports) reports.push_back(report_json(r));
  j["reports"] = reports;
  return j.dump(2);
}

}  // namespace acm

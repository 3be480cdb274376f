#include "acm/classify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "acm/error.hpp"
#include "json.hpp"

namespace acm {

namespace {

enum class Role { line, conic, plane_quartic, delta, effective };

// Which class the witness parts must sum to.
enum class Twist { same, minus_h, two_h_minus, three_h_minus };

struct PairRule {
  int a;
  int b;
  std::int64_t value;
};

struct Slot {
  Role role;
  std::string label;
};

struct Clause {
  std::string tag;
  std::vector<Slot> slots;
  Twist twist;
  std::vector<PairRule> pairs;
};

const std::vector<Slot> kTwoLines{{Role::line, "Γ1"}, {Role::line, "Γ2"}};
const std::vector<Slot> kLineConic{{Role::line, "Γ1"}, {Role::conic, "Γ2"}};
const std::vector<Slot> kQuarticTwoLines{
    {Role::plane_quartic, "D~"}, {Role::line, "Γ1"}, {Role::line, "Γ2"}};
const std::vector<Slot> kQuarticDelta{{Role::plane_quartic, "D~"}, {Role::delta, "Δ"}};
const std::vector<Slot> kQuarticLine{{Role::plane_quartic, "D~"}, {Role::line, "Γ"}};
const std::vector<Slot> kEffective{{Role::effective, "E"}};

const std::vector<Clause>& clauses(PropId id) {
  static const std::map<PropId, std::vector<Clause>> table{
      {PropId::P2_2,
       {{"b", kTwoLines, Twist::minus_h, {{0, 1, 0}}},
        {"b", kTwoLines, Twist::two_h_minus, {{0, 1, 0}}}}},
      {PropId::P4_4, {{"b", kTwoLines, Twist::minus_h, {{0, 1, 0}}}}},
      {PropId::P4_5,
       {{"b", kEffective, Twist::minus_h, {}}, {"b", kEffective, Twist::three_h_minus, {}}}},
      {PropId::C4_2,
       {{"b1", kEffective, Twist::minus_h, {}},
        {"b2", kQuarticTwoLines, Twist::three_h_minus, {{1, 2, 0}}},
        {"b3", kQuarticDelta, Twist::three_h_minus, {}}}},
      {PropId::P4_6,
       {{"b1", kEffective, Twist::two_h_minus, {}},
        {"b2", kQuarticTwoLines, Twist::same, {{1, 2, 0}}},
        {"b3", kQuarticDelta, Twist::same, {}}}},
      {PropId::P4_7, {{"b", kLineConic, Twist::two_h_minus, {{0, 1, 0}}}}},
      {PropId::C4_3, {{"b", kLineConic, Twist::minus_h, {{0, 1, 0}}}}},
      {PropId::P4_8,
       {{"b", kQuarticLine, Twist::same, {{0, 1, 0}}},
        {"b", kQuarticLine, Twist::two_h_minus, {{0, 1, 0}}}}},
  };
  return table.at(id);
}

std::string twist_name(Twist t) {
  switch (t) {
    case Twist::same: return "D";
    case Twist::minus_h: return "D-C";
    case Twist::two_h_minus: return "2C-D";
    case Twist::three_h_minus: return "3C-D";
  }
  return "?";
}

DivClass apply_twist(Twist t, const DivClass& d) {
  const DivClass h = DivClass::hyperplane(d.model_ptr());
  switch (t) {
    case Twist::same: return d;
    case Twist::minus_h: return d - h;
    case Twist::two_h_minus: return link(d, 2);
    case Twist::three_h_minus: return link(d, 3);
  }
  return d;
}

std::string rule_prefix(PropId p) {
  std::string s = to_string(p);
  return (s[0] == 'C' ? "Cor" : "Prop") + s.substr(1);
}

std::string str(std::int64_t v) { return std::to_string(v); }

const char* kEffectivityPolicy =
    "nonnegative combination of H and atlas lines, or degree-1 test on a quintic";

std::optional<SurfaceFamily> family_of(const SurfaceModel& m) {
  if (m.degree == 4) return SurfaceFamily::quartic;
  if (m.degree == 5) return SurfaceFamily::quintic;
  return std::nullopt;
}

// Header agreement; fills the trace and returns false on mismatch.
bool check_header(const WitnessSpec& spec, const DivClass& target, Verdict& v) {
  auto fam = family_of(target.model());
  const bool fam_ok = fam && *fam == spec.family;
  v.add("surface", target.model().name + " (degree " + str(target.model().degree) + ")",
        spec.family == SurfaceFamily::quintic ? "quintic" : "quartic", fam_ok);
  if (!fam_ok) return false;
  const std::int64_t deg = degree(target);
  std::optional<std::int64_t> g;
  try {
    g = genus(target);
  } catch (const DomainError&) {
  }
  v.add("C.D", str(deg), str(spec.degree), deg == spec.degree);
  v.add("P_a(D)", g ? str(*g) : "half-integral", str(spec.genus), g && *g == spec.genus);
  return deg == spec.degree && g && *g == spec.genus;
}

// Evaluates one clause against slot classes; appends to the trace.
bool evaluate_clause(const Clause& clause, PropId prop, const DivClass& target,
                     const std::vector<DivClass>& slots, Verdict& v) {
  const std::string pre = "(" + clause.tag + ":" + twist_name(clause.twist) + ") ";
  const int surface_degree = target.model().degree;
  bool ok = true;
  auto add = [&](const std::string& check, std::int64_t value, std::int64_t expected) {
    bool pass = value == expected;
    v.add(pre + check, str(value), str(expected), pass);
    ok &= pass;
  };
  auto add_effective = [&](const std::string& label, const DivClass& c) {
    auto cert = certify_effective(c);
    v.add(pre + label + " effective", cert.certified ? cert.method : "not certified", "certified",
          cert.certified);
    ok &= cert.certified;
  };
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const auto& slot = clause.slots[i];
    const DivClass& c = slots[i];
    switch (slot.role) {
      case Role::line:
        add("C." + slot.label, degree(c), 1);
        add(slot.label + "^2", self_intersection(c), 2 - surface_degree);
        add_effective(slot.label, c);
        break;
      case Role::conic:
        add("C." + slot.label, degree(c), 2);
        add(slot.label + "^2", self_intersection(c), -4);
        add_effective(slot.label, c);
        break;
      case Role::delta:
        add(slot.label + "^2", self_intersection(c), -4);
        add_effective(slot.label, c);
        break;
      case Role::plane_quartic: {
        add("C." + slot.label, degree(c), 4);
        std::optional<std::int64_t> g;
        try {
          g = genus(c);
        } catch (const DomainError&) {
        }
        v.add(pre + "P_a(" + slot.label + ")", g ? str(*g) : "half-integral", "3", g && *g == 3);
        ok &= g && *g == 3;
        add_effective(slot.label, c);
        break;
      }
      case Role::effective:
        v.add(pre + slot.label + " nonzero", c.is_zero() ? "zero" : "nonzero", "nonzero",
              !c.is_zero());
        ok &= !c.is_zero();
        add_effective(slot.label, c);
        break;
    }
  }
  for (const auto& rule : clause.pairs) {
    add(clause.slots[rule.a].label + "." + clause.slots[rule.b].label,
        pair(slots[rule.a], slots[rule.b]), rule.value);
  }
  DivClass sum = DivClass::zero(target.model_ptr());
  std::string lhs;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    sum += slots[i];
    lhs += (i ? "+" : "") + clause.slots[i].label;
  }
  const bool eq = numerically_equal(sum, apply_twist(clause.twist, target));
  v.add(pre + lhs + " in |" + twist_name(clause.twist) + "|", eq ? "equal" : "differs",
        "equal (numerically)", eq);
  ok &= eq;
  (void)prop;
  return ok;
}

std::vector<DivClass> expand(const Decomposition& w) {
  std::vector<DivClass> out;
  for (const auto& p : w.parts) {
    if (p.multiplicity < 1) throw DomainError("multiplicity must be positive");
    for (int i = 0; i < p.multiplicity; ++i) out.push_back(p.cls);
  }
  return out;
}

Verdict invalid(std::string rule) {
  Verdict v;
  v.status = Status::invalid;
  v.rule = std::move(rule);
  return v;
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::acm: return "ACM";
    case Status::not_acm: return "NOT_ACM";
    case Status::conditional: return "CONDITIONAL";
    case Status::out_of_table: return "OUT_OF_TABLE";
    case Status::invalid: return "INVALID";
  }
  return "?";
}

std::string to_string(PropId p) {
  switch (p) {
    case PropId::P2_2: return "P2.2";
    case PropId::P4_4: return "P4.4";
    case PropId::P4_5: return "P4.5";
    case PropId::P4_6: return "P4.6";
    case PropId::P4_7: return "P4.7";
    case PropId::P4_8: return "P4.8";
    case PropId::C4_2: return "C4.2";
    case PropId::C4_3: return "C4.3";
  }
  return "?";
}

std::vector<PropId> all_prop_ids() {
  return {PropId::P2_2, PropId::P4_4, PropId::P4_5, PropId::P4_6,
          PropId::P4_7, PropId::P4_8, PropId::C4_2, PropId::C4_3};
}

std::optional<PropId> parse_prop_id(std::string_view text) {
  for (auto p : all_prop_ids()) {
    if (to_string(p) == text || rule_prefix(p) == text) return p;
  }
  return std::nullopt;
}

std::optional<SurfaceFamily> parse_family(std::string_view text) {
  if (text == "quartic") return SurfaceFamily::quartic;
  if (text == "quintic") return SurfaceFamily::quintic;
  return std::nullopt;
}

void Verdict::add(std::string check, std::string value, std::string expected, bool ok) {
  trace.push_back({std::move(check), std::move(value), std::move(expected), ok});
}

bool Verdict::has_failed_check(std::string_view check) const {
  return std::any_of(trace.begin(), trace.end(), [check](const TraceEntry& e) {
    return !e.ok && e.check.find(check) != std::string::npos;
  });
}

std::string render_report(const Verdict& v) {
  std::ostringstream out;
  out << to_string(v.status) << " rule=" << v.rule << "\n";
  for (const auto& e : v.trace) {
    out << "  check " << e.check << ": " << e.value << " (expected " << e.expected << ")";
    if (!e.ok) out << " FAILED";
    out << "\n";
  }
  if (v.witness) {
    for (const auto& p : v.witness->parts) {
      out << "  witness " << (p.label.empty() ? "part" : p.label) << ": ";
      if (p.multiplicity != 1) out << p.multiplicity << "*";
      out << "(" << p.cls.to_string() << ")\n";
    }
  }
  return out.str();
}

std::string render_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["status"] = to_string(v.status);
  j["rule"] = v.rule;
  j["prop"] = v.prop ? nlohmann::ordered_json(to_string(*v.prop)) : nlohmann::ordered_json();
  auto trace = nlohmann::ordered_json::array();
  for (const auto& e : v.trace) {
    trace.push_back({{"check", e.check}, {"value", e.value}, {"expected", e.expected},
                     {"ok", e.ok}});
  }
  j["trace"] = trace;
  if (v.witness) {
    auto parts = nlohmann::ordered_json::array();
    for (const auto& p : v.witness->parts) {
      parts.push_back(
          {{"label", p.label}, {"class", p.cls.to_string()}, {"multiplicity", p.multiplicity}});
    }
    j["witness"] = parts;
  } else {
    j["witness"] = nullptr;
  }
  return j.dump(2);
}

const std::vector<TableRow>& acm_table() {
  static const std::vector<TableRow> rows{
      {2, 1, "Thm1.2(i)", std::nullopt},   {2, 4, "Thm1.2(i)", std::nullopt},
      {3, 2, "Thm1.2(ii)", std::nullopt},  {3, 3, "Thm1.2(ii)", std::nullopt},
      {3, 5, "Thm1.2(ii)", std::nullopt},  {3, 6, "Thm1.2(ii)", std::nullopt},
      {4, 3, "Thm1.2(iii)", std::nullopt}, {4, 4, "Thm1.2(iii)", std::nullopt},
  };
  return rows;
}

const std::vector<TableRow>& nonacm_table() {
  static const std::vector<TableRow> rows{
      {0, 10, "Thm1.3(i)", PropId::P4_5},  {1, 9, "Thm1.3(ii)", PropId::C4_2},
      {2, 7, "Thm1.3(iii)", PropId::P4_4}, {2, 8, "Thm1.3(iii)", PropId::C4_3},
      {3, 7, "Thm1.3(iv)", PropId::P4_7},  {4, 5, "Thm1.3(v)", PropId::P4_8},
      {4, 6, "Thm1.3(v)", PropId::P4_6},
  };
  return rows;
}

bool nonacm_exists(std::int64_t d, std::int64_t k) {
  const auto& rows = nonacm_table();
  return std::any_of(rows.begin(), rows.end(),
                     [&](const TableRow& r) { return r.degree == d && r.k == k; });
}

const WitnessSpec& witness_spec(PropId id) {
  static const std::map<PropId, WitnessSpec> specs{
      {PropId::P2_2, {PropId::P2_2, SurfaceFamily::quartic, 6, 3}},
      {PropId::P4_4, {PropId::P4_4, SurfaceFamily::quintic, 7, 6}},
      {PropId::P4_5, {PropId::P4_5, SurfaceFamily::quintic, 10, 11}},
      {PropId::P4_6, {PropId::P4_6, SurfaceFamily::quintic, 6, 3}},
      {PropId::P4_7, {PropId::P4_7, SurfaceFamily::quintic, 7, 5}},
      {PropId::P4_8, {PropId::P4_8, SurfaceFamily::quintic, 5, 2}},
      {PropId::C4_2, {PropId::C4_2, SurfaceFamily::quintic, 9, 9}},
      {PropId::C4_3, {PropId::C4_3, SurfaceFamily::quintic, 8, 7}},
  };
  return specs.at(id);
}

std::string WitnessSpec::describe() const {
  std::ostringstream out;
  bool first_clause = true;
  for (const auto& c : clauses(id)) {
    if (!first_clause) out << " or ";
    first_clause = false;
    out << "(" << c.tag << ") ";
    for (std::size_t i = 0; i < c.slots.size(); ++i) out << (i ? "+" : "") << c.slots[i].label;
    out << " in |" << twist_name(c.twist) << "|";
    for (const auto& r : c.pairs) {
      out << ", " << c.slots[r.a].label << "." << c.slots[r.b].label << "=" << r.value;
    }
  }
  return out.str();
}

Verdict classify_numeric(SurfaceFamily family, std::int64_t deg, std::int64_t g) {
  Verdict v;
  if (deg <= 0) {
    v = invalid("input");
    v.add("C.D", str(deg), ">= 1", false);
    return v;
  }
  if (family == SurfaceFamily::quartic) {
    struct QuarticRow {
      std::int64_t genus, degree;
      const char* rule;
    };
    static const QuarticRow rows[] = {
        {0, 1, "Prop2.1(a)"}, {0, 2, "Prop2.1(a)"}, {0, 3, "Prop2.1(a)"},
        {1, 3, "Prop2.1(b)"}, {1, 4, "Prop2.1(b)"}, {2, 5, "Prop2.1(c)"},
    };
    v.add("(P_a, C.D)", "(" + str(g) + ", " + str(deg) + ")", "quartic table");
    for (const auto& r : rows) {
      if (r.genus == g && r.degree == deg) {
        v.status = Status::acm;
        v.rule = r.rule;
        v.add("assumption |D-C| = empty", "assumed", "true");
        return v;
      }
    }
    if (g == 3 && deg == 6) {
      v.status = Status::conditional;
      v.rule = "Prop2.2";
      v.prop = PropId::P2_2;
      v.add("Prop2.1(d) |D-C| = |2C-D| = empty", "unchecked", "true");
      v.add("witness for P2.2(b)", "not supplied", witness_spec(PropId::P2_2).describe());
      return v;
    }
    v.status = Status::out_of_table;
    v.rule = "Prop2.1";
    v.add("(P_a, C.D) in Prop2.1 (a)-(d)", "no", "yes", false);
    return v;
  }

  const std::int64_t k = deg + 1 - g;
  v.add("k = C.D + 1 - P_a", str(k), "0..4", k >= 0 && k <= 4);
  for (const auto& r : acm_table()) {
    if (r.k == k && r.degree == deg) {
      v.status = Status::acm;
      v.rule = r.rule;
      v.add("(k, C.D)", "(" + str(k) + ", " + str(deg) + ")", "in aCM table");
      if (k == 4 && deg == 4) v.add("established by", "Prop4.2", "Prop4.2");
      if (k == 3 && deg == 5) v.add("established by", "Prop4.3", "Prop4.3");
      if (k == 3 && deg == 6) v.add("established by", "Cor4.1 (linked to Prop4.2)", "Cor4.1");
      return v;
    }
  }
  for (const auto& r : nonacm_table()) {
    if (r.k == k && r.degree == deg) {
      v.status = Status::conditional;
      v.prop = r.prop;
      v.rule = rule_prefix(*r.prop);
      v.add("(k, C.D)", "(" + str(k) + ", " + str(deg) + ")", "in non-aCM table " + r.rule);
      v.add("witness for " + to_string(*r.prop) + "(b)", "not supplied",
            witness_spec(*r.prop).describe());
      return v;
    }
  }

  // Outside both tables: report which necessary conditions of Thm1.1 fail.
  v.status = Status::out_of_table;
  v.rule = "Thm1.1";
  v.add("(k, C.D) in Thm1.2/Thm1.3 tables", "no", "yes", false);
  if (k < 0 || k > 4) {
    v.add("Thm1.1(i) 0 <= k <= 4", str(k), "0..4", false);
  } else if (k <= 1) {
    v.add("Thm1.1(ii) C.D = 10 - k", str(deg), str(10 - k), deg == 10 - k);
    v.add("Thm1.1(ii) h0(O_C(D-C)) = 0", "unchecked", "true");
  } else if (k == 2) {
    const bool in = deg == 1 || deg == 4 || deg == 7 || deg == 8;
    v.add("Thm1.1(iii)(a) C.D in {1,4,7,8}", str(deg), "{1,4,7,8}", in);
  } else {
    const bool in = deg >= k - 1 && deg <= 10 - k;
    v.add("Thm1.1(iv)(a) k-1 <= C.D <= 10-k", str(deg), str(k - 1) + ".." + str(10 - k), in);
    if (k == 3) v.add("Thm1.1(iv)(c) C.D != 4", str(deg), "!= 4", deg != 4);
  }
  v.add("conclusion", "not an initialized aCM line bundle", "lattice data only");
  return v;
}

Verdict classify_class(const DivClass& d) {
  auto fam = family_of(d.model());
  if (!fam) {
    Verdict v = invalid("input");
    v.add("surface", d.model().name, "quartic or quintic", false);
    return v;
  }
  std::int64_t g;
  try {
    g = genus(d);
  } catch (const DomainError& e) {
    Verdict v = invalid("input");
    v.add("P_a(D)", "half-integral", "integer", false);
    return v;
  }
  return classify_numeric(*fam, degree(d), g);
}

EffectivityCertificate certify_effective(const DivClass& d) {
  EffectivityCertificate cert;
  const SurfaceModel& m = d.model();
  if (d.is_zero()) {
    cert.method = "zero class";
    return cert;
  }
  auto nonneg = [&m](const IntVector& c) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] < 0 || (c[i] > 0 && !m.effective[i])) return false;
    }
    return true;
  };
  if (nonneg(d.coeffs())) {
    cert.certified = true;
    cert.method = "nonnegative combination";
    cert.combination = d;
    return cert;
  }
  if (m.is_quintic() && degree(d) == 1) {
    cert.certified = deg1_effectivity_test(d);
    cert.method = cert.certified ? "degree-1 test (D^2 = -3)" : "degree-1 test fails";
    if (cert.certified) cert.combination = d;
    return cert;
  }
  // Trade copies of H for the lines of a plane section until no line has a
  // negative coefficient.
  auto h = m.generator_index("H");
  if (!m.planes.empty() && h && DivClass::hyperplane(d.model_ptr()) ==
                                    DivClass::generator(d.model_ptr(), *h)) {
    IntVector c = d.coeffs();
    for (;;) {
      std::size_t neg = c.size();
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i != *h && c[i] < 0) {
          neg = i;
          break;
        }
      }
      if (neg == c.size() || c[*h] <= 0) break;
      const PlaneSection* best = nullptr;
      int best_score = -1;
      for (const auto& p : m.planes) {
        if (std::find(p.generators.begin(), p.generators.end(), neg) == p.generators.end()) continue;
        int score = 0;
        for (auto g : p.generators) score += c[g] < 0 ? 1 : 0;
        if (score > best_score) {
          best = &p;
          best_score = score;
        }
      }
      if (!best) break;
      c[*h] -= 1;
      for (auto g : best->generators) c[g] += 1;
    }
    if (nonneg(c)) {
      cert.certified = true;
      cert.method = "plane-section residual";
      cert.combination = DivClass(d.model_ptr(), c);
      return cert;
    }
  }
  cert.method = "no certificate";
  return cert;
}

Verdict check_witness(PropId prop, const DivClass& target, const Decomposition& witness) {
  const WitnessSpec& spec = witness_spec(prop);
  Verdict v;
  v.prop = prop;
  if (!check_header(spec, target, v)) {
    v.status = Status::invalid;
    v.rule = rule_prefix(prop) + " header";
    return v;
  }
  for (const auto& p : witness.parts) require_same_model(p.cls, target);
  const auto slots = expand(witness);
  v.add("effectivity policy", kEffectivityPolicy, "sufficient, not necessary");
  bool any_shape = false;
  for (const auto& clause : clauses(prop)) {
    if (clause.slots.size() != slots.size()) continue;
    any_shape = true;
    Verdict attempt;
    const bool ok = evaluate_clause(clause, prop, target, slots, attempt);
    v.trace.insert(v.trace.end(), attempt.trace.begin(), attempt.trace.end());
    if (ok) {
      v.status = Status::not_acm;
      v.rule = rule_prefix(prop) + "(" + clause.tag + ")";
      v.witness = witness;
      return v;
    }
  }
  if (!any_shape) {
    std::string counts;
    for (const auto& c : clauses(prop)) {
      counts += (counts.empty() ? "" : " or ") + std::to_string(c.slots.size());
    }
    v.add("witness shape", std::to_string(slots.size()) + " parts", counts + " parts", false);
  }
  v.status = Status::conditional;
  v.rule = rule_prefix(prop);
  return v;
}

WitnessSearch search_witness(PropId prop, const DivClass& target, std::int64_t bound) {
  WitnessSearch out;
  const WitnessSpec& spec = witness_spec(prop);
  Verdict& v = out.verdict;
  v.prop = prop;
  if (!check_header(spec, target, v)) {
    v.status = Status::invalid;
    v.rule = rule_prefix(prop) + " header";
    return out;
  }
  const ModelPtr& model = target.model_ptr();
  const SurfaceModel& m = *model;
  auto h = m.generator_index("H");

  std::map<IntVector, std::size_t> by_image;
  for (const auto& l : m.lines) by_image.emplace(m.gram[l.generator], l.generator);
  auto lookup = [&by_image](const IntVector& img) -> std::optional<std::size_t> {
    auto it = by_image.find(img);
    if (it == by_image.end()) return std::nullopt;
    return it->second;
  };
  auto minus = [](IntVector a, const IntVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
  };
  auto gen = [&model](std::size_t i) { return DivClass::generator(model, i); };
  auto line_part = [&](std::string label, std::size_t g) {
    return Part{gen(g), 1, std::move(label), std::nullopt};
  };

  std::size_t tried = 0;
  auto attempt = [&](const Decomposition& d) {
    ++tried;
    Verdict r = check_witness(prop, target, d);
    if (r.status != Status::not_acm) return false;
    out.witness = d;
    out.verdict = std::move(r);
    out.verdict.add("search", std::to_string(tried) + " candidates tried", "first match");
    return true;
  };

  for (const auto& clause : clauses(prop)) {
    const DivClass goal = apply_twist(clause.twist, target);
    const std::int64_t goal_degree = degree(goal);
    const std::string name = "(" + clause.tag + ":" + twist_name(clause.twist) + ")";
    if (goal_degree > bound) {
      v.add("search " + name, "skipped, degree " + str(goal_degree), "<= " + str(bound), false);
      continue;
    }
    const IntVector T = numerical_image(goal);
    const auto& roles = clause.slots;

    if (roles.size() == 1) {
      auto cert = certify_effective(goal);
      if (cert.certified &&
          attempt(Decomposition({Part{*cert.combination, 1, "E", std::nullopt}}))) {
        return out;
      }
    } else if (roles[0].role == Role::line && roles[1].role == Role::line) {
      for (const auto& a : m.lines) {
        auto b = lookup(minus(T, m.gram[a.generator]));
        if (!b || *b <= a.generator) continue;
        if (attempt(Decomposition({line_part("Γ1", a.generator), line_part("Γ2", *b)}))) {
          return out;
        }
      }
    } else if (roles[0].role == Role::line && roles[1].role == Role::conic) {
      for (const auto& a : m.lines) {
        const IntVector r1 = minus(T, m.gram[a.generator]);
        for (const auto& b : m.lines) {
          if (b.generator == a.generator) continue;
          auto c = lookup(minus(r1, m.gram[b.generator]));
          if (!c || *c <= b.generator || m.gram[b.generator][*c] != 1) continue;
          if (attempt(Decomposition({line_part("Γ1", a.generator),
                                     Part{gen(b.generator) + gen(*c), 1, "Γ2", std::nullopt}}))) {
            return out;
          }
        }
      }
    } else if (roles[0].role == Role::plane_quartic && h) {
      const IntVector& hrow = m.gram[*h];
      for (const auto& q : m.lines) {
        const DivClass quartic = gen(*h) - gen(q.generator);
        const IntVector r0 = minus(minus(T, hrow), minus(IntVector(T.size(), 0), m.gram[q.generator]));
        if (roles.size() == 2 && roles[1].role == Role::line) {
          auto a = lookup(r0);
          if (a && attempt(Decomposition({Part{quartic, 1, "D~", std::nullopt},
                                          line_part("Γ", *a)}))) {
            return out;
          }
        } else if (roles.size() == 3) {
          for (const auto& a : m.lines) {
            auto b = lookup(minus(r0, m.gram[a.generator]));
            if (!b || *b <= a.generator) continue;
            if (attempt(Decomposition({Part{quartic, 1, "D~", std::nullopt},
                                       line_part("Γ1", a.generator), line_part("Γ2", *b)}))) {
              return out;
            }
          }
        } else if (roles.size() == 2 && roles[1].role == Role::delta) {
          for (const auto& a : m.lines) {
            auto b = lookup(minus(r0, m.gram[a.generator]));
            if (!b || *b <= a.generator || m.gram[a.generator][*b] != 1) continue;
            if (attempt(Decomposition({Part{quartic, 1, "D~", std::nullopt},
                                       Part{gen(a.generator) + gen(*b), 1, "Δ", std::nullopt}}))) {
              return out;
            }
          }
        }
      }
    }
    v.add("search " + name, std::to_string(tried) + " candidates tried so far", "a witness",
          false);
  }
  v.status = Status::conditional;
  v.rule = rule_prefix(prop);
  v.add("search incompleteness",
        "only H and " + std::to_string(m.lines.size()) + " atlas lines enumerated",
        "absence of a witness does not prove aCM");
  return out;
}

}  // namespace acm

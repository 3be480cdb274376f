#include "acm/surfaces.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "acm/error.hpp"
#include "json.hpp"

namespace acm {

namespace {

constexpr std::array<std::array<int, 4>, 3> kPairings{{
    {0, 1, 2, 3},
    {0, 2, 1, 3},
    {0, 3, 1, 2},
}};

std::string pairing_label(int p) {
  const auto& q = kPairings[p];
  std::ostringstream out;
  out << q[0] << q[1] << "|" << q[2] << q[3];
  return out.str();
}

// Coefficient a with a^d = (-1)^(d+1), indexed by i in 0..d-1.
CycNum fermat_parameter(int degree, int i) {
  if (degree % 2 == 1) return CycNum::root_of_unity(degree, i);
  return CycNum::root_of_unity(2 * degree, 2 * i + 1);
}

LinearForm binomial_form(int p, int q, const CycNum& coeff) {
  Point4 c;
  c[p] = CycNum(1);
  c[q] = coeff;
  return LinearForm(c);
}

std::int64_t dot_row(const IntMatrix& gram, std::size_t i, const IntVector& v) {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < v.size(); ++j) s += gram[i][j] * v[j];
  return s;
}

IntVector unit(std::size_t n, std::size_t i) {
  IntVector v(n, 0);
  v[i] = 1;
  return v;
}

SurfaceModel base_model(std::string name, SurfaceKind kind, int degree,
                        std::vector<std::string> gens) {
  SurfaceModel m;
  m.name = std::move(name);
  m.kind = kind;
  m.degree = degree;
  m.generators = std::move(gens);
  const std::size_t n = m.generators.size();
  m.gram.assign(n, IntVector(n, 0));
  m.hyperplane.assign(n, 0);
  m.canonical.assign(n, 0);
  m.known_genus.assign(n, std::nullopt);
  m.effective.assign(n, false);
  return m;
}

ModelPtr generic_model(int degree) {
  auto m = base_model(degree == 4 ? "generic_quartic" : "generic_quintic", SurfaceKind::generic,
                      degree, {"H"});
  m.gram[0][0] = degree;
  m.hyperplane[0] = 1;
  m.canonical[0] = degree - 4;
  m.chi0 = hypersurface_chi0(degree);
  m.known_genus[0] = (degree - 1) * (degree - 2) / 2;
  m.effective[0] = true;
  return std::make_shared<const SurfaceModel>(std::move(m));
}

ModelPtr quadric_model() {
  auto m = base_model("quadric", SurfaceKind::quadric, 2, {"L1", "L2"});
  m.gram = {{0, 1}, {1, 0}};
  m.hyperplane = {1, 1};
  m.canonical = {-2, -2};
  m.chi0 = 1;
  m.known_genus = {0, 0};
  m.effective = {true, true};
  return std::make_shared<const SurfaceModel>(std::move(m));
}

ModelPtr cubic_model() {
  std::vector<std::string> gens{"l"};
  for (int i = 1; i <= 6; ++i) gens.push_back("E" + std::to_string(i));
  auto m = base_model("cubic_delpezzo", SurfaceKind::cubic_delpezzo, 3, std::move(gens));
  m.gram[0][0] = 1;
  for (std::size_t i = 1; i < 7; ++i) m.gram[i][i] = -1;
  m.hyperplane = {3, -1, -1, -1, -1, -1, -1};
  m.canonical = {-3, 1, 1, 1, 1, 1, 1};
  m.chi0 = 1;
  m.known_genus.assign(7, 0);
  m.effective.assign(7, true);
  return std::make_shared<const SurfaceModel>(std::move(m));
}

}  // namespace

std::string to_string(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::fermat: return "fermat";
    case SurfaceKind::quadric: return "quadric";
    case SurfaceKind::cubic_delpezzo: return "cubic_delpezzo";
    case SurfaceKind::generic: return "generic";
    case SurfaceKind::custom: return "custom";
  }
  return "?";
}

std::optional<std::size_t> SurfaceModel::generator_index(std::string_view n) const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i] == n) return i;
  }
  return std::nullopt;
}

const AtlasLine* SurfaceModel::atlas_line(std::size_t generator) const {
  for (const auto& l : lines) {
    if (l.generator == generator) return &l;
  }
  return nullptr;
}

std::int64_t bilinear(const IntMatrix& gram, const IntVector& a, const IntVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) s += a[i] * dot_row(gram, i, b);
  }
  return s;
}

std::int64_t hypersurface_chi0(int degree) {
  std::int64_t d = degree - 1;
  return 1 + d * (d - 1) * (d - 2) / 6;
}

ModelPtr fermat_model(int degree) {
  if (degree != 4 && degree != 5) {
    throw DomainError("fermat_model supports degree 4 or 5, got " + std::to_string(degree));
  }
  std::vector<AtlasLine> atlas;
  for (int p = 0; p < 3; ++p) {
    const auto& q = kPairings[p];
    for (int a = 0; a < degree; ++a) {
      for (int b = 0; b < degree; ++b) {
        Line line = Line::from_forms(binomial_form(q[0], q[1], fermat_parameter(degree, a)),
                                     binomial_form(q[2], q[3], fermat_parameter(degree, b)));
        std::string name = "L[" + pairing_label(p) + "](" + std::to_string(a) + "," +
                           std::to_string(b) + ")";
        if (!line_on_fermat(line, degree)) {
          throw DomainError("standard line " + name + " is not on the Fermat surface of degree " +
                            std::to_string(degree));
        }
        atlas.push_back({std::move(name), std::move(line), atlas.size() + 1, p, a, b});
      }
    }
  }

  std::vector<std::string> gens{"H"};
  for (const auto& l : atlas) gens.push_back(l.name);
  auto m = base_model("fermat" + std::to_string(degree), SurfaceKind::fermat, degree,
                      std::move(gens));
  const std::size_t n = m.rank();
  m.gram[0][0] = degree;
  m.hyperplane[0] = 1;
  m.canonical[0] = degree - 4;
  m.chi0 = hypersurface_chi0(degree);
  m.known_genus[0] = (degree - 1) * (degree - 2) / 2;
  m.effective.assign(n, true);
  for (std::size_t i = 1; i < n; ++i) {
    m.gram[0][i] = m.gram[i][0] = 1;
    m.gram[i][i] = 2 - degree;
    m.known_genus[i] = 0;
  }
  for (std::size_t i = 0; i < atlas.size(); ++i) {
    for (std::size_t j = i + 1; j < atlas.size(); ++j) {
      Incidence inc = lines_meet(atlas[i].line, atlas[j].line);
      if (inc == Incidence::same) {
        throw DomainError("duplicate standard lines " + atlas[i].name + " and " + atlas[j].name);
      }
      std::int64_t v = inc == Incidence::meet ? 1 : 0;
      m.gram[i + 1][j + 1] = m.gram[j + 1][i + 1] = v;
    }
  }

  for (int p = 0; p < 3; ++p) {
    const auto& q = kPairings[p];
    for (int side = 0; side < 2; ++side) {
      for (int t = 0; t < degree; ++t) {
        PlaneSection plane;
        std::ostringstream name;
        name << "P[" << q[2 * side] << q[2 * side + 1] << "](" << t << ")";
        plane.name = name.str();
        for (const auto& l : atlas) {
          if (l.pairing == p && (side == 0 ? l.first : l.second) == t) {
            plane.generators.push_back(l.generator);
          }
        }
        m.planes.push_back(std::move(plane));
      }
    }
  }
  m.lines = std::move(atlas);
  return std::make_shared<const SurfaceModel>(std::move(m));
}

std::vector<std::string> builtin_model_names() {
  return {"fermat4", "fermat5", "quadric", "cubic_delpezzo", "generic_quartic", "generic_quintic"};
}

ModelPtr builtin_model(std::string_view name) {
  if (name == "quadric") return quadric_model();
  if (name == "cubic_delpezzo" || name == "cubic") return cubic_model();
  if (name == "generic_quartic") return generic_model(4);
  if (name == "generic_quintic") return generic_model(5);
  if (name == "fermat4") return fermat_model(4);
  if (name == "fermat5") return fermat_model(5);
  std::string msg = "unknown model '" + std::string(name) + "'; known models:";
  for (const auto& n : builtin_model_names()) msg += " " + n;
  throw DomainError(msg);
}

ValidationReport model_validate(const SurfaceModel& m) {
  ValidationReport r;
  auto check = [&r](const std::string& name, bool ok) {
    r.checks.push_back(name);
    if (!ok) r.violations.push_back(name);
    return ok;
  };
  const std::size_t n = m.rank();

  bool shape_ok = check("shape: gram is " + std::to_string(n) + "x" + std::to_string(n),
                        m.gram.size() == n && std::all_of(m.gram.begin(), m.gram.end(),
                                                          [n](const IntVector& row) {
                                                            return row.size() == n;
                                                          }));
  shape_ok &= check("shape: hyperplane and canonical have one entry per generator",
                    m.hyperplane.size() == n && m.canonical.size() == n);
  shape_ok &= check("shape: generator metadata sized", m.known_genus.size() == n &&
                                                           m.effective.size() == n);
  if (!shape_ok) return r;

  bool symmetric = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) symmetric &= m.gram[i][j] == m.gram[j][i];
  }
  check("gram symmetric", symmetric);

  const std::int64_t hh = bilinear(m.gram, m.hyperplane, m.hyperplane);
  check("hyperplane class is ample-like (H^2 > 0)", hh > 0);

  if (m.degree > 0) {
    check("H^2 = " + std::to_string(m.degree), hh == m.degree);
    bool canonical_ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      IntVector e = unit(n, i);
      canonical_ok &= bilinear(m.gram, m.canonical, e) ==
                      (m.degree - 4) * bilinear(m.gram, m.hyperplane, e);
    }
    check("K = (" + std::to_string(m.degree) + "-4)H numerically", canonical_ok);
    check("chi(O_X) = " + std::to_string(hypersurface_chi0(m.degree)),
          m.chi0 == hypersurface_chi0(m.degree));
  }

  // D.(D+K) is even for every class iff it is even on a basis.
  std::string odd, wrong_genus;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e = unit(n, i);
    std::int64_t v = m.gram[i][i] + bilinear(m.gram, e, m.canonical);
    if (v % 2 != 0) odd += " " + m.generators[i];
    if (m.known_genus[i] && v != 2 * *m.known_genus[i] - 2) wrong_genus += " " + m.generators[i];
  }
  check(odd.empty() ? std::string("adjunction parity D.(D+K) even")
                    : "adjunction parity fails on" + odd,
        odd.empty());
  check(wrong_genus.empty() ? std::string("adjunction matches known generator genera")
                            : "adjunction contradicts known genus of" + wrong_genus,
        wrong_genus.empty());

  // Hodge index on generators, their pairwise sums with H, and a fixed
  // pseudo-random sample of small classes.
  std::vector<IntVector> sample;
  sample.push_back(m.hyperplane);
  for (std::size_t i = 0; i < n; ++i) sample.push_back(unit(n, i));
  std::mt19937_64 rng(0x48'6f'64'67'65);
  std::uniform_int_distribution<int> coef(-2, 3);
  for (int s = 0; s < 48; ++s) {
    IntVector v(n, 0);
    for (auto& c : v) c = coef(rng);
    sample.push_back(std::move(v));
  }
  std::vector<IntVector> images;
  std::vector<std::int64_t> squares;
  for (const auto& v : sample) {
    IntVector g(n, 0);
    for (std::size_t i = 0; i < n; ++i) g[i] = dot_row(m.gram, i, v);
    std::int64_t sq = 0;
    for (std::size_t i = 0; i < n; ++i) sq += v[i] * g[i];
    images.push_back(std::move(g));
    squares.push_back(sq);
  }
  std::size_t hodge_failures = 0;
  std::string first_failure;
  for (std::size_t a = 0; a < sample.size(); ++a) {
    if (squares[a] <= 0) continue;
    for (std::size_t b = a + 1; b < sample.size(); ++b) {
      if (squares[b] <= 0) continue;
      std::int64_t ab = 0;
      for (std::size_t i = 0; i < n; ++i) ab += sample[a][i] * images[b][i];
      if (squares[a] * squares[b] > ab * ab) {
        if (hodge_failures++ == 0) {
          first_failure = std::to_string(squares[a]) + "*" + std::to_string(squares[b]) + " > " +
                          std::to_string(ab) + "^2";
        }
      }
    }
  }
  check(hodge_failures == 0
            ? std::string("Hodge index on sampled positive pairs")
            : "Hodge index violated on " + std::to_string(hodge_failures) +
                  " sampled pairs, e.g. " + first_failure,
        hodge_failures == 0);
  return r;
}

ModelPtr make_custom_model(SurfaceModel model) {
  if (model.known_genus.size() != model.rank()) model.known_genus.assign(model.rank(), std::nullopt);
  if (model.effective.size() != model.rank()) model.effective.assign(model.rank(), false);
  auto report = model_validate(model);
  if (!report.ok()) {
    std::string msg = "model '" + model.name + "' failed validation:";
    for (const auto& v : report.violations) msg += "\n  " + v;
    throw DomainError(msg);
  }
  return std::make_shared<const SurfaceModel>(std::move(model));
}

ModelPtr model_from_json_text(std::string_view text) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("model file is not valid JSON: ") + e.what());
  }
  SurfaceModel m;
  try {
    m.name = j.at("name").get<std::string>();
    std::string kind = j.value("kind", "custom");
    if (kind != "custom") throw ParseError("model file kind must be \"custom\", got " + kind);
    m.kind = SurfaceKind::custom;
    m.chi0 = j.at("chi0").get<std::int64_t>();
    m.generators = j.at("generators").get<std::vector<std::string>>();
    m.gram = j.at("gram").get<IntMatrix>();
    m.hyperplane = j.at("hyperplane").get<IntVector>();
    m.canonical = j.at("canonical").get<IntVector>();
    m.degree = j.value("degree", 0);
    m.known_genus.assign(m.rank(), std::nullopt);
    m.effective.assign(m.rank(), false);
    if (j.contains("effective")) {
      for (const auto& g : j["effective"].get<std::vector<std::string>>()) {
        auto idx = m.generator_index(g);
        if (!idx) throw ParseError("effective generator '" + g + "' is not declared");
        m.effective[*idx] = true;
      }
    }
    if (j.contains("genus")) {
      for (const auto& [g, v] : j["genus"].items()) {
        auto idx = m.generator_index(g);
        if (!idx) throw ParseError("genus given for undeclared generator '" + g + "'");
        m.known_genus[*idx] = v.get<std::int64_t>();
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("model file: ") + e.what());
  }
  return make_custom_model(std::move(m));
}

std::string model_to_json_text(const SurfaceModel& m) {
  nlohmann::ordered_json j;
  j["name"] = m.name;
  j["kind"] = to_string(m.kind);
  if (m.degree > 0) j["degree"] = m.degree;
  j["chi0"] = m.chi0;
  j["generators"] = m.generators;
  j["gram"] = m.gram;
  j["hyperplane"] = m.hyperplane;
  j["canonical"] = m.canonical;
  std::vector<std::string> eff;
  nlohmann::ordered_json genus = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < m.rank(); ++i) {
    if (m.effective[i]) eff.push_back(m.generators[i]);
    if (m.known_genus[i]) genus[m.generators[i]] = *m.known_genus[i];
  }
  j["effective"] = eff;
  j["genus"] = genus;
  return j.dump(2);
}

std::string model_show(const SurfaceModel& m) {
  std::ostringstream out;
  out << "model " << m.name << " kind=" << to_string(m.kind);
  if (m.degree > 0) out << " degree=" << m.degree;
  out << " chi0=" << m.chi0 << " rank=" << m.rank() << "\n";
  out << "generators:";
  for (const auto& g : m.generators) out << " " << g;
  out << "\n";
  auto vec = [&out](const char* label, const IntVector& v) {
    out << label << ":";
    for (auto c : v) out << " " << c;
    out << "\n";
  };
  vec("hyperplane", m.hyperplane);
  vec("canonical", m.canonical);
  out << "gram:\n";
  for (std::size_t i = 0; i < m.rank(); ++i) {
    out << "  " << m.generators[i] << ":";
    for (auto c : m.gram[i]) out << " " << c;
    out << "\n";
  }
  return out.str();
}

}  // namespace acm

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "acm/divcalc.hpp"
#include "acm/error.hpp"
#include "acm/surfaces.hpp"

using namespace acm;

TEST_CASE("Fermat atlases have 3d^2 distinct lines on the surface") {
  for (int d : {4, 5}) {
    ModelPtr m = fermat_model(d);
    CHECK(m->lines.size() == static_cast<std::size_t>(3 * d * d));
    CHECK(m->rank() == m->lines.size() + 1);
    std::set<std::string> names;
    for (const auto& l : m->lines) {
      CHECK(line_on_fermat(l.line, d));
      names.insert(l.name);
    }
    CHECK(names.size() == m->lines.size());
    CHECK(model_validate(*m).ok());
  }
  CHECK_THROWS_AS(fermat_model(3), DomainError);
}

TEST_CASE("re-enumeration is deterministic") {
  ModelPtr a = fermat_model(5);
  ModelPtr b = fermat_model(5);
  CHECK(a->generators == b->generators);
  CHECK(a->gram == b->gram);
}

TEST_CASE("Gram entries of the Fermat quintic") {
  ModelPtr m = fermat_model(5);
  const auto& g = m->gram;
  CHECK(g[0][0] == 5);
  for (std::size_t i = 1; i < m->rank(); ++i) {
    CHECK(g[0][i] == 1);
    CHECK(g[i][i] == -3);
    for (std::size_t j = 0; j < m->rank(); ++j) CHECK(g[i][j] == g[j][i]);
  }
  auto l1 = *m->generator_index("L[01|23](0,0)");
  auto l2 = *m->generator_index("L[02|13](0,1)");
  CHECK(g[l1][l2] == 0);
}

TEST_CASE("every plane section sums to H numerically") {
  for (int d : {4, 5}) {
    ModelPtr m = fermat_model(d);
    CHECK(m->planes.size() == static_cast<std::size_t>(6 * d));
    for (const auto& p : m->planes) {
      CHECK(p.generators.size() == static_cast<std::size_t>(d));
      DivClass sum = DivClass::zero(m);
      for (auto g : p.generators) sum += DivClass::generator(m, g);
      CHECK(numerically_equal(sum, DivClass::hyperplane(m)));
      // lines of one plane meet pairwise
      for (auto a : p.generators) {
        for (auto b : p.generators) {
          if (a != b) CHECK(m->gram[a][b] == 1);
        }
      }
    }
  }
}

TEST_CASE("builtin models validate") {
  for (const auto& name : builtin_model_names()) {
    INFO(name);
    CHECK(model_validate(*builtin_model(name)).ok());
  }
  ModelPtr q = builtin_model("quadric");
  CHECK(q->gram == IntMatrix{{0, 1}, {1, 0}});
  ModelPtr c = builtin_model("cubic");
  CHECK(c->rank() == 7);
  CHECK(bilinear(c->gram, c->hyperplane, c->hyperplane) == 3);
  CHECK_THROWS_AS(builtin_model("sextic"), DomainError);
}

TEST_CASE("chi(O_X) of hypersurfaces") {
  CHECK(hypersurface_chi0(1) == 1);
  CHECK(hypersurface_chi0(2) == 1);
  CHECK(hypersurface_chi0(3) == 1);
  CHECK(hypersurface_chi0(4) == 2);
  CHECK(hypersurface_chi0(5) == 5);
}

namespace {

SurfaceModel tiny_quintic() {
  SurfaceModel s;
  s.name = "tiny";
  s.degree = 5;
  s.generators = {"H", "Dt"};
  s.gram = {{5, 5}, {5, -5}};
  s.hyperplane = {1, 0};
  s.canonical = {1, 0};
  s.chi0 = 5;
  return s;
}

}  // namespace

TEST_CASE("custom models are validated") {
  CHECK_NOTHROW(make_custom_model(tiny_quintic()));

  auto asym = tiny_quintic();
  asym.gram[0][1] = 4;
  CHECK_THROWS_AS(make_custom_model(asym), DomainError);

  auto parity = tiny_quintic();
  parity.gram[1][1] = -4;  // Dt.(Dt+K) odd
  CHECK_THROWS_AS(make_custom_model(parity), DomainError);

  auto chi = tiny_quintic();
  chi.chi0 = 4;
  CHECK_THROWS_AS(make_custom_model(chi), DomainError);

  auto hodge = tiny_quintic();
  hodge.degree = 0;
  hodge.gram = {{5, 0}, {0, 3}};  // two positive directions
  hodge.canonical = {0, 0};
  CHECK_THROWS_AS(make_custom_model(hodge), DomainError);
}

TEST_CASE("JSON round trip and errors") {
  ModelPtr m = make_custom_model(tiny_quintic());
  ModelPtr back = model_from_json_text(model_to_json_text(*m));
  CHECK(back->generators == m->generators);
  CHECK(back->gram == m->gram);
  CHECK(back->chi0 == 5);
  CHECK(back->degree == 5);

  const char* doc = R"({"name":"q","kind":"custom","chi0":1,"generators":["A","B"],
    "gram":[[0,1],[1,0]],"hyperplane":[1,1],"canonical":[-2,-2],"effective":["A"],
    "genus":{"A":0}})";
  ModelPtr q = model_from_json_text(doc);
  CHECK(q->effective[0]);
  CHECK_FALSE(q->effective[1]);
  CHECK(q->known_genus[0] == 0);

  CHECK_THROWS_AS(model_from_json_text("{"), ParseError);
  CHECK_THROWS_AS(model_from_json_text(R"({"name":"x"})"), ParseError);
  CHECK_THROWS_AS(model_from_json_text(R"({"name":"q","kind":"fermat","chi0":1,
    "generators":["A"],"gram":[[1]],"hyperplane":[1],"canonical":[-3]})"),
                  ParseError);
}

TEST_CASE("model show lists generators and Gram rows in order") {
  std::string s = model_show(*builtin_model("quadric"));
  CHECK(s.find("generators: L1 L2") != std::string::npos);
  CHECK(s.find("  L1: 0 1\n  L2: 1 0\n") != std::string::npos);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <complex>
#include <random>

#include "acm/error.hpp"
#include "acm/projgeom.hpp"
#include "acm/surfaces.hpp"

using namespace acm;

namespace {

using C = std::complex<double>;

C det4(std::array<std::array<C, 4>, 4> m) {
  C det = 1;
  for (int c = 0; c < 4; ++c) {
    int p = c;
    for (int r = c + 1; r < 4; ++r) {
      if (std::abs(m[r][c]) > std::abs(m[p][c])) p = r;
    }
    if (std::abs(m[p][c]) < 1e-12) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < 4; ++r) {
      C f = m[r][c] / m[c][c];
      for (int k = c; k < 4; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

std::array<C, 4> approx(const Point4& p) {
  return {p[0].approx(), p[1].approx(), p[2].approx(), p[3].approx()};
}

// Independent floating-point oracle: two lines meet iff the four spanning
// points are coplanar.
bool meets_numerically(const Line& a, const Line& b) {
  auto pa = a.spanning_points();
  auto pb = b.spanning_points();
  return std::abs(det4({approx(pa[0]), approx(pa[1]), approx(pb[0]), approx(pb[1])})) < 1e-8;
}

// Fermat equation at points s*P + t*Q for random complex (s, t).
bool on_fermat_numerically(const Line& l, int d) {
  auto pts = l.spanning_points();
  auto p = approx(pts[0]);
  auto q = approx(pts[1]);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 5; ++i) {
    C s(u(rng), u(rng)), t(u(rng), u(rng));
    C v = 0;
    for (int k = 0; k < 4; ++k) v += std::pow(s * p[k] + t * q[k], d);
    if (std::abs(v) > 1e-8) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("line canonical form is independent of the chosen forms") {
  Line a = parse_line("line: x0 + x1 ; x2 + x3");
  Line b = parse_line("x0 + x1 + x2 + x3 ; 2*x2 + 2*x3");
  CHECK(a == b);
  CHECK(lines_meet(a, b) == Incidence::same);
  CHECK(a.to_string() == "line: x0 + x1 ; x2 + x3");
  for (const auto& p : a.spanning_points()) {
    for (const auto& f : a.forms()) CHECK(f.evaluate(p).is_zero());
  }
}

TEST_CASE("rank-deficient or malformed input is rejected") {
  CHECK_THROWS_AS(parse_line("x0 + x1 ; 2*x0 + 2*x1"), DomainError);
  CHECK_THROWS_AS(parse_line("x0 + x1"), ParseError);
  CHECK_THROWS_AS(parse_linear_form("x0 + 3"), ParseError);
  CHECK_THROWS_AS(parse_linear_form("x0*x1"), ParseError);
  CHECK_THROWS_AS(parse_linear_form("x4"), ParseError);
  CHECK_THROWS_AS(LinearForm({CycNum(0), CycNum(0), CycNum(0), CycNum(0)}), DomainError);
  CHECK_THROWS_AS(line_on_fermat(parse_line("x0;x1"), 13), DomainError);
}

TEST_CASE("two printed lines on the quintic are skew") {
  Line l1 = parse_line("x0 + x1 ; x2 + x3");
  Line l2 = parse_line("x0 + x2 ; x1 + zeta(5)*x3");
  CHECK(line_on_fermat(l1, 5));
  CHECK(line_on_fermat(l2, 5));
  CHECK(to_string(lines_meet(l1, l2)) == "0 (skew)");
  CHECK(stacked_determinant(l1, l2) == CycNum(-1) + CycNum::root_of_unity(5, 1));
}

TEST_CASE("incidence agrees with a floating-point coplanarity oracle") {
  ModelPtr m = fermat_model(5);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, m->lines.size() - 1);
  int meets = 0;
  for (int i = 0; i < 300; ++i) {
    const auto& a = m->lines[pick(rng)];
    const auto& b = m->lines[pick(rng)];
    if (a.generator == b.generator) continue;
    bool exact = lines_meet(a.line, b.line) == Incidence::meet;
    CHECK(exact == meets_numerically(a.line, b.line));
    meets += exact;
  }
  CHECK(meets > 0);
}

TEST_CASE("membership agrees with numeric evaluation") {
  for (int d : {4, 5}) {
    ModelPtr m = fermat_model(d);
    for (const auto& l : m->lines) CHECK(on_fermat_numerically(l.line, d));
  }
  Line printed = parse_line("x0 + zeta(8)*x2 ; x1 + zeta(8)^2*x3");
  CHECK_FALSE(line_on_fermat(printed, 4));
  CHECK_FALSE(on_fermat_numerically(printed, 4));
  Line off = parse_line("x0 + x1 ; x2 + 2*x3");
  CHECK_FALSE(line_on_fermat(off, 5));
  CHECK_FALSE(on_fermat_numerically(off, 5));
}

TEST_CASE("odd powers of the eighth root in the quartic example") {
  Line g1 = parse_line("x0 + zeta(8)*x1 ; x2 + zeta(8)*x3");
  for (int k : {1, 3, 5, 7}) {
    Line g2 = parse_line("x0 + zeta(8)*x2 ; x1 + zeta(8)^" + std::to_string(k) + "*x3");
    CHECK(line_on_fermat(g2, 4));
    CHECK((lines_meet(g1, g2) == Incidence::meet) == meets_numerically(g1, g2));
  }
  // the exponent-1 variant meets Γ1, the other odd exponents do not
  CHECK(lines_meet(g1, parse_line("x0 + zeta(8)*x2 ; x1 + zeta(8)*x3")) == Incidence::meet);
  CHECK(lines_meet(g1, parse_line("x0 + zeta(8)*x2 ; x1 + zeta(8)^3*x3")) == Incidence::skew);
}

TEST_CASE("determinant by elimination") {
  std::vector<std::vector<CycNum>> m{{2, 1}, {1, 1}};
  CHECK(determinant(m) == CycNum(1));
  std::vector<std::vector<CycNum>> s{{1, 2}, {2, 4}};
  CHECK(determinant(s).is_zero());
  CycNum z = CycNum::root_of_unity(5, 1);
  std::vector<std::vector<CycNum>> v{{1, z}, {z, 1}};
  CHECK(determinant(v) == CycNum(1) - z * z);
}

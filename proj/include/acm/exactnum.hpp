#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace acm {

using Rational = mpq_class;

// Orders above this are rejected; the examples need 5, 8, 10, 20 and 40
// covers their pairwise lcms.
inline constexpr int kMaxCyclotomicOrder = 40;

int euler_phi(int n);

// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<std::int64_t>& cyclotomic_polynomial(int n);

/// An element of the cyclotomic field Q(zeta_n), stored as the unique
/// residue of degree < phi(n) modulo Phi_n. Immutable value type.
///
/// Operands of different orders are lifted to Q(zeta_lcm) before combining,
/// so the order of a result is the lcm of the operand orders.
class CycNum {
 public:
  CycNum();  // zero of Q
  CycNum(long value);  // NOLINT(implicit): integers are field elements
  explicit CycNum(const Rational& value);

  // zeta_n^k; k is reduced modulo n.
  static CycNum root_of_unity(int n, long k);
  // Reduces an arbitrary polynomial in zeta_n into canonical form.
  static CycNum from_poly(int n, std::vector<Rational> poly);

  int order() const { return order_; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;

  // Same element viewed in Q(zeta_m); m must be a multiple of order().
  CycNum lifted(int m) const;

  CycNum operator-() const;
  CycNum inverse() const;
  CycNum pow(unsigned exponent) const;

  friend CycNum operator+(const CycNum& a, const CycNum& b);
  friend CycNum operator-(const CycNum& a, const CycNum& b);
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(const CycNum& a, const CycNum& b);
  CycNum& operator+=(const CycNum& b) { return *this = *this + b; }
  CycNum& operator-=(const CycNum& b) { return *this = *this - b; }
  CycNum& operator*=(const CycNum& b) { return *this = *this * b; }
  CycNum& operator/=(const CycNum& b) { return *this = *this / b; }

  friend bool operator==(const CycNum& a, const CycNum& b);

  // "c0 + c1*z + c2*z^2 (z=zeta(n))"; plain rational when order is 1.
  std::string to_string() const;
  // Same value in the input syntax accepted by parse_cycnum.
  std::string to_expr() const;

  // Debug rendering only; never used for a decision.
  std::complex<double> approx() const;

 private:
  CycNum(int order, std::vector<Rational> coeffs);

  int order_ = 1;
  std::vector<Rational> coeffs_;
};

enum class ArithOp { add, sub, mul, div };

CycNum cyc_make(int n, long k);
CycNum cyc_arith(const CycNum& a, const CycNum& b, ArithOp op);
bool cyc_is_zero(const CycNum& a);

int common_order(int a, int b);

// Parses a coefficient expression: rationals ("3", "-2/5"), roots of unity
// "zeta(n)" or "zeta(n)^k", sums, differences, products and parentheses.
CycNum parse_cycnum(std::string_view text);

}  // namespace acm

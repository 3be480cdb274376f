#include "acm/exactnum.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <utility>

#include "acm/error.hpp"

namespace acm {

namespace {

using Poly = std::vector<Rational>;

void check_order(int n) {
  if (n < 1 || n > kMaxCyclotomicOrder) {
    throw DomainError("cyclotomic order " + std::to_string(n) +
                      " outside supported range 1.." +
                      std::to_string(kMaxCyclotomicOrder));
  }
}

struct CyclotomicTables {
  // phi[n], poly[n] (Phi_n, low first), powers[n][j] = x^j mod Phi_n for j < n
  std::array<int, kMaxCyclotomicOrder + 1> phi{};
  std::array<std::vector<std::int64_t>, kMaxCyclotomicOrder + 1> poly;
  std::array<std::vector<std::vector<std::int64_t>>, kMaxCyclotomicOrder + 1> powers;

  CyclotomicTables() {
    for (int n = 1; n <= kMaxCyclotomicOrder; ++n) {
      // x^n - 1 divided by Phi_d for every proper divisor d of n.
      std::vector<std::int64_t> num(n + 1, 0);
      num[0] = -1;
      num[n] = 1;
      for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = exact_divide(num, poly[d]);
      }
      poly[n] = num;
      phi[n] = static_cast<int>(num.size()) - 1;

      const int deg = phi[n];
      auto& pw = powers[n];
      pw.assign(n, std::vector<std::int64_t>(deg, 0));
      std::vector<std::int64_t> cur(deg, 0);
      if (deg > 0) cur[0] = 1;
      for (int j = 0; j < n; ++j) {
        pw[j] = cur;
        // multiply by x and reduce with the monic Phi_n
        std::int64_t top = cur[deg - 1];
        for (int i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        for (int i = 0; i < deg; ++i) cur[i] -= top * poly[n][i];
      }
    }
  }

  static std::vector<std::int64_t> exact_divide(std::vector<std::int64_t> num,
                                                const std::vector<std::int64_t>& den) {
    // den is monic
    const int dn = static_cast<int>(num.size()) - 1;
    const int dd = static_cast<int>(den.size()) - 1;
    std::vector<std::int64_t> q(dn - dd + 1, 0);
    for (int i = dn; i >= dd; --i) {
      std::int64_t c = num[i];
      q[i - dd] = c;
      if (c == 0) continue;
      for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    return q;
  }
};

const CyclotomicTables& tables() {
  static const CyclotomicTables t;
  return t;
}

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Remainder and quotient of a by b over Q; b must be nonzero and trimmed.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {Poly{}, a};
  Poly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    if (sgn(a[i]) == 0) continue;
    Rational c = a[i] / b.back();
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  a.resize(db);
  trim(a);
  return {q, a};
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

std::string rational_string(const Rational& q) { return q.get_str(); }

}  // namespace

int euler_phi(int n) {
  check_order(n);
  return tables().phi[n];
}

const std::vector<std::int64_t>& cyclotomic_polynomial(int n) {
  check_order(n);
  return tables().poly[n];
}

int common_order(int a, int b) {
  const int m = std::lcm(a, b);
  check_order(m);
  return m;
}

CycNum::CycNum() : order_(1), coeffs_(1, Rational(0)) {}

CycNum::CycNum(long value) : order_(1), coeffs_(1, Rational(value)) {}

CycNum::CycNum(const Rational& value) : order_(1), coeffs_(1, value) {
  coeffs_[0].canonicalize();
}

CycNum::CycNum(int order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {}

CycNum CycNum::from_poly(int n, std::vector<Rational> poly) {
  check_order(n);
  const auto& t = tables();
  const int deg = t.phi[n];
  std::vector<Rational> out(deg, 0);
  for (std::size_t j = 0; j < poly.size(); ++j) {
    poly[j].canonicalize();  // mpq_class(6, 3) is not reduced on construction
    if (sgn(poly[j]) == 0) continue;
    const auto& red = t.powers[n][j % n];
    for (int i = 0; i < deg; ++i) {
      if (red[i] != 0) out[i] += poly[j] * Rational(static_cast<long>(red[i]));
    }
  }
  return CycNum(n, std::move(out));
}

CycNum CycNum::root_of_unity(int n, long k) {
  check_order(n);
  long e = k % n;
  if (e < 0) e += n;
  std::vector<Rational> poly(e + 1, 0);
  poly[e] = 1;
  return from_poly(n, std::move(poly));
}

bool CycNum::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool CycNum::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return false;
  }
  return true;
}

CycNum CycNum::lifted(int m) const {
  if (m == order_) return *this;
  if (m % order_ != 0) {
    throw DomainError("cannot lift Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                      std::to_string(m) + ")");
  }
  const int step = m / order_;
  std::vector<Rational> poly((coeffs_.size() - 1) * step + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[i * step] = coeffs_[i];
  return from_poly(m, std::move(poly));
}

CycNum CycNum::operator-() const {
  std::vector<Rational> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
  return CycNum(order_, std::move(c));
}

CycNum operator+(const CycNum& a, const CycNum& b) {
  const int m = common_order(a.order_, b.order_);
  CycNum x = a.lifted(m);
  const CycNum y = b.lifted(m);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
  return x;
}

CycNum operator-(const CycNum& a, const CycNum& b) { return a + (-b); }

CycNum operator*(const CycNum& a, const CycNum& b) {
  const int m = common_order(a.order_, b.order_);
  const CycNum x = a.lifted(m);
  const CycNum y = b.lifted(m);
  return CycNum::from_poly(m, poly_mul(x.coeffs_, y.coeffs_));
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw DomainError("division by zero in Q(zeta_" + std::to_string(order_) + ")");
  // Extended Euclid: find s with s*a = 1 mod Phi_n.
  const auto& phi_int = tables().poly[order_];
  Poly r0(phi_int.size());
  for (std::size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rational(static_cast<long>(phi_int[i]));
  Poly r1 = coeffs_;
  trim(r1);
  Poly s0{}, s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, r] = divmod(r0, r1);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a nonzero constant since Phi_n is irreducible.
  Rational c = r1[0];
  for (auto& v : s1) v /= c;
  return from_poly(order_, std::move(s1));
}

CycNum operator/(const CycNum& a, const CycNum& b) {
  const int m = common_order(a.order_, b.order_);
  return a.lifted(m) * b.lifted(m).inverse();
}

CycNum CycNum::pow(unsigned exponent) const {
  CycNum result = CycNum(1).lifted(order_);
  CycNum base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    base = base * base;
    exponent >>= 1U;
  }
  return result;
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  return (a - b).is_zero();
}

std::string CycNum::to_string() const {
  if (is_rational()) return rational_string(coeffs_[0]);
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << rational_string(mag);
      continue;
    }
    if (mag != 1) out << rational_string(mag) << "*";
    out << "z";
    if (i > 1) out << "^" << i;
  }
  out << " (z=zeta(" << order_ << "))";
  return out.str();
}

std::string CycNum::to_expr() const {
  if (is_rational()) return rational_string(coeffs_[0]);
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << rational_string(mag);
      continue;
    }
    if (mag != 1) out << rational_string(mag) << "*";
    out << "zeta(" << order_ << ")";
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

std::complex<double> CycNum::approx() const {
  std::complex<double> z = std::polar(1.0, 2.0 * std::numbers::pi / order_);
  std::complex<double> acc = 0, zp = 1;
  for (const auto& c : coeffs_) {
    acc += c.get_d() * zp;
    zp *= z;
  }
  return acc;
}

CycNum cyc_make(int n, long k) {
  if (n < 1) throw DomainError("cyclotomic order must be positive");
  return CycNum::root_of_unity(n, k);
}

CycNum cyc_arith(const CycNum& a, const CycNum& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw DomainError("unknown arithmetic operation");
}

bool cyc_is_zero(const CycNum& a) { return a.is_zero(); }

namespace {

class CoefficientParser {
 public:
  explicit CoefficientParser(std::string_view text) : text_(text) {}

  CycNum parse() {
    CycNum v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  CycNum expr() {
    CycNum v = term();
    for (;;) {
      skip_ws();
      if (accept('+')) {
        v = v + term();
      } else if (accept('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  CycNum term() {
    CycNum v = unary();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        v = v / unary();
      } else {
        return v;
      }
    }
  }

  CycNum unary() {
    skip_ws();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  CycNum power() {
    CycNum base = primary();
    skip_ws();
    if (!accept('^')) return base;
    skip_ws();
    bool negative = accept('-');
    long e = integer();
    CycNum r = base.pow(static_cast<unsigned>(e));
    return negative ? r.inverse() : r;
  }

  CycNum primary() {
    skip_ws();
    if (accept('(')) {
      CycNum v = expr();
      skip_ws();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (text_.substr(pos_, 4) == "zeta") {
      pos_ += 4;
      skip_ws();
      if (!accept('(')) fail("expected '(' after zeta");
      skip_ws();
      long n = integer();
      skip_ws();
      if (!accept(')')) fail("expected ')' after zeta order");
      if (n < 1 || n > kMaxCyclotomicOrder) fail("zeta order out of range");
      return CycNum::root_of_unity(static_cast<int>(n), 1);
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return CycNum(Rational(std::string(text_.substr(start, pos_ - start))));
    }
    fail("expected a number, zeta(n) or '('");
  }

  long integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 9) fail("expected a small integer");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("coefficient '" + std::string(text_) + "': " + msg + " at offset " +
                     std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

CycNum parse_cycnum(std::string_view text) { return CoefficientParser(text).parse(); }

}  // namespace acm

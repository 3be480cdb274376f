#include "acm/projgeom.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "acm/error.hpp"

namespace acm {

namespace {

bool all_zero(const Point4& p) {
  for (const auto& c : p) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::string strip(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Splits at '+'/'-' that are not nested in parentheses; keeps the sign with
// the following piece. A sign directly after '^', '*', '/' or '(' belongs to
// the operand and does not split.
std::vector<std::string> split_terms(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  char prev = '\0';
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
      continue;
    }
    if (c == '(') ++depth;
    if (c == ')') --depth;
    bool unary_context = prev == '\0' || prev == '^' || prev == '*' || prev == '/' || prev == '(';
    if ((c == '+' || c == '-') && depth == 0 && !unary_context) {
      if (!strip(cur).empty()) out.push_back(strip(cur));
      cur.clear();
    }
    cur += c;
    prev = c;
  }
  if (!strip(cur).empty()) out.push_back(strip(cur));
  return out;
}

std::vector<std::string> split_factors(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '*' && depth == 0) {
      out.push_back(strip(cur));
      cur.clear();
      continue;
    }
    cur += c;
  }
  out.push_back(strip(cur));
  return out;
}

int variable_index(const std::string& f) {
  if (f.size() == 2 && f[0] == 'x' && f[1] >= '0' && f[1] <= '3') return f[1] - '0';
  return -1;
}

std::string render_coefficient_times(const CycNum& c, const std::string& var, bool first) {
  std::string sign;
  std::string body;
  if (c.is_rational()) {
    Rational q = c.coeffs()[0];
    bool neg = sgn(q) < 0;
    Rational mag = abs(q);
    sign = neg ? (first ? "-" : " - ") : (first ? "" : " + ");
    body = mag == 1 ? var : mag.get_str() + "*" + var;
  } else {
    sign = first ? "" : " + ";
    std::string e = c.to_expr();
    bool single = e.find_first_of("+ ") == std::string::npos && e[0] != '-';
    body = (single ? e : "(" + e + ")") + "*" + var;
  }
  return sign + body;
}

// Reduced row echelon form of a 2x4 matrix; returns pivot columns.
std::array<int, 2> rref(std::array<Point4, 2>& m) {
  int order = 1;
  for (const auto& row : m) {
    for (const auto& c : row) order = common_order(order, c.order());
  }
  for (auto& row : m) {
    for (auto& c : row) c = c.lifted(order);
  }
  std::array<int, 2> pivots{-1, -1};
  int r = 0;
  for (int col = 0; col < 4 && r < 2; ++col) {
    int sel = -1;
    for (int i = r; i < 2; ++i) {
      if (!m[i][col].is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m[r], m[sel]);
    CycNum inv = m[r][col].inverse();
    for (auto& c : m[r]) c = c * inv;
    for (int i = 0; i < 2; ++i) {
      if (i == r || m[i][col].is_zero()) continue;
      CycNum f = m[i][col];
      for (int j = 0; j < 4; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivots[r] = col;
    ++r;
  }
  if (r < 2) throw DomainError("linear forms are dependent (rank < 2)");
  return pivots;
}

std::vector<Rational> binomial_row(int d) {
  std::vector<Rational> row(d + 1, 1);
  for (int j = 1; j < d; ++j) {
    Rational v = 1;
    for (int i = 0; i < j; ++i) v = v * (d - i) / (i + 1);
    row[j] = v;
  }
  return row;
}

}  // namespace

LinearForm::LinearForm(Point4 coeffs) : coeffs_(std::move(coeffs)) {
  if (all_zero(coeffs_)) throw DomainError("linear form with all coefficients zero");
}

CycNum LinearForm::evaluate(const Point4& p) const {
  CycNum acc;
  for (int i = 0; i < 4; ++i) acc += coeffs_[i] * p[i];
  return acc;
}

std::string LinearForm::to_string() const {
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (coeffs_[i].is_zero()) continue;
    out += render_coefficient_times(coeffs_[i], "x" + std::to_string(i), out.empty());
  }
  return out;
}

LinearForm parse_linear_form(std::string_view text) {
  Point4 coeffs;
  auto terms = split_terms(text);
  if (terms.empty()) throw ParseError("empty linear form");
  for (const auto& raw : terms) {
    std::string term = raw;
    bool negative = false;
    if (term[0] == '+' || term[0] == '-') {
      negative = term[0] == '-';
      term = strip(std::string_view(term).substr(1));
    }
    int var = -1;
    std::string coef_text;
    for (const auto& f : split_factors(term)) {
      int v = variable_index(f);
      if (v >= 0) {
        if (var >= 0) throw ParseError("term '" + raw + "' is not linear");
        var = v;
        continue;
      }
      if (f.empty()) throw ParseError("empty factor in '" + raw + "'");
      coef_text += coef_text.empty() ? "(" + f + ")" : "*(" + f + ")";
    }
    if (var < 0) throw ParseError("term '" + raw + "' has no variable x0..x3");
    CycNum c = coef_text.empty() ? CycNum(1) : parse_cycnum(coef_text);
    coeffs[var] += negative ? -c : c;
  }
  return LinearForm(std::move(coeffs));
}

Line Line::from_forms(const LinearForm& f1, const LinearForm& f2) {
  std::array<Point4, 2> m{f1.coeffs(), f2.coeffs()};
  auto pivots = rref(m);
  return Line({f1, f2}, std::move(m), pivots);
}

std::array<Point4, 2> Line::spanning_points() const {
  std::array<int, 2> free{};
  int k = 0;
  for (int c = 0; c < 4; ++c) {
    if (c != pivots_[0] && c != pivots_[1]) free[k++] = c;
  }
  const int order = canonical_[0][0].order();
  std::array<Point4, 2> pts;
  for (int t = 0; t < 2; ++t) {
    Point4 p;
    for (auto& c : p) c = CycNum(0).lifted(order);
    p[free[t]] = CycNum(1).lifted(order);
    for (int r = 0; r < 2; ++r) p[pivots_[r]] = -canonical_[r][free[t]];
    pts[t] = std::move(p);
  }
  return pts;
}

std::string Line::to_string() const {
  return "line: " + forms_[0].to_string() + " ; " + forms_[1].to_string();
}

bool operator==(const Line& a, const Line& b) {
  if (a.pivots_ != b.pivots_) return false;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (!(a.canonical_[r][c] == b.canonical_[r][c])) return false;
    }
  }
  return true;
}

Line parse_line(std::string_view text) {
  std::string s = strip(text);
  if (s.rfind("line:", 0) == 0) s = strip(std::string_view(s).substr(5));
  auto semi = s.find(';');
  if (semi == std::string::npos || s.find(';', semi + 1) != std::string::npos) {
    throw ParseError("line literal needs exactly two forms separated by ';'");
  }
  return Line::from_forms(parse_linear_form(std::string_view(s).substr(0, semi)),
                          parse_linear_form(std::string_view(s).substr(semi + 1)));
}

Line line_from_forms(const LinearForm& f1, const LinearForm& f2) {
  return Line::from_forms(f1, f2);
}

std::string to_string(Incidence i) {
  switch (i) {
    case Incidence::skew: return "0 (skew)";
    case Incidence::meet: return "1 (meet)";
    case Incidence::same: return "SAME";
  }
  return "?";
}

CycNum determinant(std::vector<std::vector<CycNum>> m) {
  const std::size_t n = m.size();
  CycNum det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = n;
    for (std::size_t i = col; i < n; ++i) {
      if (!m[i][col].is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel == n) return CycNum(0);
    if (sel != col) {
      std::swap(m[sel], m[col]);
      det = -det;
    }
    det = det * m[col][col];
    CycNum inv = m[col][col].inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m[i][col].is_zero()) continue;
      CycNum f = m[i][col] * inv;
      for (std::size_t j = col; j < n; ++j) m[i][j] = m[i][j] - f * m[col][j];
    }
  }
  return det;
}

CycNum stacked_determinant(const Line& a, const Line& b) {
  std::vector<std::vector<CycNum>> m;
  for (const auto* l : {&a, &b}) {
    for (const auto& row : l->canonical()) m.emplace_back(row.begin(), row.end());
  }
  return determinant(std::move(m));
}

Incidence lines_meet(const Line& a, const Line& b) {
  if (a == b) return Incidence::same;
  return stacked_determinant(a, b).is_zero() ? Incidence::meet : Incidence::skew;
}

bool line_on_fermat(const Line& line, int degree) {
  if (degree < 2 || degree > kMaxFermatDegree) {
    throw DomainError("Fermat degree must lie in 2.." + std::to_string(kMaxFermatDegree));
  }
  // sum_i (s p_i + t q_i)^d = sum_j C(d,j) s^j t^(d-j) sum_i p_i^j q_i^(d-j)
  auto [p, q] = line.spanning_points();
  const auto binom = binomial_row(degree);
  for (int j = 0; j <= degree; ++j) {
    CycNum coeff;
    for (int i = 0; i < 4; ++i) {
      coeff += p[i].pow(static_cast<unsigned>(j)) * q[i].pow(static_cast<unsigned>(degree - j));
    }
    if (!(coeff * CycNum(binom[j])).is_zero()) return false;
  }
  return true;
}

}  // namespace acm

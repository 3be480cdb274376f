#include "acm/divcalc.hpp"

#include <cctype>
#include <sstream>

#include "acm/error.hpp"

namespace acm {

DivClass::DivClass(ModelPtr model, IntVector coeffs)
    : model_(std::move(model)), coeffs_(std::move(coeffs)) {
  if (!model_) throw DomainError("divisor class without a model");
  if (coeffs_.size() != model_->rank()) {
    throw DomainError("divisor class has " + std::to_string(coeffs_.size()) +
                      " coefficients, model '" + model_->name + "' has " +
                      std::to_string(model_->rank()) + " generators");
  }
}

DivClass DivClass::zero(ModelPtr model) {
  const auto n = model->rank();
  return DivClass(std::move(model), IntVector(n, 0));
}

DivClass DivClass::generator(ModelPtr model, std::size_t index) {
  if (index >= model->rank()) throw DomainError("generator index out of range");
  IntVector v(model->rank(), 0);
  v[index] = 1;
  return DivClass(std::move(model), std::move(v));
}

DivClass DivClass::generator(ModelPtr model, std::string_view name) {
  auto idx = model->generator_index(name);
  if (!idx) throw DomainError("unknown generator '" + std::string(name) + "'");
  return generator(std::move(model), *idx);
}

DivClass DivClass::hyperplane(ModelPtr model) {
  IntVector v = model->hyperplane;
  return DivClass(std::move(model), std::move(v));
}

DivClass DivClass::canonical(ModelPtr model) {
  IntVector v = model->canonical;
  return DivClass(std::move(model), std::move(v));
}

bool DivClass::is_zero() const {
  for (auto c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

void require_same_model(const DivClass& a, const DivClass& b) {
  if (a.model_ptr() != b.model_ptr()) {
    throw DomainError("classes belong to different models ('" + a.model().name + "' vs '" +
                      b.model().name + "')");
  }
}

DivClass DivClass::operator-() const { return -1 * *this; }

DivClass operator+(const DivClass& a, const DivClass& b) {
  require_same_model(a, b);
  IntVector v = a.coeffs_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.coeffs_[i];
  return DivClass(a.model_, std::move(v));
}

DivClass operator-(const DivClass& a, const DivClass& b) { return a + (-1 * b); }

DivClass operator*(std::int64_t k, const DivClass& a) {
  IntVector v = a.coeffs_;
  for (auto& c : v) c *= k;
  return DivClass(a.model_, std::move(v));
}

bool operator==(const DivClass& a, const DivClass& b) {
  return a.model_ == b.model_ && a.coeffs_ == b.coeffs_;
}

std::string DivClass::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto c = coeffs_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const auto mag = c < 0 ? -c : c;
    if (mag != 1) out << mag << "*";
    out << model_->generators[i];
  }
  return first ? "0" : out.str();
}

std::int64_t pair(const DivClass& a, const DivClass& b) {
  require_same_model(a, b);
  return bilinear(a.model().gram, a.coeffs(), b.coeffs());
}

std::int64_t self_intersection(const DivClass& d) { return pair(d, d); }

std::int64_t degree(const DivClass& d) { return pair(DivClass::hyperplane(d.model_ptr()), d); }

IntVector numerical_image(const DivClass& d) {
  const auto& g = d.model().gram;
  IntVector out(d.model().rank(), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < out.size(); ++j) out[i] += g[i][j] * d.coeffs()[j];
  }
  return out;
}

bool numerically_equal(const DivClass& a, const DivClass& b) {
  require_same_model(a, b);
  return numerical_image(a - b) == IntVector(a.model().rank(), 0);
}

std::int64_t genus(const DivClass& d) {
  const std::int64_t v = pair(d, d + DivClass::canonical(d.model_ptr()));
  if (v % 2 != 0) {
    throw DomainError("D.(D+K) = " + std::to_string(v) + " is odd for " + d.to_string() +
                      "; no curve has this class");
  }
  return 1 + v / 2;
}

std::int64_t chi(const DivClass& d) {
  const std::int64_t v = pair(d, d - DivClass::canonical(d.model_ptr()));
  if (v % 2 != 0) {
    throw DomainError("D.(D-K) = " + std::to_string(v) + " is odd for " + d.to_string());
  }
  return d.model().chi0 + v / 2;
}

std::int64_t k_invariant(const DivClass& d) { return degree(d) + 1 - genus(d); }

DivClass link(const DivClass& d, std::int64_t m) {
  return m * DivClass::hyperplane(d.model_ptr()) - d;
}

namespace {

std::string valid_generators(const SurfaceModel& m) {
  std::string s;
  for (const auto& g : m.generators) s += (s.empty() ? "" : ", ") + g;
  return s;
}

}  // namespace

DivClass parse_divisor(const ModelPtr& model, std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw ParseError("empty divisor expression");

  // Split at top-level signs; generator names may contain brackets and
  // parenthesised parameters.
  std::vector<std::pair<int, std::string>> terms;
  int depth = 0;
  int sign = 1;
  std::string cur;
  auto flush = [&](std::size_t at) {
    if (cur.empty()) throw ParseError("missing term at offset " + std::to_string(at) + " in '" +
                                      std::string(text) + "'");
    terms.emplace_back(sign, cur);
    cur.clear();
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth == 0 && (c == '+' || c == '-')) {
      if (i == 0) {
        sign = c == '-' ? -1 : 1;
        continue;
      }
      flush(i);
      sign = c == '-' ? -1 : 1;
      continue;
    }
    cur += c;
  }
  flush(s.size());

  DivClass total = DivClass::zero(model);
  for (const auto& [sg, term] : terms) {
    std::int64_t coef = 1;
    std::string name = term;
    std::size_t digits = 0;
    while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits]))) {
      ++digits;
    }
    if (digits == term.size()) {
      if (std::stoll(term) != 0) {
        throw ParseError("bare integer '" + term + "' is not a divisor class");
      }
      continue;
    }
    if (digits > 0) {
      if (term[digits] != '*') {
        throw ParseError("expected '*' after coefficient in '" + term + "'");
      }
      coef = std::stoll(term.substr(0, digits));
      name = term.substr(digits + 1);
    }
    auto idx = model->generator_index(name);
    if (!idx) {
      throw ParseError("unknown generator '" + name + "' for model '" + model->name +
                       "'; valid generators: " + valid_generators(*model));
    }
    total += (sg * coef) * DivClass::generator(model, *idx);
  }
  return total;
}

DivClass Decomposition::total() const {
  if (parts.empty()) throw DomainError("empty decomposition");
  DivClass t = DivClass::zero(parts.front().cls.model_ptr());
  for (const auto& p : parts) t += p.multiplicity * p.cls;
  return t;
}

int Decomposition::count() const {
  int n = 0;
  for (const auto& p : parts) n += p.multiplicity;
  return n;
}

std::string Decomposition::to_string() const {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += " | ";
    if (!p.label.empty()) s += p.label + "=";
    if (p.multiplicity != 1) s += std::to_string(p.multiplicity) + "*";
    s += "(" + p.cls.to_string() + ")";
  }
  return s;
}

std::int64_t genus_of_sum(const Decomposition& d) {
  if (d.parts.empty()) throw DomainError("empty decomposition");
  std::int64_t total = 0;
  std::int64_t copies = 0;
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    const auto& p = d.parts[i];
    if (p.multiplicity < 1) throw DomainError("multiplicity must be positive");
    const std::int64_t m = p.multiplicity;
    const std::int64_t g = p.genus ? *p.genus : genus(p.cls);
    total += m * g + m * (m - 1) / 2 * self_intersection(p.cls);
    for (std::size_t j = i + 1; j < d.parts.size(); ++j) {
      total += m * d.parts[j].multiplicity * pair(p.cls, d.parts[j].cls);
    }
    copies += m;
  }
  return total - (copies - 1);
}

std::pair<Decomposition, Decomposition> Connectedness::halves(const Decomposition& parts) const {
  Decomposition a, b;
  for (std::size_t i = 0; i < split.size(); ++i) {
    const auto& p = parts.parts[i];
    if (split[i] > 0) a.parts.push_back({p.cls, split[i], p.label, p.genus});
    if (p.multiplicity - split[i] > 0) {
      b.parts.push_back({p.cls, p.multiplicity - split[i], p.label, p.genus});
    }
  }
  return {a, b};
}

Connectedness is_m_connected(const Decomposition& d, std::int64_t m) {
  if (d.parts.empty()) throw DomainError("empty decomposition");
  if (d.count() > kMaxConnectednessParts) {
    throw DomainError("decomposition has " + std::to_string(d.count()) +
                      " parts; the split enumeration is capped at " +
                      std::to_string(kMaxConnectednessParts));
  }
  const std::size_t n = d.parts.size();
  std::vector<std::vector<std::int64_t>> prod(n, std::vector<std::int64_t>(n));
  std::vector<int> mult(n);
  for (std::size_t i = 0; i < n; ++i) {
    mult[i] = d.parts[i].multiplicity;
    if (mult[i] < 1) throw DomainError("multiplicity must be positive");
    for (std::size_t j = 0; j < n; ++j) prod[i][j] = pair(d.parts[i].cls, d.parts[j].cls);
  }

  Connectedness result;
  std::vector<int> c(n, 0);
  for (;;) {
    // advance the mixed-radix counter
    std::size_t pos = 0;
    while (pos < n && c[pos] == mult[pos]) c[pos++] = 0;
    if (pos == n) break;
    ++c[pos];
    bool full = true;
    for (std::size_t i = 0; i < n; ++i) full &= c[i] == mult[i];
    if (full) continue;

    std::int64_t v = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (c[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) v += c[i] * (mult[j] - c[j]) * prod[i][j];
    }
    if (!result.min_product || v < *result.min_product) {
      result.min_product = v;
      result.split = c;
    }
  }
  result.connected = !result.min_product || *result.min_product >= m;
  return result;
}

CurveNumbers hvector_invariants(const HVector& h) {
  CurveNumbers r{0, 0};
  for (std::size_t l = 0; l < h.entries.size(); ++l) {
    r.degree += h.entries[l];
    if (l >= 1) r.genus += static_cast<std::int64_t>(l - 1) * h.entries[l];
  }
  return r;
}

bool deg1_effectivity_test(const DivClass& d) {
  if (!d.model().is_quintic()) {
    throw DomainError("degree-1 effectivity test needs a quintic model, got '" + d.model().name +
                      "'");
  }
  if (degree(d) != 1) {
    throw DomainError("degree-1 effectivity test applied to a class of degree " +
                      std::to_string(degree(d)));
  }
  return self_intersection(d) == -3;
}

}  // namespace acm

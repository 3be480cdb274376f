#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "acm/surfaces.hpp"

namespace acm {

/// An integer combination of a model's generators. Arithmetic is only
/// defined between classes of the same model.
class DivClass {
 public:
  DivClass(ModelPtr model, IntVector coeffs);

  static DivClass zero(ModelPtr model);
  static DivClass generator(ModelPtr model, std::size_t index);
  static DivClass generator(ModelPtr model, std::string_view name);
  static DivClass hyperplane(ModelPtr model);
  static DivClass canonical(ModelPtr model);

  const SurfaceModel& model() const { return *model_; }
  const ModelPtr& model_ptr() const { return model_; }
  const IntVector& coeffs() const { return coeffs_; }
  bool is_zero() const;

  DivClass operator-() const;
  friend DivClass operator+(const DivClass& a, const DivClass& b);
  friend DivClass operator-(const DivClass& a, const DivClass& b);
  friend DivClass operator*(std::int64_t k, const DivClass& a);
  DivClass& operator+=(const DivClass& b) { return *this = *this + b; }
  DivClass& operator-=(const DivClass& b) { return *this = *this - b; }

  // Same coefficient vector over the same model.
  friend bool operator==(const DivClass& a, const DivClass& b);

  // "2*H - L[01|23](0,0)"; "0" for the zero class.
  std::string to_string() const;

 private:
  ModelPtr model_;
  IntVector coeffs_;
};

void require_same_model(const DivClass& a, const DivClass& b);

std::int64_t pair(const DivClass& a, const DivClass& b);
std::int64_t self_intersection(const DivClass& d);
std::int64_t degree(const DivClass& d);

// Pairings of d with every generator: the class up to numerical equivalence.
IntVector numerical_image(const DivClass& d);
bool numerically_equal(const DivClass& a, const DivClass& b);

// 1 + d.(d+K)/2; throws DomainError when d.(d+K) is odd.
std::int64_t genus(const DivClass& d);
// chi0 + d.(d-K)/2; throws DomainError when d.(d-K) is odd.
std::int64_t chi(const DivClass& d);
// deg + 1 - genus
std::int64_t k_invariant(const DivClass& d);

// Residual class m*H - d in a complete intersection with a degree-m surface.
DivClass link(const DivClass& d, std::int64_t m);

// Signed integer combination of generator names, whitespace-insensitive.
DivClass parse_divisor(const ModelPtr& model, std::string_view text);

struct Part {
  DivClass cls;
  int multiplicity = 1;
  std::string label;
  std::optional<std::int64_t> genus;  // defaults to genus(cls)
};

/// An effective decomposition asserted by the caller.
struct Decomposition {
  std::vector<Part> parts;

  Decomposition() = default;
  explicit Decomposition(std::vector<Part> p) : parts(std::move(p)) {}

  DivClass total() const;
  int count() const;  // parts counted with multiplicity
  std::string to_string() const;
};

// Sum of part genera plus pairwise products minus (count - 1), counting
// each copy of a repeated part separately.
std::int64_t genus_of_sum(const Decomposition& parts);

inline constexpr int kMaxConnectednessParts = 20;

struct Connectedness {
  bool connected = true;
  std::optional<std::int64_t> min_product;  // empty when no proper split exists
  // Minimizing split: copies of each part placed in the first half.
  std::vector<int> split;
  std::pair<Decomposition, Decomposition> halves(const Decomposition& parts) const;
};

// m-connectedness over all proper splits of the given decomposition.
Connectedness is_m_connected(const Decomposition& parts, std::int64_t m);

struct HVector {
  std::vector<std::int64_t> entries;
};

struct CurveNumbers {
  std::int64_t degree;
  std::int64_t genus;
};

CurveNumbers hvector_invariants(const HVector& h);

// Degree-1 classes on a quintic are effective exactly when D^2 = -3.
bool deg1_effectivity_test(const DivClass& d);

}  // namespace acm

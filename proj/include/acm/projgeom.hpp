#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "acm/exactnum.hpp"

namespace acm {

using Point4 = std::array<CycNum, 4>;

/// a0*x0 + a1*x1 + a2*x2 + a3*x3 with exact cyclotomic coefficients.
class LinearForm {
 public:
  explicit LinearForm(Point4 coeffs);

  const Point4& coeffs() const { return coeffs_; }
  const CycNum& operator[](std::size_t i) const { return coeffs_[i]; }

  CycNum evaluate(const Point4& p) const;
  std::string to_string() const;

 private:
  Point4 coeffs_;
};

// Parses "a0*x0 + a1*x1 + ..." where each coefficient is a parse_cycnum
// expression; terms without a variable are rejected.
LinearForm parse_linear_form(std::string_view text);

/// A line in P^3, kept as the row space of two independent linear forms.
/// The canonical representative is the reduced row-echelon form with unit
/// pivots, so two Lines compare equal iff they are the same line.
class Line {
 public:
  static Line from_forms(const LinearForm& f1, const LinearForm& f2);

  const std::array<LinearForm, 2>& forms() const { return forms_; }
  const std::array<Point4, 2>& canonical() const { return canonical_; }
  const std::array<int, 2>& pivots() const { return pivots_; }

  // Two points spanning the line (basis of the null space of the forms).
  std::array<Point4, 2> spanning_points() const;

  // "line: <form> ; <form>" using the input forms.
  std::string to_string() const;

  friend bool operator==(const Line& a, const Line& b);

 private:
  Line(std::array<LinearForm, 2> forms, std::array<Point4, 2> canonical,
       std::array<int, 2> pivots)
      : forms_(std::move(forms)), canonical_(std::move(canonical)), pivots_(pivots) {}

  std::array<LinearForm, 2> forms_;
  std::array<Point4, 2> canonical_;
  std::array<int, 2> pivots_;
};

// Accepts "line: <form> ; <form>" (the "line:" prefix is optional).
Line parse_line(std::string_view text);

Line line_from_forms(const LinearForm& f1, const LinearForm& f2);

enum class Incidence { skew, meet, same };

std::string to_string(Incidence i);

// Determinant of the 4x4 matrix stacking the canonical rows of both lines.
CycNum stacked_determinant(const Line& a, const Line& b);

Incidence lines_meet(const Line& a, const Line& b);

inline constexpr int kMaxFermatDegree = 12;

// Whether the line lies on x0^d + x1^d + x2^d + x3^d = 0, decided by
// expanding the restriction to the line as a binary form of degree d.
bool line_on_fermat(const Line& line, int degree);

// Gaussian elimination over the cyclotomic field.
CycNum determinant(std::vector<std::vector<CycNum>> m);

}  // namespace acm

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "acm/projgeom.hpp"

namespace acm {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

enum class SurfaceKind { fermat, quadric, cubic_delpezzo, generic, custom };

std::string to_string(SurfaceKind kind);

// One of the standard lines x_p + a*x_q = x_r + b*x_s = 0 on a Fermat surface.
struct AtlasLine {
  std::string name;  // "L[pq|rs](i,j)"
  Line line;
  std::size_t generator;
  int pairing;  // 0: {01|23}, 1: {02|13}, 2: {03|12}
  int first;    // exponent index of the coefficient on x_q
  int second;   // exponent index of the coefficient on x_s
};

// A plane whose section of the surface is the union of the listed lines,
// so their classes sum to the hyperplane class.
struct PlaneSection {
  std::string name;
  std::vector<std::size_t> generators;
};

/// Numerical shadow of a smooth surface: named generator classes, their
/// intersection matrix, the hyperplane and canonical classes and chi(O_X).
struct SurfaceModel {
  std::string name;
  SurfaceKind kind = SurfaceKind::custom;
  int degree = 0;  // degree as a surface in P^3; 0 when unknown
  std::vector<std::string> generators;
  IntMatrix gram;
  IntVector hyperplane;
  IntVector canonical;
  std::int64_t chi0 = 0;

  // Per generator: arithmetic genus when the generator is an irreducible
  // curve of known genus, and whether it is a registered effective curve.
  std::vector<std::optional<std::int64_t>> known_genus;
  std::vector<bool> effective;

  std::vector<AtlasLine> lines;
  std::vector<PlaneSection> planes;

  std::size_t rank() const { return generators.size(); }
  std::optional<std::size_t> generator_index(std::string_view name) const;
  const AtlasLine* atlas_line(std::size_t generator) const;
  bool is_quintic() const { return degree == 5; }
  bool is_quartic() const { return degree == 4; }
};

using ModelPtr = std::shared_ptr<const SurfaceModel>;

std::int64_t bilinear(const IntMatrix& gram, const IntVector& a, const IntVector& b);

// Fermat surface of degree 4 or 5 with its 3d^2 standard lines. Always
// re-enumerates; the result is deterministic.
ModelPtr fermat_model(int degree);

// quadric, cubic_delpezzo, generic_quartic, generic_quintic, and the
// aliases fermat4 / fermat5.
ModelPtr builtin_model(std::string_view name);
std::vector<std::string> builtin_model_names();

struct ValidationReport {
  std::vector<std::string> checks;      // every check that ran
  std::vector<std::string> violations;  // the ones that failed
  bool ok() const { return violations.empty(); }
};

ValidationReport model_validate(const SurfaceModel& model);

// Validates and freezes a hand-built model; throws DomainError listing the
// violated checks.
ModelPtr make_custom_model(SurfaceModel model);

// Custom model file: {name, kind:"custom", chi0, generators, gram,
// hyperplane, canonical} plus optional degree, effective, genus.
ModelPtr model_from_json_text(std::string_view text);
std::string model_to_json_text(const SurfaceModel& model);

// Plain-text listing used by `model show`: generators and Gram rows.
std::string model_show(const SurfaceModel& model);

// chi(O_X) of a smooth surface of degree d in P^3: 1 + C(d-1, 3).
std::int64_t hypersurface_chi0(int degree);

}  // namespace acm

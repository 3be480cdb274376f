#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "acm/divcalc.hpp"

namespace acm {

enum class Status { acm, not_acm, conditional, out_of_table, invalid };

std::string to_string(Status s);

// Propositions whose clause (b) characterises the non-aCM curves with a
// given degree and genus.
enum class PropId { P2_2, P4_4, P4_5, P4_6, P4_7, P4_8, C4_2, C4_3 };

std::string to_string(PropId p);  // "P4.7"
std::optional<PropId> parse_prop_id(std::string_view text);
std::vector<PropId> all_prop_ids();

struct TraceEntry {
  std::string check;
  std::string value;
  std::string expected;
  bool ok = true;
};

struct Verdict {
  Status status = Status::invalid;
  std::string rule;
  std::optional<PropId> prop;
  std::vector<TraceEntry> trace;
  std::optional<Decomposition> witness;

  void add(std::string check, std::string value, std::string expected, bool ok = true);
  bool has_failed_check(std::string_view check) const;
};

// "STATUS rule=<tag>" followed by "  check <name>: <value> (expected <value>)".
std::string render_report(const Verdict& v);
std::string render_json(const Verdict& v);

enum class SurfaceFamily { quartic, quintic };

std::optional<SurfaceFamily> parse_family(std::string_view text);

Verdict classify_numeric(SurfaceFamily family, std::int64_t deg, std::int64_t genus);

// Degree/genus classification of a class on a quartic or quintic model.
Verdict classify_class(const DivClass& d);

// (k, deg) pairs on a quintic.
struct TableRow {
  int k;
  int degree;
  std::string rule;
  std::optional<PropId> prop;  // only for the non-aCM existence table
};

const std::vector<TableRow>& acm_table();     // guaranteed aCM
const std::vector<TableRow>& nonacm_table();  // a non-aCM curve exists

bool nonacm_exists(std::int64_t d, std::int64_t k);

/// Numeric shape of one proposition: the surface it lives on and the
/// degree/genus of the curves it talks about.
struct WitnessSpec {
  PropId id;
  SurfaceFamily family;
  int degree;
  int genus;
  std::string describe() const;
};

const WitnessSpec& witness_spec(PropId id);

// Accepts a class as effective when it equals a nonnegative combination of
// registered effective generators (plane sections of a Fermat surface may
// be traded for their lines) or passes the degree-1 test on a quintic.
struct EffectivityCertificate {
  bool certified = false;
  std::string method;
  std::optional<DivClass> combination;
};

EffectivityCertificate certify_effective(const DivClass& d);

// Checks every numeric clause of the proposition's condition (b) against
// the witness. NOT_ACM on success, CONDITIONAL when the witness is
// rejected, INVALID when the target does not match the header.
Verdict check_witness(PropId prop, const DivClass& target, const Decomposition& witness);

struct WitnessSearch {
  std::optional<Decomposition> witness;
  Verdict verdict;
};

// Bounded enumeration over H and the line atlas, in lexicographic order of
// generator indices. Finding nothing does not prove the curve is aCM.
WitnessSearch search_witness(PropId prop, const DivClass& target, std::int64_t degree_bound);

}  // namespace acm

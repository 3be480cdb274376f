#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "acm/surfaces.hpp"

namespace acm {

// anomaly: a claim known to disagree with the printed statement; reported,
// but it does not fail the suite.
enum class ClaimStatus { pass, fail, anomaly };

std::string to_string(ClaimStatus s);

struct Claim {
  std::string description;
  std::string expected;
  std::string computed;
  std::string anchor;  // "<example id>/<item>"
  ClaimStatus status = ClaimStatus::pass;
};

struct Report {
  std::string id;
  std::string title;
  std::vector<Claim> claims;

  bool ok() const;
  int count(ClaimStatus s) const;
};

// Models the cases are evaluated against; tests swap in corrupted copies.
struct Fixtures {
  ModelPtr fermat4;
  ModelPtr fermat5;
  ModelPtr quadric;
  ModelPtr cubic;

  static Fixtures standard();
};

struct ExampleCase {
  std::string id;
  std::string title;
  std::function<Report(const Fixtures&)> run;
};

const std::vector<ExampleCase>& example_cases();

// Throws DomainError for an unknown id.
Report run_example(std::string_view id, const Fixtures& fixtures);

struct Summary {
  std::vector<Report> reports;
  bool ok() const;
};

Summary verify_all(const std::vector<ExampleCase>& cases, const Fixtures& fixtures);

std::string render_report(const Report& r);
std::string render_summary(const Summary& s);
std::string render_json(const Report& r);
std::string render_json(const Summary& s);

}  // namespace acm

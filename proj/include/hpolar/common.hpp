#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hpolar {

inline constexpr const char* kToolName = "hpolar";
inline constexpr const char* kToolVersion = "0.1.0";

// Tolerances shared across modules.
inline constexpr double kQuadricTol = 1e-9;      // quadric / orthogonality invariant checks
inline constexpr double kRenormalizeTol = 1e-6;  // constructors renormalize within this of the quadric
inline constexpr double kIdealTol = 1e-7;        // finite / ideal / hyperinfinite trichotomy
inline constexpr double kGluingTol = 1e-9;       // glued side length agreement
inline constexpr double kStrictTol = 1e-12;      // strict inequalities compared with this slack

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One named check with an optional witness describing the failure.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct Report {
  std::vector<CheckResult> conditions;

  bool ok() const {
    for (const auto& c : conditions)
      if (!c.pass) return false;
    return true;
  }

  void add(std::string name, bool pass, std::string witness = {}) {
    conditions.push_back({std::move(name), pass, std::move(witness)});
  }

  const CheckResult* find(const std::string& name) const {
    for (const auto& c : conditions)
      if (c.name == name) return &c;
    return nullptr;
  }
};

}  // namespace hpolar

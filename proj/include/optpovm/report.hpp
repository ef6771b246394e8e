#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace optpovm {

struct CheckResult {
  std::string name;
  double residual;
  double tolerance;
  bool pass;
};

/// Named residual checks; passes only if every row does.
struct VerificationReport {
  std::string povm_id;
  std::vector<CheckResult> checks;

  void add(std::string name, double residual, double tolerance) {
    // NaN residuals fail.
    checks.push_back({std::move(name), residual, tolerance, residual <= tolerance});
  }

  void append(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
  }

  double worst() const {
    double w = 0.0;
    for (const auto& c : checks) w = std::max(w, c.residual);
    return w;
  }

  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

}  // namespace optpovm

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace solvcohom {

struct Violation {
  std::string invariant;             // short key, e.g. "jacobi"
  std::string message;
  std::vector<std::size_t> witness;  // basis indices (0-based) exhibiting the failure
};

/// Validators report instead of throwing, so one run lists every problem.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string invariant, std::string message, std::vector<std::size_t> witness = {}) {
    violations.push_back({std::move(invariant), std::move(message), std::move(witness)});
  }
  void merge(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

}  // namespace solvcohom

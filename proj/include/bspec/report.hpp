#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace bspec {

/// Outcome of one verification suite: how many exact checks ran, which
/// failed, and informational notes (witnesses, counts).
struct VerificationReport {
  std::string suite;
  std::size_t checks = 0;
  std::vector<std::string> violations;
  std::vector<std::string> notes;

  bool passed() const { return violations.empty(); }

  /// `describe` is only invoked on failure, so it may build strings freely.
  template <typename Describe>
  void record(bool ok, Describe&& describe) {
    ++checks;
    if (!ok) violations.push_back(std::string(describe()));
  }

  void merge(const VerificationReport& other) {
    checks += other.checks;
    for (const auto& v : other.violations) violations.push_back(other.suite + ": " + v);
    for (const auto& n : other.notes) notes.push_back(other.suite + ": " + n);
  }
};

}  // namespace bspec

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace wq {

/// Result of one named check. `failures` is in discovery order, so the first
/// entry is the first mismatch; `notes` carry recorded (non-failing) findings.
struct VerificationOutcome {
  explicit VerificationOutcome(std::string name = {}) : check(std::move(name)) {}

  std::string check;
  bool passed = true;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void fail(std::string message) {
    passed = false;
    failures.push_back(std::move(message));
  }
  void note(std::string message) { notes.push_back(std::move(message)); }
  void absorb(const VerificationOutcome& other) {
    for (const auto& f : other.failures) fail(other.check + ": " + f);
    for (const auto& n : other.notes) note(other.check + ": " + n);
  }
};

}  // namespace wq

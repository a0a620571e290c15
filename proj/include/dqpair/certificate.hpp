#pragma once

#include <string>
#include <vector>

#include "dqpair/error.hpp"

namespace dqpair {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Outcome of a batch of exact checks run against one subject.
class Certificate {
 public:
  explicit Certificate(std::string subject) : subject_(std::move(subject)) {}

  void add(std::string name, bool passed, std::string detail = "") {
    checks_.push_back({std::move(name), passed, std::move(detail)});
  }

  bool ok() const {
    for (const auto& c : checks_)
      if (!c.passed) return false;
    return true;
  }

  const std::string& subject() const { return subject_; }
  const std::vector<CheckResult>& checks() const { return checks_; }

  std::vector<CheckResult> failures() const {
    std::vector<CheckResult> out;
    for (const auto& c : checks_)
      if (!c.passed) out.push_back(c);
    return out;
  }

  /// One line per check, prefixed with ok/FAIL.
  std::string summary() const;

  /// Throws CertError listing every failed check; no-op when all passed.
  void require() const;

 private:
  std::string subject_;
  std::vector<CheckResult> checks_;
};

}  // namespace dqpair

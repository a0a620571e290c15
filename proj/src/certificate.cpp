#include "dqpair/certificate.hpp"

#include <sstream>

namespace dqpair {

std::string Certificate::summary() const {
  std::ostringstream os;
  for (const auto& c : checks_) {
    os << (c.passed ? "  ok   " : "  FAIL ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  return os.str();
}

void Certificate::require() const {
  if (ok()) return;
  std::ostringstream os;
  os << subject_ << " certificate failed:";
  for (const auto& c : failures()) {
    os << " [" << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "]";
  }
  throw CertError(os.str());
}

}  // namespace dqpair

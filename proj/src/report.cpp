#include "drckit/report.hpp"

#include <sstream>

namespace drckit {

bool AxiomReport::ok() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

const CheckResult* AxiomReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.pass) return &c;
  }
  return nullptr;
}

std::string AxiomReport::to_text() const {
  std::ostringstream os;
  os << subject << ": " << (ok() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : checks) {
    os << "  " << (c.pass ? "ok  " : "FAIL") << " " << c.law;
    if (!c.pass) {
      os << " at (";
      for (size_t i = 0; i < c.witness.size(); ++i) {
        if (i) os << ",";
        os << c.witness[i];
      }
      os << ")";
    }
    if (!c.note.empty()) os << "  [" << c.note << "]";
    os << "\n";
  }
  return os.str();
}

}  // namespace drckit

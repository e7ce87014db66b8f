#pragma once

#include <string>
#include <vector>

namespace drckit {

// One verified law. `witness` holds the indices of the first violation
// (lexicographically minimal over the scan order), empty when the law holds.
struct CheckResult {
  std::string law;
  bool pass = true;
  std::vector<long long> witness;
  std::string note;
};

struct AxiomReport {
  std::string subject;
  std::vector<CheckResult> checks;

  bool ok() const;
  const CheckResult* first_failure() const;
  std::string to_text() const;
};

}  // namespace drckit

#pragma once

#include <stdexcept>
#include <string>

namespace drckit {

// Thrown on malformed input: bad file contents, out-of-range indices,
// tables that fail their shape checks. CLI maps this to exit code 2,
// keeping it distinct from "check ran and failed" (exit code 1).
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace drckit

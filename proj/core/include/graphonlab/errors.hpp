#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace graphonlab {

// Malformed input: bad files, out-of-range arguments, exceeded size caps.
class invalid_input : public std::runtime_error {
 public:
  explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed input that fails a numerical precondition.  Carries a short
// machine-readable reason code ("multiplicity", "coverage",
// "degenerate_degree", ...) so callers can branch without parsing messages.
class precondition_error : public std::runtime_error {
 public:
  precondition_error(std::string reason, const std::string& what)
      : std::runtime_error(what), reason_(std::move(reason)) {}
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string reason_;
};

}  // namespace graphonlab

#pragma once

#include <stdexcept>
#include <string>

namespace qeuler {

/// Invalid argument combination (even modulus, F not a multiple of the modulus, q = -1, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the region where a function is defined (s outside the p-adic disk, p | a, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A p-adic limit did not stabilize before the level cap.
class PrecisionError : public std::runtime_error {
 public:
  PrecisionError(const std::string& what, long achieved_depth)
      : std::runtime_error(what), achieved_depth_(achieved_depth) {}
  long achieved_depth() const noexcept { return achieved_depth_; }

 private:
  long achieved_depth_;
};

}  // namespace qeuler

#pragma once

#include <stdexcept>
#include <string>

namespace iwb {

// Mirrors iwb_status in the C header; values must stay in sync.
enum class Status : int {
  Ok = 0,
  InvalidArgument = 1,
  ParseError = 2,
  ZeroConstantTerm = 3,
  NotPositiveDefinite = 4,
  NotInP = 5,
  ZeroPolynomial = 6,
  NoSolution = 7,
  NonUniqueSolution = 8,
  NoConvergence = 9,
  DomainError = 10,
  StabilizationNotReached = 11,
  LeadingMonomialMismatch = 12,
  Overflow = 13,
  Internal = 14,
};

const char* status_name(Status s);

class Error : public std::runtime_error {
 public:
  Error(Status status, const std::string& what) : std::runtime_error(what), status_(status) {}
  Status status() const noexcept { return status_; }

 private:
  Status status_;
};

}  // namespace iwb

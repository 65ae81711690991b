#pragma once

#include <stdexcept>
#include <string>

namespace scsgen {

// Parameter outside the physical domain (y >= 0.5, negative squeezing, B <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A Fock-space cutoff too small to hold the requested state within tolerance.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numerical procedure (series degree, optimizer) failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace scsgen

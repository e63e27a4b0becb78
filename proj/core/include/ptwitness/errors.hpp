#pragma once

#include <stdexcept>
#include <string>

namespace ptwitness {

/// Requested operation exceeds the monomial degree supported by the
/// coefficient arithmetic, or the degree guaranteed accurate by a moment
/// source at its cutoffs.
class degree_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Fock-space truncation is inadequate for the requested construction.
/// Carries the measured tail mass so callers can report how bad it was.
class truncation_error : public std::runtime_error {
 public:
  truncation_error(const std::string& what, double tail)
      : std::runtime_error(what), tail_(tail) {}

  double tail_mass() const noexcept { return tail_; }

 private:
  double tail_;
};

}  // namespace ptwitness

#pragma once

#include <Eigen/Dense>
#include <string>

#include "ptwitness/normal_polynomial.hpp"

namespace ptwitness {

/// Density operator of two bosonic modes on a truncated Fock basis,
/// |0>..|dim-1> per mode.
///
/// Basis layout (fixed, everything downstream depends on it): the row or
/// column index of the pair |i>_a |j>_b is i * dim_b + j.
///
/// The constructor validates Hermiticity (entrywise deviation <= 1e-12) and
/// unit trace (<= 1e-10). Positivity is deliberately not checked so that
/// partial transposes are representable by the same type. Instances are
/// immutable after construction.
class FockState {
 public:
  FockState(int dim_a, int dim_b, Eigen::MatrixXcd rho, std::string label);

  int dim_a() const noexcept { return dim_a_; }
  int dim_b() const noexcept { return dim_b_; }
  const Eigen::MatrixXcd& rho() const noexcept { return rho_; }
  const std::string& label() const noexcept { return label_; }

  double purity() const;

 private:
  int dim_a_;
  int dim_b_;
  Eigen::MatrixXcd rho_;
  std::string label_;
};

/// Transposition of mode b: entry ((i,j),(i',j')) of the result equals entry
/// ((i,j'),(i',j)) of the input. Involution; preserves trace and Hermiticity
/// exactly. Positivity of the result is not guaranteed.
FockState partial_transpose(const FockState& s);

/// Smallest eigenvalue of a Hermitian matrix. Throws std::invalid_argument
/// when the input deviates from Hermiticity by more than 1e-10 relative to
/// the largest entry magnitude.
double min_eigenvalue(const Eigen::MatrixXcd& m);
double min_eigenvalue(const FockState& s);

/// tr(rho · ad^n a^m bd^k b^l), evaluated with dense ladder-operator
/// matrices at the state's cutoffs. Throws truncation_error when the
/// monomial degree reaches min(dim_a, dim_b).
Complex expectation(const FockState& s, const MultiIndex& u);
Complex expectation(const FockState& s, const NormalPolynomial& p);

/// Population sitting in the top two Fock levels of either mode; the
/// truncation-adequacy diagnostic.
double tail_mass(const FockState& s);

/// Dense annihilation operator at the given cutoff: <i-1|a|i> = sqrt(i).
Eigen::MatrixXcd annihilation_matrix(int dim);

/// kron(ad^n a^m, bd^k b^l) on the fixed basis layout.
Eigen::MatrixXcd monomial_matrix(const MultiIndex& u, int dim_a, int dim_b);

/// Kronecker product with mode a as the slow index.
Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

}  // namespace ptwitness

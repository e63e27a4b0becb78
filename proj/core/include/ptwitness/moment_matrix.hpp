#pragma once

#include <Eigen/Dense>
#include <string>

#include "ptwitness/moment_table.hpp"
#include "ptwitness/operator_basis.hpp"

namespace ptwitness {

/// Hermitian matrix of partial-transpose expectations over an operator
/// basis: entries(i,j) = <adjoint(f_i) f_j>^PT. Rows carry the conjugated
/// coefficient index.
struct MomentMatrix {
  Eigen::MatrixXcd entries;
  OperatorBasis basis;
  std::string provenance;  // label of the moment table the entries came from
};

/// Symbolic form of one matrix entry: pt_transform(adjoint(fi)·fj). The
/// numeric entry is the plain expectation of this polynomial in the original
/// state.
NormalPolynomial symbolic_pt_entry(const NormalPolynomial& fi,
                                   const NormalPolynomial& fj);

/// Builds the full matrix. Every pairwise product degree must stay within
/// the table's max_degree; violations raise degree_error naming the pair.
/// Entry evaluation may run on several threads (capped by the
/// PTWITNESS_THREADS environment variable); the result is deterministic.
/// The built matrix is checked to be Hermitian within 1e-10 (relative).
MomentMatrix build_matrix(const MomentTable& t, const OperatorBasis& basis);

/// Product of max(1, |m(i,i)|): the magnitude guard used to classify
/// determinants as zero. Moments grow factorially with order, so absolute
/// tolerances stop meaning anything past N around 10.
double diagonal_scale(const Eigen::MatrixXcd& m);

/// Real determinant via pivoted LU factorization. Requires Hermiticity
/// within 1e-10 (relative); the imaginary residue must stay below
/// 1e-8 · diagonal_scale and is discarded after the check.
double hermitian_determinant(const Eigen::MatrixXcd& m);

inline double determinant(const MomentMatrix& m) {
  return hermitian_determinant(m.entries);
}

}  // namespace ptwitness

#pragma once

#include <string>
#include <vector>

#include "ptwitness/normal_polynomial.hpp"

namespace ptwitness {

/// Ordered list of operators spanning a quadratic form <f† f>^PT.
///
/// Construction rejects empty lists, zero elements, and pairs that are
/// scalar multiples of one another (the cheap linear-independence check;
/// a full Gram-rank test is not performed).
class OperatorBasis {
 public:
  OperatorBasis(std::vector<NormalPolynomial> elements, std::string label);

  const std::vector<NormalPolynomial>& elements() const noexcept {
    return elements_;
  }
  const std::string& label() const noexcept { return label_; }
  std::size_t size() const noexcept { return elements_.size(); }

  /// Largest degree of adjoint(e_i)·e_j over all pairs.
  int max_pair_degree() const;

 private:
  std::vector<NormalPolynomial> elements_;
  std::string label_;
};

/// The first N canonical monomials in enumeration order, labelled
/// "canonical(N)".
OperatorBasis canonical_basis(int count);

}  // namespace ptwitness

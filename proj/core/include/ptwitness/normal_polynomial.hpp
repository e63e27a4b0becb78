#pragma once

#include <complex>
#include <map>
#include <string>
#include <string_view>

#include "ptwitness/multi_index.hpp"

namespace ptwitness {

using Complex = std::complex<double>;

/// A finite complex combination of normally ordered two-mode monomials.
///
/// The term map is the canonical sparse form: coefficients that are exactly
/// zero are never stored, and equality is term-by-term. No epsilon pruning
/// happens here; tolerances belong to the numeric layer.
class NormalPolynomial {
 public:
  using TermMap = std::map<MultiIndex, Complex, MultiIndexLess>;

  NormalPolynomial() = default;

  static NormalPolynomial identity(Complex coeff = 1.0);
  /// Throws std::invalid_argument for invalid indices, degree_error past
  /// kMaxMonomialDegree.
  static NormalPolynomial monomial(const MultiIndex& u, Complex coeff = 1.0);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Largest term degree; 0 for the zero polynomial.
  int degree() const noexcept;

  Complex coefficient(const MultiIndex& u) const;

  void add_term(const MultiIndex& u, Complex coeff);

  NormalPolynomial& operator+=(const NormalPolynomial& rhs);
  NormalPolynomial& operator-=(const NormalPolynomial& rhs);
  NormalPolynomial& operator*=(Complex scale);

  bool operator==(const NormalPolynomial&) const = default;

 private:
  TermMap terms_;
};

NormalPolynomial operator+(NormalPolynomial lhs, const NormalPolynomial& rhs);
NormalPolynomial operator-(NormalPolynomial lhs, const NormalPolynomial& rhs);
NormalPolynomial operator*(NormalPolynomial p, Complex scale);
NormalPolynomial operator*(Complex scale, NormalPolynomial p);

/// Normal form of the single-mode antinormal product a^n ad^m, carried on
/// mode a:
///
///   a^n ad^m = sum_{j=0}^{min(n,m)} n! m! / (j! (n-j)! (m-j)!) ad^(m-j) a^(n-j)
///
/// The coefficients are built by a running-product recurrence, exact for
/// n + m <= kMaxMonomialDegree.
NormalPolynomial antinormal_to_normal(int n, int m);

/// Normal-ordered operator product p·q. The two modes commute and reorder
/// independently. Throws degree_error when a product monomial would exceed
/// kMaxMonomialDegree.
NormalPolynomial multiply(const NormalPolynomial& p, const NormalPolynomial& q);

inline NormalPolynomial operator*(const NormalPolynomial& p,
                                  const NormalPolynomial& q) {
  return multiply(p, q);
}

/// Term-wise adjoint: coefficient conjugated, index (n,m,k,l) -> (m,n,l,k).
NormalPolynomial adjoint(const NormalPolynomial& p);

/// Moment-level partial-transposition transform: swaps the b exponents of
/// every term, coefficients unchanged. Involution.
NormalPolynomial pt_transform(const NormalPolynomial& p);

/// Renders "(re,im)·ad^n a^m bd^k b^l + ..." with zero-exponent factors
/// dropped; a bare "(re,im)" denotes the identity term, "0" the zero
/// polynomial.
std::string to_string(const NormalPolynomial& p);

/// Parses the to_string grammar ('*' is accepted in place of '·').
/// Throws std::invalid_argument on malformed input.
NormalPolynomial parse_polynomial(std::string_view text);

}  // namespace ptwitness

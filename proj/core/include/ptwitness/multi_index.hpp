#pragma once

#include <string>
#include <vector>

namespace ptwitness {

/// Exponent quadruple (n, m, k, l) of the two-mode monomial ad^n a^m bd^k b^l,
/// where ad/a are the mode-a creation/annihilation operators and bd/b the
/// mode-b ones. All components are nonnegative.
struct MultiIndex {
  int n = 0;  ///< exponent of ad
  int m = 0;  ///< exponent of a
  int k = 0;  ///< exponent of bd
  int l = 0;  ///< exponent of b

  int degree() const noexcept { return n + m + k + l; }
  bool valid() const noexcept { return n >= 0 && m >= 0 && k >= 0 && l >= 0; }

  /// Index of the adjoint monomial: (ad^n a^m bd^k b^l)† = ad^m a^n bd^l b^k.
  MultiIndex adjoint() const noexcept { return {m, n, l, k}; }

  /// Index map induced by transposing mode b: (n,m,k,l) -> (n,m,l,k).
  MultiIndex pt() const noexcept { return {n, m, l, k}; }

  bool operator==(const MultiIndex&) const = default;
};

enum class Ordering { less, equal, greater };

/// Total order on multi-indices. u < v when degree(u) < degree(v), or the
/// degrees are equal and, writing u = (n,m,k,l) and v = (p,q,r,s), the first
/// nonzero entry of the sequence (r-k, s-l, p-n, q-m) is positive. Note the
/// b-mode differences take precedence; this is deliberate and pinned by the
/// canonical-sequence tests.
Ordering compare_indices(const MultiIndex& u, const MultiIndex& v) noexcept;

struct MultiIndexLess {
  bool operator()(const MultiIndex& u, const MultiIndex& v) const noexcept {
    return compare_indices(u, v) == Ordering::less;
  }
};

/// Largest monomial degree the coefficient arithmetic keeps exact (the
/// reordering coefficients are integers representable in a double up to
/// this total degree).
inline constexpr int kMaxMonomialDegree = 20;

/// The first `count` multi-indices in compare_indices order, starting at
/// (0,0,0,0). Throws std::invalid_argument for count < 1 and degree_error
/// when the sequence would leave the supported degree range.
std::vector<MultiIndex> enumerate_indices(int count);

/// All multi-indices of degree <= d, in compare_indices order.
std::vector<MultiIndex> indices_up_to_degree(int d);

/// Compact rendering: "ad^2 a b", "bd", "1" (identity).
std::string to_string(const MultiIndex& u);

}  // namespace ptwitness

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptwitness/moment_matrix.hpp"

namespace ptwitness {

struct Witness {
  std::vector<MultiIndex> indices;
  double value = 0.0;  // the offending determinant
};

/// Outcome of a detection attempt. This tool never declares separability:
/// PPT entangled states exist, so the strongest non-detection claim is
/// "the partial transpose looked nonnegative up to the order we reached".
struct Verdict {
  enum class Kind { npt_detected, pt_nonnegative_up_to_order, inconclusive };

  Kind kind = Kind::inconclusive;
  std::optional<Witness> witness;  // present iff npt_detected
  int order_reached = 0;
};

std::string to_string(Verdict::Kind kind);

struct HierarchyResult {
  std::vector<double> determinants;  // D_1 .. D_(order computed)
  std::vector<double> scales;        // matching diagonal scales
  Verdict verdict;
  int requested_order = 0;
};

/// Evaluates the determinants D_1..D_n_max of the leading principal blocks
/// of the canonical moment matrix, stopping early at the first
/// D_N < -tolerance · scale_N or when the next basis monomial would push a
/// pairwise product degree past the table's guarantee (truncated scan, with
/// order_reached recording how far it got).
HierarchyResult hierarchy_scan(const MomentTable& t, int n_max,
                               double tolerance);

struct MinorSearchResult {
  double value = 0.0;  // determinant of the best principal minor found
  double scale = 1.0;
  std::vector<MultiIndex> indices;
  long minors_evaluated = 0;

  double scaled_value() const { return value / scale; }
};

/// Most negative principal minor over index subsets of the pool with size
/// <= max_size, ranked by value/scale. Exhaustive for pools of at most 12
/// indices; beyond that, greedy growth from the most promising 2x2 seeds.
/// Deterministic for identical inputs (ties broken by subset order).
MinorSearchResult principal_minor_search(const MomentTable& t,
                                         const std::vector<MultiIndex>& pool,
                                         int max_size);

/// The Simon second-moment quantity, built from symmetrized quadrature
/// covariances with the convention x = (a + ad)/sqrt(2),
/// p = (a - ad)/(i sqrt(2)), off-diagonals (1/2)<{Dx, Dp}>. With this
/// convention S coincides with the fifth-order hierarchy determinant D_5;
/// the identity is enforced by tests, which pins the convention.
double simon_S(const MomentTable& t);

/// The Duan sum criterion <(Du)^2> + <(Dv)^2> - (r^2 + r^-2) for
/// u = |r| x1 + x2/r, v = |r| p1 - p2/r. Throws std::invalid_argument at
/// r = 0. Nonnegative on separable states for every r.
double duan(const MomentTable& t, double r);

/// The r-minimized Duan criterion in product form:
/// <Dad Da><Dbd Db> - Re^2 <Da Db>. Negative iff min_r duan(t, r) < 0.
double duan_min(const MomentTable& t);

/// Determinant of the 3x3 moment matrix over the basis {1, a, b}; equals
/// <Dad Da><Dbd Db> - |<Da Db>|^2, of which the Duan product form is the
/// weaker (real-part) version.
double det_d(const MomentTable& t);

/// Determinant of the 3x3 moment matrix over the basis {1, b, ab}. This is
/// the subdeterminant that exposes entangled coherent states which the
/// second-moment criteria miss.
double det_s(const MomentTable& t);

/// 2x2 quadratic-form determinant M_uu M_vv - |M_uv|^2 for the operator
/// c1·monomial(u) + c2·monomial(v), evaluated through the symbolic
/// pipeline. Nonnegative on separable states (the two-term conditions).
double two_term_condition(const MomentTable& t, const MultiIndex& u,
                          const MultiIndex& v);

}  // namespace ptwitness

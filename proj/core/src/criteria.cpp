#include "ptwitness/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ptwitness {

std::string to_string(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::npt_detected: return "npt_detected";
    case Verdict::Kind::pt_nonnegative_up_to_order: return "pt_nonnegative_up_to_order";
    case Verdict::Kind::inconclusive: return "inconclusive";
  }
  return "?";
}

HierarchyResult hierarchy_scan(const MomentTable& t, int n_max, double tolerance) {
  if (n_max < 1) throw std::invalid_argument("hierarchy_scan: n_max must be >= 1");
  if (tolerance <= 0) throw std::invalid_argument("hierarchy_scan: tolerance must be > 0");

  // Largest order whose pairwise product degrees the table still guarantees.
  const int degree_cap = std::min(t.max_degree() / 2, kMaxMonomialDegree);
  std::vector<MultiIndex> supported = indices_up_to_degree(degree_cap);
  int n_sup = static_cast<int>(supported.size());
  if (n_sup > n_max) n_sup = n_max;

  HierarchyResult result;
  result.requested_order = n_max;
  if (n_sup < 1) {
    result.verdict = {Verdict::Kind::inconclusive, std::nullopt, 0};
    return result;
  }

  supported.resize(static_cast<std::size_t>(n_sup));
  const MomentMatrix full = build_matrix(t, canonical_basis(n_sup));

  for (int order = 1; order <= n_sup; ++order) {
    const Eigen::MatrixXcd block = full.entries.topLeftCorner(order, order);
    const double scale = diagonal_scale(block);
    const double det = hermitian_determinant(block);
    result.determinants.push_back(det);
    result.scales.push_back(scale);
    if (det < -tolerance * scale) {
      Witness w;
      w.indices.assign(supported.begin(), supported.begin() + order);
      w.value = det;
      result.verdict = {Verdict::Kind::npt_detected, std::move(w), order};
      return result;
    }
  }
  result.verdict = {Verdict::Kind::pt_nonnegative_up_to_order, std::nullopt, n_sup};
  return result;
}

namespace {

struct MinorValue {
  double det = 0.0;
  double scale = 1.0;
  double scaled = 0.0;
};

MinorValue evaluate_minor(const Eigen::MatrixXcd& pool_matrix,
                          const std::vector<int>& subset) {
  const int n = static_cast<int>(subset.size());
  Eigen::MatrixXcd sub(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      sub(i, j) = pool_matrix(subset[static_cast<std::size_t>(i)],
                              subset[static_cast<std::size_t>(j)]);
  MinorValue v;
  v.det = hermitian_determinant(sub);
  v.scale = diagonal_scale(sub);
  v.scaled = v.det / v.scale;
  return v;
}

}  // namespace

MinorSearchResult principal_minor_search(const MomentTable& t,
                                         const std::vector<MultiIndex>& pool,
                                         int max_size) {
  if (pool.empty()) throw std::invalid_argument("principal_minor_search: empty pool");
  if (max_size < 1) throw std::invalid_argument("principal_minor_search: max_size must be >= 1");
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j)
      if (pool[i] == pool[j])
        throw std::invalid_argument("principal_minor_search: duplicate pool index " +
                                    to_string(pool[i]));

  std::vector<NormalPolynomial> monomials;
  monomials.reserve(pool.size());
  for (const MultiIndex& u : pool) monomials.push_back(NormalPolynomial::monomial(u));
  const MomentMatrix pm = build_matrix(t, OperatorBasis(std::move(monomials), "minor pool"));

  const int p = static_cast<int>(pool.size());
  const int size_cap = std::min(max_size, p);

  MinorSearchResult best;
  bool have_best = false;
  long evaluated = 0;
  auto consider = [&](const std::vector<int>& subset) {
    const MinorValue v = evaluate_minor(pm.entries, subset);
    ++evaluated;
    if (!have_best || v.scaled < best.value / best.scale) {
      have_best = true;
      best.value = v.det;
      best.scale = v.scale;
      best.indices.clear();
      for (int pos : subset) best.indices.push_back(pool[static_cast<std::size_t>(pos)]);
    }
    return v;
  };

  if (p <= 12) {
    // Exhaustive over all nonempty subsets of size <= size_cap, in canonical
    // order (size ascending, positions lexicographic).
    std::vector<int> subset;
    auto recurse = [&](auto&& self, int next, int remaining) -> void {
      if (remaining == 0) {
        consider(subset);
        return;
      }
      for (int pos = next; pos <= p - remaining; ++pos) {
        subset.push_back(pos);
        self(self, pos + 1, remaining - 1);
        subset.pop_back();
      }
    };
    for (int size = 1; size <= size_cap; ++size) recurse(recurse, 0, size);
  } else {
    // Greedy: rank all 1- and 2-element minors, then grow the most promising
    // pairs one index at a time while the scaled value keeps dropping.
    for (int i = 0; i < p; ++i) consider({i});
    struct Seed {
      double scaled;
      std::vector<int> subset;
    };
    std::vector<Seed> seeds;
    for (int i = 0; i < p; ++i)
      for (int j = i + 1; j < p; ++j) {
        std::vector<int> subset{i, j};
        seeds.push_back({consider(subset).scaled, std::move(subset)});
      }
    std::stable_sort(seeds.begin(), seeds.end(),
                     [](const Seed& a, const Seed& b) { return a.scaled < b.scaled; });
    const std::size_t keep = std::min<std::size_t>(8, seeds.size());
    for (std::size_t s = 0; s < keep; ++s) {
      std::vector<int> subset = seeds[s].subset;
      double current = seeds[s].scaled;
      while (static_cast<int>(subset.size()) < size_cap) {
        int best_add = -1;
        double best_scaled = current;
        for (int cand = 0; cand < p; ++cand) {
          if (std::find(subset.begin(), subset.end(), cand) != subset.end()) continue;
          std::vector<int> grown = subset;
          grown.insert(std::lower_bound(grown.begin(), grown.end(), cand), cand);
          const MinorValue v = consider(grown);
          if (v.scaled < best_scaled) {
            best_scaled = v.scaled;
            best_add = cand;
          }
        }
        if (best_add < 0) break;
        subset.insert(std::lower_bound(subset.begin(), subset.end(), best_add), best_add);
        current = best_scaled;
      }
    }
  }

  best.minors_evaluated = evaluated;
  return best;
}

namespace {

struct QuadratureOps {
  NormalPolynomial x1, p1, x2, p2;
};

// x = (a + ad)/sqrt(2), p = (a - ad)/(i sqrt(2)); the S == D_5 identity
// pins this normalization.
QuadratureOps central_quadratures(const MomentTable& t) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const Complex mi{0.0, -1.0};  // 1/i

  const auto a = NormalPolynomial::monomial({0, 1, 0, 0});
  const auto ad = NormalPolynomial::monomial({1, 0, 0, 0});
  const auto b = NormalPolynomial::monomial({0, 0, 0, 1});
  const auto bd = NormalPolynomial::monomial({0, 0, 1, 0});

  QuadratureOps q;
  q.x1 = (a + ad) * Complex{inv_sqrt2, 0.0};
  q.p1 = (a - ad) * (mi * inv_sqrt2);
  q.x2 = (b + bd) * Complex{inv_sqrt2, 0.0};
  q.p2 = (b - bd) * (mi * inv_sqrt2);
  for (NormalPolynomial* op : {&q.x1, &q.p1, &q.x2, &q.p2})
    *op -= NormalPolynomial::identity(t.eval(*op));
  return q;
}

double covariance(const MomentTable& t, const NormalPolynomial& u,
                  const NormalPolynomial& v) {
  // Symmetrized second moment of two centered Hermitian operators.
  return 0.5 * t.eval(multiply(u, v) + multiply(v, u)).real();
}

}  // namespace

double simon_S(const MomentTable& t) {
  const QuadratureOps q = central_quadratures(t);

  Eigen::Matrix2d a1, a2, c, j;
  a1 << covariance(t, q.x1, q.x1), covariance(t, q.x1, q.p1),
        covariance(t, q.x1, q.p1), covariance(t, q.p1, q.p1);
  a2 << covariance(t, q.x2, q.x2), covariance(t, q.x2, q.p2),
        covariance(t, q.x2, q.p2), covariance(t, q.p2, q.p2);
  // Modes commute, so the cross block needs no symmetrization.
  c << t.eval(multiply(q.x1, q.x2)).real(), t.eval(multiply(q.x1, q.p2)).real(),
       t.eval(multiply(q.p1, q.x2)).real(), t.eval(multiply(q.p1, q.p2)).real();
  j << 0, 1, -1, 0;

  const double det_a1 = a1.determinant();
  const double det_a2 = a2.determinant();
  const double det_c = c.determinant();
  const double cross = (a1 * j * c * j * a2 * j * c.transpose() * j).trace();
  return det_a1 * det_a2 + (0.25 + det_c) * (0.25 + det_c) - cross -
         0.25 * (det_a1 + det_a2);
}

double duan(const MomentTable& t, double r) {
  if (r == 0.0) throw std::invalid_argument("duan: r must be nonzero");
  const QuadratureOps q = central_quadratures(t);
  const Complex cr{std::abs(r), 0.0};
  const Complex cir{1.0 / r, 0.0};
  const NormalPolynomial u = q.x1 * cr + q.x2 * cir;
  const NormalPolynomial v = q.p1 * cr - q.p2 * cir;
  const double var_u = t.eval(multiply(u, u)).real();
  const double var_v = t.eval(multiply(v, v)).real();
  return var_u + var_v - (r * r + 1.0 / (r * r));
}

double duan_min(const MomentTable& t) {
  const auto a = NormalPolynomial::monomial({0, 1, 0, 0});
  const auto b = NormalPolynomial::monomial({0, 0, 0, 1});
  const NormalPolynomial da = a - NormalPolynomial::identity(t.eval(a));
  const NormalPolynomial db = b - NormalPolynomial::identity(t.eval(b));
  const double na = t.eval(multiply(adjoint(da), da)).real();
  const double nb = t.eval(multiply(adjoint(db), db)).real();
  const double re_cross = t.eval(multiply(da, db)).real();
  return na * nb - re_cross * re_cross;
}

namespace {

double small_basis_determinant(const MomentTable& t,
                               std::vector<MultiIndex> indices,
                               const std::string& label) {
  std::vector<NormalPolynomial> elems;
  elems.reserve(indices.size());
  for (const MultiIndex& u : indices) elems.push_back(NormalPolynomial::monomial(u));
  return determinant(build_matrix(t, OperatorBasis(std::move(elems), label)));
}

}  // namespace

double det_d(const MomentTable& t) {
  return small_basis_determinant(t, {{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}, "d");
}

double det_s(const MomentTable& t) {
  return small_basis_determinant(t, {{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 1}}, "s");
}

double two_term_condition(const MomentTable& t, const MultiIndex& u,
                          const MultiIndex& v) {
  const auto fu = NormalPolynomial::monomial(u);
  const auto fv = NormalPolynomial::monomial(v);
  const Complex m_uu = t.eval_pt(multiply(adjoint(fu), fu));
  const Complex m_vv = t.eval_pt(multiply(adjoint(fv), fv));
  const Complex m_uv = t.eval_pt(multiply(adjoint(fu), fv));
  return m_uu.real() * m_vv.real() - std::norm(m_uv);
}

}  // namespace ptwitness

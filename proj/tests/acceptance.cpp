// Acceptance suite. Each test case checks one release criterion at its
// stated tolerance and prints a single PASS/FAIL line, so a full run reads
// as a checklist. Criterion 10 is asserted exactly as filed; see the
// printed note for the measured value of its first clause.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "ptwitness/criteria.hpp"

using namespace ptwitness;
namespace tst = ptwitness::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(const char* id, bool pass, const char* fmt = "", ...) {
  std::printf("[acceptance] %s: %s", id, pass ? "PASS" : "FAIL");
  if (fmt[0]) {
    std::printf(" — ");
    va_list args;
    va_start(args, fmt);
    std::vfprintf(stdout, fmt, args);
    va_end(args);
  }
  std::printf("\n");
  std::fflush(stdout);
}

MomentTable table_for(const StateSpec& spec) { return MomentTable(build(spec)); }

}  // namespace

TEST_CASE("c01 ordering fidelity") {
  const auto start = Clock::now();
  const auto seq = enumerate_indices(15);
  const double elapsed = seconds_since(start);

  const std::vector<MultiIndex> expected{
      {0, 0, 0, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0},
      {0, 2, 0, 0}, {1, 1, 0, 0}, {2, 0, 0, 0}, {0, 1, 0, 1}, {1, 0, 0, 1},
      {0, 0, 0, 2}, {0, 1, 1, 0}, {1, 0, 1, 0}, {0, 0, 1, 1}, {0, 0, 2, 0}};
  const bool match = seq == expected;
  const bool fast = elapsed < 1e-3;
  report("c01 ordering fidelity", match && fast, "exact match %s, %.3f ms",
         match ? "yes" : "NO", elapsed * 1e3);
  CHECK(match);
  CHECK(fast);
}

TEST_CASE("c02 matrix fidelity (symbolic 5x5)") {
  const auto basis = canonical_basis(5).elements();
  // Expected entries after the PT index map, as normal-ordered polynomials
  // of the original state; row 1 carries the b/bd swap, the (3,3) and (5,5)
  // diagonals pick up the +1 from reordering.
  const char* expected[5][5] = {
      {"(1,0)", "(1,0)·a^1", "(1,0)·ad^1", "(1,0)·bd^1", "(1,0)·b^1"},
      {"(1,0)·ad^1", "(1,0)·ad^1 a^1", "(1,0)·ad^2", "(1,0)·ad^1 bd^1",
       "(1,0)·ad^1 b^1"},
      {"(1,0)·a^1", "(1,0)·a^2", "(1,0) + (1,0)·ad^1 a^1", "(1,0)·a^1 bd^1",
       "(1,0)·a^1 b^1"},
      {"(1,0)·b^1", "(1,0)·a^1 b^1", "(1,0)·ad^1 b^1", "(1,0)·bd^1 b^1",
       "(1,0)·b^2"},
      {"(1,0)·bd^1", "(1,0)·a^1 bd^1", "(1,0)·ad^1 bd^1", "(1,0)·bd^2",
       "(1,0) + (1,0)·bd^1 b^1"}};
  bool all = true;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      const NormalPolynomial entry = symbolic_pt_entry(basis[i], basis[j]);
      const NormalPolynomial want = parse_polynomial(expected[i][j]);
      if (!(entry == want)) all = false;
      CHECK(entry == want);
    }
  report("c02 matrix fidelity", all, "25 symbolic entries, exact");
}

TEST_CASE("c03 S == D_5 identity") {
  const auto start = Clock::now();
  tst::Rng rng(30003);
  int states = 0;
  double worst = 0.0;
  bool all = true;
  while (states < 100) {
    const MomentTable t = table_for(tst::random_state(rng));
    const double s = simon_S(t);
    const double d5 = determinant(build_matrix(t, canonical_basis(5)));
    const double rel = std::abs(s - d5) / std::max(1.0, std::abs(d5));
    worst = std::max(worst, rel);
    if (rel > 1e-8) all = false;
    CHECK(rel <= 1e-8);
    ++states;
  }
  const double elapsed = seconds_since(start);
  const bool fast = elapsed < 60.0;
  report("c03 S == D_5 identity", all && fast,
         "%d states, worst relative deviation %.2e, %.1f s", states, worst, elapsed);
  CHECK(fast);
}

TEST_CASE("c04 PT-moment rule") {
  const auto start = Clock::now();
  tst::Rng rng(40004);
  const auto indices = indices_up_to_degree(6);
  double worst = 0.0;
  bool all = true;
  for (int iter = 0; iter < 20; ++iter) {
    const FockState s = build(tst::random_state(rng));
    const FockState pt = partial_transpose(s);
    const MomentTable t{FockState(s)};
    for (const MultiIndex& u : indices) {
      const double dev = std::abs(t.pt_moment(u) - expectation(pt, u));
      worst = std::max(worst, dev);
      if (dev > 1e-9) {
        all = false;
        CHECK(dev <= 1e-9);
      }
    }
  }
  const double elapsed = seconds_since(start);
  const bool fast = elapsed < 60.0;
  report("c04 PT-moment rule", all && fast,
         "20 states x %zu indices, worst |dev| %.2e, %.1f s", indices.size(), worst,
         elapsed);
  CHECK(all);
  CHECK(fast);
}

TEST_CASE("c05 normal-ordering oracle") {
  const int cutoff = 10;
  const Eigen::MatrixXcd a = tst::ladder(cutoff);
  double worst = 0.0;
  bool all = true;

  // antinormal rewrite, all n, m <= 4
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m) {
      Eigen::MatrixXcd direct = Eigen::MatrixXcd::Identity(cutoff, cutoff);
      for (int i = 0; i < n; ++i) direct = direct * a;
      for (int i = 0; i < m; ++i) direct = direct * a.adjoint();
      Eigen::MatrixXcd embedded = Eigen::MatrixXcd::Zero(cutoff * 2, cutoff * 2);
      for (int i = 0; i < cutoff; ++i)
        for (int j = 0; j < cutoff; ++j) {
          embedded(i * 2, j * 2) = direct(i, j);
          embedded(i * 2 + 1, j * 2 + 1) = direct(i, j);
        }
      const Eigen::MatrixXcd rewritten =
          tst::rep_polynomial(antinormal_to_normal(n, m), cutoff, 2);
      worst = std::max(worst, tst::block_rel_dev(rewritten, embedded, cutoff, 2, n + m));
    }

  // products of monomials through degree 2 per factor
  const auto degree2 = indices_up_to_degree(2);
  for (const MultiIndex& u : degree2)
    for (const MultiIndex& v : degree2) {
      const auto p = NormalPolynomial::monomial(u);
      const auto q = NormalPolynomial::monomial(v);
      const Eigen::MatrixXcd lhs = tst::rep_polynomial(multiply(p, q), cutoff, cutoff);
      const Eigen::MatrixXcd rhs =
          tst::rep_polynomial(p, cutoff, cutoff) * tst::rep_polynomial(q, cutoff, cutoff);
      worst = std::max(worst,
                       tst::block_rel_dev(lhs, rhs, cutoff, cutoff, u.degree() + v.degree()));
    }

  all = worst <= 1e-12;
  report("c05 normal-ordering oracle", all, "worst relative deviation %.2e", worst);
  CHECK(worst <= 1e-12);
}

TEST_CASE("c06 entangled-coherent-state detection") {
  const MomentTable t = table_for(StateSpec::entangled_coherent(1.0, 1.0, -1, 16, 16));

  const double s = det_s(t);
  const double closed = tst::ecs_s_closed_form(1.0, 1.0);  // ~ -0.0789
  const bool s_negative = s < 0.0;
  const bool s_matches = std::abs(s - closed) <= 1e-4;

  const double simon = simon_S(t);
  const bool simon_blind = simon >= -1e-9;

  bool duan_blind = true;
  for (int i = 0; i <= 40; ++i) {
    const double r = 0.1 * std::pow(100.0, i / 40.0);
    if (duan(t, r) < -1e-9) duan_blind = false;
  }

  const bool pass = s_negative && s_matches && simon_blind && duan_blind;
  report("c06 entangled-coherent detection", pass,
         "s = %.6f (closed form %.6f), simon_S = %.6f, duan blind over r in [0.1,10]: %s",
         s, closed, simon, duan_blind ? "yes" : "NO");
  CHECK(s_negative);
  CHECK(s_matches);
  CHECK(simon_blind);
  CHECK(duan_blind);
}

TEST_CASE("c07 separable soundness") {
  const auto start = Clock::now();
  tst::Rng rng(70007);
  bool all = true;
  double worst_scan = 0.0, worst_minor = 0.0;
  const auto pool = indices_up_to_degree(3);
  for (int iter = 0; iter < 100; ++iter) {
    const MomentTable t = table_for(tst::random_separable_mixture(rng, 12));

    const HierarchyResult h = hierarchy_scan(t, 10, 1e-8);
    if (h.verdict.kind == Verdict::Kind::npt_detected) all = false;
    CHECK(h.verdict.kind != Verdict::Kind::npt_detected);
    for (std::size_t i = 0; i < h.determinants.size(); ++i) {
      const double scaled = h.determinants[i] / h.scales[i];
      worst_scan = std::min(worst_scan, scaled);
      if (scaled < -1e-8) all = false;
      CHECK(scaled >= -1e-8);
    }

    const MinorSearchResult r = principal_minor_search(t, pool, 4);
    worst_minor = std::min(worst_minor, r.scaled_value());
    if (r.scaled_value() < -1e-8) all = false;
    CHECK(r.scaled_value() >= -1e-8);
  }
  const double elapsed = seconds_since(start);
  const bool fast = elapsed < 300.0;
  report("c07 separable soundness", all && fast,
         "100 mixtures, worst scaled determinant %.2e, worst scaled minor %.2e, %.1f s",
         worst_scan, worst_minor, elapsed);
  CHECK(fast);
}

TEST_CASE("c08 oracle consistency") {
  // Every detection must be confirmed by the explicit eigenvalue oracle and
  // no separable state may be flagged.
  tst::Rng rng(80008);
  int detections = 0, confirmed = 0, false_detections = 0;

  const auto pool = indices_up_to_degree(3);
  auto examine = [&](const StateSpec& spec, bool separable) {
    const FockState state = build(spec);
    const MomentTable t{FockState(state)};
    bool detected = false;

    const HierarchyResult h = hierarchy_scan(t, 10, 1e-8);
    if (h.verdict.kind == Verdict::Kind::npt_detected) detected = true;
    const MinorSearchResult r = principal_minor_search(t, pool, 4);
    if (r.scaled_value() < -1e-8) detected = true;
    if (t.max_degree() >= 4 && det_s(t) < -1e-8) detected = true;

    if (detected) {
      ++detections;
      const double eig = min_eigenvalue(partial_transpose(state));
      if (eig < 0.0)
        ++confirmed;
      else if (separable)
        ++false_detections;
      CHECK(eig < 0.0);
    } else if (separable) {
      // fine: nothing to confirm
    }
  };

  for (int iter = 0; iter < 30; ++iter)
    examine(tst::random_separable_mixture(rng, 12), true);
  examine(StateSpec::tmsv_state(0.2, 14, 14), false);
  examine(StateSpec::tmsv_state(0.5, 14, 14), false);
  examine(StateSpec::tmsv_state(0.8, 20, 20), false);
  examine(StateSpec::entangled_coherent(1.0, 1.0, -1, 16, 16), false);
  examine(StateSpec::entangled_coherent(0.8, 1.1, -1, 18, 18), false);

  const bool pass = detections == confirmed && false_detections == 0 && detections >= 5;
  report("c08 oracle consistency", pass,
         "%d detections, %d confirmed, %d false detections", detections, confirmed,
         false_detections);
  CHECK(detections == confirmed);
  CHECK(false_detections == 0);
  CHECK(detections >= 5);  // the entangled corpus must actually fire
}

TEST_CASE("c09 gaussian detection") {
  struct Case {
    double xi;
    int cutoff;
    double tol;  // truncation-limited closed-form agreement
  };
  bool all = true;
  for (const auto& [xi, cutoff, tol] :
       std::vector<Case>{{0.2, 14, 1e-6}, {0.5, 14, 1e-6}, {0.8, 22, 1e-4}}) {
    const MomentTable t = table_for(StateSpec::tmsv_state(xi, cutoff, cutoff));
    const double sh2 = std::sinh(xi) * std::sinh(xi);
    const double ch2 = std::cosh(xi) * std::cosh(xi);

    // closed-form covariances give D_5 = -sinh^2 cosh^2, duan_min = -sinh^2
    const double d5 = determinant(build_matrix(t, canonical_basis(5)));
    const double dm = duan_min(t);
    const bool ok = d5 < 0.0 && dm < 0.0 &&
                    std::abs(d5 + sh2 * ch2) <= tol * std::max(1.0, sh2 * ch2) &&
                    std::abs(dm + sh2) <= tol * std::max(1.0, sh2);
    if (!ok) all = false;
    CHECK(d5 < 0.0);
    CHECK(dm < 0.0);
    CHECK(d5 == doctest::Approx(-sh2 * ch2).epsilon(tol));
    CHECK(dm == doctest::Approx(-sh2).epsilon(tol));
  }
  report("c09 gaussian detection", all,
         "xi in {0.2, 0.5, 0.8}: D_5 and duan_min negative, closed forms matched");
}

TEST_CASE("c10 two-term condition") {
  // First clause, exactly as filed: the pair u = (0,0,0,0), v = (0,1,0,1)
  // must come out negative on tmsv(0.5). The measured value is
  // <ad a bd b> - |<a bd>|^2 = <n_a n_b> > 0 (the cross moment vanishes by
  // the photon-number selection rule), so this clause FAILS as written; the
  // assertion is kept faithful rather than silently repaired. The
  // neighbouring pair u = (0,1,0,0), v = (0,0,0,1), which the two-term
  // formula produces for the operator pair {a, b}, is negative and is
  // printed for comparison.
  const MomentTable tmsv = table_for(StateSpec::tmsv_state(0.5, 14, 14));
  const double literal = two_term_condition(tmsv, {0, 0, 0, 0}, {0, 1, 0, 1});
  const double ab_pair = two_term_condition(tmsv, {0, 1, 0, 0}, {0, 0, 0, 1});

  tst::Rng rng(100010);
  bool separable_ok = true;
  double worst = 0.0;
  for (int iter = 0; iter < 30; ++iter) {
    const MomentTable t = table_for(tst::random_separable_mixture(rng, 12));
    const double v = two_term_condition(t, {0, 0, 0, 0}, {0, 1, 0, 1});
    worst = std::min(worst, v);
    if (v < -1e-9) separable_ok = false;
  }

  const bool literal_negative = literal < 0.0;
  report("c10 two-term condition", literal_negative && separable_ok,
         "literal pair value %+.6f (criterion expects < 0; clause fails), "
         "{a,b} pair value %+.6f (negative as the two-term formula implies), "
         "separable clause worst %+.1e (PASS)",
         literal, ab_pair, worst);
  CHECK(literal < 0.0);  // fails as filed; the pair cannot be negative here
  CHECK(ab_pair < 0.0);  // the formula-faithful pair does detect
  CHECK(separable_ok);
}

#include <cmath>
#include <nlohmann/json.hpp>
#include <thread>

#include "doctest.h"
#include "oracles.hpp"
#include "ptwitness/errors.hpp"
#include "ptwitness/moment_table.hpp"

using namespace ptwitness;
namespace tst = ptwitness::testing;

TEST_CASE("moment basics") {
  const MomentTable t(build(StateSpec::vacuum(8, 8)));
  CHECK(t.max_degree() == 6);
  CHECK(t.moment({0, 0, 0, 0}) == Complex{1.0, 0.0});
  for (const MultiIndex& u : indices_up_to_degree(4))
    if (u.degree() > 0) CHECK(std::abs(t.moment(u)) <= 1e-14);
}

TEST_CASE("coherent moments factorize") {
  const Complex alpha{0.8, -0.1}, beta{0.4, 0.3};
  const MomentTable t(build(StateSpec::coherent_product(alpha, beta, 14, 14)));
  CHECK(std::abs(t.moment({1, 1, 1, 1}) - std::norm(alpha) * std::norm(beta)) <= 1e-8);
  for (const MultiIndex& u : indices_up_to_degree(4))
    CHECK(std::abs(t.moment(u) - tst::coherent_product_moment(alpha, beta, u)) <= 1e-8);
}

TEST_CASE("pt_moment implements the b-exponent swap") {
  tst::Rng rng(1111);
  const MomentTable t(build(tst::random_separable_mixture(rng, 12)));
  CHECK(t.pt_moment({0, 0, 0, 1}) == t.moment({0, 0, 1, 0}));
  const MultiIndex fixed{1, 0, 1, 1};  // k == l
  CHECK(t.pt_moment(fixed) == t.moment(fixed));
}

TEST_CASE("pt_moment agrees with the explicit partial transpose") {
  tst::Rng rng(2222);
  for (int iter = 0; iter < 3; ++iter) {
    const FockState s = build(tst::random_state(rng));
    const FockState pt = partial_transpose(s);
    const MomentTable t{FockState(s)};
    for (const MultiIndex& u : indices_up_to_degree(4))
      CHECK(std::abs(t.pt_moment(u) - expectation(pt, u)) <= 1e-9);
  }
}

TEST_CASE("eval and eval_pt") {
  const MomentTable t(build(StateSpec::coherent_product({0.5, 0.2}, {0.1, -0.3}, 12, 12)));
  SUBCASE("identity evaluates to one") {
    CHECK(std::abs(t.eval_pt(NormalPolynomial::identity()) - 1.0) <= 1e-12);
  }
  SUBCASE("<f† f>^PT of a shifted ladder operator is nonnegative on a product state") {
    const auto a = NormalPolynomial::monomial({0, 1, 0, 0});
    const auto f = a - NormalPolynomial::identity(t.eval(a));
    const Complex v = t.eval_pt(multiply(adjoint(f), f));
    CHECK(std::abs(v.imag()) <= 1e-10);
    CHECK(v.real() >= -1e-9);
  }
  SUBCASE("(ab)†(ab) against the PT state") {
    const MomentTable ts(build(StateSpec::tmsv_state(0.5, 14, 14)));
    const FockState pt = partial_transpose(build(StateSpec::tmsv_state(0.5, 14, 14)));
    const auto ab = NormalPolynomial::monomial({0, 1, 0, 1});
    const Complex lhs = ts.eval_pt(multiply(adjoint(ab), ab));
    const Complex rhs = expectation(pt, NormalPolynomial::monomial({1, 1, 1, 1}));
    CHECK(std::abs(lhs - rhs) <= 1e-9);
  }
}

TEST_CASE("conjugate symmetry of cached moments") {
  tst::Rng rng(3333);
  const MomentTable t(build(tst::random_separable_mixture(rng, 12)));
  for (const MultiIndex& u : indices_up_to_degree(5)) {
    const Complex lhs = t.moment(u);
    const Complex rhs = std::conj(t.moment(u.adjoint()));
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("cache transparency") {
  tst::Rng rng(4444);
  const StateSpec spec = tst::random_separable_mixture(rng, 12);
  MomentTable cached(build(spec));
  MomentTable uncached(build(spec));
  uncached.set_cache_enabled(false);
  for (const MultiIndex& u : indices_up_to_degree(6)) {
    const Complex a = cached.moment(u);
    const Complex b = uncached.moment(u);
    CHECK(a == b);  // memoization must not alter values at all
  }
}

TEST_CASE("degree guarantees are enforced with a diagnostic") {
  const MomentTable t(build(StateSpec::vacuum(6, 6)));  // max_degree 4
  CHECK_THROWS_AS(t.moment({3, 2, 0, 0}), degree_error);
  try {
    t.moment({3, 2, 0, 0});
  } catch (const degree_error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("max_degree") != std::string::npos);
    CHECK(msg.find("ad^3 a^2") != std::string::npos);
  }
}

TEST_CASE("provider-backed tables act as independent oracles") {
  const double xi = 0.35;
  const MomentTable closed(
      [xi](const MultiIndex& u) { return tst::tmsv_moment(xi, u); }, 8, "tmsv closed form");
  const MomentTable fock(build(StateSpec::tmsv_state(xi, 16, 16)));
  for (const MultiIndex& u : indices_up_to_degree(4))
    CHECK(std::abs(closed.moment(u) - fock.moment(u)) <= 1e-8);
}

TEST_CASE("entangled coherent closed form matches the Fock path") {
  const Complex alpha{0.9, 0.1}, beta{0.7, -0.2};
  const MomentTable fock(build(StateSpec::entangled_coherent(alpha, beta, -1, 16, 16)));
  for (const MultiIndex& u : indices_up_to_degree(4)) {
    const Complex expect = tst::entangled_coherent_moment(alpha, beta, -1, u);
    CHECK(std::abs(fock.moment(u) - expect) <= 1e-8);
  }
}

TEST_CASE("moment table JSON export and import") {
  const Complex alpha{0.4, 0.2}, beta{-0.3, 0.1};
  const MomentTable t(build(StateSpec::coherent_product(alpha, beta, 12, 12)));
  const nlohmann::json j = t.to_json(4);
  CHECK(j.at("v") == "v1");

  const MomentTable imported = MomentTable::from_json(j);
  CHECK(imported.max_degree() == 4);
  for (const MultiIndex& u : indices_up_to_degree(4))
    CHECK(std::abs(imported.moment(u) - t.moment(u)) <= 1e-15);
  CHECK_THROWS_AS(imported.moment({3, 2, 0, 0}), degree_error);

  SUBCASE("conjugate partners fill gaps") {
    nlohmann::json partial = {
        {"moments",
         {{{"index", {0, 0, 0, 0}}, {"value", {1.0, 0.0}}},
          {{"index", {1, 0, 0, 0}}, {"value", {0.5, 0.25}}},
          {{"index", {0, 0, 1, 0}}, {"value", {0.1, -0.2}}}}}};
    const MomentTable p = MomentTable::from_json(partial);
    CHECK(p.max_degree() == 1);
    CHECK(p.moment({0, 1, 0, 0}) == Complex{0.5, -0.25});
    CHECK(p.moment({0, 0, 0, 1}) == Complex{0.1, 0.2});
  }
  SUBCASE("malformed tables are rejected") {
    CHECK_THROWS_AS(MomentTable::from_json(nlohmann::json::object()), std::invalid_argument);
    nlohmann::json no_unit = {{"moments", {{{"index", {1, 0, 0, 0}}, {"value", {0.5, 0.0}}}}}};
    CHECK_THROWS_AS(MomentTable::from_json(no_unit), std::invalid_argument);
  }
}

TEST_CASE("concurrent readers see consistent values") {
  const MomentTable t(build(StateSpec::tmsv_state(0.4, 12, 12)));
  const auto indices = indices_up_to_degree(6);
  std::vector<Complex> serial;
  for (const MultiIndex& u : indices) serial.push_back(t.moment(u));

  const MomentTable fresh(build(StateSpec::tmsv_state(0.4, 12, 12)));
  std::vector<std::vector<Complex>> results(8);
  std::vector<std::thread> pool;
  for (int w = 0; w < 8; ++w)
    pool.emplace_back([&, w] {
      results[static_cast<std::size_t>(w)].reserve(indices.size());
      for (const MultiIndex& u : indices)
        results[static_cast<std::size_t>(w)].push_back(fresh.moment(u));
    });
  for (auto& th : pool) th.join();
  for (const auto& r : results)
    for (std::size_t i = 0; i < indices.size(); ++i) CHECK(r[i] == serial[i]);
}

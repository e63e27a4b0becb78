#include "ptwitness/fock_state.hpp"

#include <cmath>
#include <stdexcept>

#include "ptwitness/errors.hpp"

namespace ptwitness {

namespace {

double hermiticity_deviation(const Eigen::MatrixXcd& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

FockState::FockState(int dim_a, int dim_b, Eigen::MatrixXcd rho, std::string label)
    : dim_a_(dim_a), dim_b_(dim_b), rho_(std::move(rho)), label_(std::move(label)) {
  if (dim_a_ < 2 || dim_b_ < 2)
    throw std::invalid_argument("FockState: cutoffs must be >= 2");
  const Eigen::Index dim = static_cast<Eigen::Index>(dim_a_) * dim_b_;
  if (rho_.rows() != dim || rho_.cols() != dim)
    throw std::invalid_argument("FockState: matrix size does not match cutoffs");
  if (hermiticity_deviation(rho_) > 1e-12)
    throw std::invalid_argument("FockState: matrix is not Hermitian");
  if (std::abs(rho_.trace().real() - 1.0) > 1e-10 || std::abs(rho_.trace().imag()) > 1e-10)
    throw std::invalid_argument("FockState: trace is not 1");
}

double FockState::purity() const {
  return (rho_ * rho_).trace().real();
}

FockState partial_transpose(const FockState& s) {
  const int da = s.dim_a();
  const int db = s.dim_b();
  Eigen::MatrixXcd out(s.rho().rows(), s.rho().cols());
  for (int i = 0; i < da; ++i)
    for (int ip = 0; ip < da; ++ip)
      for (int j = 0; j < db; ++j)
        for (int jp = 0; jp < db; ++jp)
          out(i * db + j, ip * db + jp) = s.rho()(i * db + jp, ip * db + j);
  return FockState(da, db, std::move(out), s.label() + " [PT]");
}

double min_eigenvalue(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw std::invalid_argument("min_eigenvalue: matrix must be square and nonempty");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (hermiticity_deviation(m) > 1e-10 * scale)
    throw std::invalid_argument("min_eigenvalue: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("min_eigenvalue: eigensolver failed");
  return solver.eigenvalues().minCoeff();
}

double min_eigenvalue(const FockState& s) { return min_eigenvalue(s.rho()); }

Eigen::MatrixXcd annihilation_matrix(int dim) {
  if (dim < 1) throw std::invalid_argument("annihilation_matrix: dim must be >= 1");
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
  for (int i = 1; i < dim; ++i) a(i - 1, i) = std::sqrt(double(i));
  return a;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

namespace {

Eigen::MatrixXcd ladder_product(int creators, int annihilators, int dim) {
  const Eigen::MatrixXcd a = annihilation_matrix(dim);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(dim, dim);
  for (int i = 0; i < creators; ++i) out = a.adjoint() * out;
  for (int i = 0; i < annihilators; ++i) out = out * a;
  return out;
}

}  // namespace

Eigen::MatrixXcd monomial_matrix(const MultiIndex& u, int dim_a, int dim_b) {
  if (!u.valid()) throw std::invalid_argument("monomial_matrix: invalid index");
  return kron(ladder_product(u.n, u.m, dim_a), ladder_product(u.k, u.l, dim_b));
}

Complex expectation(const FockState& s, const MultiIndex& u) {
  if (!u.valid()) throw std::invalid_argument("expectation: invalid index");
  const int margin = std::min(s.dim_a(), s.dim_b()) - 1;
  if (u.degree() > margin)
    throw truncation_error("expectation: monomial degree " + std::to_string(u.degree()) +
                               " exceeds the cutoff margin " + std::to_string(margin) +
                               " of state '" + s.label() + "'",
                           tail_mass(s));
  const Eigen::MatrixXcd op = monomial_matrix(u, s.dim_a(), s.dim_b());
  // tr(rho · op) as an entrywise contraction
  return (s.rho().transpose().cwiseProduct(op)).sum();
}

Complex expectation(const FockState& s, const NormalPolynomial& p) {
  Complex out{};
  for (const auto& [u, c] : p.terms()) out += c * expectation(s, u);
  return out;
}

double tail_mass(const FockState& s) {
  const int da = s.dim_a();
  const int db = s.dim_b();
  double mass = 0.0;
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j)
      if (i >= da - 2 || j >= db - 2) mass += s.rho()(i * db + j, i * db + j).real();
  return mass;
}

}  // namespace ptwitness

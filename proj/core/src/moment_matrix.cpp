#include "ptwitness/moment_matrix.hpp"

#include <cstdlib>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "ptwitness/errors.hpp"

namespace ptwitness {

namespace {

int thread_cap() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("PTWITNESS_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1 && cap < hw) hw = cap;
  }
  return hw;
}

// Runs fn(t) on `count` items split across threads; each item writes its own
// slot, so the result does not depend on the schedule.
void parallel_for(long count, const std::function<void(long)>& fn) {
  const int threads = thread_cap();
  if (threads <= 1 || count < 64) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  const int used = static_cast<int>(std::min<long>(threads, count));
  pool.reserve(static_cast<std::size_t>(used));
  std::exception_ptr error;
  std::mutex error_mutex;
  for (int t = 0; t < used; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (long i = t; i < count; i += used) fn(i);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

NormalPolynomial symbolic_pt_entry(const NormalPolynomial& fi,
                                   const NormalPolynomial& fj) {
  return pt_transform(multiply(adjoint(fi), fj));
}

MomentMatrix build_matrix(const MomentTable& t, const OperatorBasis& basis) {
  const auto& elems = basis.elements();
  const long n = static_cast<long>(elems.size());
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      const int d = elems[static_cast<std::size_t>(i)].degree() +
                    elems[static_cast<std::size_t>(j)].degree();
      if (d > t.max_degree())
        throw degree_error("build_matrix: basis '" + basis.label() + "' pair (" +
                           std::to_string(i) + "," + std::to_string(j) +
                           ") has product degree " + std::to_string(d) +
                           " beyond the table's max_degree " +
                           std::to_string(t.max_degree()));
    }
  }

  Eigen::MatrixXcd entries(n, n);
  parallel_for(n * n, [&](long idx) {
    const long i = idx / n;
    const long j = idx % n;
    entries(i, j) = t.eval_pt(multiply(adjoint(elems[static_cast<std::size_t>(i)]),
                                       elems[static_cast<std::size_t>(j)]));
  });

  const double scale = std::max(1.0, entries.cwiseAbs().maxCoeff());
  const double dev = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
  if (dev > 1e-10 * scale)
    throw std::invalid_argument("build_matrix: entries violate the Hermiticity contract (deviation " +
                                std::to_string(dev) + ")");
  return MomentMatrix{std::move(entries), basis, t.label()};
}

double diagonal_scale(const Eigen::MatrixXcd& m) {
  double scale = 1.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    scale *= std::max(1.0, std::abs(m(i, i)));
  return scale;
}

double hermitian_determinant(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw std::invalid_argument("hermitian_determinant: matrix must be square and nonempty");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw std::invalid_argument("hermitian_determinant: input is not Hermitian");
  const Complex det = Eigen::PartialPivLU<Eigen::MatrixXcd>(m).determinant();
  const double guard = 1e-8 * diagonal_scale(m);
  if (std::abs(det.imag()) > guard)
    throw std::invalid_argument("hermitian_determinant: imaginary residue " +
                                std::to_string(det.imag()) + " exceeds the guard " +
                                std::to_string(guard));
  return det.real();
}

}  // namespace ptwitness

#include "ptwitness/operator_basis.hpp"

#include <stdexcept>

namespace ptwitness {

namespace {

// True when q == c · p for some scalar c (p, q nonzero).
bool is_scalar_multiple(const NormalPolynomial& p, const NormalPolynomial& q) {
  if (p.size() != q.size()) return false;
  Complex ratio{};
  bool have_ratio = false;
  auto it = q.terms().begin();
  for (const auto& [u, c] : p.terms()) {
    if (!(it->first == u)) return false;
    if (!have_ratio) {
      ratio = it->second / c;
      have_ratio = true;
    } else if (it->second != ratio * c) {
      return false;
    }
    ++it;
  }
  return true;
}

}  // namespace

OperatorBasis::OperatorBasis(std::vector<NormalPolynomial> elements, std::string label)
    : elements_(std::move(elements)), label_(std::move(label)) {
  if (elements_.empty())
    throw std::invalid_argument("OperatorBasis: empty element list");
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].is_zero())
      throw std::invalid_argument("OperatorBasis '" + label_ + "': element " +
                                  std::to_string(i) + " is zero");
    for (std::size_t j = i + 1; j < elements_.size(); ++j)
      if (is_scalar_multiple(elements_[i], elements_[j]))
        throw std::invalid_argument("OperatorBasis '" + label_ + "': elements " +
                                    std::to_string(i) + " and " + std::to_string(j) +
                                    " are scalar multiples of each other");
  }
}

int OperatorBasis::max_pair_degree() const {
  int dmax = 0;
  for (const auto& e : elements_) dmax = std::max(dmax, e.degree());
  return 2 * dmax;
}

OperatorBasis canonical_basis(int count) {
  std::vector<NormalPolynomial> elements;
  for (const MultiIndex& u : enumerate_indices(count))
    elements.push_back(NormalPolynomial::monomial(u));
  return OperatorBasis(std::move(elements), "canonical(" + std::to_string(count) + ")");
}

}  // namespace ptwitness

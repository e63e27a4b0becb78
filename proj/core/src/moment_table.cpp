#include "ptwitness/moment_table.hpp"

#include <mutex>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "ptwitness/errors.hpp"

namespace ptwitness {

using nlohmann::json;

MomentTable::MomentTable(FockState state)
    : state_(std::make_shared<const FockState>(std::move(state))),
      cache_(std::make_unique<Cache>()) {
  max_degree_ = std::min(state_->dim_a(), state_->dim_b()) - 2;
  label_ = state_->label();
}

MomentTable::MomentTable(MomentProvider provider, int max_degree, std::string label)
    : provider_(std::move(provider)),
      max_degree_(max_degree),
      label_(std::move(label)),
      cache_(std::make_unique<Cache>()) {
  if (!provider_) throw std::invalid_argument("MomentTable: null provider");
  if (max_degree_ < 0) throw std::invalid_argument("MomentTable: negative max_degree");
}

MomentTable MomentTable::from_json(const json& j) {
  if (!j.is_object() || !j.contains("moments"))
    throw std::invalid_argument("moment table JSON needs a \"moments\" array");
  MomentTable t(MomentProvider{[](const MultiIndex&) { return Complex{}; }}, 0,
                j.contains("label") ? j.at("label").get<std::string>() : "imported");
  t.provider_ = nullptr;
  t.is_imported_ = true;
  for (const auto& entry : j.at("moments")) {
    const auto& idx = entry.at("index");
    if (!idx.is_array() || idx.size() != 4)
      throw std::invalid_argument("moment index must be [n,m,k,l]");
    const MultiIndex u{idx.at(0).get<int>(), idx.at(1).get<int>(),
                       idx.at(2).get<int>(), idx.at(3).get<int>()};
    if (!u.valid()) throw std::invalid_argument("moment index has negative entries");
    const auto& val = entry.at("value");
    if (!val.is_array() || val.size() != 2)
      throw std::invalid_argument("moment value must be [re, im]");
    t.imported_[u] = Complex(val.at(0).get<double>(), val.at(1).get<double>());
  }
  if (!t.imported_.count(MultiIndex{}))
    throw std::invalid_argument("moment table must contain the index (0,0,0,0)");

  // Largest degree with complete coverage (an index counts as covered when it
  // or its conjugate partner is present).
  int complete = -1;
  for (int d = 0; d <= kMaxMonomialDegree; ++d) {
    bool all = true;
    for (const MultiIndex& u : indices_up_to_degree(d)) {
      if (u.degree() < d) continue;
      if (!t.imported_.count(u) && !t.imported_.count(u.adjoint())) {
        all = false;
        break;
      }
    }
    if (!all) break;
    complete = d;
  }
  if (complete < 0)
    throw std::invalid_argument("moment table does not cover degree 0");
  t.max_degree_ = complete;
  if (j.contains("max_degree"))
    t.max_degree_ = std::min(t.max_degree_, j.at("max_degree").get<int>());
  return t;
}

json MomentTable::to_json(int degree_limit) const {
  if (degree_limit < 0 || degree_limit > max_degree_)
    throw degree_error("to_json: degree limit " + std::to_string(degree_limit) +
                       " outside the table's range 0.." + std::to_string(max_degree_));
  json out;
  out["v"] = "v1";
  out["label"] = label_;
  out["max_degree"] = degree_limit;
  json moments = json::array();
  for (const MultiIndex& u : indices_up_to_degree(degree_limit)) {
    const Complex z = moment(u);
    json e;
    e["index"] = json::array({u.n, u.m, u.k, u.l});
    e["value"] = json::array({z.real(), z.imag()});
    moments.push_back(std::move(e));
  }
  out["moments"] = std::move(moments);
  return out;
}

Complex MomentTable::compute(const MultiIndex& u) const {
  if (state_) return expectation(*state_, u);
  if (provider_) return provider_(u);
  auto it = imported_.find(u);
  if (it != imported_.end()) return it->second;
  it = imported_.find(u.adjoint());
  if (it != imported_.end()) return std::conj(it->second);
  throw degree_error("moment table '" + label_ + "' has no entry for " + to_string(u));
}

Complex MomentTable::moment(const MultiIndex& u) const {
  if (!u.valid()) throw std::invalid_argument("moment: invalid index");
  if (u.degree() > max_degree_)
    throw degree_error("moment: degree " + std::to_string(u.degree()) +
                       " of " + to_string(u) + " exceeds the guaranteed max_degree " +
                       std::to_string(max_degree_) + " of table '" + label_ + "'");
  {
    std::shared_lock lock(cache_->mutex);
    if (cache_->enabled) {
      auto it = cache_->values.find(u);
      if (it != cache_->values.end()) return it->second;
    }
  }
  const Complex value = compute(u);
  {
    std::unique_lock lock(cache_->mutex);
    if (cache_->enabled) cache_->values.try_emplace(u, value);
  }
  return value;
}

Complex MomentTable::pt_moment(const MultiIndex& u) const {
  return moment(u.pt());
}

Complex MomentTable::eval(const NormalPolynomial& p) const {
  Complex out{};
  for (const auto& [u, c] : p.terms()) out += c * moment(u);
  return out;
}

Complex MomentTable::eval_pt(const NormalPolynomial& p) const {
  Complex out{};
  for (const auto& [u, c] : p.terms()) out += c * pt_moment(u);
  return out;
}

void MomentTable::set_cache_enabled(bool on) {
  std::unique_lock lock(cache_->mutex);
  cache_->enabled = on;
  if (!on) cache_->values.clear();
}

}  // namespace ptwitness

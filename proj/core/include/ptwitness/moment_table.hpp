#pragma once

#include <functional>
#include <map>
#include <memory>
#include <nlohmann/json_fwd.hpp>
#include <shared_mutex>
#include <string>

#include "ptwitness/fock_state.hpp"

namespace ptwitness {

using MomentProvider = std::function<Complex(const MultiIndex&)>;

/// Memoized source of normally ordered moments <ad^n a^m bd^k b^l> and of
/// the corresponding partial-transpose moments.
///
/// A table is backed by one of three sources: a FockState (moments come from
/// expectation()), a closed-form provider function, or a fixed imported map.
/// The cache is purely a memoization layer: disabling it never changes a
/// value. Concurrent readers are safe; every index behaves as if computed
/// exactly once.
class MomentTable {
 public:
  /// State-backed table. max_degree = min(dim_a, dim_b) - 2: a degree-d
  /// monomial couples Fock levels up to d apart, and one level is reserved
  /// to absorb the leakage that tail_mass watches for.
  explicit MomentTable(FockState state);

  MomentTable(MomentProvider provider, int max_degree, std::string label);

  /// Imported table: {"moments": [{"index": [n,m,k,l], "value": [re,im]}]}.
  /// max_degree is the largest d for which every index of degree <= d is
  /// covered directly or through its conjugate partner, clamped by an
  /// optional "max_degree" field.
  static MomentTable from_json(const nlohmann::json& j);

  /// Exports every moment of degree <= degree_limit in canonical order.
  nlohmann::json to_json(int degree_limit) const;

  /// <ad^n a^m bd^k b^l> of the source. Throws degree_error past max_degree.
  Complex moment(const MultiIndex& u) const;

  /// Moment of the partially transposed state: moment((n,m,l,k)).
  Complex pt_moment(const MultiIndex& u) const;

  /// sum of c_u · moment(u) over the terms of p.
  Complex eval(const NormalPolynomial& p) const;

  /// sum of c_u · pt_moment(u) over the terms of p.
  Complex eval_pt(const NormalPolynomial& p) const;

  int max_degree() const noexcept { return max_degree_; }
  const std::string& label() const noexcept { return label_; }

  /// Backing state, or nullptr for provider/imported tables.
  const FockState* state() const noexcept { return state_.get(); }

  void set_cache_enabled(bool on);

 private:
  struct Cache {
    std::shared_mutex mutex;
    std::map<MultiIndex, Complex, MultiIndexLess> values;
    bool enabled = true;
  };

  Complex compute(const MultiIndex& u) const;

  std::shared_ptr<const FockState> state_;
  MomentProvider provider_;
  std::map<MultiIndex, Complex, MultiIndexLess> imported_;
  bool is_imported_ = false;
  int max_degree_ = 0;
  std::string label_;
  std::unique_ptr<Cache> cache_;
};

}  // namespace ptwitness

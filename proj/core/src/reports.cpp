#include "ptwitness/reports.hpp"

#include <sstream>

namespace ptwitness {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json index_to_json(const MultiIndex& u) {
  return ordered_json::array({u.n, u.m, u.k, u.l});
}

MultiIndex index_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4)
    throw std::invalid_argument("index must be [n,m,k,l]");
  const MultiIndex u{j.at(0).get<int>(), j.at(1).get<int>(), j.at(2).get<int>(),
                     j.at(3).get<int>()};
  if (!u.valid()) throw std::invalid_argument("index has negative entries");
  return u;
}

ordered_json verdict_to_json(const Verdict& v) {
  ordered_json j;
  j["kind"] = to_string(v.kind);
  j["order_reached"] = v.order_reached;
  if (v.witness) {
    ordered_json w;
    ordered_json indices = ordered_json::array();
    for (const MultiIndex& u : v.witness->indices) indices.push_back(index_to_json(u));
    w["indices"] = std::move(indices);
    w["value"] = v.witness->value;
    j["witness"] = std::move(w);
  }
  return j;
}

ordered_json criterion_to_json(const CriterionReport& r) {
  ordered_json j;
  j["criterion"] = r.criterion;
  j["value"] = r.value;
  j["threshold"] = r.threshold;
  j["verdict"] = r.verdict;
  ordered_json witness = ordered_json::array();
  for (const MultiIndex& u : r.witness_indices) witness.push_back(index_to_json(u));
  j["witness_indices"] = std::move(witness);
  j["basis_label"] = r.basis_label;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

ordered_json hierarchy_to_json(const HierarchyResult& h) {
  ordered_json j;
  j["requested_order"] = h.requested_order;
  ordered_json dets = ordered_json::array();
  for (std::size_t i = 0; i < h.determinants.size(); ++i) {
    ordered_json row;
    row["order"] = static_cast<int>(i) + 1;
    row["value"] = h.determinants[i];
    row["scale"] = h.scales[i];
    dets.push_back(std::move(row));
  }
  j["determinants"] = std::move(dets);
  j["verdict"] = verdict_to_json(h.verdict);
  return j;
}

ordered_json minors_to_json(const MinorSearchResult& m, const Verdict& verdict) {
  ordered_json j;
  ordered_json best;
  best["value"] = m.value;
  best["scale"] = m.scale;
  ordered_json indices = ordered_json::array();
  for (const MultiIndex& u : m.indices) indices.push_back(index_to_json(u));
  best["indices"] = std::move(indices);
  j["best"] = std::move(best);
  j["minors_evaluated"] = m.minors_evaluated;
  j["verdict"] = verdict_to_json(verdict);
  return j;
}

namespace {

std::string csv_number(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace

std::string criteria_to_csv(const std::vector<CriterionReport>& rows) {
  std::string out = "criterion,value,threshold,verdict,basis_label\n";
  for (const auto& r : rows) {
    out += r.criterion + ',' + csv_number(r.value) + ',' + csv_number(r.threshold) +
           ',' + r.verdict + ',' + r.basis_label + '\n';
  }
  return out;
}

std::string hierarchy_to_csv(const HierarchyResult& h) {
  std::string out = "N,D_N,scale\n";
  for (std::size_t i = 0; i < h.determinants.size(); ++i)
    out += std::to_string(i + 1) + ',' + csv_number(h.determinants[i]) + ',' +
           csv_number(h.scales[i]) + '\n';
  return out;
}

}  // namespace ptwitness

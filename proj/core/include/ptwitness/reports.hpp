#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "ptwitness/criteria.hpp"

namespace ptwitness {

/// Schema version embedded in every machine-readable report.
inline constexpr const char* kSchemaVersion = "v1";

/// One named-criterion result row.
struct CriterionReport {
  std::string criterion;
  double value = 0.0;
  double threshold = 0.0;  // detection fires when value < -threshold
  std::string verdict;     // "npt_detected" | "inconclusive" | "error"
  std::vector<MultiIndex> witness_indices;
  std::string basis_label;
  std::string note;  // optional; carries error text for "error" rows
};

nlohmann::ordered_json index_to_json(const MultiIndex& u);
MultiIndex index_from_json(const nlohmann::json& j);

nlohmann::ordered_json verdict_to_json(const Verdict& v);
nlohmann::ordered_json criterion_to_json(const CriterionReport& r);
nlohmann::ordered_json hierarchy_to_json(const HierarchyResult& h);
nlohmann::ordered_json minors_to_json(const MinorSearchResult& m,
                                      const Verdict& verdict);

std::string criteria_to_csv(const std::vector<CriterionReport>& rows);
std::string hierarchy_to_csv(const HierarchyResult& h);

}  // namespace ptwitness

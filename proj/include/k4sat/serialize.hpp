#pragma once

// JSON shapes for the report types. nlohmann::json keeps object keys
// sorted, so serialized reports are deterministic byte for byte.

#include <string>

#include "json.hpp"

#include "k4sat/constructions.hpp"
#include "k4sat/enumeration.hpp"
#include "k4sat/saturation.hpp"

namespace k4sat {

inline void to_json(nlohmann::json& j, const SaturationVerdict& v) {
    j = nlohmann::json{{"h_free", v.h_free}, {"saturated", v.saturated}};
    if (v.free_witness) j["free_witness"] = *v.free_witness;
    if (v.nonedge_witness) j["nonedge_witness"] = {v.nonedge_witness->first, v.nonedge_witness->second};
}

inline void to_json(nlohmann::json& j, const PartLabels& parts) {
    j = nlohmann::json{
        {"I", parts.I},   {"A1", parts.A1}, {"A2", parts.A2},
        {"B1", parts.B1}, {"B2", parts.B2}, {"C", parts.C},
        {"M",
         {{parts.matching[0].first, parts.matching[0].second},
          {parts.matching[1].first, parts.matching[1].second}}},
    };
}

inline void to_json(nlohmann::json& j, const SpectrumSet& set) {
    j = nlohmann::json{{"n", set.n}, {"sizes", set.sizes}};
    if (set.formula_out_of_range) j["formula_out_of_range"] = true;
    if (!set.unwitnessed_sizes.empty()) j["unwitnessed_sizes"] = set.unwitnessed_sizes;
}

inline void to_json(nlohmann::json& j, const SpectrumReport& report) {
    nlohmann::json sizes = nlohmann::json::object();
    for (const auto& [m, census] : report.sizes) {
        nlohmann::json entry{{"labeled_count", census.labeled_count}};
        if (report.dedup) {
            entry["unlabeled_count"] = census.unlabeled_count;
            entry["certificates"] = census.certificates;
        }
        sizes[std::to_string(m)] = std::move(entry);
    }
    j = nlohmann::json{{"n", report.n}, {"checker_mode", checker_mode_name(report.mode)}, {"sizes", std::move(sizes)}};
}

inline void to_json(nlohmann::json& j, const CoverageResult& cov) {
    j = nlohmann::json{{"lo", cov.lo}, {"hi", cov.hi}, {"covered", cov.covered}};
    if (!cov.missing.empty()) j["missing"] = cov.missing;
}

inline void to_json(nlohmann::json& j, const SweepOutcome& sweep) {
    j = nlohmann::json{{"ok", sweep.ok},
                       {"graphs_scanned", sweep.leaves},
                       {"nonbipartite", sweep.nonbipartite},
                       {"saturated_nonbipartite", sweep.saturated_nonbipartite}};
    if (!sweep.counterexamples.empty()) j["counterexamples"] = sweep.counterexamples;
    if (!sweep.neighbor_bound_violations.empty()) j["neighbor_bound_violations"] = sweep.neighbor_bound_violations;
    if (!sweep.size_bound_violations.empty()) j["size_bound_violations"] = sweep.size_bound_violations;
}

}  // namespace k4sat

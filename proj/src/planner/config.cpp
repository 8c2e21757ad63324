// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#include "frontier/planner/config.hpp"

#include "frontier/core/error.hpp"

namespace frontier {

const char* to_string(PlannerMode m) {
    switch (m) {
        case PlannerMode::frontiernet: return "frontiernet";
        case PlannerMode::classic: return "classic";
        case PlannerMode::mapfree: return "mapfree";
    }
    return "?";
}

const char* to_string(GainMode m) { return m == GainMode::predicted ? "predicted" : "uniform"; }
const char* to_string(MaskMode m) { return m == MaskMode::distance_field ? "distance_field" : "discontinuity"; }

PlannerMode parse_planner_mode(const std::string& s) {
    if (s == "frontiernet") return PlannerMode::frontiernet;
    if (s == "classic") return PlannerMode::classic;
    if (s == "mapfree") return PlannerMode::mapfree;
    throw ConfigError("unknown planner mode '" + s + "'");
}

GainMode parse_gain_mode(const std::string& s) {
    if (s == "predicted") return GainMode::predicted;
    if (s == "uniform") return GainMode::uniform;
    throw ConfigError("unknown gain mode '" + s + "'");
}

MaskMode parse_mask_mode(const std::string& s) {
    if (s == "distance_field") return MaskMode::distance_field;
    if (s == "discontinuity") return MaskMode::discontinuity;
    throw ConfigError("unknown mask mode '" + s + "'");
}

void ExploreConfig::validate() const {
    cam.validate();
    oracle.validate();
    anchor.validate();
    const PlannerParams& p = planner;
    if (!(p.step_dist > 0.0 && p.step_angle > 0.0)) throw ConfigError("step thresholds must be positive");
    if (p.inflation < 0.0) throw ConfigError("inflation must be non-negative");
    if (!(p.d_floor > 0.0)) throw ConfigError("d_floor must be positive");
    if (p.entry_samples < 1) throw ConfigError("entry_samples must be positive");
    if (p.k_obs < 1) throw ConfigError("k_obs must be positive");
    if (p.max_steps < 0) throw ConfigError("max_steps must be non-negative");
    if (p.max_plan_retries < 1) throw ConfigError("max_plan_retries must be positive");
    if (p.classic_min_cluster < 1) throw ConfigError("classic_min_cluster must be positive");
    if (!(store.merge_dist > 0.0 && store.visit_dist >= 0.0)) throw ConfigError("store distances must be positive");
    if (store.g_min < 0.0) throw ConfigError("g_min must be non-negative");
    for (double pitch : p.sweep_pitches) {
        if (!(pitch > -90.0 && pitch < 90.0)) throw ConfigError("sweep pitches must lie in (-90, 90) degrees");
    }
}

}  // namespace frontier

// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frontier/anchor/anchor.hpp"
#include "frontier/store/frontier_store.hpp"

namespace frontier {

enum class PlannerMode { frontiernet, classic, mapfree };
enum class GainMode { predicted, uniform };
enum class MaskMode { distance_field, discontinuity };

const char* to_string(PlannerMode m);
const char* to_string(GainMode m);
const char* to_string(MaskMode m);
PlannerMode parse_planner_mode(const std::string& s);
GainMode parse_gain_mode(const std::string& s);
MaskMode parse_mask_mode(const std::string& s);

struct PlannerParams {
    PlannerMode mode = PlannerMode::frontiernet;
    GainMode gain_mode = GainMode::predicted;
    MaskMode mask_mode = MaskMode::distance_field;
    double step_dist = 0.1;     // meters per registered step
    double step_angle = 10.0;   // degrees per registered step
    double inflation = 0.2;     // meters
    double d_floor = 0.3;       // meters, utility distance floor
    int entry_samples = 20;
    int k_obs = 5;
    int max_steps = 1000;
    double arrive_dist = 0.3;
    double arrive_angle = 20.0;
    int max_plan_retries = 3;
    int classic_min_cluster = 10;
    double traj_step_dist = 0.1;
    double traj_step_angle = 10.0;
    std::vector<double> sweep_pitches{0.0, -35.0, 35.0};  // degrees; one 360 degree yaw sweep each
    bool initial_sweep = false;  // false: sweep only when the first view yields no frontier
};

struct ExploreConfig {
    CameraModel cam;
    OracleParams oracle;
    AnchorParams anchor;
    StoreParams store;
    PlannerParams planner;
    std::uint64_t seed = 0;

    /// Throws ConfigError on inconsistent settings.
    void validate() const;
};

}  // namespace frontier

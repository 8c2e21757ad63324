// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "frontier/planner/config.hpp"
#include "frontier/planner/goal.hpp"
#include "frontier/planner/tree.hpp"

namespace frontier {

enum class LogEvent { step, observe, replan, goal_reached, goal_invalidated, collision, done };
const char* to_string(LogEvent e);

struct LogRow {
    int step = 0;
    Pose pose;
    std::int64_t known_voxels = 0;
    double known_fraction = 0.0;
    std::int64_t goal_id = -1;
    LogEvent event = LogEvent::step;
};

struct ExplorationLog {
    std::int64_t total_voxels = 0;
    std::int64_t initial_known = 0;  // after the observation at the start pose
    std::vector<LogRow> rows;
    int steps = 0;
    bool collided = false;
    bool exhausted = false;  // ended because no goal remained
    bool initialized = false;
};

/// step,x,y,z,yaw_deg,pitch_deg,known_voxels,known_fraction,goal_id,event
void write_log_csv(std::ostream& os, const ExplorationLog& log);

/// Snapshot handed to observers after every observation epoch.
struct EpochView {
    int step;
    const VoxelGrid& map;
    const FrontierStore& store;
    const FrontierTree& tree;
    std::int64_t known_voxels;
};

struct ExploreHooks {
    std::function<void(const EpochView&)> on_epoch;
    /// Store snapshot CSV per epoch, keyed by step.
    std::function<void(int step, const FrontierStore&)> on_store_snapshot;
};

/// Runs one exploration episode. The predictor defaults to the oracle on
/// `scene`; pass another to plug in a learned model.
ExplorationLog run_exploration(const VoxelGrid& scene, const Pose& start, const ExploreConfig& cfg,
                               const ExploreHooks& hooks = {}, FrontierPredictor* predictor = nullptr,
                               Exec exec = Exec::parallel);

/// Applies the mask/gain ablations to a predicted raster.
void apply_ablation(FrontierRaster& raster, const DepthImage& depth, const ExploreConfig& cfg);

}  // namespace frontier

// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frontier/eval/metrics.hpp"

namespace frontier {

struct SuiteScene {
    std::string name;
    VoxelGrid grid;
    std::vector<Pose> starts;
};

struct NamedConfig {
    std::string name;
    ExploreConfig config;
};

struct SuiteSpec {
    std::vector<SuiteScene> scenes;
    std::vector<NamedConfig> configs;
    int repeats = 5;
    std::uint64_t base_seed = 0;
};

struct MetricsRecord {
    std::string scene;
    int start_idx = 0;
    std::string config;
    int repeat = 0;
    std::uint64_t seed = 0;
    double vox25 = 0.0;
    double vox50 = 0.0;
    double vox100 = 0.0;
    bool success = false;
    int steps = 0;
    double wallclock_ms = 0.0;
    bool collided = false;
    bool errored = false;
    bool exhausted = false;
    ExplorationLog log;  // kept in memory only
};

struct SummaryRecord {
    std::string scene;
    std::string config;
    int n = 0;
    double mean[3] = {0, 0, 0};  // vox25, vox50, vox100
    double std[3] = {0, 0, 0};
    double success_rate = 0.0;   // percent
    double success_std = 0.0;
    double steps_mean = 0.0;
    double steps_std = 0.0;
};

struct SuiteResult {
    std::vector<MetricsRecord> records;     // sorted by (scene, start, config, repeat)
    std::vector<SummaryRecord> summaries;   // per (scene, config), scene order then config order
    std::vector<std::pair<double, double>> budgets;  // per scene: steps for Vox@25 and Vox@50
};

/// FNV-1a of "scene|start|config|repeat", mixed with the base seed.
std::uint64_t cell_seed(const std::string& scene, int start, const std::string& config, int repeat,
                        std::uint64_t base);

/// Common Vox@25/Vox@50 budgets for one scene: the mean over configs of each
/// config's mean first step reaching 25% / 50% coverage (max_steps if never).
std::pair<double, double> stage_budgets(const std::vector<const MetricsRecord*>& cells,
                                        const std::vector<NamedConfig>& configs);

/// Runs every cell. `jobs` > 1 runs cells concurrently (each cell serial).
/// `timing` fills wallclock_ms; otherwise it stays 0 so reruns are identical.
SuiteResult run_suite(const SuiteSpec& spec, int jobs = 1, bool timing = false);

/// Free voxel centers with clearance, at the layer nearest `height` above
/// the floor, picked deterministically.
std::vector<Pose> choose_starts(const VoxelGrid& scene, int count, std::uint64_t seed, double height = 1.2,
                                double clearance = 0.4);

void write_suite_csv(std::ostream& os, const SuiteResult& result);
/// Per-scene mean differences (a - b); one row per scene.
void write_comparison(std::ostream& os, const SuiteResult& result, const std::string& a, const std::string& b);

}  // namespace frontier

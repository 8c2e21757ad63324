// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "frontier/eval/suite.hpp"
#include "frontier/planner/config.hpp"
#include "frontier/world/scene_gen.hpp"

namespace frontier {

struct ConfigKey {
    std::string name;
    std::string help;
};

/// Flat key = value settings for one exploration run.
class RunConfig {
public:
    ExploreConfig explore;

    /// Every key with its current value, in a fixed order.
    std::vector<std::pair<ConfigKey, std::string>> entries() const;
    /// Throws ConfigError for unknown keys or malformed values.
    void set(const std::string& key, const std::string& value);
    bool has_key(const std::string& key) const;

    /// Parses `key = value` lines; `#` starts a comment.
    void apply_text(std::string_view text);
    /// `key=value` command-line override.
    void apply_assignment(const std::string& kv);

    std::string dump() const;
};

/// Help text listing every RunConfig key with its default.
std::string describe_run_config_keys();

/// `name[=value]` pairs; the value part may be empty.
std::vector<std::pair<std::string, std::string>> parse_key_values(std::string_view text);

/// Named planner presets: df+gain, df+uni, discon+gain, discon+uni,
/// frontiernet (= df+gain), classic, mapfree.
void apply_preset(ExploreConfig& cfg, const std::string& name);
void apply_ablation_name(ExploreConfig& cfg, const std::string& ablation);

/// Suite description: suite keys plus RunConfig overrides shared by every
/// config.
struct SuiteConfig {
    std::vector<std::string> scene_files;
    int generate_scenes = 0;
    std::uint64_t scene_seed = 1;
    SceneParams scene_params;
    int starts_per_scene = 1;
    std::uint64_t start_seed = 0;
    std::vector<std::string> configs;
    int repeats = 5;
    std::uint64_t base_seed = 0;
    RunConfig run;
};

SuiteConfig parse_suite_config(std::string_view text);
/// Loads or generates the scenes and expands presets. Relative scene paths
/// resolve against `base_dir`.
SuiteSpec build_suite(const SuiteConfig& sc, const std::string& base_dir = ".");

}  // namespace frontier

// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#include "frontier/cli/run_config.hpp"

#include <charconv>
#include <filesystem>
#include <functional>
#include <sstream>

#include <fmt/format.h>

#include "frontier/core/error.hpp"
#include "frontier/world/io.hpp"

namespace frontier {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

double to_double(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        const double d = std::stod(v, &used);
        if (used == v.size()) return d;
    } catch (const std::exception&) {
    }
    throw ConfigError(fmt::format("{}: expected a number, got '{}'", key, v));
}

long long to_int(const std::string& key, const std::string& v) {
    long long out = 0;
    const auto r = std::from_chars(v.data(), v.data() + v.size(), out);
    if (r.ec != std::errc() || r.ptr != v.data() + v.size()) {
        throw ConfigError(fmt::format("{}: expected an integer, got '{}'", key, v));
    }
    return out;
}

std::uint64_t to_u64(const std::string& key, const std::string& v) {
    std::uint64_t out = 0;
    const auto r = std::from_chars(v.data(), v.data() + v.size(), out);
    if (r.ec != std::errc() || r.ptr != v.data() + v.size()) {
        throw ConfigError(fmt::format("{}: expected a non-negative integer, got '{}'", key, v));
    }
    return out;
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(v);
    while (std::getline(is, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::string num(double d) { return fmt::format("{}", d); }

struct Field {
    ConfigKey key;
    std::function<std::string(const ExploreConfig&)> get;
    std::function<void(ExploreConfig&, const std::string&)> set;
};

#define FRONTIER_DOUBLE(NAME, EXPR, HELP)                                                           \
    Field {                                                                                         \
        {NAME, HELP}, [](const ExploreConfig& c) { return num(c.EXPR); },                           \
            [](ExploreConfig& c, const std::string& v) { c.EXPR = to_double(NAME, v); }             \
    }
#define FRONTIER_INT(NAME, EXPR, HELP)                                                              \
    Field {                                                                                         \
        {NAME, HELP}, [](const ExploreConfig& c) { return std::to_string(c.EXPR); },                \
            [](ExploreConfig& c, const std::string& v) { c.EXPR = static_cast<int>(to_int(NAME, v)); } \
    }

const std::vector<Field>& fields() {
    static const std::vector<Field> table = {
        FRONTIER_INT("cam_width", cam.width, "sensor image width, pixels"),
        FRONTIER_INT("cam_height", cam.height, "sensor image height, pixels"),
        FRONTIER_DOUBLE("cam_fov_x", cam.fov_x_deg, "horizontal field of view, degrees"),
        FRONTIER_DOUBLE("cam_fov_y", cam.fov_y_deg, "vertical field of view, degrees"),
        FRONTIER_DOUBLE("cam_max_range", cam.max_range, "sensor range, meters"),
        FRONTIER_INT("gain_width", oracle.gain.cam_width, "virtual gain camera width, pixels"),
        FRONTIER_INT("gain_height", oracle.gain.cam_height, "virtual gain camera height, pixels"),
        FRONTIER_DOUBLE("r_df", oracle.r_df, "distance field truncation, pixels"),
        FRONTIER_DOUBLE("r_ray", oracle.r_ray, "ray gating radius, meters"),
        FRONTIER_DOUBLE("tau_d", oracle.tau_d, "depth discontinuity threshold, meters per pixel"),
        FRONTIER_INT("num_classes", oracle.num_classes, "info gain classes K"),
        FRONTIER_DOUBLE("g_max", oracle.g_max, "info gain bin ceiling, voxels (0: sensor frustum voxel count)"),
        FRONTIER_DOUBLE("sample_frac", oracle.gain.sample_frac, "fraction of frontier voxels evaluated exactly"),
        FRONTIER_INT("idw_k", oracle.gain.idw_k, "nearest samples used for gain interpolation"),
        FRONTIER_INT("dir_neighborhood", oracle.gain.dir_neighborhood, "edge of the direction window, voxels"),
        FRONTIER_DOUBLE("inclusion_l", anchor.inclusion_l, "mask recovery threshold, pixels"),
        FRONTIER_INT("grad_window", anchor.grad_window, "viewing angle averaging window, pixels"),
        FRONTIER_DOUBLE("grad_eps", anchor.grad_eps, "minimum averaged gradient, meters per pixel"),
        FRONTIER_INT("fgbg_offset", anchor.fgbg_offset, "foreground/background sample spacing, pixels"),
        FRONTIER_DOUBLE("sigma_px", anchor.sigma_px, "clustering scale for pixel position"),
        FRONTIER_DOUBLE("sigma_phi", anchor.sigma_phi, "clustering scale for viewing angle"),
        FRONTIER_DOUBLE("sigma_g_frac", anchor.sigma_g_frac, "clustering scale for gain, fraction of g_max"),
        FRONTIER_DOUBLE("cluster_eps", anchor.cluster_eps, "density neighbourhood radius, scaled units"),
        FRONTIER_INT("min_cluster_size", anchor.min_cluster_size, "minimum pixels per cluster"),
        FRONTIER_DOUBLE("merge_dist", store.merge_dist, "frontier merge distance, meters"),
        FRONTIER_DOUBLE("merge_angle", store.merge_angle, "frontier merge angle, degrees"),
        FRONTIER_DOUBLE("visit_dist", store.visit_dist, "visited-pose pruning distance, meters"),
        FRONTIER_DOUBLE("visit_angle", store.visit_angle, "visited-pose pruning angle, degrees"),
        FRONTIER_DOUBLE("g_min", store.g_min, "minimum adjusted gain, voxels"),
        FRONTIER_DOUBLE("traj_step_dist", planner.traj_step_dist, "trajectory memory spacing, meters"),
        FRONTIER_DOUBLE("traj_step_angle", planner.traj_step_angle, "trajectory memory spacing, degrees"),
        Field{{"mode", "frontiernet | classic | mapfree"},
              [](const ExploreConfig& c) { return std::string(to_string(c.planner.mode)); },
              [](ExploreConfig& c, const std::string& v) { c.planner.mode = parse_planner_mode(v); }},
        Field{{"gain_mode", "predicted | uniform"},
              [](const ExploreConfig& c) { return std::string(to_string(c.planner.gain_mode)); },
              [](ExploreConfig& c, const std::string& v) { c.planner.gain_mode = parse_gain_mode(v); }},
        Field{{"mask_mode", "distance_field | discontinuity"},
              [](const ExploreConfig& c) { return std::string(to_string(c.planner.mask_mode)); },
              [](ExploreConfig& c, const std::string& v) { c.planner.mask_mode = parse_mask_mode(v); }},
        FRONTIER_DOUBLE("step_dist", planner.step_dist, "translation per registered step, meters"),
        FRONTIER_DOUBLE("step_angle", planner.step_angle, "rotation per registered step, degrees"),
        FRONTIER_DOUBLE("inflation", planner.inflation, "obstacle inflation radius, meters"),
        FRONTIER_DOUBLE("d_floor", planner.d_floor, "utility distance floor, meters"),
        FRONTIER_INT("entry_samples", planner.entry_samples, "entry point samples along a tree edge"),
        FRONTIER_INT("k_obs", planner.k_obs, "steps between observations"),
        FRONTIER_INT("max_steps", planner.max_steps, "step limit"),
        FRONTIER_DOUBLE("arrive_dist", planner.arrive_dist, "goal arrival distance, meters"),
        FRONTIER_DOUBLE("arrive_angle", planner.arrive_angle, "goal arrival angle, degrees"),
        FRONTIER_INT("max_plan_retries", planner.max_plan_retries, "planning failures before a frontier is dropped"),
        FRONTIER_INT("classic_min_cluster", planner.classic_min_cluster, "classic baseline minimum cluster, voxels"),
        Field{{"sweep_pitches", "pitches of the initial 360 degree sweeps, degrees, comma separated"},
              [](const ExploreConfig& c) {
                  std::string s;
                  for (double p : c.planner.sweep_pitches) s += (s.empty() ? "" : ",") + num(p);
                  return s;
              },
              [](ExploreConfig& c, const std::string& v) {
                  c.planner.sweep_pitches.clear();
                  for (const auto& p : split_list(v)) c.planner.sweep_pitches.push_back(to_double("sweep_pitches", p));
              }},
        Field{{"initial_sweep", "always sweep at the start (false: only when the first view yields no frontier)"},
              [](const ExploreConfig& c) { return std::string(c.planner.initial_sweep ? "true" : "false"); },
              [](ExploreConfig& c, const std::string& v) {
                  if (v != "true" && v != "false") throw ConfigError("initial_sweep: expected true or false");
                  c.planner.initial_sweep = v == "true";
              }},
        Field{{"seed", "run seed"}, [](const ExploreConfig& c) { return std::to_string(c.seed); },
              [](ExploreConfig& c, const std::string& v) { c.seed = to_u64("seed", v); }},
    };
    return table;
}

#undef FRONTIER_DOUBLE
#undef FRONTIER_INT

}  // namespace

std::vector<std::pair<std::string, std::string>> parse_key_values(std::string_view text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::istringstream is{std::string(text)};
    std::string line;
    int n = 0;
    while (std::getline(is, line)) {
        ++n;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(n, "expected 'key = value'");
        const std::string key = trim(std::string_view(line).substr(0, eq));
        if (key.empty()) throw ParseError(n, "missing key");
        out.emplace_back(key, trim(std::string_view(line).substr(eq + 1)));
    }
    return out;
}

std::vector<std::pair<ConfigKey, std::string>> RunConfig::entries() const {
    std::vector<std::pair<ConfigKey, std::string>> out;
    for (const auto& f : fields()) out.emplace_back(f.key, f.get(explore));
    return out;
}

bool RunConfig::has_key(const std::string& key) const {
    for (const auto& f : fields())
        if (f.key.name == key) return true;
    return false;
}

void RunConfig::set(const std::string& key, const std::string& value) {
    for (const auto& f : fields()) {
        if (f.key.name == key) {
            f.set(explore, value);
            return;
        }
    }
    throw ConfigError("unknown config key '" + key + "'");
}

void RunConfig::apply_text(std::string_view text) {
    for (const auto& [k, v] : parse_key_values(text)) set(k, v);
}

void RunConfig::apply_assignment(const std::string& kv) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ConfigError("expected key=value, got '" + kv + "'");
    set(trim(std::string_view(kv).substr(0, eq)), trim(std::string_view(kv).substr(eq + 1)));
}

std::string RunConfig::dump() const {
    std::string out;
    for (const auto& [k, v] : entries()) out += k.name + " = " + v + "\n";
    return out;
}

std::string describe_run_config_keys() {
    const RunConfig defaults;
    std::string out = "Config keys (key = value, '#' comments):\n";
    for (const auto& [k, v] : defaults.entries()) {
        out += fmt::format("  {:<20} default {:<16} {}\n", k.name, v.empty() ? "\"\"" : v, k.help);
    }
    return out;
}

void apply_ablation_name(ExploreConfig& cfg, const std::string& ablation) {
    if (ablation == "df+gain") {
        cfg.planner.mask_mode = MaskMode::distance_field;
        cfg.planner.gain_mode = GainMode::predicted;
    } else if (ablation == "df+uni") {
        cfg.planner.mask_mode = MaskMode::distance_field;
        cfg.planner.gain_mode = GainMode::uniform;
    } else if (ablation == "discon+gain") {
        cfg.planner.mask_mode = MaskMode::discontinuity;
        cfg.planner.gain_mode = GainMode::predicted;
    } else if (ablation == "discon+uni") {
        cfg.planner.mask_mode = MaskMode::discontinuity;
        cfg.planner.gain_mode = GainMode::uniform;
    } else {
        throw ConfigError("unknown ablation '" + ablation + "'");
    }
}

void apply_preset(ExploreConfig& cfg, const std::string& name) {
    if (name == "classic") {
        cfg.planner.mode = PlannerMode::classic;
    } else if (name == "mapfree") {
        cfg.planner.mode = PlannerMode::mapfree;
        apply_ablation_name(cfg, "df+gain");
    } else if (name == "frontiernet") {
        cfg.planner.mode = PlannerMode::frontiernet;
        apply_ablation_name(cfg, "df+gain");
    } else {
        cfg.planner.mode = PlannerMode::frontiernet;
        apply_ablation_name(cfg, name);
    }
}

SuiteConfig parse_suite_config(std::string_view text) {
    SuiteConfig sc;
    for (const auto& [k, v] : parse_key_values(text)) {
        if (k == "scenes") {
            sc.scene_files = split_list(v);
        } else if (k == "generate_scenes") {
            sc.generate_scenes = static_cast<int>(to_int(k, v));
        } else if (k == "scene_seed") {
            sc.scene_seed = to_u64(k, v);
        } else if (k == "rooms_min") {
            sc.scene_params.rooms_min = static_cast<int>(to_int(k, v));
        } else if (k == "rooms_max") {
            sc.scene_params.rooms_max = static_cast<int>(to_int(k, v));
        } else if (k == "extent") {
            const auto parts = split_list(v);
            if (parts.size() != 3) throw ConfigError("extent: expected x,y,z");
            sc.scene_params.extent = Vec3(to_double(k, parts[0]), to_double(k, parts[1]), to_double(k, parts[2]));
        } else if (k == "furniture_per_room") {
            sc.scene_params.furniture_per_room = static_cast<int>(to_int(k, v));
        } else if (k == "resolution") {
            sc.scene_params.resolution = to_double(k, v);
        } else if (k == "starts_per_scene") {
            sc.starts_per_scene = static_cast<int>(to_int(k, v));
        } else if (k == "start_seed") {
            sc.start_seed = to_u64(k, v);
        } else if (k == "configs") {
            sc.configs = split_list(v);
        } else if (k == "repeats") {
            sc.repeats = static_cast<int>(to_int(k, v));
        } else if (k == "base_seed") {
            sc.base_seed = to_u64(k, v);
        } else {
            sc.run.set(k, v);
        }
    }
    if (sc.scene_files.empty() && sc.generate_scenes <= 0) throw ConfigError("suite lists no scenes");
    if (sc.configs.empty()) throw ConfigError("suite lists no configs");
    if (sc.repeats < 1) throw ConfigError("repeats must be positive");
    if (sc.starts_per_scene < 1) throw ConfigError("starts_per_scene must be positive");
    for (const auto& c : sc.configs) {
        ExploreConfig probe;
        apply_preset(probe, c);
    }
    return sc;
}

SuiteSpec build_suite(const SuiteConfig& sc, const std::string& base_dir) {
    SuiteSpec spec;
    spec.repeats = sc.repeats;
    spec.base_seed = sc.base_seed;
    for (const auto& f : sc.scene_files) {
        std::filesystem::path p(f);
        if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
        SuiteScene s;
        s.name = std::filesystem::path(f).stem().string();
        s.grid = read_scene_file(p);
        spec.scenes.push_back(std::move(s));
    }
    for (int i = 0; i < sc.generate_scenes; ++i) {
        SuiteScene s;
        const std::uint64_t seed = sc.scene_seed + static_cast<std::uint64_t>(i);
        s.name = fmt::format("gen{}", seed);
        s.grid = generate_scene(seed, sc.scene_params);
        spec.scenes.push_back(std::move(s));
    }
    for (auto& s : spec.scenes) {
        s.starts = choose_starts(s.grid, sc.starts_per_scene, sc.start_seed ^ cell_seed(s.name, 0, "start", 0, 0));
    }
    for (const auto& name : sc.configs) {
        NamedConfig nc{name, sc.run.explore};
        apply_preset(nc.config, name);
        nc.config.validate();
        spec.configs.push_back(std::move(nc));
    }
    return spec;
}

}  // namespace frontier

// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

// frontier: scene generation, oracle raster dumps, single explorations and
// evaluation suites from the command line.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "frontier/anchor/anchor.hpp"
#include "frontier/cli/run_config.hpp"
#include "frontier/core/error.hpp"
#include "frontier/eval/suite.hpp"
#include "frontier/oracle/predictor.hpp"
#include "frontier/planner/explorer.hpp"
#include "frontier/store/frontier_store.hpp"
#include "frontier/world/io.hpp"
#include "frontier/world/scene_gen.hpp"
#include "frontier/world/sensor.hpp"

namespace fs = std::filesystem;
using namespace frontier;

namespace {

enum Exit { kOk = 0, kUsage = 2, kBadInput = 3, kRunFailure = 4 };

// FRONTIER_LOG=info|debug turns on diagnostics on stderr.
int log_level() {
    static const int level = [] {
        const char* v = std::getenv("FRONTIER_LOG");
        if (!v) return 0;
        const std::string s(v);
        return s == "debug" ? 2 : s == "info" ? 1 : 0;
    }();
    return level;
}

template <typename... Args>
void log_info(fmt::format_string<Args...> f, Args&&... args) {
    if (log_level() >= 1) fmt::print(stderr, "[info] {}\n", fmt::format(f, std::forward<Args>(args)...));
}

template <typename... Args>
void log_debug(fmt::format_string<Args...> f, Args&&... args) {
    if (log_level() >= 2) fmt::print(stderr, "[debug] {}\n", fmt::format(f, std::forward<Args>(args)...));
}

// x,y,z[,yaw_deg[,pitch_deg]]
Pose parse_pose(const std::string& text) {
    std::vector<double> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            v.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw ConfigError("pose: bad number '" + item + "'");
        }
    }
    if (v.size() < 3 || v.size() > 5) throw ConfigError("pose: expected x,y,z[,yaw_deg[,pitch_deg]]");
    const double yaw = v.size() > 3 ? deg2rad(v[3]) : 0.0;
    const double pitch = v.size() > 4 ? deg2rad(v[4]) : 0.0;
    return Pose::from_yaw_pitch(Vec3(v[0], v[1], v[2]), yaw, pitch);
}

Vec3 parse_vec3(const std::string& text) {
    const Pose p = parse_pose(text);
    return p.position;
}

// A missing input path is a usage error; unreadable content is bad data.
const std::string& require_file(const std::string& path) {
    if (!fs::is_regular_file(path)) throw ConfigError("no such file: " + path);
    return path;
}

RunConfig load_run_config(const std::string& file, const std::vector<std::string>& sets) {
    RunConfig rc;
    if (!file.empty()) rc.apply_text(read_text_file(require_file(file)));
    for (const auto& s : sets) rc.apply_assignment(s);
    return rc;
}

Mask scale_classes(const Raster<std::uint8_t>& y, int num_classes) {
    Mask out(y.width(), y.height());
    const int scale = 255 / (num_classes - 1);
    for (std::size_t i = 0; i < y.data().size(); ++i) out.data()[i] = static_cast<std::uint8_t>(y.data()[i] * scale);
    return out;
}

// --- scene-gen -------------------------------------------------------------

struct SceneGenArgs {
    std::uint64_t seed = 1;
    SceneParams params;
    std::string extent = "4,4,2.5";
    std::string out;
};

int cmd_scene_gen(SceneGenArgs& a) {
    a.params.extent = parse_vec3(a.extent);
    const SceneLayout layout = generate_scene_layout(a.seed, a.params);
    write_scene_file(a.out, layout.grid);
    const VoxelGrid& g = layout.grid;
    const std::int64_t free = g.count(Cell::Free);
    fmt::print("dims {}x{}x{} voxels at {} m\nfree fraction {:.4f}\nrooms {}\n", g.dims().nx, g.dims().ny, g.dims().nz,
               g.resolution(), static_cast<double>(free) / static_cast<double>(g.size()), layout.rooms.size());
    return kOk;
}

// --- oracle-dump -----------------------------------------------------------

struct OracleDumpArgs {
    std::string scene;
    std::string pose;
    std::string config;
    std::vector<std::string> sets;
    std::string out_dir = ".";
    std::string anchor_csv;
    int image_id = 0;
};

int cmd_oracle_dump(const OracleDumpArgs& a) {
    const RunConfig rc = load_run_config(a.config, a.sets);
    rc.explore.validate();
    const VoxelGrid scene = read_scene_file(require_file(a.scene));
    const Pose pose = parse_pose(a.pose);
    const ExploreConfig& cfg = rc.explore;

    const DepthImage depth = render_depth(scene, pose, cfg.cam);
    FrontierRaster raster = oracle_predict(scene, pose, cfg.cam, depth, cfg.oracle);
    apply_ablation(raster, depth, cfg);
    log_info("oracle: {} frontier pixels, g_max {}", std::count(raster.f.data().begin(), raster.f.data().end(), 1),
             raster.g_max);

    const fs::path dir(a.out_dir);
    fs::create_directories(dir);
    write_pgm_file(dir / "f_p.pgm", raster.f_p);
    write_pgm_file(dir / "f_d.pgm", raster.f_d);
    write_pgm_file(dir / "f.pgm", raster.f);
    write_pgm_file(dir / "y.pgm", scale_classes(raster.y, raster.num_classes));
    write_fdep_file(dir / "d.fdep", raster.d_norm);
    write_fdep_file(dir / "g.fdep", raster.g);
    write_fdep_file(dir / "depth.fdep", depth);
    std::string params = rc.dump();
    params += fmt::format("# resolved\ng_max_resolved = {}\npose = {}\n", raster.g_max, a.pose);
    write_text_file(dir / "params.txt", params);

    if (!a.anchor_csv.empty()) {
        const AnchorResult ar = anchor_frontiers(raster, depth, pose, cfg.cam, cfg.anchor);
        std::ofstream os(a.anchor_csv);
        if (!os) throw Error("cannot write " + a.anchor_csv);
        fmt::print(os, "image_id,x,y,phi_deg,gain,depth,size\n");
        for (const auto& c : ar.clusters) {
            fmt::print(os, "{},{},{},{:.6f},{:.6f},{:.6f},{}\n", a.image_id, c.x, c.y, rad2deg(c.phi_bar), c.gain_bar,
                       c.depth_bar, c.size);
        }
        log_info("anchor: {} clusters", ar.clusters.size());
    }
    return kOk;
}

// --- explore ---------------------------------------------------------------

struct ExploreArgs {
    std::string scene;
    std::string start;
    std::string config;
    std::vector<std::string> sets;
    std::string mode;
    std::string ablation;
    int max_steps = -1;
    std::string log_out;
    std::string dump_frontiers;
};

int cmd_explore(const ExploreArgs& a) {
    RunConfig rc = load_run_config(a.config, a.sets);
    if (!a.mode.empty()) rc.set("mode", a.mode);
    if (!a.ablation.empty()) apply_ablation_name(rc.explore, a.ablation);
    if (a.max_steps >= 0) rc.explore.planner.max_steps = a.max_steps;
    rc.explore.validate();
    const VoxelGrid scene = read_scene_file(require_file(a.scene));
    const Pose start = parse_pose(a.start);

    ExploreHooks hooks;
    int epoch = 0;
    if (!a.dump_frontiers.empty()) {
        fs::create_directories(a.dump_frontiers);
        hooks.on_store_snapshot = [&](int step, const FrontierStore& store) {
            std::ofstream os(fs::path(a.dump_frontiers) / fmt::format("epoch_{:04d}_step_{:05d}.csv", epoch++, step));
            write_store_csv(os, store);
        };
    }
    hooks.on_epoch = [](const EpochView& v) {
        log_debug("epoch at step {}: {} known voxels, {} active frontiers", v.step, v.known_voxels,
                  v.store.active_count());
    };

    const ExplorationLog log = run_exploration(scene, start, rc.explore, hooks);
    if (a.log_out.empty() || a.log_out == "-") {
        write_log_csv(std::cout, log);
    } else {
        std::ofstream os(a.log_out);
        if (!os) throw Error("cannot write " + a.log_out);
        write_log_csv(os, log);
    }
    log_info("explore: {} steps, exhausted {}, collided {}", log.steps, log.exhausted, log.collided);
    return log.collided ? kRunFailure : kOk;
}

// --- evaluate --------------------------------------------------------------

struct EvaluateArgs {
    std::string suite;
    std::vector<std::string> sets;
    std::string out;
    std::string compare;
    int jobs = 1;
    bool timing = false;
};

int cmd_evaluate(const EvaluateArgs& a) {
    SuiteConfig sc = parse_suite_config(read_text_file(require_file(a.suite)));
    for (const auto& s : a.sets) sc.run.apply_assignment(s);
    std::string ca, cb;
    if (!a.compare.empty()) {
        const auto comma = a.compare.find(',');
        if (comma == std::string::npos) throw ConfigError("--compare expects a,b");
        ca = a.compare.substr(0, comma);
        cb = a.compare.substr(comma + 1);
        const auto& cs = sc.configs;
        if (std::find(cs.begin(), cs.end(), ca) == cs.end() || std::find(cs.begin(), cs.end(), cb) == cs.end()) {
            throw ConfigError("--compare names a config missing from the suite");
        }
    }
    const SuiteSpec spec = build_suite(sc, fs::path(a.suite).parent_path().string());
    log_info("evaluate: {} scenes, {} configs, {} repeats", spec.scenes.size(), spec.configs.size(), spec.repeats);
    const SuiteResult result = run_suite(spec, a.jobs, a.timing);

    std::ostringstream os;
    write_suite_csv(os, result);
    if (!a.compare.empty()) write_comparison(os, result, ca, cb);
    if (a.out.empty() || a.out == "-") {
        std::cout << os.str();
    } else {
        write_text_file(a.out, os.str());
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frontier exploration simulator with an oracle frontier predictor"};
    app.require_subcommand(1);
    app.footer("\n" + describe_run_config_keys());

    SceneGenArgs sg;
    auto* scene_gen = app.add_subcommand("scene-gen", "Generate a procedural indoor scene");
    scene_gen->add_option("--seed", sg.seed, "generator seed")->capture_default_str();
    scene_gen->add_option("--rooms-min", sg.params.rooms_min, "minimum room count")->capture_default_str();
    scene_gen->add_option("--rooms-max", sg.params.rooms_max, "maximum room count")->capture_default_str();
    scene_gen->add_option("--extent", sg.extent, "outer size x,y,z in meters")->capture_default_str();
    scene_gen->add_option("--resolution", sg.params.resolution, "voxel edge, meters")->capture_default_str();
    scene_gen->add_option("--door-width", sg.params.door_width, "doorway width, meters")->capture_default_str();
    scene_gen->add_option("--door-height", sg.params.door_height, "doorway height, meters")->capture_default_str();
    scene_gen->add_option("--min-room", sg.params.min_room_size, "smallest room side, meters")->capture_default_str();
    scene_gen->add_option("--furniture", sg.params.furniture_per_room, "obstacles per room")->capture_default_str();
    scene_gen->add_flag("--two-floors", sg.params.two_floors, "stack a second storey");
    scene_gen->add_option("-o,--out", sg.out, "output scene file")->required();

    OracleDumpArgs od;
    auto* oracle_dump = app.add_subcommand("oracle-dump", "Write oracle rasters for one camera pose");
    oracle_dump->add_option("scene", od.scene, "scene file")->required();
    oracle_dump->add_option("--pose", od.pose, "x,y,z[,yaw_deg[,pitch_deg]]")->required();
    oracle_dump->add_option("-c,--config", od.config, "run config file");
    oracle_dump->add_option("--set", od.sets, "key=value override (repeatable)");
    oracle_dump->add_option("-o,--out-dir", od.out_dir, "output directory")->capture_default_str();
    oracle_dump->add_option("--anchor", od.anchor_csv, "write anchored clusters to this CSV");
    oracle_dump->add_option("--image-id", od.image_id, "image_id column of the anchor CSV")->capture_default_str();

    ExploreArgs ex;
    auto* explore = app.add_subcommand("explore", "Run one exploration episode");
    explore->add_option("scene", ex.scene, "scene file")->required();
    explore->add_option("--start", ex.start, "x,y,z[,yaw_deg[,pitch_deg]]")->required();
    explore->add_option("-c,--config", ex.config, "run config file");
    explore->add_option("--set", ex.sets, "key=value override (repeatable)");
    explore->add_option("--mode", ex.mode, "frontiernet | classic | mapfree");
    explore->add_option("--ablation", ex.ablation, "df+gain | df+uni | discon+gain | discon+uni");
    explore->add_option("--max-steps", ex.max_steps, "step limit override");
    explore->add_option("-o,--log", ex.log_out, "log CSV (stdout when omitted)");
    explore->add_option("--dump-frontiers", ex.dump_frontiers, "directory for per-epoch store CSVs");

    EvaluateArgs ev;
    auto* evaluate = app.add_subcommand("evaluate", "Run an evaluation suite");
    evaluate->add_option("suite", ev.suite, "suite config file")->required();
    evaluate->add_option("--set", ev.sets, "key=value override applied to every config");
    evaluate->add_option("-o,--out", ev.out, "suite CSV (stdout when omitted)");
    evaluate->add_option("--compare", ev.compare, "a,b: append per-scene mean differences a - b");
    evaluate->add_option("-j,--jobs", ev.jobs, "concurrent suite cells")->capture_default_str()->check(CLI::PositiveNumber);
    evaluate->add_flag("--timing", ev.timing, "record wall-clock time per cell");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*scene_gen) return cmd_scene_gen(sg);
        if (*oracle_dump) return cmd_oracle_dump(od);
        if (*explore) return cmd_explore(ex);
        if (*evaluate) return cmd_evaluate(ev);
    } catch (const ConfigError& e) {
        fmt::print(stderr, "config error: {}\n", e.what());
        return kUsage;
    } catch (const InvalidPoseError& e) {
        fmt::print(stderr, "invalid pose: {}\n", e.what());
        return kBadInput;
    } catch (const ParseError& e) {
        fmt::print(stderr, "parse error: {}\n", e.what());
        return kBadInput;
    } catch (const Error& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return kBadInput;
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return kRunFailure;
    }
    return kUsage;
}

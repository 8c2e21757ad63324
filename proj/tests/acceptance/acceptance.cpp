// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Criterion numbers given as arguments
// restrict the run to those criteria.

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "configs.hpp"
#include "frontier/anchor/anchor.hpp"
#include "frontier/cli/run_config.hpp"
#include "frontier/eval/suite.hpp"
#include "frontier/oracle/predictor.hpp"
#include "frontier/planner/explorer.hpp"
#include "frontier/planner/graph.hpp"
#include "frontier/world/scene_gen.hpp"
#include "frontier/world/sensor.hpp"
#include "oracles.hpp"
#include "scenes.hpp"

using namespace frontier;
namespace ft = frontier::testing;

namespace {

using Clock = std::chrono::steady_clock;
constexpr double kInf = std::numeric_limits<double>::infinity();

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

CameraModel small_camera(int w, int h, double range = 2.5) {
    CameraModel cam;
    cam.width = w;
    cam.height = h;
    cam.fov_x_deg = 80.0;
    cam.fov_y_deg = 66.0;
    cam.max_range = range;
    return cam;
}

Pose random_free_pose(std::mt19937_64& rng, const VoxelGrid& g) {
    std::vector<std::int64_t> free;
    for (std::int64_t i = 0; i < g.size(); ++i)
        if (g.at(i) == Cell::Free) free.push_back(i);
    std::uniform_int_distribution<std::size_t> pick(0, free.size() - 1);
    std::uniform_real_distribution<double> jit(-0.45, 0.45), yaw(-kPi, kPi), pitch(-0.4, 0.4);
    const Vec3 p = g.center(free[pick(rng)]) + g.resolution() * Vec3(jit(rng), jit(rng), jit(rng));
    return Pose::from_yaw_pitch(p, yaw(rng), pitch(rng));
}

Outcome oracle_exactness() {
    std::mt19937_64 rng(101);
    const double r = OracleParams{}.r_df;
    int bad = 0;
    double kernel_s = 0.0;
    for (int t = 0; t < 100; ++t) {
        const double density = t % 10 == 0 ? 0.0 : std::pow(10.0, -3.0 * std::uniform_real_distribution<>(0, 1)(rng));
        const Mask m = ft::random_mask(rng, 64, 64, density);
        const auto t0 = Clock::now();
        const auto sq = squared_distance_transform(m);
        const auto df = distance_field(m, r);
        kernel_s += seconds_since(t0);
        const auto brute = ft::brute_squared_distance(m);
        bool ok = sq.data() == brute.data();
        for (std::size_t i = 0; i < m.size(); ++i) {
            const double want = brute[i] < 0 ? r : std::min(std::sqrt(double(brute[i])), r);
            ok = ok && df.d[i] == want;
        }
        bad += !ok;
    }
    return {bad == 0 && kernel_s < 5.0, fmt::format("{} of 100 masks differ, kernel time {:.3f} s", bad, kernel_s)};
}

Outcome frontier_voxel_exactness() {
    std::mt19937_64 rng(202);
    const CameraModel cam = small_camera(24, 18);
    int bad_sets = 0;
    double worst_depth = 0.0;
    for (int t = 0; t < 25; ++t) {
        SceneParams p;
        p.extent = Vec3(4.0, 4.0, 2.0);
        p.door_height = 1.6;
        p.rooms_min = 1;
        p.rooms_max = 2;
        p.furniture_per_room = 2;
        const VoxelGrid g = generate_scene(500 + static_cast<std::uint64_t>(t), p);
        const Pose pose = random_free_pose(rng, g);
        const ViewVolume vv = classify_view_volume(g, pose, cam);
        const auto fv = extract_frontier_voxels(vv, g);
        bad_sets += fv.voxels != ft::brute_frontier_voxels(g, ft::brute_view_volume(g, pose, cam));

        const DepthImage depth = render_depth(g, pose, cam);
        const Eigen::Matrix3d rot = pose.orientation.toRotationMatrix();
        for (int y = 0; y < cam.height; ++y)
            for (int x = 0; x < cam.width; ++x) {
                const double want = ft::brute_ray_range(g, pose.position, rot * cam.pixel_ray(x, y), cam.max_range);
                const double got = depth(x, y);
                const double err = std::isinf(want) ? (std::isinf(got) ? 0.0 : kInf) : std::abs(got - want);
                worst_depth = std::max(worst_depth, err);
            }
    }
    return {bad_sets == 0 && worst_depth <= 1e-9,
            fmt::format("{} of 25 frontier sets differ, worst depth error {:.2e} m", bad_sets, worst_depth)};
}

Outcome info_gain_oracle() {
    SceneParams sp;
    sp.extent = Vec3(6.0, 6.0, 2.5);
    sp.rooms_min = sp.rooms_max = 2;
    const VoxelGrid g = generate_scene(33, sp);
    const CameraModel cam = ft::desk_config().cam;
    const Pose pose = choose_starts(g, 1, 7).front();
    const ViewVolume vv = classify_view_volume(g, pose, cam);
    GainParams gp = ft::desk_config().oracle.gain;

    gp.sample_frac = 1.0;
    FrontierVoxelSet exact = extract_frontier_voxels(vv, g);
    voxel_info_gain(g, vv, exact, cam, pose.position, gp);
    const CameraModel vcam = gain_camera(cam, gp);
    std::size_t mismatched = 0;
    for (std::size_t i = 0; i < exact.size(); ++i) {
        const Vec3 c = g.center(exact.voxels[i]);
        const Vec3 dir = frontier_view_direction(g, vv, exact.voxels[i], gp.dir_neighborhood, c - pose.position);
        mismatched += exact.gain[i] != double(ft::brute_visible_out(g, vv.in, Pose::looking_along(c, dir), vcam));
    }

    gp.sample_frac = 0.1;
    FrontierVoxelSet fv = extract_frontier_voxels(vv, g);
    voxel_info_gain(g, vv, fv, cam, pose.position, gp);
    std::vector<std::size_t> samples;
    for (std::size_t i = 0; i < fv.size(); ++i)
        if (fv.sampled[i]) samples.push_back(i);
    std::size_t outside = 0;
    for (std::size_t i = 0; i < fv.size(); ++i) {
        if (fv.sampled[i]) continue;
        std::vector<std::pair<double, std::size_t>> near;
        for (std::size_t s = 0; s < samples.size(); ++s)
            near.emplace_back((g.center(fv.voxels[samples[s]]) - g.center(fv.voxels[i])).squaredNorm(), s);
        std::sort(near.begin(), near.end());
        near.resize(std::min<std::size_t>(4, near.size()));
        double lo = kInf, hi = -kInf;
        for (auto& [d, s] : near) lo = std::min(lo, fv.gain[samples[s]]), hi = std::max(hi, fv.gain[samples[s]]);
        outside += fv.gain[i] < lo - 1e-9 || fv.gain[i] > hi + 1e-9;
    }
    return {exact.size() > 0 && mismatched == 0 && outside == 0,
            fmt::format("{} frontier voxels, {} exact mismatches; {} of {} interpolated gains outside their 4 nearest samples",
                        exact.size(), mismatched, outside, fv.size() - samples.size())};
}

Outcome bin_round_trip() {
    const int K = 11;
    const double gmax = OracleParams{}.resolved_g_max(CameraModel{}, 0.1);
    const double width = gmax / (K - 1);
    int above = 0, wide = 0;
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double g = 2.0 * gmax * i / 999.0;
        const double back = unbin_gain(bin_gain(g, K, gmax), K, gmax);
        above += back > g;
        wide += g - back >= width;
        worst = std::max(worst, g - back);
    }
    return {above == 0 && wide == 0,
            fmt::format("g_max {:.0f}: {} values round up, {} gaps >= bin width {:.1f}, worst gap {:.1f}", gmax, above,
                        wide, width, worst)};
}

Outcome anchoring_consistency() {
    std::mt19937_64 rng(505);
    const AnchorParams ap = ft::desk_config().anchor;
    int round_trip_bad = 0;
    for (int t = 0; t < 100; ++t) {
        const Mask m = ft::random_mask(rng, 64, 64, std::pow(10.0, -2.5 * std::uniform_real_distribution<>(0, 1)(rng)));
        round_trip_bad += recover_mask(distance_field(m, OracleParams{}.r_df).d, 1.0).data() != m.data();
    }

    const ExploreConfig cfg = ft::desk_config();
    int far = 0, lifted = 0, good = 0;
    for (int t = 0; t < 100; ++t) {
        const auto s = ft::doorway_scene(rng);
        const DepthImage depth = render_depth(s.grid, s.pose, cfg.cam);
        const auto raster = oracle_predict(s.grid, s.pose, cfg.cam, depth, cfg.oracle);
        const auto res = anchor_frontiers(raster, depth, s.pose, cfg.cam, ap);
        const Mask src = recover_mask(raster.d, ap.inclusion_l);
        bool ok = !res.frontiers.empty();
        for (const auto& f : res.frontiers) {
            ++lifted;
            const auto uv = cfg.cam.project(s.pose.to_camera(f.p_bar));
            double best = kInf;
            for (int y = 0; uv && y < src.height(); ++y)
                for (int x = 0; x < src.width(); ++x)
                    if (src(x, y)) best = std::min(best, std::hypot(uv->x() - (x + 0.5), uv->y() - (y + 0.5)));
            far += best > ap.inclusion_l + ap.sigma_px;
            const auto c = s.grid.index_of(f.p_bar);
            ok = ok && c && s.grid.at(s.grid.linear(*c)) == Cell::Free;
        }
        good += ok;
    }
    return {round_trip_bad == 0 && far == 0 && good >= 90,
            fmt::format("{} of 100 masks fail the round trip; {} of {} anchors reproject beyond l+sigma; "
                        "{}/100 doorway scenes anchored in free space",
                        round_trip_bad, far, lifted, good)};
}

Outcome lifecycle_invariants() {
    SceneParams sp;
    sp.extent = Vec3(6.0, 6.0, 2.5);
    sp.rooms_min = 2;
    sp.rooms_max = 3;
    sp.furniture_per_room = 1;
    int drops = 0, gain_rises = 0, not_maximal = 0, differ = 0, epochs = 0;
    for (int run = 0; run < 10; ++run) {
        const VoxelGrid g = generate_scene(700 + static_cast<std::uint64_t>(run / 2), sp);
        const Pose start = choose_starts(g, 2, 9)[static_cast<std::size_t>(run % 2)];
        ExploreConfig cfg = ft::desk_config(run % 5 == 4 ? PlannerMode::mapfree : PlannerMode::frontiernet);
        cfg.seed = 40 + static_cast<std::uint64_t>(run);
        std::map<std::int64_t, std::pair<std::int64_t, double>> last;
        ExploreHooks hooks;
        hooks.on_epoch = [&](const EpochView& v) {
            ++epochs;
            not_maximal += !v.store.is_maximal(cfg.store.merge_dist, cfg.store.merge_angle);
            for (const auto& [id, f] : v.store.frontiers()) {
                auto it = last.find(id);
                if (it != last.end() && it->second.first == f.revision) gain_rises += f.gain > it->second.second + 1e-9;
                last[id] = {f.revision, f.gain};
            }
        };
        const auto a = run_exploration(g, start, cfg, hooks);
        const auto b = run_exploration(g, start, cfg);
        for (std::size_t i = 1; i < a.rows.size(); ++i) drops += a.rows[i].known_voxels < a.rows[i - 1].known_voxels;
        std::ostringstream la, lb;
        write_log_csv(la, a);
        write_log_csv(lb, b);
        differ += la.str() != lb.str();
    }
    return {drops == 0 && gain_rises == 0 && not_maximal == 0 && differ == 0,
            fmt::format("{} epochs: {} coverage drops, {} gain increases, {} non-maximal stores, {} of 10 logs differ",
                        epochs, drops, gain_rises, not_maximal, differ)};
}

// The scaled comparison suite: 8 scenes x 5 starts x 5 configurations.
const char* kSuite = R"(generate_scenes = 8
scene_seed = 100
rooms_min = 2
rooms_max = 3
extent = 6,6,2.5
furniture_per_room = 1
starts_per_scene = 5
repeats = 1
configs = df+gain, df+uni, discon+uni, classic, mapfree
cam_width = 64
cam_height = 64
gain_width = 24
gain_height = 24
r_df = 4
tau_d = 0.3
sigma_px = 4
min_cluster_size = 3
inclusion_l = 1.5
g_max = 6000
max_steps = 250
)";

struct SuiteRun {
    SuiteResult result;
    double seconds = 0.0;

    std::vector<const MetricsRecord*> of(const std::string& config) const {
        std::vector<const MetricsRecord*> out;
        for (const auto& r : result.records)
            if (r.config == config) out.push_back(&r);
        return out;
    }
};

double median_of(const std::vector<const MetricsRecord*>& rs, double MetricsRecord::*field) {
    std::vector<double> v;
    for (const auto* r : rs) v.push_back(r->*field);
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double mean_of(const std::vector<const MetricsRecord*>& rs, double MetricsRecord::*field) {
    double s = 0.0;
    for (const auto* r : rs) s += r->*field;
    return s / double(rs.size());
}

Outcome ablation_ordering(const SuiteRun& s) {
    const auto gain = s.of("df+gain"), uni = s.of("df+uni"), discon = s.of("discon+uni");
    const double g25 = median_of(gain, &MetricsRecord::vox25), g50 = median_of(gain, &MetricsRecord::vox50);
    const double u25 = median_of(uni, &MetricsRecord::vox25);
    const double d25 = median_of(discon, &MetricsRecord::vox25), d50 = median_of(discon, &MetricsRecord::vox50);
    return {g25 >= u25 && g25 >= d25 && g50 >= d50 && s.seconds < 600.0,
            fmt::format("median Vox@25 df+gain {:.2f} / df+uni {:.2f} / discon+uni {:.2f}; Vox@50 df+gain {:.2f} / "
                        "discon+uni {:.2f}; suite {:.0f} s",
                        g25, u25, d25, g50, d50, s.seconds)};
}

Outcome baseline_comparison(const SuiteRun& s) {
    const double fn = mean_of(s.of("df+gain"), &MetricsRecord::vox50);
    const double cl = mean_of(s.of("classic"), &MetricsRecord::vox50);
    return {fn - cl > 0.0, fmt::format("mean Vox@50 frontiernet {:.2f} vs classic {:.2f}, margin {:+.2f} points ({:+.1f}%)",
                                       fn, cl, fn - cl, 100.0 * (fn - cl) / cl)};
}

Outcome success_rule(const SuiteRun& s) {
    const auto runs = s.of("df+gain");
    int ok = 0;
    for (const auto* r : runs) ok += r->success;
    const double rate = double(ok) / double(runs.size());

    VoxelGrid room({40, 40, 25}, 0.1, Vec3::Zero(), Cell::Free);
    for (int k = 0; k < 25; ++k)
        for (int j = 0; j < 40; ++j)
            for (int i = 0; i < 40; ++i)
                if (i == 0 || j == 0 || k == 0 || i == 39 || j == 39 || k == 24) room.set(i, j, k, Cell::Occupied);
    ExploreConfig cfg = ft::desk_config();
    cfg.planner.max_steps = 1500;
    const auto log = run_exploration(room, Pose::from_yaw_pitch(Vec3(2.0, 2.0, 1.2), 0.3, 0.0), cfg);
    const double cov = log.rows.back().known_fraction;
    return {rate >= 0.8 && log.exhausted && !log.collided && cov >= 0.95,
            fmt::format("{}/{} suite runs succeed; sealed room {:.3f} coverage, {} after {} steps", ok, runs.size(), cov,
                        log.exhausted ? "exhausted" : "not exhausted", log.steps)};
}

Outcome mapfree_viability(const SuiteRun& s) {
    const auto runs = s.of("mapfree");
    int completed = 0, zero = 0;
    for (const auto* r : runs) {
        if (r->collided || r->errored) continue;
        ++completed;
        zero += !(r->vox100 > 0.0);
    }
    const double mf = mean_of(runs, &MetricsRecord::vox100), fn = mean_of(s.of("df+gain"), &MetricsRecord::vox100);
    return {completed >= 0.7 * double(runs.size()) && zero == 0,
            fmt::format("{}/{} runs complete without collision, {} with zero Vox@100; mean Vox@100 {:.2f} vs mapped "
                        "{:.2f}",
                        completed, runs.size(), zero, mf, fn)};
}

Outcome planner_optimality() {
    std::mt19937_64 rng(1111);
    int queries = 0, wrong = 0;
    for (int t = 0; t < 50; ++t) {
        const VoxelGrid g = ft::random_maze(rng, {16, 14, 6}, 0.18, 0.05);
        const double infl = (t % 3) * 0.1;
        const Traversability tr(g, infl);
        const auto clear = ft::brute_clear(g, infl);
        for (int q = 0; q < 4; ++q) {
            const auto s = ft::random_free(rng, g), e = ft::random_free(rng, g);
            const double want = ft::brute_dijkstra(g, s, e, ft::brute_edge(g, clear, s, e));
            double cost = 0.0;
            const auto path = astar(tr, s, e, &cost);
            ++queries;
            if (path.has_value() != std::isfinite(want)) ++wrong;
            else if (path && std::abs(cost - want) > 1e-9 * std::max(1.0, want)) ++wrong;
        }
    }
    std::uniform_real_distribution<double> u(0.0, 5.0), gd(0.0, 1000.0), scale(0.01, 100.0);
    int changed = 0;
    for (int t = 0; t < 100; ++t) {
        FrontierStore a, b;
        const double k = scale(rng);
        const int n = 1 + static_cast<int>(rng() % 30);
        for (int i = 0; i < n; ++i) {
            Frontier3D f;
            f.p_bar = Vec3(u(rng), u(rng), u(rng));
            f.q_bar = Vec3::UnitX();
            f.gain = f.gain0 = std::round(gd(rng));
            a.merge_or_insert(f, 1e-6, 1e-6);
            f.gain *= k;
            f.gain0 *= k;
            b.merge_or_insert(f, 1e-6, 1e-6);
        }
        const Vec3 robot(u(rng), u(rng), u(rng));
        changed += select_goal(a, robot, 0.3) != select_goal(b, robot, 0.3);
    }
    return {wrong == 0 && changed == 0,
            fmt::format("{} of {} A* queries disagree with Dijkstra; {} of 100 stores change argmax under scaling",
                        wrong, queries, changed)};
}

}  // namespace

int main(int argc, char** argv) {
    std::set<std::size_t> only;
    for (int i = 1; i < argc; ++i) only.insert(static_cast<std::size_t>(std::stoul(argv[i])));
    using Check = std::function<Outcome()>;
    std::optional<SuiteRun> suite;
    auto with_suite = [&](Outcome (*f)(const SuiteRun&)) {
        return [&suite, f] {
            if (!suite) {
                const auto t0 = Clock::now();
                const SuiteSpec spec = build_suite(parse_suite_config(kSuite));
                suite = SuiteRun{run_suite(spec, 1), 0.0};
                suite->seconds = seconds_since(t0);
            }
            return f(*suite);
        };
    };
    const std::vector<std::pair<std::string, Check>> checks{
        {"oracle exactness", oracle_exactness},
        {"frontier-voxel exactness", frontier_voxel_exactness},
        {"info-gain oracle", info_gain_oracle},
        {"bin round-trip", bin_round_trip},
        {"anchoring consistency", anchoring_consistency},
        {"lifecycle invariants", lifecycle_invariants},
        {"ablation ordering", with_suite(ablation_ordering)},
        {"baseline comparison", with_suite(baseline_comparison)},
        {"success rule", with_suite(success_rule)},
        {"map-free viability", with_suite(mapfree_viability)},
        {"planner optimality", planner_optimality},
    };
    int failed = 0, ran = 0;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        if (!only.empty() && !only.count(i + 1)) continue;
        ++ran;
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = checks[i].second();
        } catch (const std::exception& e) {
            o = {false, fmt::format("threw: {}", e.what())};
        }
        failed += !o.pass;
        fmt::print("[{}] {:>2} {}: {} ({:.1f} s)\n", o.pass ? "PASS" : "FAIL", i + 1, checks[i].first, o.detail,
                   seconds_since(t0));
        std::fflush(stdout);
    }
    fmt::print("{} of {} criteria pass\n", ran - failed, ran);
    return failed == 0 ? 0 : 1;
}

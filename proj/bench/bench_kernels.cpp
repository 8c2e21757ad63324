// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

// Serial reference vs OpenMP kernels. Argument 0 runs Exec::serial, 1 runs
// Exec::parallel.

#include <benchmark/benchmark.h>

#include <random>

#include "frontier/oracle/predictor.hpp"
#include "frontier/planner/goal.hpp"
#include "frontier/planner/path.hpp"
#include "frontier/world/scene_gen.hpp"
#include "frontier/world/sensor.hpp"

using namespace frontier;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

struct Fixture {
    VoxelGrid scene;
    Pose pose;
    CameraModel cam;
    DepthImage depth;
    ViewVolume vv;
    FrontierVoxelSet ft;

    Fixture() : scene(make_scene()) {
        cam.width = 160;
        cam.height = 160;
        pose = Pose::from_yaw_pitch(Vec3(1.5, 1.5, 1.2), 0.6, 0.0);
        for (std::int64_t i = 0; scene.at_point(pose.position) != Cell::Free; ++i)
            pose.position = scene.center(i);
        depth = render_depth(scene, pose, cam);
        vv = classify_view_volume(scene, pose, cam, depth);
        ft = extract_frontier_voxels(vv, scene);
    }

    static VoxelGrid make_scene() {
        SceneParams p;
        p.extent = Vec3(8.0, 8.0, 2.5);
        p.rooms_min = p.rooms_max = 3;
        p.furniture_per_room = 2;
        return generate_scene(7, p);
    }
};

const Fixture& fixture() {
    static const Fixture f;
    return f;
}

void BM_DistanceTransform(benchmark::State& s) {
    std::mt19937_64 rng(1);
    Mask m(480, 480, 0);
    for (auto& v : m.data()) v = rng() % 500 == 0;
    for (auto _ : s) benchmark::DoNotOptimize(squared_distance_transform(m, exec_of(s)));
}

void BM_RenderDepth(benchmark::State& s) {
    const auto& f = fixture();
    for (auto _ : s) benchmark::DoNotOptimize(render_depth(f.scene, f.pose, f.cam, exec_of(s)));
}

void BM_ViewVolume(benchmark::State& s) {
    const auto& f = fixture();
    for (auto _ : s) benchmark::DoNotOptimize(classify_view_volume(f.scene, f.pose, f.cam, f.depth, exec_of(s)));
}

void BM_VoxelInfoGain(benchmark::State& s) {
    const auto& f = fixture();
    GainParams gp;
    gp.cam_width = 24;
    gp.cam_height = 24;
    for (auto _ : s) {
        FrontierVoxelSet ft = f.ft;
        voxel_info_gain(f.scene, f.vv, ft, f.cam, f.pose.position, gp, exec_of(s));
        benchmark::DoNotOptimize(ft.gain.data());
    }
}

void BM_ProjectPoints(benchmark::State& s) {
    const auto& f = fixture();
    std::vector<Vec3> pts;
    std::vector<double> gains;
    for (auto v : f.ft.voxels) {
        pts.push_back(f.scene.center(v));
        gains.push_back(1.0);
    }
    for (auto _ : s) benchmark::DoNotOptimize(project_points(pts, gains, f.pose, f.cam, 0.05, exec_of(s)));
}

void BM_Traversability(benchmark::State& s) {
    const auto& f = fixture();
    for (auto _ : s) benchmark::DoNotOptimize(Traversability(f.scene, 0.3, exec_of(s)));
}

void BM_MapFrontiers(benchmark::State& s) {
    const auto& f = fixture();
    VoxelGrid map(f.scene.dims(), f.scene.resolution(), f.scene.origin(), Cell::Unknown);
    integrate_observation(map, f.pose, f.cam, f.depth);
    for (auto _ : s) benchmark::DoNotOptimize(map_frontier_voxels(map, exec_of(s)));
}

void BM_OraclePredict(benchmark::State& s) {
    const auto& f = fixture();
    OracleParams op;
    op.gain.cam_width = 24;
    op.gain.cam_height = 24;
    for (auto _ : s) benchmark::DoNotOptimize(oracle_predict(f.scene, f.pose, f.cam, f.depth, op, exec_of(s)));
}

}  // namespace

BENCHMARK(BM_DistanceTransform)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RenderDepth)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ViewVolume)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VoxelInfoGain)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProjectPoints)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Traversability)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MapFrontiers)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OraclePredict)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

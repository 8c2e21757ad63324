// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "frontier/core/error.hpp"
#include "frontier/world/io.hpp"
#include "frontier/world/raycast.hpp"
#include "frontier/world/scene_gen.hpp"
#include "frontier/world/sensor.hpp"
#include "oracles.hpp"

using namespace frontier;
namespace ft = frontier::testing;

namespace {

VoxelGrid random_grid(std::mt19937_64& rng, Dims d, double occupied) {
    VoxelGrid g(d, 0.1, Vec3(-0.3, 0.2, 0.0), Cell::Free);
    std::bernoulli_distribution occ(occupied);
    for (std::int64_t i = 0; i < g.size(); ++i)
        if (occ(rng)) g.set(i, Cell::Occupied);
    return g;
}

Vec3 random_point_in(std::mt19937_64& rng, const VoxelGrid& g) {
    std::uniform_real_distribution<double> u(0.02, 0.98);
    const Dims& d = g.dims();
    return g.origin() + g.resolution() * Vec3(u(rng) * d.nx, u(rng) * d.ny, u(rng) * d.nz);
}

Vec3 random_dir(std::mt19937_64& rng) {
    std::normal_distribution<double> n;
    return Vec3(n(rng), n(rng), n(rng)).normalized();
}

}  // namespace

TEST_CASE("traverse_ray visits exactly the voxels the segment crosses, in order") {
    std::mt19937_64 rng(11);
    const VoxelGrid g = random_grid(rng, {9, 7, 6}, 0.0);
    for (int trial = 0; trial < 300; ++trial) {
        const Vec3 o = random_point_in(rng, g);
        const Vec3 d = random_dir(rng);
        const double t_max = std::uniform_real_distribution<double>(0.05, 1.5)(rng);
        std::set<std::int64_t> seen;
        double last_exit = 0.0;
        bool contiguous = true;
        traverse_ray(g, o, d, t_max, [&](std::int64_t idx, const Index3& c, double t0, double t1) {
            CHECK(g.linear(c) == idx);
            contiguous = contiguous && std::abs(t0 - last_exit) < 1e-12 && t1 >= t0;
            last_exit = t1;
            seen.insert(idx);
            return true;
        });
        CHECK(contiguous);
        CHECK(seen == ft::brute_ray_voxels(g, o, d, t_max));
    }
}

TEST_CASE("traverse_ray enters the grid from outside") {
    VoxelGrid g({4, 4, 4}, 0.5, Vec3::Zero(), Cell::Free);
    std::vector<Index3> cells;
    traverse_ray(g, Vec3(-1.0, 0.3, 0.3), Vec3::UnitX(), 10.0, [&](std::int64_t, const Index3& c, double, double) {
        cells.push_back(c);
        return true;
    });
    REQUIRE(cells.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(cells[static_cast<std::size_t>(i)] == Index3(i, 0, 0));
}

TEST_CASE("camera frame: +Z forward, +X right, +Y down") {
    CameraModel cam;
    cam.width = 100;
    cam.height = 60;
    const Vec3 center = cam.ray(50.0, 30.0);
    CHECK((center - Vec3::UnitZ()).norm() < 1e-12);
    CHECK(cam.ray(99.0, 30.0).x() > 0.0);
    CHECK(cam.ray(50.0, 59.0).y() > 0.0);
    const auto uv = cam.project(Vec3(0.3, -0.2, 2.0));
    REQUIRE(uv);
    CHECK((cam.ray(uv->x(), uv->y()) - Vec3(0.3, -0.2, 2.0).normalized()).norm() < 1e-12);
    CHECK_FALSE(cam.project(Vec3(0.0, 0.0, -1.0)));
}

TEST_CASE("render_depth matches a brute-force ray-voxel intersector") {
    std::mt19937_64 rng(5);
    CameraModel cam;
    cam.width = 12;
    cam.height = 10;
    cam.max_range = 1.2;
    for (int trial = 0; trial < 6; ++trial) {
        VoxelGrid g = random_grid(rng, {12, 11, 8}, 0.08);
        Vec3 p = random_point_in(rng, g);
        g.set(g.linear(*g.index_of(p)), Cell::Free);
        const Pose pose = Pose::from_yaw_pitch(p, std::uniform_real_distribution<double>(-3, 3)(rng),
                                               std::uniform_real_distribution<double>(-1, 1)(rng));
        const DepthImage depth = render_depth(g, pose, cam, Exec::serial);
        CHECK(depth == render_depth(g, pose, cam, Exec::parallel));
        const Eigen::Matrix3d rot = pose.orientation.toRotationMatrix();
        for (int y = 0; y < cam.height; ++y)
            for (int x = 0; x < cam.width; ++x) {
                const double want = ft::brute_ray_range(g, p, rot * cam.pixel_ray(x, y), cam.max_range);
                const double got = depth(x, y);
                if (std::isinf(want)) {
                    CHECK(std::isinf(got));
                } else {
                    CHECK(std::abs(got - want) <= 1e-9);
                }
            }
    }
}

TEST_CASE("render_depth rejects invalid poses") {
    VoxelGrid g({4, 4, 4}, 0.1, Vec3::Zero(), Cell::Free);
    g.set(1, 1, 1, Cell::Occupied);
    CameraModel cam;
    cam.width = cam.height = 4;
    CHECK_THROWS_AS(render_depth(g, Pose::from_yaw_pitch(Vec3(0.15, 0.15, 0.15), 0, 0), cam), InvalidPoseError);
    CHECK_THROWS_AS(render_depth(g, Pose::from_yaw_pitch(Vec3(2, 0.15, 0.15), 0, 0), cam), InvalidPoseError);
}

TEST_CASE("integration agrees with the scene and is order independent") {
    std::mt19937_64 rng(9);
    CameraModel cam;
    cam.width = 24;
    cam.height = 20;
    cam.max_range = 1.0;
    VoxelGrid scene = random_grid(rng, {14, 12, 8}, 0.06);
    std::vector<Pose> poses;
    for (int i = 0; i < 3; ++i) {
        Vec3 p = random_point_in(rng, scene);
        scene.set(scene.linear(*scene.index_of(p)), Cell::Free);
        poses.push_back(Pose::from_yaw_pitch(p, 2.0 * i, 0.3 * (i - 1)));
    }
    auto run = [&](const std::vector<int>& order) {
        VoxelGrid map = make_unknown_like(scene);
        std::int64_t total = 0;
        for (int i : order) {
            const Pose& pose = poses[static_cast<std::size_t>(i)];
            total += integrate_observation(map, pose, cam, render_depth(scene, pose, cam));
        }
        CHECK(total == map.known_count());
        return map;
    };
    const VoxelGrid a = run({0, 1, 2});
    const VoxelGrid b = run({2, 0, 1});
    CHECK(a == b);
    for (std::int64_t i = 0; i < scene.size(); ++i) {
        if (a.at(i) != Cell::Unknown) CHECK(a.at(i) == scene.at(i));
    }
    CHECK(a.known_count() > 0);
}

TEST_CASE("scene text format round-trips and rejects malformed input") {
    std::mt19937_64 rng(3);
    VoxelGrid g = random_grid(rng, {5, 4, 3}, 0.3);
    g.set(0, Cell::Unknown);
    const std::string text = save_scene(g);
    CHECK(text.rfind("voxscene 1\ndims 5 4 3\n", 0) == 0);
    CHECK(load_scene(text) == g);
    CHECK_THROWS_AS(load_scene("voxscene 2\n"), ParseError);
    std::string bad = text;
    bad[bad.size() - 2] = 'X';
    CHECK_THROWS_AS(load_scene(bad), ParseError);
}

TEST_CASE("FDEP depth encoding round-trips with NO_RETURN") {
    DepthImage d(3, 2, 1.5);
    d(1, 1) = kNoReturn;
    d(2, 0) = 0.25;
    const std::string bytes = encode_fdep(d);
    CHECK(bytes.size() == 16 + 6 * 4);
    CHECK(bytes.substr(0, 4) == "FDEP");
    const DepthImage back = decode_fdep(bytes);
    CHECK(back == d);
    CHECK_THROWS_AS(decode_fdep(bytes.substr(0, 20)), ParseError);
}

TEST_CASE("PGM masks use P5 with maxval 255") {
    Mask m(2, 2, 0);
    m(1, 0) = 255;
    const std::string s = encode_pgm(m);
    CHECK(s.rfind("P5\n2 2\n255\n", 0) == 0);
    CHECK(s.size() == std::string("P5\n2 2\n255\n").size() + 4);
}

TEST_CASE("procedural scenes are deterministic, enclosed and connected") {
    SceneParams p;
    p.rooms_min = 2;
    p.rooms_max = 4;
    p.extent = Vec3(7.0, 6.0, 2.5);
    p.furniture_per_room = 1;
    for (std::uint64_t seed : {1u, 2u, 7u, 19u}) {
        const SceneLayout a = generate_scene_layout(seed, p);
        const SceneLayout b = generate_scene_layout(seed, p);
        CHECK(save_scene(a.grid) == save_scene(b.grid));
        CHECK(a.rooms.size() >= 2);
        CHECK(a.rooms.size() <= 4);
        CHECK(free_components(a.grid) == 1);
        const Dims& d = a.grid.dims();
        for (int j = 0; j < d.ny; ++j)
            for (int i = 0; i < d.nx; ++i) {
                CHECK(a.grid.at(i, j, 0) == Cell::Occupied);
                CHECK(a.grid.at(i, j, d.nz - 1) == Cell::Occupied);
            }
        for (int k = 0; k < d.nz; ++k)
            for (int j = 0; j < d.ny; ++j) {
                CHECK(a.grid.at(0, j, k) == Cell::Occupied);
                CHECK(a.grid.at(d.nx - 1, j, k) == Cell::Occupied);
            }
        CHECK(a.grid.count(Cell::Unknown) == 0);
    }
}

TEST_CASE("scene generation validates its parameters") {
    SceneParams p;
    p.extent = Vec3(3.5, 6.0, 2.5);
    CHECK_THROWS_AS(generate_scene(1, p), ConfigError);
    p.extent = Vec3(6.0, 6.0, 2.5);
    p.rooms_min = 3;
    p.rooms_max = 2;
    CHECK_THROWS_AS(generate_scene(1, p), ConfigError);
}

TEST_CASE("two-floor scenes stay connected") {
    SceneParams p;
    p.rooms_min = 2;
    p.rooms_max = 2;
    p.extent = Vec3(6.0, 6.0, 5.0);
    p.two_floors = true;
    const VoxelGrid g = generate_scene(4, p);
    CHECK(free_components(g) == 1);
}

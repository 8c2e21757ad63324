// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#include "frontier/world/sensor.hpp"

#include <atomic>

#include "frontier/core/error.hpp"
#include "frontier/world/raycast.hpp"

namespace frontier {

namespace {

void check_depth_dims(const CameraModel& cam, const DepthImage& depth) {
    if (depth.width() != cam.width || depth.height() != cam.height) {
        throw DimensionMismatchError("depth image does not match the camera model");
    }
}

// Range tolerance when locating the return voxel of a stored depth value.
constexpr double kHitTolerance = 1e-6;

}  // namespace

DepthImage render_depth(const VoxelGrid& scene, const Pose& pose, const CameraModel& cam,
                        Exec exec) {
    cam.validate();
    const auto start = scene.index_of(pose.position);
    if (!start) throw InvalidPoseError("camera position lies outside the scene");
    if (scene.at(scene.linear(*start)) == Cell::Occupied) {
        throw InvalidPoseError("camera position lies inside an occupied voxel");
    }
    const Eigen::Matrix3d rot = pose.orientation.toRotationMatrix();
    DepthImage depth(cam.width, cam.height, kNoReturn);
    parallel_for(exec, static_cast<std::int64_t>(cam.height), [&](std::int64_t y) {
        for (int x = 0; x < cam.width; ++x) {
            const Vec3 dir = world_ray(rot, cam, x, static_cast<int>(y));
            double hit = kNoReturn;
            traverse_ray(scene, pose.position, dir, cam.max_range,
                         [&](std::int64_t idx, const Index3&, double t_enter, double) {
                             if (scene.at(idx) != Cell::Occupied) return true;
                             hit = t_enter;
                             return false;
                         });
            depth(x, static_cast<int>(y)) = hit;
        }
    });
    return depth;
}

void mark_observation(const VoxelGrid& grid, const Pose& pose, const CameraModel& cam,
                      const DepthImage& depth, std::span<std::uint8_t> touch, Exec exec) {
    check_depth_dims(cam, depth);
    if (static_cast<std::int64_t>(touch.size()) != grid.size()) {
        throw DimensionMismatchError("touch buffer does not match the grid");
    }
    const Eigen::Matrix3d rot = pose.orientation.toRotationMatrix();
    parallel_for(exec, static_cast<std::int64_t>(cam.height), [&](std::int64_t y) {
        for (int x = 0; x < cam.width; ++x) {
            const double range = depth(x, static_cast<int>(y));
            const bool returned = is_return(range) && range <= cam.max_range;
            const double t_max = returned ? range + kHitTolerance : cam.max_range;
            const Vec3 dir = world_ray(rot, cam, x, static_cast<int>(y));
            traverse_ray(grid, pose.position, dir, t_max,
                         [&](std::int64_t idx, const Index3&, double t_enter, double) {
                             std::atomic_ref<std::uint8_t> cell(touch[static_cast<std::size_t>(idx)]);
                             if (returned && t_enter >= range - kHitTolerance) {
                                 cell.fetch_or(kTouchOccupied, std::memory_order_relaxed);
                                 return false;
                             }
                             cell.fetch_or(kTouchFree, std::memory_order_relaxed);
                             return true;
                         });
        }
    });
}

std::int64_t integrate_observation(VoxelGrid& map, const Pose& pose, const CameraModel& cam,
                                   const DepthImage& depth, Exec exec) {
    std::vector<std::uint8_t> touch(static_cast<std::size_t>(map.size()), 0);
    mark_observation(map, pose, cam, depth, touch, exec);
    std::int64_t newly_known = 0;
    auto& cells = map.cells();
    const std::int64_t n = map.size();
    const bool par = exec == Exec::parallel;
#pragma omp parallel for reduction(+ : newly_known) if (par)
    for (std::int64_t i = 0; i < n; ++i) {
        const std::uint8_t t = touch[static_cast<std::size_t>(i)];
        if (t == 0) continue;
        Cell& c = cells[static_cast<std::size_t>(i)];
        const Cell before = c;
        if (t & kTouchOccupied) {
            c = Cell::Occupied;
        } else if (c != Cell::Occupied) {
            c = Cell::Free;
        }
        newly_known += before == Cell::Unknown;
    }
    return newly_known;
}

GradientMap depth_gradient(const DepthImage& depth) {
    const int w = depth.width();
    const int h = depth.height();
    GradientMap gm{Raster<double>(w, h, 0.0), Raster<double>(w, h, 0.0), Mask(w, h, 0)};
    auto diff = [&](int lo_x, int lo_y, int hi_x, int hi_y, double span, double& out) {
        const double a = depth(lo_x, lo_y);
        const double b = depth(hi_x, hi_y);
        if (!is_return(a) || !is_return(b)) return false;
        out = span > 0.0 ? (b - a) / span : 0.0;
        return true;
    };
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (!is_return(depth(x, y))) continue;
            const int x0 = std::max(x - 1, 0);
            const int x1 = std::min(x + 1, w - 1);
            const int y0 = std::max(y - 1, 0);
            const int y1 = std::min(y + 1, h - 1);
            double gx = 0.0;
            double gy = 0.0;
            if (diff(x0, y, x1, y, static_cast<double>(x1 - x0), gx) &&
                diff(x, y0, x, y1, static_cast<double>(y1 - y0), gy)) {
                gm.gx(x, y) = gx;
                gm.gy(x, y) = gy;
                gm.valid(x, y) = 1;
            }
        }
    }
    return gm;
}

DepthImage fill_no_return(const DepthImage& depth, double fill) {
    DepthImage out = depth;
    for (auto& v : out.data()) {
        if (!is_return(v)) v = fill;
    }
    return out;
}

}  // namespace frontier

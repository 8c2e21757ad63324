// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frontier/core/exec.hpp"
#include "frontier/world/voxel_grid.hpp"

namespace frontier {

struct Path {
    std::vector<Pose> waypoints;  // excludes the start pose
    double total_length = 0.0;    // meters
    double total_rotation = 0.0;  // degrees
};

/// Voxels the planner may enter: known Free and farther than the inflation
/// radius from any Occupied voxel.
class Traversability {
public:
    Traversability(const VoxelGrid& map, double inflation, Exec exec = Exec::parallel);

    const VoxelGrid& map() const { return *map_; }
    bool free(std::int64_t idx) const { return map_->at(idx) == Cell::Free; }
    bool clear(std::int64_t idx) const { return free(idx) && !inflated_[static_cast<std::size_t>(idx)]; }

private:
    const VoxelGrid* map_;
    std::vector<std::uint8_t> inflated_;
};

/// Octile lower bound on the 26-connected path length between two voxels.
double octile_distance(const Index3& a, const Index3& b, double resolution);

/// A* over clear voxels (start and goal only need to be known Free) with
/// Euclidean edge costs. Returns the voxel sequence and sets `cost`.
std::optional<std::vector<std::int64_t>> astar(const Traversability& tr, std::int64_t start, std::int64_t goal,
                                               double* cost = nullptr);

/// Straight-line shortcuts over clear (or start/goal) voxels.
std::vector<Vec3> shortcut(const Traversability& tr, const std::vector<Vec3>& points);

/// Rotate-then-translate interpolation through `points` (the first is the
/// start position) facing the travel direction, ending at `final_pose`
/// orientation. Consecutive waypoints differ by at most step_dist meters and
/// step_angle degrees.
Path densify(const Pose& start, const std::vector<Vec3>& points, const Pose& final_pose, double step_dist,
             double step_angle);

/// Plans from `start` to `goal` and densifies; the final orientation is
/// `final_dir` (or the last travel direction when empty).
std::optional<Path> plan_path(const Traversability& tr, const Pose& start, const Vec3& goal,
                              const std::optional<Vec3>& final_dir, double step_dist, double step_angle);
std::optional<Path> plan_path(const VoxelGrid& map, const Pose& start, const Vec3& goal, double inflation,
                              const std::optional<Vec3>& final_dir = std::nullopt, double step_dist = 0.1,
                              double step_angle = 10.0);

}  // namespace frontier

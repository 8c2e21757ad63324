// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frontier/planner/path.hpp"
#include "frontier/planner/tree.hpp"
#include "frontier/store/frontier_store.hpp"

namespace frontier {

/// gain / max(distance, d_floor).
double utility(const Frontier3D& f, const Vec3& robot, double d_floor);

/// Active frontier of highest utility; ties go to higher gain, then lower id.
std::optional<std::int64_t> select_goal(const FrontierStore& store, const Vec3& robot, double d_floor,
                                        const std::vector<std::int64_t>& exclude = {});

/// First known-Free point sampled from p_bar back toward the parent pose,
/// or the parent pose position when none is.
Vec3 find_entry_point(const FrontierTree& tree, const Frontier3D& f, const VoxelGrid& map, int n_samples);

/// Known-Free voxels with an Unknown face neighbour, ascending index.
std::vector<std::int64_t> map_frontier_voxels(const VoxelGrid& map, Exec exec = Exec::parallel);

/// 26-connected components of a voxel set, each sorted ascending; ordered by
/// their smallest member.
std::vector<std::vector<std::int64_t>> cluster_voxels(const VoxelGrid& map, const std::vector<std::int64_t>& voxels);

struct ClassicGoal {
    Vec3 point;
    Vec3 direction;
    std::vector<std::int64_t> route;  // voxel path from the robot
    double path_length = 0.0;
};

/// Nearest reachable map-frontier cluster (by path length over the planning
/// graph); the goal is its reachable member nearest to the cluster centroid.
/// Clusters whose goal lies within `skip_radius` of a `skip` point are ignored.
std::optional<ClassicGoal> classic_baseline_step(const Traversability& tr, const Pose& robot, int min_cluster,
                                                 const std::vector<Vec3>& skip = {}, double skip_radius = 0.0);

}  // namespace frontier

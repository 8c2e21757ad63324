// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "frontier/core/exec.hpp"
#include "frontier/core/raster.hpp"
#include "frontier/world/voxel_grid.hpp"

namespace frontier {

/// Voxels observed from one pose (free space swept by the pixel rays plus
/// the voxels they return from). Everything else is outside the view.
struct ViewVolume {
    std::vector<std::uint8_t> in;  // 1 = inside, indexed like the scene
    std::int64_t in_count = 0;

    bool inside(std::int64_t idx) const { return in[static_cast<std::size_t>(idx)] != 0; }
};

ViewVolume classify_view_volume(const VoxelGrid& scene, const Pose& pose, const CameraModel& cam,
                                Exec exec = Exec::parallel);
/// Same, reusing a range image already rendered from `pose`.
ViewVolume classify_view_volume(const VoxelGrid& scene, const Pose& pose, const CameraModel& cam,
                                const DepthImage& depth, Exec exec = Exec::parallel);

/// Free in-view voxels with a face neighbour outside the view, ascending
/// linear index; `gain` is parallel to `voxels`.
struct FrontierVoxelSet {
    std::vector<std::int64_t> voxels;
    std::vector<double> gain;
    std::vector<std::uint8_t> sampled;  // set by voxel_info_gain

    std::size_t size() const { return voxels.size(); }
    bool empty() const { return voxels.empty(); }
};

FrontierVoxelSet extract_frontier_voxels(const ViewVolume& vv, const VoxelGrid& scene,
                                         Exec exec = Exec::parallel);

/// Keeps the frontier voxels with a v_out face-neighbor whose center lies in
/// the camera's field of view (occluded or beyond range). Voxels that only
/// border the lateral frustum sides are dropped; near the apex those would
/// gate every pixel ray. Gains and the sampled flags follow their voxels.
FrontierVoxelSet in_view_frontiers(const FrontierVoxelSet& ft, const ViewVolume& vv, const VoxelGrid& scene,
                                   const Pose& pose, const CameraModel& cam);

}  // namespace frontier

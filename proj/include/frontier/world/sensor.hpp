// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "frontier/core/exec.hpp"
#include "frontier/core/raster.hpp"
#include "frontier/world/voxel_grid.hpp"

namespace frontier {

/// Bits written by mark_observation.
inline constexpr std::uint8_t kTouchFree = 1;
inline constexpr std::uint8_t kTouchOccupied = 2;

/// World-frame unit ray of pixel (x, y). Rendering and integration both go
/// through here so their traversals are bit-identical.
inline Vec3 world_ray(const Eigen::Matrix3d& rotation, const CameraModel& cam, int x, int y) {
    return rotation * cam.pixel_ray(x, y);
}

/// Renders the range image by casting the central ray of each pixel until
/// the first Occupied voxel. Throws InvalidPoseError when the camera sits in
/// an Occupied voxel or outside the grid.
DepthImage render_depth(const VoxelGrid& scene, const Pose& pose, const CameraModel& cam,
                        Exec exec = Exec::parallel);

/// ORs kTouchFree into every voxel a pixel ray crosses before its return
/// and kTouchOccupied into the voxel it returns from. NO_RETURN pixels sweep
/// free space out to max_range. `touch` is indexed like `grid`.
void mark_observation(const VoxelGrid& grid, const Pose& pose, const CameraModel& cam,
                      const DepthImage& depth, std::span<std::uint8_t> touch,
                      Exec exec = Exec::parallel);

/// Fuses one range image into the map. Occupied never reverts to Free.
/// Returns the number of Unknown voxels that became known.
std::int64_t integrate_observation(VoxelGrid& map, const Pose& pose, const CameraModel& cam,
                                   const DepthImage& depth, Exec exec = Exec::parallel);

/// Per-pixel depth gradient in meters per pixel.
struct GradientMap {
    Raster<double> gx;
    Raster<double> gy;
    Mask valid;

    int width() const { return gx.width(); }
    int height() const { return gx.height(); }
};

/// Central differences, one-sided at the border. Pixels whose stencil reads a
/// NO_RETURN sample are invalid.
GradientMap depth_gradient(const DepthImage& depth);

/// Copy of `depth` with NO_RETURN replaced by `fill`.
DepthImage fill_no_return(const DepthImage& depth, double fill);

}  // namespace frontier

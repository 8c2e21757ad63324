// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "frontier/core/exec.hpp"
#include "frontier/core/raster.hpp"
#include "frontier/oracle/view_volume.hpp"
#include "frontier/world/sensor.hpp"

namespace frontier {

/// Projection of 3D points onto the image: a pixel is on when its ray,
/// truncated at max_range, passes within `r_ray` meters of a point; the gain
/// raster holds the largest gain among such points (0 elsewhere).
struct ProjectedPoints {
    Mask mask;
    Raster<double> gain;
};

ProjectedPoints project_points(std::span<const Vec3> points_world, std::span<const double> gains,
                               const Pose& pose, const CameraModel& cam, double r_ray,
                               Exec exec = Exec::parallel);

std::vector<Vec3> voxel_centers(const VoxelGrid& grid, std::span<const std::int64_t> voxels);

/// Binary frontier prior from the frontier voxel centers.
Mask project_frontier_prior(const VoxelGrid& grid, const FrontierVoxelSet& ft, const Pose& pose,
                            const CameraModel& cam, double r_ray, Exec exec = Exec::parallel);

/// Per-pixel maximum frontier-voxel gain over the same ray gating.
Raster<double> info_gain_map(const VoxelGrid& grid, const FrontierVoxelSet& ft, const Pose& pose,
                             const CameraModel& cam, double r_ray, Exec exec = Exec::parallel);

/// On where the gradient is valid with magnitude above `tau` (m/pixel), and
/// along the border between returned and NO_RETURN pixels.
Mask depth_discontinuity_mask(const GradientMap& gm, const DepthImage& depth, double tau);

/// Truncated Euclidean distance (pixels) to the nearest on-pixel, clamped to
/// r_df, and its normalisation -log(max(d, 1) / r_df).
struct DistanceField {
    Raster<double> d;
    Raster<double> d_norm;
};

DistanceField distance_field(const Mask& f, double r_df, Exec exec = Exec::parallel);

/// Exact squared distance transform (integer); kNoSite where the mask is empty.
inline constexpr std::int64_t kNoSite = -1;
Raster<std::int64_t> squared_distance_transform(const Mask& f, Exec exec = Exec::parallel);

/// Class 0 is exactly zero gain; classes 1..K-1 split (0, g_max] into equal
/// bins [lo, lo + w); values at or above the top bin clamp to K-1.
int bin_gain(double g, int num_classes, double g_max);
/// Lower bound of the bin.
double unbin_gain(int y, int num_classes, double g_max);

Mask bin_gain(const Raster<double>& g, int num_classes, double g_max);
Raster<double> unbin_gain(const Mask& y, int num_classes, double g_max);

}  // namespace frontier

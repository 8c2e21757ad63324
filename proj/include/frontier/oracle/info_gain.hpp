// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "frontier/core/exec.hpp"
#include "frontier/oracle/view_volume.hpp"

namespace frontier {

struct GainParams {
    int cam_width = 64;  // virtual camera resolution; FOV and range come from the sensor
    int cam_height = 64;
    double sample_frac = 0.1;
    int idw_k = 4;
    int dir_neighborhood = 5;  // odd edge length of the direction window
    std::uint64_t seed = 0;
};

/// Unit direction from the in-view side of a frontier voxel toward the
/// out-of-view side, summed over face-adjacent pairs in the window around it.
/// Returns `fallback` when the sum vanishes.
Vec3 frontier_view_direction(const VoxelGrid& scene, const ViewVolume& vv, std::int64_t voxel,
                             int neighborhood, const Vec3& fallback);

/// Out-of-view voxels reached by the virtual camera at `center` looking along
/// `dir`. Occupied voxels stop a ray and count when out of view. `stamp` must
/// be scene-sized; entries equal to `tag` are treated as already counted.
std::int64_t count_visible_out(const VoxelGrid& scene, const ViewVolume& vv, const Vec3& center,
                               const Vec3& dir, const CameraModel& virtual_cam,
                               std::vector<std::uint32_t>& stamp, std::uint32_t tag);

/// The virtual gain camera for a sensor.
CameraModel gain_camera(const CameraModel& sensor, const GainParams& params);

/// Indices (into ft.voxels) drawn for exact evaluation, ascending.
std::vector<std::size_t> sample_frontier_voxels(std::size_t n, double frac, std::uint64_t seed);

/// Fills ft.gain: exact counts on a seeded subsample, inverse-distance
/// interpolation from the k nearest samples elsewhere. `camera_position` is
/// used for the direction fallback.
void voxel_info_gain(const VoxelGrid& scene, const ViewVolume& vv, FrontierVoxelSet& ft,
                     const CameraModel& sensor, const Vec3& camera_position, const GainParams& params,
                     Exec exec = Exec::parallel);

}  // namespace frontier

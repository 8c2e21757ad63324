// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "frontier/world/voxel_grid.hpp"

namespace frontier {

struct SceneParams {
    int rooms_min = 1;
    int rooms_max = 1;
    Vec3 extent{4.0, 4.0, 2.5};  // meters, outer walls and slabs included
    double door_width = 0.8;
    double door_height = 2.0;
    double resolution = 0.1;
    double min_room_size = 1.5;  // smallest room side after a split, meters
    int furniture_per_room = 0;
    bool two_floors = false;  // stacks a second storey joined by a stair ramp

    void validate() const;
};

/// Room interior, inclusive voxel bounds.
struct RoomBox {
    Index3 lo;
    Index3 hi;
    Vec3 center(const VoxelGrid& g) const { return 0.5 * (g.center(lo) + g.center(hi)); }
};

struct SceneLayout {
    VoxelGrid grid;
    std::vector<RoomBox> rooms;
};

/// Axis-aligned rooms from binary space partitioning, one door per
/// partition wall, floor/ceiling slabs and outer walls. All Free voxels form
/// one 6-connected component. Deterministic for fixed (seed, params).
/// Throws GenerationError after 100 failed attempts.
SceneLayout generate_scene_layout(std::uint64_t seed, const SceneParams& params);
VoxelGrid generate_scene(std::uint64_t seed, const SceneParams& params);

/// Number of 6-connected components of Free voxels.
int free_components(const VoxelGrid& grid);

}  // namespace frontier

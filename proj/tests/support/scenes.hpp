// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

// Hand-built scenes shared by the unit and acceptance tests.

#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "frontier/anchor/anchor.hpp"
#include "frontier/world/voxel_grid.hpp"

namespace frontier::testing {

/// Two boxed rooms joined by a single doorway in the wall at x = wall_x.
struct DoorwayScene {
    VoxelGrid grid;
    Pose pose;  // in the first room, facing the doorway
};

inline DoorwayScene doorway_scene(std::mt19937_64& rng) {
    const double v = 0.1;
    std::uniform_int_distribution<int> len(50, 70), wid(30, 45), door(7, 11), depth(12, 24);
    const int nx = len(rng), ny = wid(rng), nz = 25;
    VoxelGrid g({nx, ny, nz}, v, Vec3::Zero(), Cell::Free);
    for (int k = 0; k < nz; ++k)
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i)
                if (i == 0 || j == 0 || k == 0 || i == nx - 1 || j == ny - 1 || k == nz - 1) g.set(i, j, k, Cell::Occupied);
    const int wall = nx / 2 + static_cast<int>(rng() % 7) - 3;
    const int dw = door(rng);
    const int dy = 2 + static_cast<int>(rng() % static_cast<unsigned>(ny - dw - 4));
    for (int k = 0; k < nz; ++k)
        for (int j = 0; j < ny; ++j) {
            const bool opening = j >= dy && j < dy + dw && k >= 1 && k <= 20;
            if (!opening) g.set(wall, j, k, Cell::Occupied);
        }
    const double door_y = (dy + 0.5 * dw) * v;
    std::uniform_real_distribution<double> jitter(-0.4, 0.4), yaw(-0.35, 0.35), z(1.0, 1.5);
    const double back = std::min(depth(rng), wall - 4) * v;  // stay inside the first room
    Vec3 p((wall * v) - back, std::clamp(door_y + jitter(rng), 0.3, (ny - 3) * v), z(rng));
    const Vec3 to_door = Vec3(wall * v, door_y, p.z()) - p;
    return {std::move(g), Pose::from_yaw_pitch(p, std::atan2(to_door.y(), to_door.x()) + yaw(rng), 0.0)};
}

}  // namespace frontier::testing

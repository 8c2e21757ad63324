// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "frontier/world/voxel_grid.hpp"

namespace frontier {

/// Exact voxel traversal (Amanatides-Woo). Calls
/// `visit(linear_index, cell, t_enter, t_exit) -> bool` for every voxel the
/// ray [origin, origin + t_max * dir) passes through, in order, until the
/// visitor returns false or the ray leaves the grid. `dir` must be unit length.
/// Only voxels with t_enter < t_max are visited.
template <class Visit>
void traverse_ray(const VoxelGrid& grid, const Vec3& origin, const Vec3& dir, double t_max,
                  Visit&& visit) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    const double v = grid.resolution();
    const Vec3& g0 = grid.origin();
    const Dims& dims = grid.dims();
    const double hi[3] = {g0.x() + dims.nx * v, g0.y() + dims.ny * v, g0.z() + dims.nz * v};

    // Clip to the grid box.
    double t0 = 0.0;
    double t1 = t_max;
    for (int a = 0; a < 3; ++a) {
        if (dir[a] == 0.0) {
            if (origin[a] < g0[a] || origin[a] >= hi[a]) return;
            continue;
        }
        double ta = (g0[a] - origin[a]) / dir[a];
        double tb = (hi[a] - origin[a]) / dir[a];
        if (ta > tb) std::swap(ta, tb);
        t0 = std::max(t0, ta);
        t1 = std::min(t1, tb);
    }
    if (t0 >= t1) return;

    Index3 cell = grid.cell_of(origin + t0 * dir);
    for (int a = 0; a < 3; ++a) {
        const int n = a == 0 ? dims.nx : (a == 1 ? dims.ny : dims.nz);
        cell[a] = std::clamp(cell[a], 0, n - 1);
    }

    int step[3];
    double t_next[3];
    auto boundary = [&](int a) {
        if (step[a] > 0) return (g0[a] + (cell[a] + 1) * v - origin[a]) / dir[a];
        if (step[a] < 0) return (g0[a] + cell[a] * v - origin[a]) / dir[a];
        return inf;
    };
    for (int a = 0; a < 3; ++a) {
        step[a] = dir[a] > 0.0 ? 1 : (dir[a] < 0.0 ? -1 : 0);
        t_next[a] = boundary(a);
    }

    double t_enter = t0;
    while (grid.contains(cell) && t_enter < t_max) {
        int a = 0;
        if (t_next[1] < t_next[a]) a = 1;
        if (t_next[2] < t_next[a]) a = 2;
        const double t_exit = t_next[a];
        if (!visit(grid.linear(cell), static_cast<const Index3&>(cell), t_enter, t_exit)) return;
        cell[a] += step[a];
        t_enter = t_exit;
        t_next[a] = boundary(a);
    }
}

}  // namespace frontier

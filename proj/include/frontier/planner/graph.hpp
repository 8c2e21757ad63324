// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>

#include "frontier/planner/path.hpp"

namespace frontier {

/// Edge rule of the planning graph. A voxel may be entered when it is clear,
/// or when it is the start or goal and known Free. A move to one of the 26
/// neighbours additionally needs every voxel of the 2x2x2 (or smaller) box
/// it sweeps to be known Free, so diagonal moves never clip an obstacle
/// corner.
struct GraphRule {
    const Traversability* tr;
    std::int64_t start;
    std::int64_t goal;
    const std::uint8_t* extra_goals = nullptr;  // optional per-voxel flags, also exempt from inflation

    bool exempt(std::int64_t idx) const {
        return idx == start || idx == goal || (extra_goals != nullptr && extra_goals[idx]);
    }
    bool enterable(std::int64_t idx) const { return tr->clear(idx) || (exempt(idx) && tr->free(idx)); }
};

template <class Fn>
void for_each_neighbor(const GraphRule& rule, std::int64_t u, Fn&& fn) {
    const VoxelGrid& map = rule.tr->map();
    const Index3 c = map.coords(u);
    const double v = map.resolution();
    for (int dk = -1; dk <= 1; ++dk) {
        for (int dj = -1; dj <= 1; ++dj) {
            for (int di = -1; di <= 1; ++di) {
                if (di == 0 && dj == 0 && dk == 0) continue;
                const int i = c.x() + di, j = c.y() + dj, k = c.z() + dk;
                if (!map.contains(i, j, k)) continue;
                const std::int64_t w = map.linear(i, j, k);
                if (!rule.enterable(w)) continue;
                bool swept_free = true;
                for (int a = std::min(0, dk); a <= std::max(0, dk) && swept_free; ++a)
                    for (int b = std::min(0, dj); b <= std::max(0, dj) && swept_free; ++b)
                        for (int e = std::min(0, di); e <= std::max(0, di) && swept_free; ++e)
                            swept_free = map.at(map.linear(c.x() + e, c.y() + b, c.z() + a)) == Cell::Free;
                if (!swept_free) continue;
                fn(w, v * std::sqrt(static_cast<double>(di * di + dj * dj + dk * dk)));
            }
        }
    }
}

}  // namespace frontier

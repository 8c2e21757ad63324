// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#include "frontier/world/scene_gen.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "frontier/core/error.hpp"

namespace frontier {

namespace {

struct Rect {
    int x0, y0, x1, y1;  // inclusive interior bounds
    int w() const { return x1 - x0 + 1; }
    int h() const { return y1 - y0 + 1; }
};

struct Wall {
    int axis;  // 0: wall at x = pos spanning y in [lo, hi]; 1: wall at y = pos spanning x
    int pos;
    int lo;
    int hi;
};

int to_voxels(double meters, double res) { return static_cast<int>(std::lround(meters / res)); }

class Builder {
public:
    Builder(std::uint64_t seed, const SceneParams& p) : p_(p), rng_(seed) {}

    SceneLayout build() {
        const double v = p_.resolution;
        const int nx = to_voxels(p_.extent.x(), v);
        const int ny = to_voxels(p_.extent.y(), v);
        const int storey = to_voxels(p_.extent.z(), v);
        const int nz = p_.two_floors ? 2 * storey - 1 : storey;
        SceneLayout out{VoxelGrid({nx, ny, nz}, v, Vec3::Zero(), Cell::Free), {}};
        VoxelGrid& g = out.grid;

        const int floors = p_.two_floors ? 2 : 1;
        for (int f = 0; f < floors; ++f) {
            const int z0 = f * (storey - 1);
            build_storey(g, z0, z0 + storey - 1, out.rooms);
        }
        if (p_.two_floors) cut_stairwell(g, storey - 1);
        return out;
    }

private:
    void build_storey(VoxelGrid& g, int z_floor, int z_ceil, std::vector<RoomBox>& rooms) {
        const auto& d = g.dims();
        for (int j = 0; j < d.ny; ++j)
            for (int i = 0; i < d.nx; ++i) {
                g.set(i, j, z_floor, Cell::Occupied);
                g.set(i, j, z_ceil, Cell::Occupied);
            }
        for (int k = z_floor; k <= z_ceil; ++k) {
            for (int i = 0; i < d.nx; ++i) {
                g.set(i, 0, k, Cell::Occupied);
                g.set(i, d.ny - 1, k, Cell::Occupied);
            }
            for (int j = 0; j < d.ny; ++j) {
                g.set(0, j, k, Cell::Occupied);
                g.set(d.nx - 1, j, k, Cell::Occupied);
            }
        }

        std::uniform_int_distribution<int> room_count(p_.rooms_min, p_.rooms_max);
        const int target = room_count(rng_);
        const int min_side = std::max(3, to_voxels(p_.min_room_size, p_.resolution));
        std::vector<Rect> rects{{1, 1, d.nx - 2, d.ny - 2}};
        std::vector<Wall> walls;
        while (static_cast<int>(rects.size()) < target) {
            // Split the largest rectangle that can hold two rooms.
            int best = -1;
            for (int r = 0; r < static_cast<int>(rects.size()); ++r) {
                const Rect& rc = rects[static_cast<std::size_t>(r)];
                if (std::max(rc.w(), rc.h()) < 2 * min_side + 1) continue;
                if (best < 0 || rc.w() * rc.h() > rects[static_cast<std::size_t>(best)].w() *
                                                      rects[static_cast<std::size_t>(best)].h()) {
                    best = r;
                }
            }
            if (best < 0) break;
            Rect rc = rects[static_cast<std::size_t>(best)];
            const bool split_x = rc.w() > rc.h() || (rc.w() == rc.h() && coin());
            const int lo = (split_x ? rc.x0 : rc.y0) + min_side;
            const int hi = (split_x ? rc.x1 : rc.y1) - min_side;
            if (lo > hi) break;
            const int s = std::uniform_int_distribution<int>(lo, hi)(rng_);
            Rect a = rc;
            Rect b = rc;
            if (split_x) {
                a.x1 = s - 1;
                b.x0 = s + 1;
                walls.push_back({0, s, rc.y0, rc.y1});
            } else {
                a.y1 = s - 1;
                b.y0 = s + 1;
                walls.push_back({1, s, rc.x0, rc.x1});
            }
            rects[static_cast<std::size_t>(best)] = a;
            rects.push_back(b);
        }

        for (const Wall& w : walls) {
            for (int t = w.lo; t <= w.hi; ++t)
                for (int k = z_floor; k <= z_ceil; ++k) {
                    if (w.axis == 0) g.set(w.pos, t, k, Cell::Occupied);
                    else g.set(t, w.pos, k, Cell::Occupied);
                }
        }
        const int door_w = std::max(1, to_voxels(p_.door_width, p_.resolution));
        const int door_h = std::clamp(to_voxels(p_.door_height, p_.resolution), 1, z_ceil - z_floor - 1);
        for (const Wall& w : walls) cut_door(g, w, door_w, z_floor, door_h);

        for (const Rect& rc : rects) {
            rooms.push_back({Index3(rc.x0, rc.y0, z_floor + 1), Index3(rc.x1, rc.y1, z_ceil - 1)});
            for (int n = 0; n < p_.furniture_per_room; ++n) place_furniture(g, rc, z_floor, z_ceil);
        }
    }

    // A door goes where both faces of the wall are open along its whole width.
    void cut_door(VoxelGrid& g, const Wall& w, int door_w, int z_floor, int door_h) {
        const int k = z_floor + 1;
        auto open_at = [&](int t) {
            if (t - 1 < w.lo || t + 1 > w.hi) return false;
            for (int dt = -1; dt <= 1; ++dt) {
                const int tt = t + dt;
                for (int side : {-1, 1}) {
                    const Cell c = w.axis == 0 ? g.at(w.pos + side, tt, k) : g.at(tt, w.pos + side, k);
                    if (c != Cell::Free) return false;
                }
            }
            return true;
        };
        std::vector<int> starts;
        for (int t = w.lo; t + door_w - 1 <= w.hi; ++t) {
            bool ok = true;
            for (int dt = 0; dt < door_w && ok; ++dt) ok = open_at(t + dt);
            if (ok) starts.push_back(t);
        }
        if (starts.empty()) return;  // caught by the connectivity check
        const int t0 = starts[std::uniform_int_distribution<std::size_t>(0, starts.size() - 1)(rng_)];
        for (int dt = 0; dt < door_w; ++dt)
            for (int h = 1; h <= door_h; ++h) {
                if (w.axis == 0) g.set(w.pos, t0 + dt, z_floor + h, Cell::Free);
                else g.set(t0 + dt, w.pos, z_floor + h, Cell::Free);
            }
    }

    // Boxes keep a margin from the walls so doors stay reachable.
    void place_furniture(VoxelGrid& g, const Rect& rc, int z_floor, int z_ceil) {
        const double v = p_.resolution;
        const int margin = to_voxels(0.6, v);
        const int fw = std::uniform_int_distribution<int>(to_voxels(0.3, v), to_voxels(0.8, v))(rng_);
        const int fd = std::uniform_int_distribution<int>(to_voxels(0.3, v), to_voxels(0.8, v))(rng_);
        if (rc.w() < fw + 2 * margin || rc.h() < fd + 2 * margin) return;
        const int x = std::uniform_int_distribution<int>(rc.x0 + margin, rc.x1 - margin - fw + 1)(rng_);
        const int y = std::uniform_int_distribution<int>(rc.y0 + margin, rc.y1 - margin - fd + 1)(rng_);
        const bool pillar = coin();
        const int height = pillar ? z_ceil - z_floor - 1
                                  : std::uniform_int_distribution<int>(to_voxels(0.5, v), to_voxels(1.2, v))(rng_);
        for (int i = x; i < x + fw; ++i)
            for (int j = y; j < y + fd; ++j)
                for (int k = z_floor + 1; k <= std::min(z_floor + height, z_ceil - 1); ++k) g.set(i, j, k, Cell::Occupied);
    }

    // Opening in the shared slab with a one-voxel-per-step ramp below it.
    void cut_stairwell(VoxelGrid& g, int slab) {
        const double v = p_.resolution;
        const int len = slab - 1;
        const int width = to_voxels(1.0, v);
        const int x0 = 2;
        const int y0 = 2;
        if (x0 + len + 1 >= g.dims().nx - 1 || y0 + width >= g.dims().ny - 1) {
            throw GenerationError("scene too small for a stairwell");
        }
        for (int i = x0; i < x0 + len + 2; ++i)
            for (int j = y0; j < y0 + width; ++j) g.set(i, j, slab, Cell::Free);
        for (int s = 0; s < len; ++s)
            for (int j = y0; j < y0 + width; ++j)
                for (int k = 1; k <= s; ++k) g.set(x0 + s, j, k, Cell::Occupied);
    }

    bool coin() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }

    const SceneParams& p_;
    std::mt19937_64 rng_;
};

}  // namespace

void SceneParams::validate() const {
    if (rooms_min < 1 || rooms_max < rooms_min) throw ConfigError("room count range must satisfy 1 <= min <= max");
    if (!(resolution > 0.0) || !(door_width > 0.0) || !(door_height > 0.0) || !(min_room_size > 0.0)) {
        throw ConfigError("scene parameters must be positive");
    }
    if (extent.x() < 4.0 || extent.y() < 4.0) throw ConfigError("scene extent must be at least 4 m per horizontal axis");
    if (!(extent.z() > 4 * resolution)) throw ConfigError("scene height too small");
    if (furniture_per_room < 0) throw ConfigError("furniture count must be non-negative");
}

int free_components(const VoxelGrid& grid) {
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(grid.size()), 0);
    std::vector<std::int64_t> stack;
    int components = 0;
    for (std::int64_t s = 0; s < grid.size(); ++s) {
        if (seen[static_cast<std::size_t>(s)] || grid.at(s) != Cell::Free) continue;
        ++components;
        seen[static_cast<std::size_t>(s)] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            const std::int64_t cur = stack.back();
            stack.pop_back();
            const Index3 c = grid.coords(cur);
            for (const auto& o : kFaceOffsets) {
                const Index3 n(c.x() + o[0], c.y() + o[1], c.z() + o[2]);
                if (!grid.contains(n)) continue;
                const std::int64_t ni = grid.linear(n);
                if (seen[static_cast<std::size_t>(ni)] || grid.at(ni) != Cell::Free) continue;
                seen[static_cast<std::size_t>(ni)] = 1;
                stack.push_back(ni);
            }
        }
    }
    return components;
}

SceneLayout generate_scene_layout(std::uint64_t seed, const SceneParams& params) {
    params.validate();
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    std::mt19937_64 attempts(seq);
    for (int attempt = 0; attempt < 100; ++attempt) {
        SceneLayout layout = Builder(attempts(), params).build();
        if (free_components(layout.grid) == 1) return layout;
    }
    throw GenerationError("could not generate a connected scene in 100 attempts");
}

VoxelGrid generate_scene(std::uint64_t seed, const SceneParams& params) {
    return generate_scene_layout(seed, params).grid;
}

}  // namespace frontier

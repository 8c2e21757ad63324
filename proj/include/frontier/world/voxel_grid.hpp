// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "frontier/core/geometry.hpp"

namespace frontier {

enum class Cell : std::uint8_t { Unknown = 0, Free = 1, Occupied = 2 };

using Index3 = Eigen::Vector3i;

struct Dims {
    int nx = 0;
    int ny = 0;
    int nz = 0;
    std::int64_t count() const { return static_cast<std::int64_t>(nx) * ny * nz; }
    bool operator==(const Dims&) const = default;
};

inline constexpr std::array<std::array<int, 3>, 6> kFaceOffsets{{
    {{1, 0, 0}}, {{-1, 0, 0}}, {{0, 1, 0}}, {{0, -1, 0}}, {{0, 0, 1}}, {{0, 0, -1}},
}};

/// Axis-aligned ternary occupancy lattice. Used both for ground-truth scenes
/// (Free/Occupied only) and for the robot map (starts all Unknown).
class VoxelGrid {
public:
    VoxelGrid() = default;
    VoxelGrid(Dims dims, double resolution, Vec3 origin, Cell fill = Cell::Unknown);

    const Dims& dims() const { return dims_; }
    double resolution() const { return resolution_; }
    const Vec3& origin() const { return origin_; }
    std::int64_t size() const { return static_cast<std::int64_t>(cells_.size()); }

    bool same_geometry(const VoxelGrid& other) const;

    bool contains(int i, int j, int k) const {
        return i >= 0 && j >= 0 && k >= 0 && i < dims_.nx && j < dims_.ny && k < dims_.nz;
    }
    bool contains(const Index3& c) const { return contains(c.x(), c.y(), c.z()); }

    std::int64_t linear(int i, int j, int k) const {
        return (static_cast<std::int64_t>(k) * dims_.ny + j) * dims_.nx + i;
    }
    std::int64_t linear(const Index3& c) const { return linear(c.x(), c.y(), c.z()); }
    Index3 coords(std::int64_t idx) const;

    Cell at(std::int64_t idx) const { return cells_[static_cast<std::size_t>(idx)]; }
    Cell at(int i, int j, int k) const { return at(linear(i, j, k)); }
    void set(std::int64_t idx, Cell c) { cells_[static_cast<std::size_t>(idx)] = c; }
    void set(int i, int j, int k, Cell c) { set(linear(i, j, k), c); }

    /// Cell containing a world point (floor division), empty outside bounds.
    std::optional<Index3> index_of(const Vec3& p) const;
    /// Unbounded cell coordinate of a world point.
    Index3 cell_of(const Vec3& p) const;
    Vec3 center(const Index3& c) const;
    Vec3 center(std::int64_t idx) const { return center(coords(idx)); }

    /// Cell at a world point, or `outside` when the point is off-grid.
    Cell at_point(const Vec3& p, Cell outside = Cell::Occupied) const;

    std::int64_t count(Cell c) const;
    std::int64_t known_count() const { return size() - count(Cell::Unknown); }

    std::vector<Cell>& cells() { return cells_; }
    const std::vector<Cell>& cells() const { return cells_; }

    bool operator==(const VoxelGrid& o) const;

private:
    Dims dims_;
    double resolution_ = 0.1;
    Vec3 origin_ = Vec3::Zero();
    std::vector<Cell> cells_;
};

/// Fresh all-Unknown map sharing `scene`'s geometry.
VoxelGrid make_unknown_like(const VoxelGrid& scene);

}  // namespace frontier

// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#include "frontier/world/voxel_grid.hpp"

#include <algorithm>
#include <cmath>

#include "frontier/core/error.hpp"

namespace frontier {

VoxelGrid::VoxelGrid(Dims dims, double resolution, Vec3 origin, Cell fill)
    : dims_(dims), resolution_(resolution), origin_(std::move(origin)) {
    if (dims.nx <= 0 || dims.ny <= 0 || dims.nz <= 0) {
        throw Error("voxel grid dimensions must be positive");
    }
    if (!(resolution > 0.0)) throw Error("voxel resolution must be positive");
    cells_.assign(static_cast<std::size_t>(dims.count()), fill);
}

bool VoxelGrid::same_geometry(const VoxelGrid& o) const {
    return dims_ == o.dims_ && resolution_ == o.resolution_ && origin_ == o.origin_;
}

Index3 VoxelGrid::coords(std::int64_t idx) const {
    const std::int64_t plane = static_cast<std::int64_t>(dims_.nx) * dims_.ny;
    const int k = static_cast<int>(idx / plane);
    const std::int64_t rem = idx - k * plane;
    const int j = static_cast<int>(rem / dims_.nx);
    const int i = static_cast<int>(rem - static_cast<std::int64_t>(j) * dims_.nx);
    return {i, j, k};
}

Index3 VoxelGrid::cell_of(const Vec3& p) const {
    const Vec3 q = (p - origin_) / resolution_;
    return {static_cast<int>(std::floor(q.x())), static_cast<int>(std::floor(q.y())),
            static_cast<int>(std::floor(q.z()))};
}

std::optional<Index3> VoxelGrid::index_of(const Vec3& p) const {
    const Index3 c = cell_of(p);
    if (!contains(c)) return std::nullopt;
    return c;
}

Vec3 VoxelGrid::center(const Index3& c) const {
    return origin_ + (c.cast<double>() + Vec3::Constant(0.5)) * resolution_;
}

Cell VoxelGrid::at_point(const Vec3& p, Cell outside) const {
    const auto c = index_of(p);
    return c ? at(linear(*c)) : outside;
}

std::int64_t VoxelGrid::count(Cell c) const {
    return std::count(cells_.begin(), cells_.end(), c);
}

bool VoxelGrid::operator==(const VoxelGrid& o) const {
    return same_geometry(o) && cells_ == o.cells_;
}

VoxelGrid make_unknown_like(const VoxelGrid& scene) {
    return VoxelGrid(scene.dims(), scene.resolution(), scene.origin(), Cell::Unknown);
}

}  // namespace frontier

// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#include "frontier/oracle/info_gain.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "frontier/core/error.hpp"
#include "frontier/world/raycast.hpp"
#include "frontier/world/sensor.hpp"

namespace frontier {

Vec3 frontier_view_direction(const VoxelGrid& scene, const ViewVolume& vv, std::int64_t voxel,
                             int neighborhood, const Vec3& fallback) {
    const Index3 c = scene.coords(voxel);
    const int h = neighborhood / 2;
    Vec3 sum = Vec3::Zero();
    for (int dk = -h; dk <= h; ++dk) {
        for (int dj = -h; dj <= h; ++dj) {
            for (int di = -h; di <= h; ++di) {
                const int i = c.x() + di, j = c.y() + dj, k = c.z() + dk;
                if (!scene.contains(i, j, k)) continue;
                const std::int64_t a = scene.linear(i, j, k);
                if (!vv.inside(a) || scene.at(a) != Cell::Free) continue;
                for (const auto& o : kFaceOffsets) {
                    const int x = i + o[0], y = j + o[1], z = k + o[2];
                    if (scene.contains(x, y, z) && !vv.inside(scene.linear(x, y, z))) {
                        sum += Vec3(o[0], o[1], o[2]);
                    }
                }
            }
        }
    }
    const double n = sum.norm();
    if (n < 1e-9) return fallback.normalized();
    return sum / n;
}

std::int64_t count_visible_out(const VoxelGrid& scene, const ViewVolume& vv, const Vec3& center,
                               const Vec3& dir, const CameraModel& virtual_cam,
                               std::vector<std::uint32_t>& stamp, std::uint32_t tag) {
    const Pose pose = Pose::looking_along(center, dir);
    const Eigen::Matrix3d rot = pose.orientation.toRotationMatrix();
    std::int64_t count = 0;
    for (int y = 0; y < virtual_cam.height; ++y) {
        for (int x = 0; x < virtual_cam.width; ++x) {
            traverse_ray(scene, center, world_ray(rot, virtual_cam, x, y), virtual_cam.max_range,
                         [&](std::int64_t idx, const Index3&, double, double) {
                             auto& s = stamp[static_cast<std::size_t>(idx)];
                             if (s != tag && !vv.inside(idx)) {
                                 s = tag;
                                 ++count;
                             }
                             return scene.at(idx) != Cell::Occupied;
                         });
        }
    }
    return count;
}

CameraModel gain_camera(const CameraModel& sensor, const GainParams& params) {
    CameraModel c = sensor;
    c.width = params.cam_width;
    c.height = params.cam_height;
    return c;
}

std::vector<std::size_t> sample_frontier_voxels(std::size_t n, double frac, std::uint64_t seed) {
    if (!(frac > 0.0 && frac <= 1.0)) throw ConfigError("sample_frac must lie in (0, 1]");
    if (n == 0) return {};
    const auto want = static_cast<std::size_t>(std::ceil(frac * static_cast<double>(n) - 1e-9));
    const std::size_t m = std::clamp<std::size_t>(want, 1, n);
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    if (m < n) {
        std::mt19937_64 rng(seed);
        for (std::size_t i = 0; i < m; ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, n - 1);
            std::swap(idx[i], idx[pick(rng)]);
        }
        idx.resize(m);
        std::sort(idx.begin(), idx.end());
    }
    return idx;
}

void voxel_info_gain(const VoxelGrid& scene, const ViewVolume& vv, FrontierVoxelSet& ft,
                     const CameraModel& sensor, const Vec3& camera_position, const GainParams& params,
                     Exec exec) {
    const std::size_t n = ft.size();
    ft.gain.assign(n, 0.0);
    ft.sampled.assign(n, 0);
    if (n == 0) return;
    if (params.dir_neighborhood < 1 || params.dir_neighborhood % 2 == 0) {
        throw ConfigError("dir_neighborhood must be a positive odd number");
    }
    if (params.idw_k < 1) throw ConfigError("idw_k must be positive");

    const auto samples = sample_frontier_voxels(n, params.sample_frac, params.seed);
    const CameraModel vcam = gain_camera(sensor, params);
    vcam.validate();

    if (vv.in_count < scene.size()) {
        const int threads = max_threads(exec);
        std::vector<std::vector<std::uint32_t>> stamps(static_cast<std::size_t>(threads));
        parallel_for(exec, static_cast<std::int64_t>(samples.size()), [&](std::int64_t s) {
            auto& stamp = stamps[static_cast<std::size_t>(thread_id())];
            if (stamp.empty()) stamp.assign(static_cast<std::size_t>(scene.size()), 0);
            const std::size_t i = samples[static_cast<std::size_t>(s)];
            const std::int64_t voxel = ft.voxels[i];
            const Vec3 c = scene.center(voxel);
            const Vec3 dir = frontier_view_direction(scene, vv, voxel, params.dir_neighborhood, c - camera_position);
            ft.gain[i] = static_cast<double>(
                count_visible_out(scene, vv, c, dir, vcam, stamp, static_cast<std::uint32_t>(s + 1)));
        });
    }
    for (auto i : samples) ft.sampled[i] = 1;
    if (samples.size() == n) return;

    std::vector<Vec3> sc;
    sc.reserve(samples.size());
    for (auto i : samples) sc.push_back(scene.center(ft.voxels[i]));
    const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(params.idw_k), samples.size());

    parallel_for(exec, static_cast<std::int64_t>(n), [&](std::int64_t ii) {
        const auto i = static_cast<std::size_t>(ii);
        if (ft.sampled[i]) return;
        const Vec3 p = scene.center(ft.voxels[i]);
        std::vector<std::pair<double, std::size_t>> near;
        near.reserve(sc.size());
        for (std::size_t s = 0; s < sc.size(); ++s) near.emplace_back((sc[s] - p).squaredNorm(), s);
        std::partial_sort(near.begin(), near.begin() + static_cast<std::ptrdiff_t>(k), near.end());
        double wsum = 0.0, gsum = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            const double w = 1.0 / std::sqrt(near[j].first);
            wsum += w;
            gsum += w * ft.gain[samples[near[j].second]];
        }
        ft.gain[i] = gsum / wsum;
    });
}

}  // namespace frontier

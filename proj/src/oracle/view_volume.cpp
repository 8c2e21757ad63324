// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#include "frontier/oracle/view_volume.hpp"

#include <algorithm>

#include "frontier/core/error.hpp"
#include "frontier/world/sensor.hpp"

namespace frontier {

ViewVolume classify_view_volume(const VoxelGrid& scene, const Pose& pose, const CameraModel& cam,
                                Exec exec) {
    return classify_view_volume(scene, pose, cam, render_depth(scene, pose, cam, exec), exec);
}

ViewVolume classify_view_volume(const VoxelGrid& scene, const Pose& pose, const CameraModel& cam,
                                const DepthImage& depth, Exec exec) {
    if (!scene.index_of(pose.position)) throw InvalidPoseError("camera position lies outside the scene");
    ViewVolume vv;
    vv.in.assign(static_cast<std::size_t>(scene.size()), 0);
    mark_observation(scene, pose, cam, depth, vv.in, exec);
    for (auto& b : vv.in) {
        b = b != 0;
        vv.in_count += b;
    }
    return vv;
}

FrontierVoxelSet extract_frontier_voxels(const ViewVolume& vv, const VoxelGrid& scene, Exec exec) {
    if (static_cast<std::int64_t>(vv.in.size()) != scene.size()) {
        throw DimensionMismatchError("view volume does not match the scene");
    }
    const Dims& d = scene.dims();
    std::vector<std::vector<std::int64_t>> per_slice(static_cast<std::size_t>(d.nz));
    parallel_for(exec, d.nz, [&](std::int64_t kk) {
        const int k = static_cast<int>(kk);
        auto& out = per_slice[static_cast<std::size_t>(k)];
        for (int j = 0; j < d.ny; ++j) {
            for (int i = 0; i < d.nx; ++i) {
                const std::int64_t idx = scene.linear(i, j, k);
                if (!vv.inside(idx) || scene.at(idx) != Cell::Free) continue;
                for (const auto& o : kFaceOffsets) {
                    const int a = i + o[0], b = j + o[1], c = k + o[2];
                    if (scene.contains(a, b, c) && !vv.inside(scene.linear(a, b, c))) {
                        out.push_back(idx);
                        break;
                    }
                }
            }
        }
    });
    FrontierVoxelSet ft;
    for (auto& s : per_slice) ft.voxels.insert(ft.voxels.end(), s.begin(), s.end());
    ft.gain.assign(ft.voxels.size(), 0.0);
    ft.sampled.assign(ft.voxels.size(), 0);
    return ft;
}

FrontierVoxelSet in_view_frontiers(const FrontierVoxelSet& ft, const ViewVolume& vv, const VoxelGrid& scene,
                                   const Pose& pose, const CameraModel& cam) {
    FrontierVoxelSet out;
    for (std::size_t n = 0; n < ft.size(); ++n) {
        const Index3 c = scene.coords(ft.voxels[n]);
        bool keep = false;
        for (const auto& o : kFaceOffsets) {
            const Index3 nb(c.x() + o[0], c.y() + o[1], c.z() + o[2]);
            if (!scene.contains(nb) || vv.inside(scene.linear(nb))) continue;
            const auto uv = cam.project(pose.to_camera(scene.center(nb)));
            if (uv && cam.in_image(*uv)) {
                keep = true;
                break;
            }
        }
        if (!keep) continue;
        out.voxels.push_back(ft.voxels[n]);
        out.gain.push_back(n < ft.gain.size() ? ft.gain[n] : 0.0);
        out.sampled.push_back(n < ft.sampled.size() ? ft.sampled[n] : 0);
    }
    return out;
}

}  // namespace frontier

// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#include "frontier/oracle/predictor.hpp"

#include "frontier/core/error.hpp"

namespace frontier {

void OracleParams::validate() const {
    if (!(r_ray > 0.0)) throw ConfigError("r_ray must be positive");
    if (!(r_df > 1.0)) throw ConfigError("r_df must exceed 1 pixel");
    if (!(tau_d > 0.0)) throw ConfigError("tau_d must be positive");
    if (num_classes < 2 || num_classes > 256) throw ConfigError("num_classes must lie in [2, 256]");
    if (g_max < 0.0) throw ConfigError("g_max must be non-negative");
    if (!(gain.sample_frac > 0.0 && gain.sample_frac <= 1.0)) throw ConfigError("sample_frac must lie in (0, 1]");
}

FrontierRaster oracle_predict(const VoxelGrid& scene, const Pose& pose, const CameraModel& cam,
                              const OracleParams& params, Exec exec) {
    return oracle_predict(scene, pose, cam, render_depth(scene, pose, cam, exec), params, exec);
}

FrontierRaster oracle_predict(const VoxelGrid& scene, const Pose& pose, const CameraModel& cam,
                              const DepthImage& depth, const OracleParams& params, Exec exec) {
    params.validate();
    const ViewVolume vv = classify_view_volume(scene, pose, cam, depth, exec);
    FrontierVoxelSet ft = in_view_frontiers(extract_frontier_voxels(vv, scene, exec), vv, scene, pose, cam);

    FrontierRaster out;
    out.num_classes = params.num_classes;
    out.g_max = params.resolved_g_max(cam, scene.resolution());
    out.f_d = depth_discontinuity_mask(depth_gradient(depth), depth, params.tau_d);

    if (params.compute_gain) {
        voxel_info_gain(scene, vv, ft, cam, pose.position, params.gain, exec);
    } else {
        ft.gain.assign(ft.voxels.size(), 0.0);
    }
    const auto centers = voxel_centers(scene, ft.voxels);
    auto proj = project_points(centers, ft.gain, pose, cam, params.r_ray, exec);
    out.f_p = std::move(proj.mask);
    out.g = std::move(proj.gain);

    out.f = Mask(cam.width, cam.height, 0);
    for (std::size_t i = 0; i < out.f.size(); ++i) out.f[i] = out.f_p[i] && out.f_d[i];
    auto df = distance_field(out.f, params.r_df, exec);
    out.d = std::move(df.d);
    out.d_norm = std::move(df.d_norm);
    out.y = bin_gain(out.g, params.num_classes, out.g_max);
    return out;
}

}  // namespace frontier

// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frontier/oracle/predictor.hpp"
#include "frontier/world/sensor.hpp"

namespace frontier {

struct AnchorParams {
    double inclusion_l = 2.0;  // pixels
    int grad_window = 5;
    double grad_eps = 1e-3;    // meters per pixel
    int fgbg_offset = 2;       // pixels between depth samples
    double sigma_px = 24.0;
    double sigma_phi = 0.5;
    double sigma_g_frac = 0.25;  // of g_max
    double cluster_eps = 1.0;
    int min_cluster_size = 8;

    void validate() const;
};

struct FrontierPixelFeature {
    int x = 0;
    int y = 0;
    double phi = 0.0;   // radians, (-pi, pi]
    double gain = 0.0;
    double depth_fg = 0.0;
    double depth_bg = 0.0;
    double range = kNoReturn;  // the pixel's own range
};

struct Frontier2DCluster {
    int x = 0;  // medoid pixel
    int y = 0;
    double phi_bar = 0.0;
    double gain_bar = 0.0;
    double depth_bar = 0.0;
    double depth_fg_bar = 0.0;
    double depth_bg_bar = 0.0;
    int size = 0;
};

enum class FrontierStatus { Active, Consumed, Invalid };

const char* to_string(FrontierStatus s);

struct Frontier3D {
    std::int64_t id = -1;
    Vec3 p_bar = Vec3::Zero();
    Vec3 q_bar = Vec3::UnitX();  // unit viewing direction
    double gain = 0.0;
    double gain0 = 0.0;
    std::int64_t parent_pose_id = -1;
    Vec3 sight_point = Vec3::Zero();  // camera position that observed p_bar
    FrontierStatus status = FrontierStatus::Active;
    std::int64_t revision = 0;  // bumped whenever a merge moves it

    Pose pose() const { return Pose::looking_along(p_bar, q_bar); }
};

/// Pixels closer than `l` to a frontier pixel.
Mask recover_mask(const Raster<double>& d, double l);

/// Inverse of the window-averaged gradient, pointing from the far side of a
/// depth edge toward the near side. Empty when the window holds an invalid
/// gradient or the average is weaker than `eps`.
std::optional<double> pixel_viewing_angle(const GradientMap& gm, int x, int y, int window = 5,
                                          double eps = 1e-3);

struct FgBgDepth {
    double fg = 0.0;
    double bg = 0.0;
};

/// Medians of the depth at 1, 2 and 3 times `s` pixels from (x, y): the
/// background along `phi + pi` (increasing depth), the foreground along
/// `phi`. NO_RETURN background samples read as `max_range`.
std::optional<FgBgDepth> sample_fg_bg_depth(const DepthImage& depth, int x, int y, double phi, int s,
                                            double max_range);

/// Features of every recovered-mask pixel that has a viewing angle and a
/// consistent foreground/background pair. Gains are read from the class map.
std::vector<FrontierPixelFeature> frontier_pixel_features(const FrontierRaster& raster,
                                                          const DepthImage& depth, double max_range,
                                                          const AnchorParams& params);

/// DBSCAN over (x, y, cos phi, sin phi, g) scaled by (sigma_px, sigma_px,
/// sigma_phi, sigma_phi, sigma_g). Output order: by medoid (y, x).
std::vector<Frontier2DCluster> cluster_frontier_pixels(const std::vector<FrontierPixelFeature>& features,
                                                       double sigma_px, double sigma_phi, double sigma_g,
                                                       double eps, int min_cluster_size);

/// Back-projects a cluster through the camera. Empty when no viewing
/// direction survives flattening.
std::optional<Frontier3D> lift_to_3d(const Frontier2DCluster& cluster, const Pose& pose, const CameraModel& cam);

struct AnchorResult {
    std::vector<Frontier2DCluster> clusters;
    std::vector<Frontier3D> frontiers;  // aligned with the clusters that lifted
};

AnchorResult anchor_frontiers(const FrontierRaster& raster, const DepthImage& depth, const Pose& pose,
                              const CameraModel& cam, const AnchorParams& params);

}  // namespace frontier

// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>

#include "frontier/oracle/info_gain.hpp"
#include "frontier/oracle/raster_ops.hpp"

namespace frontier {

struct OracleParams {
    double r_ray = 0.15;   // meters
    double r_df = 20.0;    // pixels
    double tau_d = 0.05;   // meters per pixel
    int num_classes = 11;
    double g_max = 0.0;    // 0 selects the sensor frustum voxel count
    GainParams gain;
    bool compute_gain = true;  // false leaves g at zero (for callers that overwrite it)

    void validate() const;
    double resolved_g_max(const CameraModel& cam, double resolution) const {
        return g_max > 0.0 ? g_max : cam.frustum_voxel_count(resolution);
    }
};

/// Everything a frontier predictor produces for one image.
struct FrontierRaster {
    Mask f_p;
    Mask f_d;
    Mask f;
    Raster<double> d;
    Raster<double> d_norm;
    Raster<double> g;
    Mask y;
    double g_max = 0.0;
    int num_classes = 0;
};

/// Full ground-truth pipeline for a single image with no prior exploration.
FrontierRaster oracle_predict(const VoxelGrid& scene, const Pose& pose, const CameraModel& cam,
                              const OracleParams& params, Exec exec = Exec::parallel);
/// Same, from a range image already rendered at `pose`.
FrontierRaster oracle_predict(const VoxelGrid& scene, const Pose& pose, const CameraModel& cam,
                              const DepthImage& depth, const OracleParams& params,
                              Exec exec = Exec::parallel);

/// Interface the explorer consumes; a learned model can implement it.
class FrontierPredictor {
public:
    virtual ~FrontierPredictor() = default;
    virtual FrontierRaster predict(const Pose& pose, const CameraModel& cam, const DepthImage& depth) = 0;
};

/// Privileged predictor backed by the ground-truth scene.
class OraclePredictor final : public FrontierPredictor {
public:
    OraclePredictor(const VoxelGrid& scene, OracleParams params, Exec exec = Exec::parallel)
        : scene_(scene), params_(params), exec_(exec) {}

    FrontierRaster predict(const Pose& pose, const CameraModel& cam, const DepthImage& depth) override {
        return oracle_predict(scene_, pose, cam, depth, params_, exec_);
    }

    OracleParams& params() { return params_; }

private:
    const VoxelGrid& scene_;
    OracleParams params_;
    Exec exec_;
};

}  // namespace frontier

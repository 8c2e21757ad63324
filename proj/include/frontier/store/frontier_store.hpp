// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "frontier/anchor/anchor.hpp"

namespace frontier {

struct StoreParams {
    double merge_dist = 0.5;     // meters
    double merge_angle = 45.0;   // degrees
    double visit_dist = 0.5;
    double visit_angle = 30.0;
    double g_min = 50.0;         // voxels
};

/// Visited poses, kept when they differ from the last kept one by at least
/// `step_dist` meters or `step_angle` degrees.
class TrajectoryMemory {
public:
    explicit TrajectoryMemory(double step_dist = 0.1, double step_angle = 10.0)
        : step_dist_(step_dist), step_angle_(step_angle) {}

    /// Returns true when the pose was kept.
    bool add(const Pose& pose);
    const std::vector<Pose>& poses() const { return poses_; }

private:
    double step_dist_;
    double step_angle_;
    std::vector<Pose> poses_;
};

struct MergeResult {
    std::int64_t id = -1;   // surviving frontier holding the incoming one
    bool merged = false;
    std::vector<std::int64_t> absorbed;  // ids erased by the cascade
};

/// Angle in degrees between two viewing directions.
double direction_angle_deg(const Vec3& a, const Vec3& b);

bool mergeable(const Frontier3D& a, const Frontier3D& b, double dist, double angle_deg);

/// Does `p` project inside the frame of `cam` placed at `pose`, no farther
/// than max_range from the camera?
bool in_virtual_view(const Pose& pose, const CameraModel& cam, const Vec3& p);

/// Known voxels of `map` inside the frontier's virtual view.
std::int64_t known_in_view(const Frontier3D& f, const VoxelGrid& map, const CameraModel& cam);

/// max(0, gain0 - known_in_view); also stores it in f.gain.
double adjust_gain(Frontier3D& f, const VoxelGrid& map, const CameraModel& cam);

class FrontierStore {
public:
    MergeResult merge_or_insert(Frontier3D f, double dist, double angle_deg);

    /// Re-adjusts gains (when `map` is given) and invalidates frontiers that
    /// fall below g_min or sit near a visited pose. Returns ids invalidated.
    std::vector<std::int64_t> prune_invalid(const TrajectoryMemory& traj, const VoxelGrid* map,
                                            const CameraModel& cam, const StoreParams& params,
                                            Exec exec = Exec::parallel);

    void set_status(std::int64_t id, FrontierStatus s);

    const Frontier3D* find(std::int64_t id) const;
    const std::map<std::int64_t, Frontier3D>& frontiers() const { return frontiers_; }
    std::vector<const Frontier3D*> active() const;
    std::size_t active_count() const;

    /// No two Active frontiers could merge.
    bool is_maximal(double dist, double angle_deg) const;

private:
    std::map<std::int64_t, Frontier3D> frontiers_;
    std::int64_t next_id_ = 0;
};

/// id,status,px,py,pz,yaw_deg,pitch_deg,gain0,gain,parent_pose_id
void write_store_csv(std::ostream& os, const FrontierStore& store);

}  // namespace frontier

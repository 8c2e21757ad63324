// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#include "frontier/store/frontier_store.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace frontier {

bool TrajectoryMemory::add(const Pose& pose) {
    if (!poses_.empty()) {
        const Pose& last = poses_.back();
        const double moved = (pose.position - last.position).norm();
        const double turned = rad2deg(angle_between(pose.forward(), last.forward()));
        if (moved < step_dist_ - 1e-9 && turned < step_angle_ - 1e-9) return false;
    }
    poses_.push_back(pose);
    return true;
}

double direction_angle_deg(const Vec3& a, const Vec3& b) { return rad2deg(angle_between(a, b)); }

bool mergeable(const Frontier3D& a, const Frontier3D& b, double dist, double angle_deg) {
    return (a.p_bar - b.p_bar).norm() < dist && direction_angle_deg(a.q_bar, b.q_bar) < angle_deg;
}

bool in_virtual_view(const Pose& pose, const CameraModel& cam, const Vec3& p) {
    const Vec3 c = pose.to_camera(p);
    if (c.norm() > cam.max_range) return false;
    const auto uv = cam.project(c);
    return uv && cam.in_image(*uv);
}

std::int64_t known_in_view(const Frontier3D& f, const VoxelGrid& map, const CameraModel& cam) {
    const Pose pose = f.pose();
    // The range-truncated pyramid lies inside the box hull of its apex and
    // the far-plane corners at depth max_range.
    const double r = cam.max_range;
    const double tx = std::tan(0.5 * deg2rad(cam.fov_x_deg));
    const double ty = std::tan(0.5 * deg2rad(cam.fov_y_deg));
    Vec3 lo = pose.position, hi = pose.position;
    for (double sx : {-1.0, 1.0}) {
        for (double sy : {-1.0, 1.0}) {
            const Vec3 c = pose.to_world(Vec3(sx * tx * r, sy * ty * r, r));
            lo = lo.cwiseMin(c);
            hi = hi.cwiseMax(c);
        }
    }
    const Dims& d = map.dims();
    const Index3 a = map.cell_of(lo), b = map.cell_of(hi);
    const int i0 = std::max(0, a.x() - 1), i1 = std::min(d.nx - 1, b.x() + 1);
    const int j0 = std::max(0, a.y() - 1), j1 = std::min(d.ny - 1, b.y() + 1);
    const int k0 = std::max(0, a.z() - 1), k1 = std::min(d.nz - 1, b.z() + 1);
    std::int64_t count = 0;
    for (int k = k0; k <= k1; ++k) {
        for (int j = j0; j <= j1; ++j) {
            for (int i = i0; i <= i1; ++i) {
                const std::int64_t idx = map.linear(i, j, k);
                if (map.at(idx) != Cell::Unknown && in_virtual_view(pose, cam, map.center(idx))) ++count;
            }
        }
    }
    return count;
}

double adjust_gain(Frontier3D& f, const VoxelGrid& map, const CameraModel& cam) {
    f.gain = std::max(0.0, f.gain0 - static_cast<double>(known_in_view(f, map, cam)));
    return f.gain;
}

MergeResult FrontierStore::merge_or_insert(Frontier3D f, double dist, double angle_deg) {
    MergeResult r;
    f.status = FrontierStatus::Active;
    // The moving frontier starts as the incoming one and is folded into the
    // nearest mergeable Active frontier until none remains.
    std::int64_t moving_id = -1;
    for (;;) {
        const Frontier3D* best = nullptr;
        double best_d = 0.0;
        for (const auto& [id, g] : frontiers_) {
            if (id == moving_id || g.status != FrontierStatus::Active || !mergeable(f, g, dist, angle_deg)) continue;
            const double d = (f.p_bar - g.p_bar).norm();
            if (best == nullptr || d < best_d) {  // map order breaks ties by lower id
                best = &g;
                best_d = d;
            }
        }
        if (best == nullptr) break;
        Frontier3D& g = frontiers_.at(best->id);
        g.p_bar = 0.5 * (g.p_bar + f.p_bar);
        g.q_bar = (g.q_bar + f.q_bar).normalized();
        g.gain = 0.5 * (g.gain + f.gain);
        g.gain0 = std::max(g.gain0, f.gain0);
        g.parent_pose_id = f.parent_pose_id;
        g.sight_point = f.sight_point;
        ++g.revision;
        if (moving_id >= 0) {
            frontiers_.erase(moving_id);
            r.absorbed.push_back(moving_id);
        }
        r.merged = true;
        moving_id = g.id;
        f = g;
    }
    if (!r.merged) {
        f.id = next_id_++;
        frontiers_.emplace(f.id, f);
        moving_id = f.id;
    }
    r.id = moving_id;
    return r;
}

std::vector<std::int64_t> FrontierStore::prune_invalid(const TrajectoryMemory& traj, const VoxelGrid* map,
                                                       const CameraModel& cam, const StoreParams& params,
                                                       Exec exec) {
    std::vector<Frontier3D*> act;
    for (auto& [id, f] : frontiers_) {
        if (f.status == FrontierStatus::Active) act.push_back(&f);
    }
    std::vector<char> drop(act.size(), 0);
    parallel_for(exec, static_cast<std::int64_t>(act.size()), [&](std::int64_t i) {
        Frontier3D& f = *act[static_cast<std::size_t>(i)];
        if (map != nullptr && adjust_gain(f, *map, cam) < params.g_min) {
            drop[static_cast<std::size_t>(i)] = 1;
            return;
        }
        for (const Pose& p : traj.poses()) {
            if ((p.position - f.p_bar).norm() <= params.visit_dist &&
                direction_angle_deg(p.forward(), f.q_bar) <= params.visit_angle) {
                drop[static_cast<std::size_t>(i)] = 1;
                return;
            }
        }
    });
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < act.size(); ++i) {
        if (!drop[i]) continue;
        act[i]->status = FrontierStatus::Invalid;
        out.push_back(act[i]->id);
    }
    return out;
}

void FrontierStore::set_status(std::int64_t id, FrontierStatus s) {
    auto it = frontiers_.find(id);
    if (it != frontiers_.end() && it->second.status == FrontierStatus::Active) it->second.status = s;
}

const Frontier3D* FrontierStore::find(std::int64_t id) const {
    auto it = frontiers_.find(id);
    return it == frontiers_.end() ? nullptr : &it->second;
}

std::vector<const Frontier3D*> FrontierStore::active() const {
    std::vector<const Frontier3D*> out;
    for (const auto& [id, f] : frontiers_) {
        if (f.status == FrontierStatus::Active) out.push_back(&f);
    }
    return out;
}

std::size_t FrontierStore::active_count() const { return active().size(); }

bool FrontierStore::is_maximal(double dist, double angle_deg) const {
    const auto a = active();
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            if (mergeable(*a[i], *a[j], dist, angle_deg)) return false;
        }
    }
    return true;
}

void write_store_csv(std::ostream& os, const FrontierStore& store) {
    os << "id,status,px,py,pz,yaw_deg,pitch_deg,gain0,gain,parent_pose_id\n";
    for (const auto& [id, f] : store.frontiers()) {
        fmt::print(os, "{},{},{:.6f},{:.6f},{:.6f},{:.3f},{:.3f},{:.3f},{:.3f},{}\n", id, to_string(f.status),
                   f.p_bar.x(), f.p_bar.y(), f.p_bar.z(), rad2deg(direction_yaw(f.q_bar)),
                   rad2deg(direction_pitch(f.q_bar)), f.gain0, f.gain, f.parent_pose_id);
    }
}

}  // namespace frontier

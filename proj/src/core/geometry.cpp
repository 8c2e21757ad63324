// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#include "frontier/core/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "frontier/core/error.hpp"

namespace frontier {

double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * kPi);
    if (a <= -kPi) a += 2.0 * kPi;
    if (a > kPi) a -= 2.0 * kPi;
    return a;
}

double angle_between(const Vec3& a, const Vec3& b) {
    // atan2 form stays accurate for nearly parallel vectors.
    return std::atan2(a.cross(b).norm(), a.dot(b));
}

Vec3 direction_from_yaw_pitch(double yaw, double pitch) {
    return {std::cos(pitch) * std::cos(yaw), std::cos(pitch) * std::sin(yaw), std::sin(pitch)};
}

double direction_yaw(const Vec3& dir) { return std::atan2(dir.y(), dir.x()); }

double direction_pitch(const Vec3& dir) {
    return std::atan2(dir.z(), std::hypot(dir.x(), dir.y()));
}

Pose Pose::from_yaw_pitch(const Vec3& position, double yaw, double pitch) {
    const Vec3 fwd = direction_from_yaw_pitch(yaw, pitch);
    const Vec3 right(std::sin(yaw), -std::cos(yaw), 0.0);
    const Vec3 down = fwd.cross(right);
    Eigen::Matrix3d r;
    r.col(0) = right;
    r.col(1) = down;
    r.col(2) = fwd;
    Pose p;
    p.position = position;
    p.orientation = Eigen::Quaterniond(r).normalized();
    return p;
}

Pose Pose::looking_along(const Vec3& position, const Vec3& direction) {
    return from_yaw_pitch(position, direction_yaw(direction), direction_pitch(direction));
}

double Pose::yaw() const { return direction_yaw(forward()); }
double Pose::pitch() const { return direction_pitch(forward()); }

bool Pose::has_unit_rotation() const { return std::abs(orientation.norm() - 1.0) <= 1e-9; }

void CameraModel::validate() const {
    if (width <= 0 || height <= 0) throw ConfigError("camera dimensions must be positive");
    if (!(fov_x_deg > 0.0 && fov_x_deg < 180.0) || !(fov_y_deg > 0.0 && fov_y_deg < 180.0)) {
        throw ConfigError("camera field of view must lie in (0, 180) degrees");
    }
    if (!(max_range > 0.0)) throw ConfigError("camera max_range must be positive");
}

double CameraModel::fx() const { return cx() / std::tan(0.5 * deg2rad(fov_x_deg)); }
double CameraModel::fy() const { return cy() / std::tan(0.5 * deg2rad(fov_y_deg)); }

Vec3 CameraModel::ray(double u, double v) const {
    return Vec3((u - cx()) / fx(), (v - cy()) / fy(), 1.0).normalized();
}

std::optional<Vec2> CameraModel::project(const Vec3& p_cam) const {
    if (!(p_cam.z() > 0.0)) return std::nullopt;
    return Vec2(fx() * p_cam.x() / p_cam.z() + cx(), fy() * p_cam.y() / p_cam.z() + cy());
}

double CameraModel::frustum_voxel_count(double resolution) const {
    const double tx = std::tan(0.5 * deg2rad(fov_x_deg));
    const double ty = std::tan(0.5 * deg2rad(fov_y_deg));
    const double volume = 4.0 / 3.0 * tx * ty * max_range * max_range * max_range;
    return std::floor(volume / (resolution * resolution * resolution));
}

}  // namespace frontier

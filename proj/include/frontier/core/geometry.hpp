// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <numbers>
#include <optional>

namespace frontier {

using Vec3 = Eigen::Vector3d;
using Vec2 = Eigen::Vector2d;

inline constexpr double kPi = std::numbers::pi;

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

/// Wraps an angle into (-pi, pi].
double wrap_angle(double a);

/// Angle between two non-zero vectors, radians in [0, pi].
double angle_between(const Vec3& a, const Vec3& b);

/// Camera pose, world-from-camera. The camera looks along its +Z axis with
/// +X right and +Y down; the world frame is z-up.
struct Pose {
    Vec3 position = Vec3::Zero();
    Eigen::Quaterniond orientation = Eigen::Quaterniond::Identity();

    /// Roll-free orientation: yaw about world z, pitch positive looking up.
    static Pose from_yaw_pitch(const Vec3& position, double yaw, double pitch);
    /// Roll-free orientation whose optical axis is `direction`.
    static Pose looking_along(const Vec3& position, const Vec3& direction);

    Vec3 forward() const { return orientation * Vec3::UnitZ(); }
    double yaw() const;
    double pitch() const;

    Vec3 to_world(const Vec3& p_cam) const { return orientation * p_cam + position; }
    Vec3 to_camera(const Vec3& p_world) const {
        return orientation.conjugate() * (p_world - position);
    }

    bool has_unit_rotation() const;
};

/// Yaw/pitch (radians) of a world direction.
double direction_yaw(const Vec3& dir);
double direction_pitch(const Vec3& dir);
Vec3 direction_from_yaw_pitch(double yaw, double pitch);

/// Pinhole camera with a range-limited sensor.
struct CameraModel {
    int width = 480;
    int height = 480;
    double fov_x_deg = 77.32;
    double fov_y_deg = 77.32;
    double max_range = 3.5;

    /// Throws ConfigError when any field is out of range.
    void validate() const;

    double fx() const;
    double fy() const;
    double cx() const { return 0.5 * width; }
    double cy() const { return 0.5 * height; }

    /// Unit ray in the camera frame through continuous pixel coordinates
    /// (u, v); pixel (x, y) has its center at (x + 0.5, y + 0.5).
    Vec3 ray(double u, double v) const;
    Vec3 pixel_ray(int x, int y) const { return ray(x + 0.5, y + 0.5); }

    /// Continuous pixel coordinates of a camera-frame point; empty when the
    /// point is not in front of the camera.
    std::optional<Vec2> project(const Vec3& p_cam) const;
    bool in_image(const Vec2& uv) const {
        return uv.x() >= 0.0 && uv.y() >= 0.0 && uv.x() < width && uv.y() < height;
    }

    /// Voxel count of a max_range-deep viewing pyramid at the given voxel edge.
    double frustum_voxel_count(double resolution) const;
};

}  // namespace frontier

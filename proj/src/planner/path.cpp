// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#include "frontier/planner/path.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

#include "frontier/planner/graph.hpp"
#include "frontier/world/raycast.hpp"

namespace frontier {

Traversability::Traversability(const VoxelGrid& map, double inflation, Exec exec)
    : map_(&map), inflated_(static_cast<std::size_t>(map.size()), 0) {
    const double v = map.resolution();
    const int r = static_cast<int>(std::floor(inflation / v + 1e-9));
    if (r <= 0) return;
    std::vector<Index3> offsets;
    for (int k = -r; k <= r; ++k)
        for (int j = -r; j <= r; ++j)
            for (int i = -r; i <= r; ++i)
                if ((i * i + j * j + k * k) * v * v <= inflation * inflation + 1e-12) offsets.emplace_back(i, j, k);
    parallel_for(exec, map.size(), [&](std::int64_t idx) {
        if (map.at(idx) != Cell::Free) return;
        const Index3 c = map.coords(idx);
        for (const auto& o : offsets) {
            const Index3 n = c + o;
            if (map.contains(n.x(), n.y(), n.z()) && map.at(map.linear(n.x(), n.y(), n.z())) == Cell::Occupied) {
                inflated_[static_cast<std::size_t>(idx)] = 1;
                return;
            }
        }
    });
}

double octile_distance(const Index3& a, const Index3& b, double resolution) {
    int d[3] = {std::abs(a.x() - b.x()), std::abs(a.y() - b.y()), std::abs(a.z() - b.z())};
    std::sort(d, d + 3);  // d[0] <= d[1] <= d[2]
    return resolution * (std::sqrt(3.0) * d[0] + std::sqrt(2.0) * (d[1] - d[0]) + (d[2] - d[1]));
}

std::optional<std::vector<std::int64_t>> astar(const Traversability& tr, std::int64_t start, std::int64_t goal,
                                               double* cost) {
    const VoxelGrid& map = tr.map();
    if (!tr.free(start) || !tr.free(goal)) return std::nullopt;
    const std::size_t n = static_cast<std::size_t>(map.size());
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> g(n, inf);
    std::vector<std::int64_t> parent(n, -1);
    std::vector<std::uint8_t> closed(n, 0);
    const Index3 gc = map.coords(goal);
    using Entry = std::pair<double, std::int64_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
    g[static_cast<std::size_t>(start)] = 0.0;
    open.emplace(octile_distance(map.coords(start), gc, map.resolution()), start);
    const GraphRule rule{&tr, start, goal};
    while (!open.empty()) {
        const auto [f, u] = open.top();
        open.pop();
        if (closed[static_cast<std::size_t>(u)]) continue;
        closed[static_cast<std::size_t>(u)] = 1;
        if (u == goal) break;
        const double gu = g[static_cast<std::size_t>(u)];
        for_each_neighbor(rule, u, [&](std::int64_t w, double c) {
            const double gw = gu + c;
            if (gw < g[static_cast<std::size_t>(w)]) {
                g[static_cast<std::size_t>(w)] = gw;
                parent[static_cast<std::size_t>(w)] = u;
                open.emplace(gw + octile_distance(map.coords(w), gc, map.resolution()), w);
            }
        });
    }
    if (!closed[static_cast<std::size_t>(goal)]) return std::nullopt;
    std::vector<std::int64_t> out;
    for (std::int64_t u = goal; u != -1; u = parent[static_cast<std::size_t>(u)]) out.push_back(u);
    std::reverse(out.begin(), out.end());
    if (cost) *cost = g[static_cast<std::size_t>(goal)];
    return out;
}

namespace {

bool segment_clear(const Traversability& tr, const Vec3& a, const Vec3& b, std::int64_t start, std::int64_t goal) {
    const Vec3 d = b - a;
    const double len = d.norm();
    if (len == 0.0) return true;
    bool ok = true;
    traverse_ray(tr.map(), a, d / len, len, [&](std::int64_t idx, const Index3&, double, double) {
        if (!(tr.clear(idx) || ((idx == start || idx == goal) && tr.free(idx)))) ok = false;
        return ok;
    });
    return ok;
}

}  // namespace

std::vector<Vec3> shortcut(const Traversability& tr, const std::vector<Vec3>& points) {
    if (points.size() <= 2) return points;
    const auto s = tr.map().index_of(points.front());
    const auto e = tr.map().index_of(points.back());
    const std::int64_t start = s ? tr.map().linear(*s) : -1;
    const std::int64_t goal = e ? tr.map().linear(*e) : -1;
    std::vector<Vec3> out{points.front()};
    std::size_t i = 0;
    while (i + 1 < points.size()) {
        std::size_t j = i + 1;
        while (j + 1 < points.size() && segment_clear(tr, points[i], points[j + 1], start, goal)) ++j;
        out.push_back(points[j]);
        i = j;
    }
    return out;
}

namespace {

void push_turn(Path& path, Pose& cur, const Pose& next) {
    path.total_rotation += rad2deg(angle_between(cur.forward(), next.forward()));
    path.waypoints.push_back(next);
    cur = next;
}

// Yaw change at fixed pitch that swings the optical axis by `angle`; the
// full half turn when no yaw change reaches it.
double yaw_for_axis_angle(double angle, double pitch) {
    const double c2 = std::cos(pitch) * std::cos(pitch);
    if (c2 < 1e-12) return std::numbers::pi;
    const double c = (std::cos(angle) - (1.0 - c2)) / c2;
    return c <= -1.0 ? std::numbers::pi : std::acos(std::min(1.0, c));
}

// Turns `cur` in place toward (yaw, pitch). Every intermediate pose swings
// the optical axis by exactly `step_angle`; only the last may swing less.
// Pitch moves first when it brings the axis closer to level.
void rotate_to(Path& path, Pose& cur, double yaw, double pitch, double step_angle) {
    const double step = deg2rad(step_angle);
    auto turn_pitch = [&] {
        const double y = cur.yaw();
        double p = cur.pitch();
        while (std::abs(pitch - p) > 1e-12) {
            p = std::abs(pitch - p) <= step + 1e-12 ? pitch : p + std::copysign(step, pitch - p);
            push_turn(path, cur, Pose::from_yaw_pitch(cur.position, y, p));
        }
    };
    auto turn_yaw = [&] {
        const double p = cur.pitch();
        const double dy_step = yaw_for_axis_angle(step, p);
        double left = wrap_angle(yaw - cur.yaw());
        double y = cur.yaw();
        while (std::abs(left) > 1e-12) {
            const double d = std::abs(left) <= dy_step + 1e-12 ? left : std::copysign(dy_step, left);
            y += d;
            left -= d;
            push_turn(path, cur, Pose::from_yaw_pitch(cur.position, y, p));
        }
    };
    if (std::abs(pitch) < std::abs(cur.pitch())) {
        turn_pitch();
        turn_yaw();
    } else {
        turn_yaw();
        turn_pitch();
    }
}

}  // namespace

Path densify(const Pose& start, const std::vector<Vec3>& points, const Pose& final_pose, double step_dist,
             double step_angle) {
    Path path;
    Pose cur = Pose::from_yaw_pitch(start.position, start.yaw(), start.pitch());
    for (std::size_t s = 1; s < points.size(); ++s) {
        const Vec3 a = cur.position, b = points[s];
        const Vec3 d = b - a;
        const double len = d.norm();
        if (len < 1e-12) continue;
        const double horiz = std::hypot(d.x(), d.y());
        const double heading = horiz > 1e-9 ? std::atan2(d.y(), d.x()) : cur.yaw();
        rotate_to(path, cur, heading, 0.0, step_angle);
        // Full-length steps, then the remainder.
        const int n = static_cast<int>(std::ceil(len / step_dist - 1e-9));
        const Pose facing = cur;
        for (int i = 1; i <= n; ++i) {
            Pose next = facing;
            next.position = i == n ? b : Vec3(a + d * (i * step_dist / len));
            path.waypoints.push_back(next);
        }
        cur.position = b;
        path.total_length += len;
    }
    rotate_to(path, cur, final_pose.yaw(), final_pose.pitch(), step_angle);
    return path;
}

std::optional<Path> plan_path(const Traversability& tr, const Pose& start, const Vec3& goal,
                              const std::optional<Vec3>& final_dir, double step_dist, double step_angle) {
    const VoxelGrid& map = tr.map();
    const auto s = map.index_of(start.position);
    const auto e = map.index_of(goal);
    if (!s || !e) return std::nullopt;
    const auto cells = astar(tr, map.linear(*s), map.linear(*e));
    if (!cells) return std::nullopt;
    std::vector<Vec3> pts{start.position};
    for (std::size_t i = 1; i + 1 < cells->size(); ++i) pts.push_back(map.center((*cells)[i]));
    pts.push_back(goal);
    pts = shortcut(tr, pts);

    Pose final_pose = start;
    if (final_dir && final_dir->norm() > 1e-12) {
        final_pose = Pose::looking_along(goal, *final_dir);
    } else if (pts.size() >= 2) {
        const Vec3 d = pts.back() - pts[pts.size() - 2];
        if (std::hypot(d.x(), d.y()) > 1e-9) final_pose = Pose::from_yaw_pitch(goal, std::atan2(d.y(), d.x()), 0.0);
    }
    return densify(start, pts, final_pose, step_dist, step_angle);
}

std::optional<Path> plan_path(const VoxelGrid& map, const Pose& start, const Vec3& goal, double inflation,
                              const std::optional<Vec3>& final_dir, double step_dist, double step_angle) {
    const Traversability tr(map, inflation);
    return plan_path(tr, start, goal, final_dir, step_dist, step_angle);
}

}  // namespace frontier

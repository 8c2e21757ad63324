// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#include "frontier/planner/goal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "frontier/planner/graph.hpp"

namespace frontier {

double utility(const Frontier3D& f, const Vec3& robot, double d_floor) {
    return f.gain / std::max((robot - f.p_bar).norm(), d_floor);
}

std::optional<std::int64_t> select_goal(const FrontierStore& store, const Vec3& robot, double d_floor,
                                        const std::vector<std::int64_t>& exclude) {
    const Frontier3D* best = nullptr;
    double best_u = 0.0;
    for (const Frontier3D* f : store.active()) {
        if (std::find(exclude.begin(), exclude.end(), f->id) != exclude.end()) continue;
        const double u = utility(*f, robot, d_floor);
        // active() is ordered by id, so strict comparisons keep the lower id.
        if (best == nullptr || u > best_u || (u == best_u && f->gain > best->gain)) {
            best = f;
            best_u = u;
        }
    }
    if (best == nullptr) return std::nullopt;
    return best->id;
}

Vec3 find_entry_point(const FrontierTree& tree, const Frontier3D& f, const VoxelGrid& map, int n_samples) {
    const Vec3 parent = tree.pose(f.parent_pose_id).position;
    for (int i = 0; i < n_samples; ++i) {
        const Vec3 c = f.p_bar + (parent - f.p_bar) * (static_cast<double>(i) / n_samples);
        if (map.at_point(c, Cell::Unknown) == Cell::Free) return c;
    }
    return parent;
}

std::vector<std::int64_t> map_frontier_voxels(const VoxelGrid& map, Exec exec) {
    const Dims& d = map.dims();
    std::vector<std::vector<std::int64_t>> per_slice(static_cast<std::size_t>(d.nz));
    parallel_for(exec, d.nz, [&](std::int64_t kk) {
        const int k = static_cast<int>(kk);
        for (int j = 0; j < d.ny; ++j) {
            for (int i = 0; i < d.nx; ++i) {
                const std::int64_t idx = map.linear(i, j, k);
                if (map.at(idx) != Cell::Free) continue;
                for (const auto& o : kFaceOffsets) {
                    const int a = i + o[0], b = j + o[1], c = k + o[2];
                    if (map.contains(a, b, c) && map.at(map.linear(a, b, c)) == Cell::Unknown) {
                        per_slice[static_cast<std::size_t>(k)].push_back(idx);
                        break;
                    }
                }
            }
        }
    });
    std::vector<std::int64_t> out;
    for (auto& s : per_slice) out.insert(out.end(), s.begin(), s.end());
    return out;
}

std::vector<std::vector<std::int64_t>> cluster_voxels(const VoxelGrid& map, const std::vector<std::int64_t>& voxels) {
    std::vector<std::int64_t> sorted = voxels;
    std::sort(sorted.begin(), sorted.end());
    auto pos = [&](std::int64_t idx) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), idx);
        return it != sorted.end() && *it == idx ? it - sorted.begin() : -1;
    };
    std::vector<char> seen(sorted.size(), 0);
    std::vector<std::vector<std::int64_t>> out;
    for (std::size_t s = 0; s < sorted.size(); ++s) {
        if (seen[s]) continue;
        std::vector<std::int64_t> comp;
        std::vector<std::size_t> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            const std::int64_t u = sorted[stack.back()];
            stack.pop_back();
            comp.push_back(u);
            const Index3 c = map.coords(u);
            for (int dk = -1; dk <= 1; ++dk)
                for (int dj = -1; dj <= 1; ++dj)
                    for (int di = -1; di <= 1; ++di) {
                        if (!map.contains(c.x() + di, c.y() + dj, c.z() + dk)) continue;
                        const auto p = pos(map.linear(c.x() + di, c.y() + dj, c.z() + dk));
                        if (p >= 0 && !seen[static_cast<std::size_t>(p)]) {
                            seen[static_cast<std::size_t>(p)] = 1;
                            stack.push_back(static_cast<std::size_t>(p));
                        }
                    }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::optional<ClassicGoal> classic_baseline_step(const Traversability& tr, const Pose& robot, int min_cluster,
                                                 const std::vector<Vec3>& skip, double skip_radius) {
    const VoxelGrid& map = tr.map();
    const auto s = map.index_of(robot.position);
    if (!s) return std::nullopt;
    const std::int64_t start = map.linear(*s);
    if (!tr.free(start)) return std::nullopt;

    std::vector<std::vector<std::int64_t>> clusters;
    for (auto& c : cluster_voxels(map, map_frontier_voxels(map))) {
        if (static_cast<int>(c.size()) >= min_cluster) clusters.push_back(std::move(c));
    }
    if (clusters.empty()) return std::nullopt;

    // Single-source Dijkstra; frontier voxels stay reachable inside the
    // inflation band.
    const std::size_t n = static_cast<std::size_t>(map.size());
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(n, inf);
    std::vector<std::int64_t> parent(n, -1);
    std::vector<std::uint8_t> target(n, 0);
    for (const auto& c : clusters)
        for (auto v : c) target[static_cast<std::size_t>(v)] = 1;
    using Entry = std::pair<double, std::int64_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
    dist[static_cast<std::size_t>(start)] = 0.0;
    open.emplace(0.0, start);
    const GraphRule rule{&tr, start, -1, target.data()};
    while (!open.empty()) {
        const auto [du, u] = open.top();
        open.pop();
        if (du > dist[static_cast<std::size_t>(u)]) continue;
        if (u != start && !tr.clear(u)) continue;  // inflated frontier voxels are endpoints only
        for_each_neighbor(rule, u, [&](std::int64_t w, double c) {
            const double dw = du + c;
            if (dw < dist[static_cast<std::size_t>(w)]) {
                dist[static_cast<std::size_t>(w)] = dw;
                parent[static_cast<std::size_t>(w)] = u;
                open.emplace(dw, w);
            }
        });
    }

    struct Candidate {
        double length;
        std::int64_t goal;
        Vec3 dir;
    };
    std::optional<Candidate> best;
    for (const auto& c : clusters) {
        double nearest = inf;
        Vec3 centroid = Vec3::Zero();
        Vec3 dir = Vec3::Zero();
        for (auto v : c) {
            nearest = std::min(nearest, dist[static_cast<std::size_t>(v)]);
            centroid += map.center(v);
            const Index3 vc = map.coords(v);
            for (const auto& o : kFaceOffsets) {
                const int a = vc.x() + o[0], b = vc.y() + o[1], e = vc.z() + o[2];
                if (map.contains(a, b, e) && map.at(map.linear(a, b, e)) == Cell::Unknown) dir += Vec3(o[0], o[1], o[2]);
            }
        }
        if (!std::isfinite(nearest)) continue;
        centroid /= static_cast<double>(c.size());
        std::int64_t goal = -1;
        double goal_d = inf;
        for (auto v : c) {
            if (!std::isfinite(dist[static_cast<std::size_t>(v)])) continue;
            const double d = (map.center(v) - centroid).squaredNorm();
            if (d < goal_d) {
                goal_d = d;
                goal = v;
            }
        }
        const Vec3 gp = map.center(goal);
        const bool skipped = std::any_of(skip.begin(), skip.end(), [&](const Vec3& p) { return (p - gp).norm() <= skip_radius; });
        if (skipped) continue;
        if (!best || nearest < best->length) best = Candidate{nearest, goal, dir};
    }
    if (!best) return std::nullopt;

    ClassicGoal out;
    out.point = map.center(best->goal);
    out.direction = best->dir.norm() > 1e-9 ? Vec3(best->dir.normalized()) : robot.forward();
    out.path_length = dist[static_cast<std::size_t>(best->goal)];
    for (std::int64_t u = best->goal; u != -1; u = parent[static_cast<std::size_t>(u)]) out.route.push_back(u);
    std::reverse(out.route.begin(), out.route.end());
    return out;
}

}  // namespace frontier

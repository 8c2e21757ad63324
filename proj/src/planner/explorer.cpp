// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#include "frontier/planner/explorer.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <ostream>
#include <queue>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "frontier/core/error.hpp"
#include "frontier/world/raycast.hpp"

namespace frontier {

const char* to_string(LogEvent e) {
    switch (e) {
        case LogEvent::step: return "step";
        case LogEvent::observe: return "observe";
        case LogEvent::replan: return "replan";
        case LogEvent::goal_reached: return "goal_reached";
        case LogEvent::goal_invalidated: return "goal_invalidated";
        case LogEvent::collision: return "collision";
        case LogEvent::done: return "done";
    }
    return "?";
}

void write_log_csv(std::ostream& os, const ExplorationLog& log) {
    os << "step,x,y,z,yaw_deg,pitch_deg,known_voxels,known_fraction,goal_id,event\n";
    for (const auto& r : log.rows) {
        fmt::print(os, "{},{:.6f},{:.6f},{:.6f},{:.3f},{:.3f},{},{:.6f},{},{}\n", r.step, r.pose.position.x(),
                   r.pose.position.y(), r.pose.position.z(), rad2deg(r.pose.yaw()), rad2deg(r.pose.pitch()),
                   r.known_voxels, r.known_fraction, r.goal_id, to_string(r.event));
    }
}

void apply_ablation(FrontierRaster& raster, const DepthImage& /*depth*/, const ExploreConfig& cfg) {
    if (cfg.planner.mask_mode == MaskMode::discontinuity) {
        raster.f = raster.f_d;
        auto df = distance_field(raster.f, cfg.oracle.r_df);
        raster.d = std::move(df.d);
        raster.d_norm = std::move(df.d_norm);
    }
    if (cfg.planner.gain_mode == GainMode::uniform) {
        raster.g = Raster<double>(raster.f.width(), raster.f.height(), 0.5 * raster.g_max);
        raster.y = bin_gain(raster.g, raster.num_classes, raster.g_max);
    }
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Positions the robot has actually occupied, joined in the order visited.
// Map-free routing may only use these edges.
class Trail {
public:
    void add(const Vec3& p) {
        const int v = vertex(p);
        if (last_ >= 0 && last_ != v) {
            adj_[static_cast<std::size_t>(last_)].push_back(v);
            adj_[static_cast<std::size_t>(v)].push_back(last_);
        }
        last_ = v;
    }

    /// Shortest chain of visited positions from the current one to `target`.
    std::optional<std::vector<Vec3>> route_to(const Vec3& target) const {
        const auto it = index_.find(key(target));
        if (it == index_.end() || last_ < 0) return std::nullopt;
        const int goal = it->second;
        constexpr double inf = std::numeric_limits<double>::infinity();
        std::vector<double> dist(pos_.size(), inf);
        std::vector<int> parent(pos_.size(), -1);
        using Entry = std::pair<double, int>;
        std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
        dist[static_cast<std::size_t>(last_)] = 0.0;
        open.emplace(0.0, last_);
        while (!open.empty()) {
            const auto [d, u] = open.top();
            open.pop();
            if (d > dist[static_cast<std::size_t>(u)]) continue;
            if (u == goal) break;
            for (int w : adj_[static_cast<std::size_t>(u)]) {
                const double dw = d + (pos_[static_cast<std::size_t>(u)] - pos_[static_cast<std::size_t>(w)]).norm();
                if (dw < dist[static_cast<std::size_t>(w)]) {
                    dist[static_cast<std::size_t>(w)] = dw;
                    parent[static_cast<std::size_t>(w)] = u;
                    open.emplace(dw, w);
                }
            }
        }
        if (!std::isfinite(dist[static_cast<std::size_t>(goal)])) return std::nullopt;
        std::vector<Vec3> out;
        for (int u = goal; u != -1; u = parent[static_cast<std::size_t>(u)]) out.push_back(pos_[static_cast<std::size_t>(u)]);
        std::reverse(out.begin(), out.end());
        return out;
    }

private:
    using Key = std::array<long long, 3>;
    static Key key(const Vec3& p) {
        return {std::llround(p.x() * 1e6), std::llround(p.y() * 1e6), std::llround(p.z() * 1e6)};
    }
    int vertex(const Vec3& p) {
        const Key k = key(p);
        auto it = index_.find(k);
        if (it != index_.end()) return it->second;
        const int v = static_cast<int>(pos_.size());
        index_.emplace(k, v);
        pos_.push_back(p);
        adj_.emplace_back();
        return v;
    }

    std::map<Key, int> index_;
    std::vector<Vec3> pos_;
    std::vector<std::vector<int>> adj_;
    int last_ = -1;
};

enum class Target { none, frontier, entry_point, classic };

class Explorer {
public:
    Explorer(const VoxelGrid& scene, const Pose& start, const ExploreConfig& cfg, const ExploreHooks& hooks,
             FrontierPredictor* predictor, Exec exec)
        : scene_(scene),
          cfg_(cfg),
          pp_(cfg.planner),
          hooks_(hooks),
          exec_(exec),
          mapped_(cfg.planner.mode != PlannerMode::mapfree),
          map_(make_unknown_like(scene)),
          traj_(cfg.planner.traj_step_dist, cfg.planner.traj_step_angle),
          pose_(Pose::from_yaw_pitch(start.position, start.yaw(), start.pitch())) {
        if (predictor != nullptr) {
            predictor_ = predictor;
        } else {
            OracleParams op = cfg.oracle;
            op.compute_gain = cfg.planner.gain_mode == GainMode::predicted;
            oracle_ = std::make_unique<OraclePredictor>(scene, op, exec);
            predictor_ = oracle_.get();
        }
    }

    ExplorationLog run() {
        cfg_.validate();
        log_.total_voxels = scene_.size();
        log_.initialized = true;
        registered_ = pose_;
        tree_.add_pose(pose_);
        traj_.add(pose_);
        trail_.add(pose_.position);
        observe(/*emit=*/false);
        log_.initial_known = known_;
        if (pp_.max_steps == 0) return std::move(log_);
        emit(LogEvent::observe);

        if (pp_.initial_sweep || (pp_.mode != PlannerMode::classic && store_.active_count() == 0)) sweep();
        std::int64_t idle = 0;
        while (!stop_) {
            if (path_.empty()) {
                if (!choose_goal()) {
                    log_.exhausted = true;
                    break;
                }
                if (path_.empty()) continue;
            }
            const int before = step_;
            const Pose wp = path_.front();
            path_.pop_front();
            advance(wp, path_.empty());
            if (stop_) break;
            idle = step_ == before ? idle + 1 : 0;
            if (idle > 100000) break;  // no registered motion for too long
            if (replan_) {
                // Keep the remaining path when the new choice is the old goal.
                replan_ = false;
                if (!path_.empty() && committed()) continue;
                std::deque<Pose> kept;
                kept.swap(path_);
                const std::int64_t kept_goal = goal_;
                const Target kept_target = target_;
                const Vec3 kept_point = target_point_;
                if (!choose_goal()) {
                    log_.exhausted = true;
                    break;
                }
                if (!kept.empty() && kept_target != Target::none && goal_ == kept_goal && target_ == kept_target &&
                    target_point_ == kept_point) {
                    path_.swap(kept);
                }
            } else if (path_.empty()) {
                arrive();
            }
        }
        emit(LogEvent::done);
        log_.steps = step_;
        return std::move(log_);
    }

private:
    void emit(LogEvent e) {
        LogRow r;
        r.step = step_;
        r.pose = pose_;
        r.known_voxels = known_;
        r.known_fraction = static_cast<double>(known_) / static_cast<double>(scene_.size());
        r.goal_id = goal_;
        r.event = e;
        log_.rows.push_back(r);
    }

    void observe(bool emit_row = true) {
        if ((pose_.position - tree_.pose(tree_.last_pose_id()).position).norm() > 0.0 ||
            angle_between(pose_.forward(), tree_.pose(tree_.last_pose_id()).forward()) > 0.0) {
            tree_.add_pose(pose_);  // the observing pose joins the chain without counting a step
        }
        const DepthImage depth = render_depth(scene_, pose_, cfg_.cam, exec_);
        known_ += integrate_observation(map_, pose_, cfg_.cam, depth, exec_);
        since_obs_ = 0;
        ++obs_count_;
        if (pp_.mode != PlannerMode::classic) {
            if (oracle_) oracle_->params().gain.seed = splitmix(cfg_.seed ^ splitmix(static_cast<std::uint64_t>(obs_count_)));
            FrontierRaster raster = predictor_->predict(pose_, cfg_.cam, depth);
            apply_ablation(raster, depth, cfg_);
            const AnchorResult anchored = anchor_frontiers(raster, depth, pose_, cfg_.cam, cfg_.anchor);
            const std::int64_t parent = tree_.last_pose_id();
            for (Frontier3D f : anchored.frontiers) {
                f.parent_pose_id = parent;
                const MergeResult r = store_.merge_or_insert(f, cfg_.store.merge_dist, cfg_.store.merge_angle);
                tree_.add_edge(parent, r.id);
                for (auto gone : r.absorbed) {
                    if (gone == goal_) retarget(r.id);
                }
            }
            const auto dropped = store_.prune_invalid(traj_, mapped_ ? &map_ : nullptr, cfg_.cam, cfg_.store, exec_);
            for (auto id : dropped) {
                if (id == goal_) {
                    emit(LogEvent::goal_invalidated);
                    goal_ = -1;
                }
            }
            if (hooks_.on_store_snapshot) hooks_.on_store_snapshot(step_, store_);
        }
        if (hooks_.on_epoch) hooks_.on_epoch(EpochView{step_, map_, store_, tree_, known_});
        if (emit_row) emit(LogEvent::observe);
        replan_ = true;
    }

    void retarget(std::int64_t id) {
        goal_ = id;
        goal_moved_ = true;
    }

    // The current target is still worth the remaining path.
    bool committed() {
        const bool moved = std::exchange(goal_moved_, false);
        if (target_ == Target::classic) return still_frontier(target_point_);
        if (target_ == Target::none || goal_ < 0 || moved) return false;
        const Frontier3D* f = store_.find(goal_);
        return f != nullptr && f->status == FrontierStatus::Active;
    }

    // Contact with a face or edge is allowed; entering an Occupied interior is not.
    bool collides(const Vec3& a, const Vec3& b) const {
        if (!scene_.index_of(b)) return true;
        const Vec3 d = b - a;
        const double len = d.norm();
        if (len == 0.0) return scene_.at_point(b) == Cell::Occupied;
        bool hit = false;
        traverse_ray(scene_, a, d / len, len, [&](std::int64_t idx, const Index3&, double t0, double t1) {
            hit = scene_.at(idx) == Cell::Occupied && std::min(t1, len) - t0 > 1e-9;
            return !hit;
        });
        return hit;
    }

    // On the last waypoint the cadence observation is left to arrive().
    void advance(const Pose& wp, bool last = false) {
        if (collides(pose_.position, wp.position)) {
            log_.collided = true;
            emit(LogEvent::collision);
            stop_ = true;
            return;
        }
        pose_ = wp;
        trail_.add(pose_.position);
        const double moved = (pose_.position - registered_.position).norm();
        const double turned = rad2deg(angle_between(pose_.forward(), registered_.forward()));
        if (moved < pp_.step_dist - 1e-9 && turned < pp_.step_angle - 1e-9) return;
        ++step_;
        registered_ = pose_;
        tree_.add_pose(pose_);
        traj_.add(pose_);
        ++since_obs_;
        emit(LogEvent::step);
        if (step_ >= pp_.max_steps) {
            stop_ = true;
            return;
        }
        if (since_obs_ >= pp_.k_obs && !last) observe();
    }

    void sweep() {
        for (double pitch_deg : pp_.sweep_pitches) {
            const double yaw0 = pose_.yaw();
            const double pitch = deg2rad(pitch_deg);
            std::vector<Pose> wps;
            Path turn = densify(pose_, {pose_.position}, Pose::from_yaw_pitch(pose_.position, yaw0, pitch),
                                pp_.step_dist, pp_.step_angle);
            wps = turn.waypoints;
            const int n = static_cast<int>(std::ceil(360.0 / pp_.step_angle - 1e-9));
            for (int i = 1; i <= n; ++i) {
                wps.push_back(Pose::from_yaw_pitch(pose_.position, yaw0 + deg2rad(360.0) * i / n, pitch));
            }
            for (const Pose& wp : wps) {
                advance(wp);
                if (stop_) return;
            }
        }
        if (since_obs_ > 0) observe();
        replan_ = false;
    }

    bool arrived_at(const Frontier3D& f) const {
        return (pose_.position - f.p_bar).norm() <= pp_.arrive_dist &&
               rad2deg(angle_between(pose_.forward(), f.q_bar)) <= pp_.arrive_angle;
    }

    void arrive() {
        if (target_ == Target::frontier && goal_ >= 0) {
            const Frontier3D* f = store_.find(goal_);
            if (f && f->status == FrontierStatus::Active && arrived_at(*f)) {
                store_.set_status(goal_, FrontierStatus::Consumed);
                emit(LogEvent::goal_reached);
                goal_ = -1;
            }
        } else if (target_ == Target::classic) {
            classic_skip_.push_back(target_point_);
            emit(LogEvent::goal_reached);
        }
        target_ = Target::none;
        if (since_obs_ > 0 || obs_count_ == 0) observe();
        replan_ = false;
    }

    // Records a planning failure and drops the frontier after too many.
    void fail(std::int64_t id) {
        if (++retries_[id] >= pp_.max_plan_retries) {
            store_.set_status(id, FrontierStatus::Invalid);
            const std::int64_t prev = goal_;
            goal_ = id;
            emit(LogEvent::goal_invalidated);
            goal_ = prev == id ? -1 : prev;
        }
    }

    void set_path(Path&& p, Target kind, std::int64_t id, const Vec3& point) {
        path_.assign(p.waypoints.begin(), p.waypoints.end());
        const bool changed = id != goal_ || kind != target_;
        goal_ = id;
        target_ = kind;
        target_point_ = point;
        if (changed) emit(LogEvent::replan);
    }

    std::optional<Path> plan_to(const Vec3& goal, const Vec3& dir) {
        const Traversability tr(map_, pp_.inflation, exec_);
        if (auto p = plan_path(tr, pose_, goal, dir, pp_.step_dist, pp_.step_angle)) return p;
        if (pp_.inflation <= 0.0) return std::nullopt;
        const Traversability bare(map_, 0.0, exec_);
        return plan_path(bare, pose_, goal, dir, pp_.step_dist, pp_.step_angle);
    }

    static Vec3 horizontal_or(const Vec3& d, const Vec3& fallback) {
        const Vec3 h(d.x(), d.y(), 0.0);
        return h.norm() > 1e-9 ? Vec3(h.normalized()) : fallback;
    }

    bool choose_goal() {
        if (pp_.mode == PlannerMode::classic) return choose_classic();
        std::vector<std::int64_t> exclude;
        for (int guard = 0; guard < 100000; ++guard) {
            const auto id = select_goal(store_, pose_.position, pp_.d_floor, exclude);
            if (!id) {
                if (exclude.empty()) return false;
                exclude.clear();  // every option failed this round; retry counts keep rising
                continue;
            }
            const Frontier3D f = *store_.find(*id);
            if (arrived_at(f)) {
                const std::int64_t prev = goal_;
                goal_ = f.id;
                store_.set_status(f.id, FrontierStatus::Consumed);
                emit(LogEvent::goal_reached);
                goal_ = prev == f.id ? -1 : prev;
                continue;
            }
            if (!mapped_) {
                if (auto p = mapfree_route(f)) {
                    set_path(std::move(*p), Target::frontier, f.id, f.p_bar);
                    return true;
                }
                fail(f.id);
                exclude.push_back(f.id);
                continue;
            }
            const Vec3 c = find_entry_point(tree_, f, map_, pp_.entry_samples);
            const bool direct = c == f.p_bar;
            const Vec3 dir = direct ? f.q_bar : horizontal_or(f.p_bar - c, f.q_bar);
            std::optional<Path> p;
            if (direct || (c - pose_.position).norm() > 1e-6) p = plan_to(c, dir);
            if (!p || p->waypoints.empty()) {
                fail(f.id);
                exclude.push_back(f.id);
                continue;
            }
            set_path(std::move(*p), direct ? Target::frontier : Target::entry_point, f.id, c);
            return true;
        }
        return false;
    }

    bool choose_classic() {
        for (int guard = 0; guard < 100000; ++guard) {
            std::optional<ClassicGoal> g;
            Traversability tr(map_, pp_.inflation, exec_);
            g = classic_baseline_step(tr, pose_, pp_.classic_min_cluster, classic_skip_, pp_.arrive_dist);
            if (!g && pp_.inflation > 0.0) {
                tr = Traversability(map_, 0.0, exec_);
                g = classic_baseline_step(tr, pose_, pp_.classic_min_cluster, classic_skip_, pp_.arrive_dist);
            }
            if (!g) return false;
            std::vector<Vec3> pts{pose_.position};
            for (std::size_t i = 1; i < g->route.size(); ++i) pts.push_back(map_.center(g->route[i]));
            pts = shortcut(tr, pts);
            // Look toward the unknown side, tilting at most 60 degrees.
            const Vec3 d = g->direction;
            const double yaw = std::hypot(d.x(), d.y()) > 1e-9 ? std::atan2(d.y(), d.x()) : pose_.yaw();
            const double pitch = std::clamp(direction_pitch(d), -deg2rad(60.0), deg2rad(60.0));
            Path p = densify(pose_, pts, Pose::from_yaw_pitch(g->point, yaw, pitch), pp_.step_dist, pp_.step_angle);
            if (p.waypoints.empty()) {
                classic_skip_.push_back(g->point);
                continue;
            }
            set_path(std::move(p), Target::classic, -1, g->point);
            return true;
        }
        return false;
    }

    // A known-Free voxel with an Unknown face-neighbor in the robot map.
    bool still_frontier(const Vec3& p) const {
        const auto c = map_.index_of(p);
        if (!c || map_.at(map_.linear(*c)) != Cell::Free) return false;
        for (const auto& o : kFaceOffsets) {
            const Index3 n(c->x() + o[0], c->y() + o[1], c->z() + o[2]);
            if (map_.contains(n) && map_.at(map_.linear(n)) == Cell::Unknown) return true;
        }
        return false;
    }

    std::optional<Path> mapfree_route(const Frontier3D& f) {
        auto chain = trail_.route_to(tree_.pose(f.parent_pose_id).position);
        if (!chain) return std::nullopt;
        std::vector<Vec3> pts = *chain;
        pts.push_back(f.p_bar);
        Path p = densify(pose_, pts, Pose::looking_along(f.p_bar, f.q_bar), pp_.step_dist, pp_.step_angle);
        if (p.waypoints.empty()) return std::nullopt;
        return p;
    }

    const VoxelGrid& scene_;
    const ExploreConfig& cfg_;
    const PlannerParams& pp_;
    const ExploreHooks& hooks_;
    Exec exec_;
    bool mapped_;
    VoxelGrid map_;  // decision map, or the metrics-only shadow map in map-free mode
    std::int64_t known_ = 0;
    std::unique_ptr<OraclePredictor> oracle_;
    FrontierPredictor* predictor_ = nullptr;
    FrontierStore store_;
    FrontierTree tree_;
    TrajectoryMemory traj_;
    Trail trail_;
    Pose pose_;
    Pose registered_;
    int step_ = 0;
    int since_obs_ = 0;
    int obs_count_ = 0;
    bool stop_ = false;
    bool replan_ = false;
    bool goal_moved_ = false;  // the goal absorbed into a merged frontier
    std::int64_t goal_ = -1;
    Target target_ = Target::none;
    Vec3 target_point_ = Vec3::Zero();
    std::deque<Pose> path_;
    std::map<std::int64_t, int> retries_;
    std::vector<Vec3> classic_skip_;
    ExplorationLog log_;
};

}  // namespace

ExplorationLog run_exploration(const VoxelGrid& scene, const Pose& start, const ExploreConfig& cfg,
                               const ExploreHooks& hooks, FrontierPredictor* predictor, Exec exec) {
    Explorer e(scene, start, cfg, hooks, predictor, exec);
    return e.run();
}

}  // namespace frontier

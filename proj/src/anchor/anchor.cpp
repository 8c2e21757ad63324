// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#include "frontier/anchor/anchor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "frontier/core/error.hpp"

namespace frontier {

const char* to_string(FrontierStatus s) {
    switch (s) {
        case FrontierStatus::Active: return "active";
        case FrontierStatus::Consumed: return "consumed";
        case FrontierStatus::Invalid: return "invalid";
    }
    return "?";
}

void AnchorParams::validate() const {
    if (!(inclusion_l > 0.0)) throw ConfigError("inclusion_l must be positive");
    if (grad_window < 1 || grad_window % 2 == 0) throw ConfigError("grad_window must be a positive odd number");
    if (fgbg_offset < 1) throw ConfigError("fgbg_offset must be positive");
    if (!(sigma_px > 0.0 && sigma_phi > 0.0 && sigma_g_frac > 0.0)) throw ConfigError("cluster scales must be positive");
    if (!(cluster_eps > 0.0)) throw ConfigError("cluster_eps must be positive");
    if (min_cluster_size < 1) throw ConfigError("min_cluster_size must be positive");
}

Mask recover_mask(const Raster<double>& d, double l) {
    Mask m(d.width(), d.height(), 0);
    for (std::size_t i = 0; i < d.size(); ++i) m[i] = d[i] < l;
    return m;
}

std::optional<double> pixel_viewing_angle(const GradientMap& gm, int x, int y, int window, double eps) {
    const int h = window / 2;
    double sx = 0.0, sy = 0.0;
    int n = 0;
    for (int b = y - h; b <= y + h; ++b) {
        for (int a = x - h; a <= x + h; ++a) {
            if (!gm.valid.contains(a, b)) continue;
            if (!gm.valid(a, b)) return std::nullopt;
            sx += gm.gx(a, b);
            sy += gm.gy(a, b);
            ++n;
        }
    }
    if (n == 0) return std::nullopt;
    sx /= n;
    sy /= n;
    if (std::hypot(sx, sy) < eps) return std::nullopt;
    return wrap_angle(std::atan2(-sy, -sx));
}

namespace {

double median(std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

std::optional<FgBgDepth> sample_fg_bg_depth(const DepthImage& depth, int x, int y, double phi, int s,
                                            double max_range) {
    const double ux = std::cos(phi), uy = std::sin(phi);
    std::vector<double> fg, bg;
    for (int k = 1; k <= 3; ++k) {
        const double t = static_cast<double>(k * s);
        const int fx = static_cast<int>(std::lround(x + t * ux)), fy = static_cast<int>(std::lround(y + t * uy));
        const int bx = static_cast<int>(std::lround(x - t * ux)), by = static_cast<int>(std::lround(y - t * uy));
        if (depth.contains(fx, fy) && is_return(depth(fx, fy))) fg.push_back(depth(fx, fy));
        if (depth.contains(bx, by)) bg.push_back(is_return(depth(bx, by)) ? depth(bx, by) : max_range);
    }
    if (fg.empty() || bg.empty()) return std::nullopt;
    FgBgDepth out{median(fg), median(bg)};
    if (out.fg > out.bg) return std::nullopt;
    return out;
}

std::vector<FrontierPixelFeature> frontier_pixel_features(const FrontierRaster& raster,
                                                          const DepthImage& depth, double max_range,
                                                          const AnchorParams& params) {
    const Mask mask = recover_mask(raster.d, params.inclusion_l);
    const GradientMap gm = depth_gradient(fill_no_return(depth, max_range));
    std::vector<FrontierPixelFeature> out;
    for (int y = 0; y < mask.height(); ++y) {
        for (int x = 0; x < mask.width(); ++x) {
            if (!mask(x, y)) continue;
            const auto phi = pixel_viewing_angle(gm, x, y, params.grad_window, params.grad_eps);
            if (!phi) continue;
            const auto fb = sample_fg_bg_depth(depth, x, y, *phi, params.fgbg_offset, max_range);
            if (!fb) continue;
            FrontierPixelFeature f;
            f.x = x;
            f.y = y;
            f.phi = *phi;
            f.gain = unbin_gain(raster.y(x, y), raster.num_classes, raster.g_max);
            f.depth_fg = fb->fg;
            f.depth_bg = fb->bg;
            f.range = depth(x, y);
            out.push_back(f);
        }
    }
    return out;
}

namespace {

struct Scaled {
    double v[5];
};

double dist2(const Scaled& a, const Scaled& b) {
    double s = 0.0;
    for (int i = 0; i < 5; ++i) s += (a.v[i] - b.v[i]) * (a.v[i] - b.v[i]);
    return s;
}

bool pixel_less(const FrontierPixelFeature& a, const FrontierPixelFeature& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
}

}  // namespace

std::vector<Frontier2DCluster> cluster_frontier_pixels(const std::vector<FrontierPixelFeature>& features,
                                                       double sigma_px, double sigma_phi, double sigma_g,
                                                       double eps, int min_cluster_size) {
    const std::size_t n = features.size();
    if (n == 0) return {};
    std::vector<Scaled> pts(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& f = features[i];
        pts[i] = {{f.x / sigma_px, f.y / sigma_px, std::cos(f.phi) / sigma_phi, std::sin(f.phi) / sigma_phi,
                   f.gain / sigma_g}};
    }

    // Bucket by pixel so neighbour queries only scan cells within eps.
    const double cell = std::max(1.0, eps * sigma_px);
    std::map<std::pair<long, long>, std::vector<std::size_t>> buckets;
    auto key = [&](const FrontierPixelFeature& f) {
        return std::pair<long, long>{static_cast<long>(std::floor(f.x / cell)), static_cast<long>(std::floor(f.y / cell))};
    };
    for (std::size_t i = 0; i < n; ++i) buckets[key(features[i])].push_back(i);
    const double eps2 = eps * eps;
    std::vector<std::vector<std::size_t>> nbrs(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto [kx, ky] = key(features[i]);
        for (long by = ky - 1; by <= ky + 1; ++by) {
            for (long bx = kx - 1; bx <= kx + 1; ++bx) {
                auto it = buckets.find({bx, by});
                if (it == buckets.end()) continue;
                for (auto j : it->second) {
                    if (dist2(pts[i], pts[j]) <= eps2) nbrs[i].push_back(j);
                }
            }
        }
    }

    std::vector<char> core(n);
    for (std::size_t i = 0; i < n; ++i) core[i] = static_cast<int>(nbrs[i].size()) >= min_cluster_size;

    // Components of the core graph; labels follow the smallest pixel so they
    // do not depend on input order.
    std::vector<long> label(n, -1);
    long next = 0;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pixel_less(features[a], features[b]); });
    for (auto seed : order) {
        if (!core[seed] || label[seed] >= 0) continue;
        std::vector<std::size_t> stack{seed};
        label[seed] = next;
        while (!stack.empty()) {
            const auto p = stack.back();
            stack.pop_back();
            for (auto q : nbrs[p]) {
                if (core[q] && label[q] < 0) {
                    label[q] = next;
                    stack.push_back(q);
                }
            }
        }
        ++next;
    }
    // Border points join their nearest core neighbour.
    for (std::size_t i = 0; i < n; ++i) {
        if (core[i]) continue;
        long best = -1;
        double best_d = 0.0;
        std::size_t best_j = 0;
        for (auto j : nbrs[i]) {
            if (!core[j]) continue;
            const double d = dist2(pts[i], pts[j]);
            if (best < 0 || d < best_d || (d == best_d && pixel_less(features[j], features[best_j]))) {
                best = label[j];
                best_d = d;
                best_j = j;
            }
        }
        label[i] = best;
    }

    std::vector<std::vector<std::size_t>> members(static_cast<std::size_t>(next));
    for (auto i : order) {
        if (label[i] >= 0) members[static_cast<std::size_t>(label[i])].push_back(i);
    }

    std::vector<Frontier2DCluster> out;
    for (const auto& m : members) {
        if (static_cast<int>(m.size()) < min_cluster_size) continue;
        Frontier2DCluster c;
        c.size = static_cast<int>(m.size());
        double ws = 0.0, wc = 0.0, gsum = 0.0, dsum = 0.0, fsum = 0.0, bsum = 0.0;
        for (auto i : m) {
            const auto& f = features[i];
            ws += f.gain * std::sin(f.phi);
            wc += f.gain * std::cos(f.phi);
            gsum += f.gain;
            dsum += 0.5 * (f.depth_fg + f.depth_bg);
            fsum += f.depth_fg;
            bsum += f.depth_bg;
        }
        if (ws == 0.0 && wc == 0.0) {
            // All gains zero: fall back to the unweighted circular mean.
            for (auto i : m) {
                ws += std::sin(features[i].phi);
                wc += std::cos(features[i].phi);
            }
        }
        const double cnt = static_cast<double>(m.size());
        c.phi_bar = wrap_angle(std::atan2(ws, wc));
        c.gain_bar = gsum / cnt;
        c.depth_bar = dsum / cnt;
        c.depth_fg_bar = fsum / cnt;
        c.depth_bg_bar = bsum / cnt;

        // Medoid among members whose own ray reaches past depth_bar, so the
        // lifted point is visible from the camera; any member otherwise.
        std::vector<std::size_t> eligible;
        for (auto i : m) {
            if (features[i].range > c.depth_bar) eligible.push_back(i);
        }
        if (eligible.empty()) eligible = m;
        double best = std::numeric_limits<double>::infinity();
        std::size_t medoid = eligible.front();
        for (auto i : eligible) {
            double s = 0.0;
            for (auto j : m) s += std::hypot(features[i].x - features[j].x, features[i].y - features[j].y);
            if (s < best) {
                best = s;
                medoid = i;
            }
        }
        c.x = features[medoid].x;
        c.y = features[medoid].y;
        out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.y != b.y ? a.y < b.y : a.x < b.x; });
    return out;
}

std::optional<Frontier3D> lift_to_3d(const Frontier2DCluster& cluster, const Pose& pose, const CameraModel& cam) {
    if (!(cluster.depth_bar > 0.0) || !std::isfinite(cluster.depth_bar)) return std::nullopt;
    const double u = cluster.x + 0.5, v = cluster.y + 0.5;
    const Vec3 p = pose.to_world(cam.ray(u, v) * cluster.depth_bar);
    const Vec3 p2 = pose.to_world(cam.ray(u + std::cos(cluster.phi_bar), v + std::sin(cluster.phi_bar)) *
                                  cluster.depth_bar);
    Vec3 q = p2 - p;
    const double n = q.norm();
    if (n == 0.0) return std::nullopt;
    q /= n;
    if (std::abs(q.z()) <= 0.9) {
        q.z() = 0.0;
        const double h = q.norm();
        if (h < 1e-12) return std::nullopt;
        q /= h;
    }
    Frontier3D f;
    f.p_bar = p;
    f.q_bar = q;
    f.gain = f.gain0 = cluster.gain_bar;
    f.sight_point = pose.position;
    return f;
}

AnchorResult anchor_frontiers(const FrontierRaster& raster, const DepthImage& depth, const Pose& pose,
                              const CameraModel& cam, const AnchorParams& params) {
    params.validate();
    const auto features = frontier_pixel_features(raster, depth, cam.max_range, params);
    const double sigma_g = std::max(params.sigma_g_frac * raster.g_max, 1e-9);
    AnchorResult r;
    for (const auto& c : cluster_frontier_pixels(features, params.sigma_px, params.sigma_phi, sigma_g,
                                                 params.cluster_eps, params.min_cluster_size)) {
        if (auto f = lift_to_3d(c, pose, cam)) {
            r.clusters.push_back(c);
            r.frontiers.push_back(*f);
        }
    }
    return r;
}

}  // namespace frontier

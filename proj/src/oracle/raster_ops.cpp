// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#include "frontier/oracle/raster_ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace frontier {

namespace {

constexpr int kTile = 8;

}  // namespace

ProjectedPoints project_points(std::span<const Vec3> points_world, std::span<const double> gains,
                               const Pose& pose, const CameraModel& cam, double r_ray, Exec exec) {
    const int w = cam.width;
    const int h = cam.height;
    ProjectedPoints out{Mask(w, h, 0), Raster<double>(w, h, 0.0)};
    if (points_world.empty()) return out;

    std::vector<Vec3> rays(static_cast<std::size_t>(w) * h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) rays[static_cast<std::size_t>(y) * w + x] = cam.pixel_ray(x, y);

    const int tiles_x = (w + kTile - 1) / kTile;
    const int tiles_y = (h + kTile - 1) / kTile;
    std::vector<Vec3> tile_axis(static_cast<std::size_t>(tiles_x) * tiles_y);
    double tile_spread = 0.0;
    for (int ty = 0; ty < tiles_y; ++ty) {
        for (int tx = 0; tx < tiles_x; ++tx) {
            const int x0 = tx * kTile, x1 = std::min(w, x0 + kTile) - 1;
            const int y0 = ty * kTile, y1 = std::min(h, y0 + kTile) - 1;
            const Vec3 axis = cam.ray(0.5 * (x0 + x1) + 0.5, 0.5 * (y0 + y1) + 0.5);
            tile_axis[static_cast<std::size_t>(ty) * tiles_x + tx] = axis;
            for (int cx : {x0, x1})
                for (int cy : {y0, y1}) tile_spread = std::max(tile_spread, angle_between(axis, cam.pixel_ray(cx, cy)));
        }
    }

    // A point at distance n can only be within r of a ray whose angle to it
    // is at most asin(r / n); beyond max_range + r it is unreachable.
    const double range = cam.max_range;
    struct Candidate {
        Vec3 c;
        Vec3 unit;
        double cos_limit;  // tile axis must satisfy dot(unit, axis) >= cos_limit
        double gain;
    };
    std::vector<Candidate> cands;
    cands.reserve(points_world.size());
    for (std::size_t i = 0; i < points_world.size(); ++i) {
        const Vec3 c = pose.to_camera(points_world[i]);
        const double n = c.norm();
        if (n - r_ray > range) continue;
        const double alpha = n <= r_ray ? kPi : std::asin(r_ray / n);
        const double limit = alpha + tile_spread + 1e-6;
        cands.push_back({c, n > 0.0 ? Vec3(c / n) : Vec3::UnitZ(), limit >= kPi ? -2.0 : std::cos(limit),
                         gains.empty() ? 0.0 : gains[i]});
    }

    const double r2 = r_ray * r_ray;
    parallel_for(exec, static_cast<std::int64_t>(tiles_x) * tiles_y, [&](std::int64_t t) {
        const int tx = static_cast<int>(t % tiles_x);
        const int ty = static_cast<int>(t / tiles_x);
        const Vec3& axis = tile_axis[static_cast<std::size_t>(t)];
        std::vector<const Candidate*> local;
        for (const auto& cd : cands) {
            if (cd.unit.dot(axis) >= cd.cos_limit) local.push_back(&cd);
        }
        if (local.empty()) return;
        const int x0 = tx * kTile, x1 = std::min(w, x0 + kTile);
        const int y0 = ty * kTile, y1 = std::min(h, y0 + kTile);
        for (int y = y0; y < y1; ++y) {
            for (int x = x0; x < x1; ++x) {
                const Vec3& d = rays[static_cast<std::size_t>(y) * w + x];
                bool on = false;
                double best = 0.0;
                for (const Candidate* cd : local) {
                    const double s = std::clamp(cd->c.dot(d), 0.0, range);
                    if ((cd->c - s * d).squaredNorm() <= r2) {
                        on = true;
                        best = std::max(best, cd->gain);
                    }
                }
                if (on) {
                    out.mask(x, y) = 1;
                    out.gain(x, y) = best;
                }
            }
        }
    });
    return out;
}

std::vector<Vec3> voxel_centers(const VoxelGrid& grid, std::span<const std::int64_t> voxels) {
    std::vector<Vec3> centers;
    centers.reserve(voxels.size());
    for (auto v : voxels) centers.push_back(grid.center(v));
    return centers;
}

Mask project_frontier_prior(const VoxelGrid& grid, const FrontierVoxelSet& ft, const Pose& pose,
                            const CameraModel& cam, double r_ray, Exec exec) {
    const auto centers = voxel_centers(grid, ft.voxels);
    return project_points(centers, {}, pose, cam, r_ray, exec).mask;
}

Raster<double> info_gain_map(const VoxelGrid& grid, const FrontierVoxelSet& ft, const Pose& pose,
                             const CameraModel& cam, double r_ray, Exec exec) {
    const auto centers = voxel_centers(grid, ft.voxels);
    return project_points(centers, ft.gain, pose, cam, r_ray, exec).gain;
}

Mask depth_discontinuity_mask(const GradientMap& gm, const DepthImage& depth, double tau) {
    const int w = depth.width();
    const int h = depth.height();
    Mask m(w, h, 0);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (gm.valid(x, y) && std::hypot(gm.gx(x, y), gm.gy(x, y)) > tau) {
                m(x, y) = 1;
                continue;
            }
            const bool here = is_return(depth(x, y));
            constexpr int off[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
            for (const auto& o : off) {
                const int a = x + o[0], b = y + o[1];
                if (depth.contains(a, b) && is_return(depth(a, b)) != here) {
                    m(x, y) = 1;
                    break;
                }
            }
        }
    }
    return m;
}

namespace {

// Lower envelope of parabolas over the finite sites of one line.
void edt_line(const std::int64_t* f, std::int64_t* out, int n, std::int64_t stride_in, std::int64_t stride_out,
              std::vector<int>& v, std::vector<double>& z) {
    int k = -1;
    for (int q = 0; q < n; ++q) {
        const std::int64_t fq = f[q * stride_in];
        if (fq == kNoSite) continue;
        double s = -std::numeric_limits<double>::infinity();
        while (k >= 0) {
            const int p = v[static_cast<std::size_t>(k)];
            const std::int64_t fp = f[p * stride_in];
            s = static_cast<double>((fq + static_cast<std::int64_t>(q) * q) - (fp + static_cast<std::int64_t>(p) * p)) /
                (2.0 * (q - p));
            if (s > z[static_cast<std::size_t>(k)]) break;
            --k;
        }
        ++k;
        v[static_cast<std::size_t>(k)] = q;
        z[static_cast<std::size_t>(k)] = k == 0 ? -std::numeric_limits<double>::infinity() : s;
    }
    if (k < 0) {
        for (int q = 0; q < n; ++q) out[q * stride_out] = kNoSite;
        return;
    }
    int j = 0;
    for (int q = 0; q < n; ++q) {
        while (j < k && z[static_cast<std::size_t>(j + 1)] < q) ++j;
        const int p = v[static_cast<std::size_t>(j)];
        const std::int64_t dq = q - p;
        out[q * stride_out] = dq * dq + f[p * stride_in];
    }
}

}  // namespace

Raster<std::int64_t> squared_distance_transform(const Mask& f, Exec exec) {
    const int w = f.width();
    const int h = f.height();
    Raster<std::int64_t> rows(w, h, kNoSite);
    Raster<std::int64_t> out(w, h, kNoSite);
    if (w == 0 || h == 0) return out;
    for (std::size_t i = 0; i < f.size(); ++i) rows[i] = f[i] ? 0 : kNoSite;

    const bool par = exec == Exec::parallel;
    Raster<std::int64_t> pass1(w, h, kNoSite);
#pragma omp parallel if (par)
    {
        std::vector<int> v(static_cast<std::size_t>(std::max(w, h)));
        std::vector<double> z(static_cast<std::size_t>(std::max(w, h)) + 1);
#pragma omp for schedule(static)
        for (int y = 0; y < h; ++y) {
            edt_line(&rows(0, y), &pass1(0, y), w, 1, 1, v, z);
        }
#pragma omp for schedule(static)
        for (int x = 0; x < w; ++x) {
            edt_line(&pass1(x, 0), &out(x, 0), h, w, w, v, z);
        }
    }
    return out;
}

DistanceField distance_field(const Mask& f, double r_df, Exec exec) {
    const auto sq = squared_distance_transform(f, exec);
    DistanceField df{Raster<double>(f.width(), f.height(), r_df), Raster<double>(f.width(), f.height(), 0.0)};
    for (std::size_t i = 0; i < sq.size(); ++i) {
        if (sq[i] == kNoSite) continue;
        const double d = std::min(std::sqrt(static_cast<double>(sq[i])), r_df);
        df.d[i] = d;
        df.d_norm[i] = d < r_df ? -std::log(std::max(d, 1.0) / r_df) : 0.0;
    }
    return df;
}

int bin_gain(double g, int num_classes, double g_max) {
    if (!(g > 0.0)) return 0;
    const double width = g_max / (num_classes - 1);
    const double cls = std::floor(g / width) + 1.0;
    return static_cast<int>(std::min<double>(cls, num_classes - 1));
}

double unbin_gain(int y, int num_classes, double g_max) {
    if (y <= 0) return 0.0;
    const double width = g_max / (num_classes - 1);
    return (std::min(y, num_classes - 1) - 1) * width;
}

Mask bin_gain(const Raster<double>& g, int num_classes, double g_max) {
    Mask y(g.width(), g.height(), 0);
    for (std::size_t i = 0; i < g.size(); ++i) y[i] = static_cast<std::uint8_t>(bin_gain(g[i], num_classes, g_max));
    return y;
}

Raster<double> unbin_gain(const Mask& y, int num_classes, double g_max) {
    Raster<double> g(y.width(), y.height(), 0.0);
    for (std::size_t i = 0; i < y.size(); ++i) g[i] = unbin_gain(y[i], num_classes, g_max);
    return g;
}

}  // namespace frontier

// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#include "frontier/eval/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <ostream>
#include <random>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "frontier/core/error.hpp"

namespace frontier {

std::uint64_t cell_seed(const std::string& scene, int start, const std::string& config, int repeat,
                        std::uint64_t base) {
    const std::string key = fmt::format("{}|{}|{}|{}", scene, start, config, repeat);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : key) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h ^ (base * 0x9e3779b97f4a7c15ULL);
}

std::pair<double, double> stage_budgets(const std::vector<const MetricsRecord*>& cells,
                                        const std::vector<NamedConfig>& configs) {
    double sum25 = 0.0, sum50 = 0.0;
    int used = 0;
    for (const auto& nc : configs) {
        double s25 = 0.0, s50 = 0.0;
        int n = 0;
        for (const MetricsRecord* r : cells) {
            if (r->config != nc.name || !r->log.initialized) continue;
            const int cap = nc.config.planner.max_steps;
            s25 += first_step_reaching(r->log, 0.25).value_or(cap);
            s50 += first_step_reaching(r->log, 0.50).value_or(cap);
            ++n;
        }
        if (n == 0) continue;
        sum25 += s25 / n;
        sum50 += s50 / n;
        ++used;
    }
    if (used == 0) return {0.0, 0.0};
    return {sum25 / used, sum50 / used};
}

namespace {

void mean_std(const std::vector<double>& xs, double& mean, double& sd) {
    mean = 0.0;
    sd = 0.0;
    if (xs.empty()) return;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    if (xs.size() < 2) return;
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

}  // namespace

SuiteResult run_suite(const SuiteSpec& spec, int jobs, bool timing) {
    struct Cell {
        int scene, start, config, repeat;
    };
    std::vector<Cell> cells;
    for (int s = 0; s < static_cast<int>(spec.scenes.size()); ++s)
        for (int st = 0; st < static_cast<int>(spec.scenes[static_cast<std::size_t>(s)].starts.size()); ++st)
            for (int c = 0; c < static_cast<int>(spec.configs.size()); ++c)
                for (int r = 0; r < spec.repeats; ++r) cells.push_back({s, st, c, r});

    SuiteResult out;
    out.records.resize(cells.size());
    const Exec inner = jobs > 1 ? Exec::serial : Exec::parallel;
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, jobs)) if (jobs > 1)
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Cell& c = cells[i];
        const SuiteScene& scene = spec.scenes[static_cast<std::size_t>(c.scene)];
        const NamedConfig& nc = spec.configs[static_cast<std::size_t>(c.config)];
        MetricsRecord& rec = out.records[i];
        rec.scene = scene.name;
        rec.start_idx = c.start;
        rec.config = nc.name;
        rec.repeat = c.repeat;
        rec.seed = cell_seed(scene.name, c.start, nc.name, c.repeat, spec.base_seed);
        ExploreConfig cfg = nc.config;
        cfg.seed = rec.seed;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            rec.log = run_exploration(scene.grid, scene.starts[static_cast<std::size_t>(c.start)], cfg, {}, nullptr, inner);
            rec.collided = rec.log.collided;
            rec.exhausted = rec.log.exhausted;
            rec.steps = rec.log.steps;
        } catch (const std::exception&) {
            rec.errored = true;
        }
        if (timing) {
            rec.wallclock_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        }
    }

    for (std::size_t s = 0; s < spec.scenes.size(); ++s) {
        std::vector<const MetricsRecord*> in_scene;
        for (const auto& r : out.records)
            if (r.scene == spec.scenes[s].name) in_scene.push_back(&r);
        const auto budget = stage_budgets(in_scene, spec.configs);
        out.budgets.push_back(budget);
        for (auto& r : out.records) {
            if (r.scene != spec.scenes[s].name || !r.log.initialized) continue;
            int cap = 0;
            for (const auto& nc : spec.configs)
                if (nc.name == r.config) cap = nc.config.planner.max_steps;
            r.vox25 = vox_at_k(r.log, budget.first);
            r.vox50 = vox_at_k(r.log, budget.second);
            r.vox100 = vox_at_k(r.log, cap);
            r.success = !r.collided && !r.errored && r.vox100 > kSuccessCoverage;
        }
        for (const auto& nc : spec.configs) {
            SummaryRecord sum;
            sum.scene = spec.scenes[s].name;
            sum.config = nc.name;
            std::vector<double> v[3], succ, steps;
            for (const auto& r : out.records) {
                if (r.scene != sum.scene || r.config != nc.name) continue;
                v[0].push_back(r.vox25);
                v[1].push_back(r.vox50);
                v[2].push_back(r.vox100);
                succ.push_back(r.success ? 100.0 : 0.0);
                steps.push_back(r.steps);
            }
            sum.n = static_cast<int>(succ.size());
            for (int k = 0; k < 3; ++k) mean_std(v[k], sum.mean[k], sum.std[k]);
            mean_std(succ, sum.success_rate, sum.success_std);
            mean_std(steps, sum.steps_mean, sum.steps_std);
            out.summaries.push_back(sum);
        }
    }
    return out;
}

std::vector<Pose> choose_starts(const VoxelGrid& scene, int count, std::uint64_t seed, double height,
                                double clearance) {
    const double v = scene.resolution();
    const Dims& d = scene.dims();
    const int k = std::clamp(static_cast<int>(std::floor((v + height) / v)), 0, d.nz - 1);
    const int r = static_cast<int>(std::ceil(clearance / v));
    std::vector<std::int64_t> candidates;
    for (int j = 0; j < d.ny; ++j) {
        for (int i = 0; i < d.nx; ++i) {
            bool ok = true;
            for (int c = -r; c <= r && ok; ++c)
                for (int b = -r; b <= r && ok; ++b)
                    for (int a = -r; a <= r && ok; ++a)
                        ok = scene.contains(i + a, j + b, k + c) && scene.at(scene.linear(i + a, j + b, k + c)) == Cell::Free;
            if (ok) candidates.push_back(scene.linear(i, j, k));
        }
    }
    if (candidates.empty()) throw GenerationError("no free start position with the requested clearance");
    std::mt19937_64 rng(seed);
    std::vector<Pose> out;
    for (int n = 0; n < count; ++n) {
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        std::uniform_int_distribution<int> yaw(0, 35);
        const Vec3 p = scene.center(candidates[pick(rng)]);
        out.push_back(Pose::from_yaw_pitch(p, deg2rad(10.0 * yaw(rng)), 0.0));
    }
    return out;
}

void write_suite_csv(std::ostream& os, const SuiteResult& result) {
    os << "scene,start_idx,config,repeat,seed,vox25,vox50,vox100,success,steps,wallclock_ms\n";
    for (const auto& r : result.records) {
        fmt::print(os, "{},{},{},{},{},{:.6f},{:.6f},{:.6f},{},{},{:.1f}\n", r.scene, r.start_idx, r.config, r.repeat,
                   r.seed, r.vox25, r.vox50, r.vox100, r.success ? 1 : 0, r.steps, r.wallclock_ms);
    }
    for (const auto& s : result.summaries) {
        fmt::print(os, "{},all,{},mean,,{:.6f},{:.6f},{:.6f},{:.6f},{:.3f},\n", s.scene, s.config, s.mean[0], s.mean[1],
                   s.mean[2], s.success_rate, s.steps_mean);
        fmt::print(os, "{},all,{},std,,{:.6f},{:.6f},{:.6f},{:.6f},{:.3f},\n", s.scene, s.config, s.std[0], s.std[1],
                   s.std[2], s.success_std, s.steps_std);
    }
}

void write_comparison(std::ostream& os, const SuiteResult& result, const std::string& a, const std::string& b) {
    os << "\ncompare,scene,config_a,config_b,dvox25,dvox50,dvox100\n";
    std::vector<std::string> scenes;
    for (const auto& s : result.summaries)
        if (std::find(scenes.begin(), scenes.end(), s.scene) == scenes.end()) scenes.push_back(s.scene);
    for (const auto& scene : scenes) {
        const SummaryRecord* sa = nullptr;
        const SummaryRecord* sb = nullptr;
        for (const auto& s : result.summaries) {
            if (s.scene != scene) continue;
            if (s.config == a) sa = &s;
            if (s.config == b) sb = &s;
        }
        if (sa == nullptr || sb == nullptr) throw ConfigError("compare names a config that is not in the suite");
        fmt::print(os, "compare,{},{},{},{:.6f},{:.6f},{:.6f}\n", scene, a, b, sa->mean[0] - sb->mean[0],
                   sa->mean[1] - sb->mean[1], sa->mean[2] - sb->mean[2]);
    }
}

}  // namespace frontier

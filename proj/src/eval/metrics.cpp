// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#include "frontier/eval/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "frontier/core/error.hpp"

namespace frontier {

std::vector<std::pair<int, std::int64_t>> coverage_trace(const ExplorationLog& log) {
    if (!log.initialized) throw Error("exploration log is empty");
    std::vector<std::pair<int, std::int64_t>> trace{{0, log.initial_known}};
    for (const auto& r : log.rows) {
        if (r.step == trace.back().first) {
            trace.back().second = std::max(trace.back().second, r.known_voxels);
        } else if (r.step > trace.back().first) {
            trace.emplace_back(r.step, std::max(trace.back().second, r.known_voxels));
        }
    }
    return trace;
}

double known_at_step(const ExplorationLog& log, double step) {
    const auto trace = coverage_trace(log);
    if (step <= trace.front().first) return static_cast<double>(trace.front().second);
    for (std::size_t i = 1; i < trace.size(); ++i) {
        if (step <= trace[i].first) {
            const auto [s0, k0] = trace[i - 1];
            const auto [s1, k1] = trace[i];
            const double t = (step - s0) / static_cast<double>(s1 - s0);
            return static_cast<double>(k0) + t * static_cast<double>(k1 - k0);
        }
    }
    return static_cast<double>(trace.back().second);
}

double vox_at_k(const ExplorationLog& log, double step_budget) {
    if (!log.initialized || log.total_voxels <= 0) throw Error("exploration log is empty");
    return 100.0 * known_at_step(log, step_budget) / static_cast<double>(log.total_voxels);
}

std::optional<int> first_step_reaching(const ExplorationLog& log, double fraction) {
    const double need = fraction * static_cast<double>(log.total_voxels);
    for (const auto& [step, known] : coverage_trace(log)) {
        if (static_cast<double>(known) >= need) return step;
    }
    return std::nullopt;
}

}  // namespace frontier

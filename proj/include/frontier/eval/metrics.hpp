// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "frontier/planner/explorer.hpp"

namespace frontier {

/// (step, known voxels at the end of that step), starting at step 0.
std::vector<std::pair<int, std::int64_t>> coverage_trace(const ExplorationLog& log);

/// Known voxels at a possibly fractional step, linearly interpolated between
/// recorded steps and held after the last one. Throws Error on an
/// uninitialized log.
double known_at_step(const ExplorationLog& log, double step);

/// 100 * known_at_step(budget) / total voxels.
double vox_at_k(const ExplorationLog& log, double step_budget);

/// First step whose coverage reaches `fraction` of the total, if any.
std::optional<int> first_step_reaching(const ExplorationLog& log, double fraction);

inline constexpr double kSuccessCoverage = 40.0;  // percent at Vox@100

}  // namespace frontier

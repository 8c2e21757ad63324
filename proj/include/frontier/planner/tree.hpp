// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "frontier/core/geometry.hpp"

namespace frontier {

/// Chain of robot poses x_0 -> x_1 -> ... with frontier leaves hanging off
/// the pose that registered them.
class FrontierTree {
public:
    std::int64_t add_pose(const Pose& p) {
        poses_.push_back(p);
        return static_cast<std::int64_t>(poses_.size()) - 1;
    }
    void add_edge(std::int64_t pose_id, std::int64_t frontier_id) { edges_.emplace_back(pose_id, frontier_id); }

    const Pose& pose(std::int64_t id) const { return poses_.at(static_cast<std::size_t>(id)); }
    std::int64_t last_pose_id() const { return static_cast<std::int64_t>(poses_.size()) - 1; }
    std::size_t pose_count() const { return poses_.size(); }
    const std::vector<std::pair<std::int64_t, std::int64_t>>& edges() const { return edges_; }

private:
    std::vector<Pose> poses_;
    std::vector<std::pair<std::int64_t, std::int64_t>> edges_;
};

}  // namespace frontier

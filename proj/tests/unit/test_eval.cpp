// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <set>
#include <sstream>

#include "configs.hpp"
#include "frontier/core/error.hpp"
#include "frontier/eval/suite.hpp"
#include "frontier/world/scene_gen.hpp"

using namespace frontier;
namespace ft = frontier::testing;

namespace {

ExplorationLog synthetic_log(std::int64_t total, std::int64_t initial,
                             std::vector<std::pair<int, std::int64_t>> rows) {
    ExplorationLog log;
    log.initialized = true;
    log.total_voxels = total;
    log.initial_known = initial;
    for (auto [s, k] : rows) {
        LogRow r;
        r.step = s;
        r.known_voxels = k;
        log.rows.push_back(r);
    }
    log.steps = rows.empty() ? 0 : rows.back().first;
    return log;
}

}  // namespace

TEST_CASE("coverage at a step budget interpolates and then holds") {
    const auto log = synthetic_log(1000, 100, {{0, 100}, {2, 300}, {2, 350}, {4, 450}, {6, 500}});
    const auto tr = coverage_trace(log);
    REQUIRE(tr.size() == 4);
    CHECK(tr[1] == std::pair<int, std::int64_t>{2, 350});
    CHECK(known_at_step(log, 0) == 100.0);
    CHECK(known_at_step(log, 1) == 225.0);
    CHECK(known_at_step(log, 3) == 400.0);
    CHECK(known_at_step(log, 5.5) == 487.5);
    CHECK(known_at_step(log, 99) == 500.0);
    CHECK(vox_at_k(log, 4) == 45.0);
    CHECK(first_step_reaching(log, 0.25) == 2);
    CHECK(first_step_reaching(log, 0.45) == 4);
    CHECK_FALSE(first_step_reaching(log, 0.6));
    CHECK_THROWS_AS(vox_at_k(ExplorationLog{}, 3), Error);
}

TEST_CASE("stage budgets average each config's mean first-reaching step") {
    std::vector<MetricsRecord> recs(3);
    recs[0].config = "a";
    recs[0].log = synthetic_log(100, 0, {{10, 25}, {20, 50}});
    recs[1].config = "a";
    recs[1].log = synthetic_log(100, 0, {{30, 25}, {40, 50}});
    recs[2].config = "b";
    recs[2].log = synthetic_log(100, 0, {{6, 30}});  // never reaches 50%: counts as max_steps
    std::vector<NamedConfig> configs{{"a", ExploreConfig{}}, {"b", ExploreConfig{}}};
    configs[1].config.planner.max_steps = 80;
    std::vector<const MetricsRecord*> ptrs{&recs[0], &recs[1], &recs[2]};
    const auto [b25, b50] = stage_budgets(ptrs, configs);
    CHECK(b25 == doctest::Approx((20.0 + 6.0) / 2));
    CHECK(b50 == doctest::Approx((30.0 + 80.0) / 2));
}

TEST_CASE("cell seeds are deterministic and distinct across cells") {
    std::set<std::uint64_t> seen;
    for (const char* scene : {"a", "b"})
        for (int s = 0; s < 3; ++s)
            for (const char* c : {"x", "y"})
                for (int r = 0; r < 3; ++r) {
                    const auto v = cell_seed(scene, s, c, r, 9);
                    CHECK(v == cell_seed(scene, s, c, r, 9));
                    seen.insert(v);
                }
    CHECK(seen.size() == 36);
    CHECK(cell_seed("a", 0, "x", 0, 1) != cell_seed("a", 0, "x", 0, 2));
}

TEST_CASE("start poses sit in free space with clearance") {
    SceneParams p;
    p.rooms_min = p.rooms_max = 2;
    p.extent = Vec3(6.0, 5.0, 2.5);
    p.furniture_per_room = 2;
    const VoxelGrid g = generate_scene(4, p);
    const auto starts = choose_starts(g, 6, 11);
    REQUIRE(starts.size() == 6);
    const auto again = choose_starts(g, 6, 11);
    for (std::size_t i = 0; i < starts.size(); ++i) {
        CHECK(starts[i].position == again[i].position);
        for (double dx : {-0.4, 0.0, 0.4})
            for (double dy : {-0.4, 0.0, 0.4})
                for (double dz : {-0.4, 0.0, 0.4})
                    CHECK(g.at_point(starts[i].position + Vec3(dx, dy, dz)) == Cell::Free);
    }
    const VoxelGrid solid({10, 10, 10}, 0.1, Vec3::Zero(), Cell::Occupied);
    CHECK_THROWS_AS(choose_starts(solid, 1, 0), GenerationError);
}

TEST_CASE("a small suite is reproducible and its summaries match the records") {
    SceneParams p;
    p.rooms_min = p.rooms_max = 2;
    p.extent = Vec3(5.0, 4.0, 2.5);
    const VoxelGrid g = generate_scene(21, p);
    SuiteSpec spec;
    spec.scenes.push_back({"s21", g, choose_starts(g, 2, 3)});
    ExploreConfig fn = ft::desk_config(PlannerMode::frontiernet);
    fn.planner.max_steps = 40;
    ExploreConfig cl = ft::desk_config(PlannerMode::classic);
    cl.planner.max_steps = 40;
    spec.configs = {{"fn", fn}, {"cl", cl}};
    spec.repeats = 2;
    spec.base_seed = 5;

    const auto a = run_suite(spec, 1);
    const auto b = run_suite(spec, 2);
    std::ostringstream ca, cb;
    write_suite_csv(ca, a);
    write_suite_csv(cb, b);
    CHECK(ca.str() == cb.str());
    REQUIRE(a.records.size() == 8);
    REQUIRE(a.summaries.size() == 2);
    for (const auto& s : a.summaries) {
        double m = 0.0, succ = 0.0;
        int n = 0;
        for (const auto& r : a.records) {
            if (r.config != s.config) continue;
            CHECK(r.vox100 == doctest::Approx(vox_at_k(r.log, 40)));
            CHECK(r.vox25 <= r.vox50 + 1e-12);
            CHECK(r.vox50 <= r.vox100 + 1e-12);
            CHECK(r.success == (!r.collided && !r.errored && r.vox100 > 40.0));
            m += r.vox100;
            succ += r.success;
            ++n;
        }
        CHECK(s.n == n);
        CHECK(s.mean[2] == doctest::Approx(m / n));
        CHECK(s.success_rate == doctest::Approx(100.0 * succ / n));
    }
    std::ostringstream cmp;
    write_comparison(cmp, a, "fn", "cl");
    CHECK(cmp.str().find("compare,s21,fn,cl,") != std::string::npos);
    CHECK_THROWS_AS(write_comparison(cmp, a, "fn", "nope"), ConfigError);
}

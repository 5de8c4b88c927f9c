/*
 Copyright 2026 The hexplace authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#include "engine.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "presets.hpp"
#include "stats.hpp"

using namespace hexplace;

namespace {

ScenarioConfig baseline_hex() { return *make_preset("baseline"); }

// One circular region at the origin, no boundaries, tunable disease.
ScenarioConfig single_region(std::uint64_t population, std::uint64_t infected) {
    ScenarioConfig config;
    RegionSpec region;
    region.id = "only";
    region.population = population;
    region.infected = infected;
    region.center = {0, 0};
    region.radius = 10.0;
    region.mobility_factor = 1.0;
    config.regions.push_back(region);
    config.disease.spread_radius = 5.0;
    config.disease.transmission_probability = 0.0;
    config.disease.cure_period = 250;
    config.disease.kill_probability = 0.0;
    return config;
}

std::vector<BoundarySpec> closed_box(double half_extent, double impermeability) {
    const double h = half_extent;
    std::vector<BoundarySpec> walls(4);
    walls[0] = {{-h, -h}, {h, -h}, impermeability};
    walls[1] = {{h, -h}, {h, h}, impermeability};
    walls[2] = {{h, h}, {-h, h}, impermeability};
    walls[3] = {{-h, h}, {-h, -h}, impermeability};
    return walls;
}

}  // namespace

TEST_CASE("init_state spawns the honeycomb roster") {
    const ScenarioConfig config = baseline_hex();
    const SimulationState state = init_state(config, 1);
    CHECK(state.agents.size() == 1530);
    std::uint64_t infected = 0, immune = 0;
    for (const Agent& agent : state.agents) {
        infected += agent.health == Health::Infected ? 1 : 0;
        immune += agent.health == Health::Immune ? 1 : 0;
    }
    CHECK(infected == 47);
    CHECK(immune == 0);
    for (const std::uint8_t flag : state.lockdown_flags) CHECK(flag == 0);
}

TEST_CASE("init_state spawn geometry and determinism") {
    ScenarioConfig config = single_region(500, 3);
    config.regions[0].center = {25.0, -40.0};
    config.regions[0].radius = 7.5;
    const SimulationState a = init_state(config, 99);
    const SimulationState b = init_state(config, 99);
    REQUIRE(a.agents.size() == 500);
    for (std::size_t i = 0; i < a.agents.size(); ++i) {
        CHECK(a.agents[i].id == i);  // ids in spawn order
        CHECK(a.agents[i].position == b.agents[i].position);
        CHECK(a.agents[i].direction == b.agents[i].direction);
        CHECK(a.agents[i].health == b.agents[i].health);
        // Inside the spawn circle, unit direction.
        CHECK(norm(a.agents[i].position - config.regions[0].center) <= 7.5 + 1e-9);
        CHECK(std::abs(norm(a.agents[i].direction) - 1.0) < 1e-9);
        // The first `infected` spawns carry the infection.
        CHECK((a.agents[i].health == Health::Infected) == (i < 3));
        if (i < 3) CHECK(a.agents[i].infected_since == 0);
    }
}

TEST_CASE("init_state skips empty regions") {
    ScenarioConfig config = single_region(4, 0);
    RegionSpec empty;
    empty.id = "empty";
    empty.population = 0;
    empty.center = {100, 100};
    empty.radius = 1.0;
    empty.mobility_factor = 1.0;
    config.regions.push_back(empty);
    const SimulationState state = init_state(config, 5);
    CHECK(state.agents.size() == 4);
}

TEST_CASE("advance_agent with a solid wall always reflects") {
    const std::vector<BoundarySpec> wall = {{{5.0, -100.0}, {5.0, 100.0}, 1.0}};
    RngStream rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        const MoveResult moved = advance_agent({0.0, 0.0}, {1.0, 0.0}, 8.0, wall, rng);
        CHECK(moved.position.x < 5.0 + 1e-12);  // never ends on the far side
        CHECK(moved.encounters == 1);
        CHECK(moved.direction.x == doctest::Approx(-1.0));
        // Exact distance accounting: 5 forward then 3 back.
        CHECK(moved.position.x == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(moved.position.y == doctest::Approx(0.0));
    }
}

TEST_CASE("advance_agent with a permeable wall always crosses") {
    const std::vector<BoundarySpec> wall = {{{5.0, -100.0}, {5.0, 100.0}, 0.0}};
    RngStream rng(8);
    for (int trial = 0; trial < 1000; ++trial) {
        const MoveResult moved = advance_agent({0.0, 0.0}, {1.0, 0.0}, 8.0, wall, rng);
        CHECK(moved.position.x == doctest::Approx(8.0).epsilon(1e-12));
        CHECK(moved.direction.x == doctest::Approx(1.0));
        CHECK(moved.encounters == 1);
    }
}

TEST_CASE("advance_agent reflects a 0.7 wall at the expected rate") {
    const std::vector<BoundarySpec> wall = {{{5.0, -100.0}, {5.0, 100.0}, 0.7}};
    RngStream rng(9);
    int reflected = 0;
    const int encounters = 10000;
    for (int trial = 0; trial < encounters; ++trial) {
        const MoveResult moved = advance_agent({0.0, 0.0}, {1.0, 0.0}, 8.0, wall, rng);
        if (moved.position.x < 5.0) ++reflected;
    }
    const double fraction = static_cast<double>(reflected) / encounters;
    CHECK(fraction > 0.67);
    CHECK(fraction < 0.73);
}

TEST_CASE("advance_agent consumes one draw per encounter even when passing") {
    const std::vector<BoundarySpec> walls = {{{1.0, -10.0}, {1.0, 10.0}, 0.0},
                                             {{2.0, -10.0}, {2.0, 10.0}, 0.0},
                                             {{3.0, -10.0}, {3.0, 10.0}, 0.0}};
    RngStream used(15);
    RngStream mirror(15);
    const MoveResult moved = advance_agent({0.0, 0.0}, {1.0, 0.0}, 5.0, walls, used);
    CHECK(moved.encounters == 3);
    for (int i = 0; i < 3; ++i) mirror.next_double();
    CHECK(used.next_u64() == mirror.next_u64());
}

TEST_CASE("advance_agent halts after eight boundary events") {
    // A tight corridor forces an event per 0.1 units; speed 10 would need
    // about a hundred, so the agent stops on a wall after the eighth.
    const std::vector<BoundarySpec> corridor = {{{0.5, -10.0}, {0.5, 10.0}, 1.0},
                                                {{0.6, -10.0}, {0.6, 10.0}, 1.0}};
    RngStream rng(21);
    const MoveResult moved = advance_agent({0.55, 0.0}, {1.0, 0.0}, 10.0, corridor, rng);
    CHECK(moved.encounters == kMaxBoundaryEvents);
    const bool on_wall = std::abs(moved.position.x - 0.5) < 1e-9 ||
                         std::abs(moved.position.x - 0.6) < 1e-9;
    CHECK(on_wall);
    CHECK(std::abs(norm(moved.direction) - 1.0) < 1e-9);
}

TEST_CASE("advance_agent with zero speed stays put and draws nothing") {
    const std::vector<BoundarySpec> wall = {{{0.0, -1.0}, {0.0, 1.0}, 1.0}};
    RngStream used(3);
    RngStream mirror(3);
    const MoveResult moved = advance_agent({0.0, 0.5}, {1.0, 0.0}, 0.0, wall, used);
    CHECK(moved.position == Vec2{0.0, 0.5});
    CHECK(moved.encounters == 0);
    CHECK(used.next_u64() == mirror.next_u64());
}

TEST_CASE("solid box contains agents over ten thousand steps") {
    const std::vector<BoundarySpec> box = closed_box(10.0, 1.0);
    RngStream rng(33);
    struct Mover {
        Vec2 position;
        Vec2 direction;
    };
    std::vector<Mover> movers;
    for (int i = 0; i < 10; ++i) {
        const double angle = rng.next_double() * 6.283185307179586;
        movers.push_back({{rng.next_double() * 16.0 - 8.0, rng.next_double() * 16.0 - 8.0},
                          {std::cos(angle), std::sin(angle)}});
    }
    for (int step_index = 0; step_index < 1000; ++step_index) {
        for (Mover& mover : movers) {
            const MoveResult moved = advance_agent(mover.position, mover.direction, 2.7, box, rng);
            mover.position = moved.position;
            mover.direction = moved.direction;
            REQUIRE(std::abs(mover.position.x) <= 10.0 + 1e-9);
            REQUIRE(std::abs(mover.position.y) <= 10.0 + 1e-9);
        }
    }
}

namespace {

// Hand-built three-agent state for sweep tests; region covers everything.
struct SweepWorld {
    ScenarioConfig config;
    SimulationState state;

    SweepWorld() : state{.rng = RngStream(1), .config = &config} {
        config = single_region(3, 0);
        config.disease.transmission_probability = 1.0;
        state.lockdown_flags.assign(1, 0);
        state.cumulative_dead.assign(1, 0);
    }

    void add(std::uint64_t id, Vec2 position, Health health, std::uint64_t since) {
        Agent agent;
        agent.id = id;
        agent.position = position;
        agent.base_speed = 1.0;
        agent.health = health;
        agent.infected_since = since;
        state.agents.push_back(agent);
    }

    NeighborIndex index() const {
        std::vector<IndexedPoint> points;
        for (const Agent& agent : state.agents) points.push_back({agent.id, agent.position});
        return NeighborIndex(points, config.disease.spread_radius);
    }
};

}  // namespace

TEST_CASE("infection_sweep certain transmission in range") {
    SweepWorld world;
    world.add(0, {0, 0}, Health::Infected, 0);
    world.add(1, {3, 0}, Health::Uninfected, kNoInfectionStep);
    const auto newly = infection_sweep(world.state, world.index());
    CHECK(newly == std::vector<std::uint64_t>{1});
    CHECK(world.state.agents[1].health == Health::Infected);
    CHECK(world.state.agents[1].infected_since == world.state.step);
}

TEST_CASE("infection_sweep out of range") {
    SweepWorld world;
    world.add(0, {0, 0}, Health::Infected, 0);
    world.add(1, {6, 0}, Health::Uninfected, kNoInfectionStep);
    CHECK(infection_sweep(world.state, world.index()).empty());
    CHECK(world.state.agents[1].health == Health::Uninfected);
}

TEST_CASE("infection_sweep applies marks synchronously") {
    // A -- B -- C chain: C is in range of B only. B catches it this sweep;
    // C stays clean because B was not infected when the sweep started.
    SweepWorld world;
    world.add(0, {0, 0}, Health::Infected, 0);
    world.add(1, {4, 0}, Health::Uninfected, kNoInfectionStep);
    world.add(2, {8, 0}, Health::Uninfected, kNoInfectionStep);
    const auto first = infection_sweep(world.state, world.index());
    CHECK(first == std::vector<std::uint64_t>{1});
    CHECK(world.state.agents[2].health == Health::Uninfected);

    world.state.step += 1;
    const auto second = infection_sweep(world.state, world.index());
    CHECK(second == std::vector<std::uint64_t>{2});
}

TEST_CASE("progression_sweep cures exactly at the cure period") {
    SweepWorld world;
    world.add(0, {0, 0}, Health::Infected, 0);
    for (std::uint64_t s = 0; s < 250; ++s) {
        world.state.step = s;
        const ProgressionResult result = progression_sweep(world.state);
        CHECK(result.deaths.empty());
        CHECK(result.cures.empty());
        CHECK(world.state.agents[0].health == Health::Infected);
    }
    world.state.step = 250;
    const ProgressionResult result = progression_sweep(world.state);
    CHECK(result.cures == std::vector<std::uint64_t>{0});
    CHECK(world.state.agents[0].health == Health::Immune);
    CHECK(world.state.agents[0].infected_since == kNoInfectionStep);
}

TEST_CASE("progression_sweep certain death on the first check") {
    SweepWorld world;
    world.config.disease.kill_probability = 1.0;
    world.add(0, {0, 0}, Health::Infected, 0);
    const ProgressionResult result = progression_sweep(world.state);
    CHECK(result.deaths == std::vector<std::uint64_t>{0});
    CHECK(world.state.agents.empty());  // dead agents are removed
    CHECK(world.state.cumulative_dead[0] == 1);
}

TEST_CASE("death check precedes cure on a shared step") {
    SweepWorld world;
    world.config.disease.kill_probability = 1.0;
    world.config.disease.kill_check_interval = 250;
    world.add(0, {0, 0}, Health::Infected, 0);
    world.state.step = 250;  // cure threshold and check step coincide
    const ProgressionResult result = progression_sweep(world.state);
    CHECK(result.deaths == std::vector<std::uint64_t>{0});
    CHECK(result.cures.empty());
}

TEST_CASE("kill checks happen only on interval steps") {
    SweepWorld world;
    world.config.disease.kill_probability = 1.0;
    world.config.disease.kill_check_interval = 11;
    world.add(0, {0, 0}, Health::Infected, 0);
    world.state.step = 5;  // age 5, not a multiple of 11
    CHECK(progression_sweep(world.state).deaths.empty());
    world.state.step = 11;
    CHECK(progression_sweep(world.state).deaths == std::vector<std::uint64_t>{0});
}

TEST_CASE("step with no infections only moves agents") {
    ScenarioConfig config = single_region(20, 0);
    SimulationState state = init_state(config, 12);
    const std::vector<Agent> before = state.agents;
    step(state);
    CHECK(state.step == 1);
    REQUIRE(state.agents.size() == before.size());
    for (std::size_t i = 0; i < before.size(); ++i) {
        CHECK(state.agents[i].health == before[i].health);
        // No boundaries: every agent displaces by exactly its speed.
        const double displacement = norm(state.agents[i].position - before[i].position);
        CHECK(displacement == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("locked regions scale displacement by the multiplier") {
    ScenarioConfig config = single_region(10, 10);  // everyone infected: ratio 1
    config.regions[0].mobility_factor = 2.0;
    config.disease.cure_period = 10000;
    config.lockdown.enabled = true;
    config.lockdown.start_threshold = 0.5;
    config.lockdown.end_threshold = 0.1;
    config.lockdown.mobility_multiplier = 0.25;
    SimulationState state = init_state(config, 4);
    const std::vector<Agent> before = state.agents;
    step(state);
    CHECK(state.lockdown_flags[0] == 1);
    for (std::size_t i = 0; i < before.size(); ++i) {
        const double displacement = norm(state.agents[i].position - before[i].position);
        CHECK(displacement == doctest::Approx(2.0 * 0.25).epsilon(1e-12));
    }
}

TEST_CASE("run with zero initial infections terminates at step zero") {
    const ScenarioConfig config = single_region(5, 0);
    const RunResult result = run(config, 77);
    CHECK(result.summary.simulation_period == 0);
    CHECK(result.summary.total_dead == 0);
    CHECK(result.summary.total_immune == 0);
    CHECK_FALSE(result.summary.truncated);
    CHECK(result.timeseries.size() == 1);
}

TEST_CASE("single infected agent cures after exactly the cure period") {
    ScenarioConfig config = single_region(1, 1);
    const RunResult result = run(config, 123);
    CHECK(result.summary.simulation_period == 250);
    CHECK(result.summary.total_immune == 1);
    CHECK(result.summary.total_dead == 0);
    CHECK_FALSE(result.summary.truncated);
}

TEST_CASE("max-steps truncation is reported distinctly") {
    ScenarioConfig config = baseline_hex();
    config.max_steps = 50;
    const RunResult result = run(config, 3);
    CHECK(result.summary.truncated);
    CHECK(result.summary.simulation_period == 50);
    CHECK(result.timeseries.size() == 51);
}

TEST_CASE("honeycomb run conserves population and ends consistently") {
    const RunResult result = run(baseline_hex(), 11);
    CHECK(result.summary.initial_population == 1530);
    std::uint64_t last_dead = 0;
    for (const RegionSnapshot& snapshot : result.timeseries) {
        const RegionCounts& all = snapshot.aggregate;
        REQUIRE(all.uninfected + all.infected + all.immune + all.dead == 1530);
        REQUIRE(all.dead >= last_dead);  // cumulative deaths never decrease
        last_dead = all.dead;
    }
    const RegionCounts& final_counts = result.timeseries.back().aggregate;
    CHECK(final_counts.infected == 0);
    CHECK(final_counts.immune == result.summary.total_immune);
    CHECK(final_counts.dead == result.summary.total_dead);
}

TEST_CASE("identical config and seed give bit-identical outputs") {
    const ScenarioConfig config = baseline_hex();
    const RunResult a = run(config, 42);
    const RunResult b = run(config, 42);

    std::ostringstream csv_a, csv_b;
    write_timeseries(a.timeseries, a.region_ids, csv_a);
    write_timeseries(b.timeseries, b.region_ids, csv_b);
    CHECK(csv_a.str() == csv_b.str());
    CHECK(summary_to_json(a.summary) == summary_to_json(b.summary));

    const RunResult c = run(config, 43);
    std::ostringstream csv_c;
    write_timeseries(c.timeseries, c.region_ids, csv_c);
    CHECK(csv_a.str() != csv_c.str());  // different seed, different trajectory
}

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
#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "interventions.hpp"
#include "neighbor_index.hpp"
#include "rng.hpp"
#include "scenario.hpp"
#include "stats.hpp"

namespace hexplace {

enum class Health : std::uint8_t { Uninfected, Infected, Immune };

// infected_since value for agents that are not infected.
inline constexpr std::uint64_t kNoInfectionStep = std::numeric_limits<std::uint64_t>::max();

struct Agent {
    std::uint64_t id = 0;
    Vec2 position;
    // Unit vector; reflections preserve the norm.
    Vec2 direction{1.0, 0.0};
    // Spawn region's mobility factor, fixed for life. Lockdowns scale the
    // effective speed per step, never this value.
    double base_speed = 0.0;
    Health health = Health::Uninfected;
    std::uint64_t infected_since = kNoInfectionStep;
};

struct SimulationState {
    std::uint64_t step = 0;
    // Live agents only, ascending id. Deaths remove the agent.
    std::vector<Agent> agents;
    std::vector<std::uint8_t> lockdown_flags;
    std::vector<std::uint64_t> cumulative_dead;
    RngStream rng;
    const ScenarioConfig* config = nullptr;
};

// Spawns every region's population uniformly inside its circle
// (r = R * sqrt(u), theta = 2 * pi * u') with a uniformly random unit
// direction, consuming three draws per agent in spawn order. The first
// `infected` agents spawned in each region start Infected since step 0.
// Ids are assigned in spawn order.
SimulationState init_state(const ScenarioConfig& config, std::uint64_t seed);

// One movement step: walk `distance` along `direction`, resolving boundary
// crossings in encounter order. Every encounter consumes one uniform draw;
// the agent reflects when the draw falls below the boundary's impermeability
// and passes through otherwise. After eight boundary events the agent stops
// at the last crossing point and keeps its current direction.
struct MoveResult {
    Vec2 position;
    Vec2 direction;
    // Boundary events resolved during the move.
    int encounters = 0;
};
MoveResult advance_agent(Vec2 position, Vec2 direction, double distance,
                         std::span<const BoundarySpec> boundaries, RngStream& rng);

inline constexpr int kMaxBoundaryEvents = 8;

// Per-region live counts by nearest center, in region order.
std::vector<RegionStats> compute_region_stats(const SimulationState& state);

// Infection attempts for this step. For every Uninfected agent (ascending
// id), each Infected agent within spread_radius (ascending id) gets one
// transmission draw until the first success. Marks are applied after the
// whole sweep, so agents infected this step never transmit this step.
// Returns the newly infected ids.
std::vector<std::uint64_t> infection_sweep(SimulationState& state, const NeighborIndex& index);

// Death and cure checks for every Infected agent in id order. On steps where
// (step - infected_since) is a multiple of kill_check_interval the agent
// draws against kill_probability first; survivors whose infection age has
// reached cure_period turn Immune. The dead are removed and recorded in the
// region ledger at their final position.
struct ProgressionResult {
    std::vector<std::uint64_t> deaths;
    std::vector<std::uint64_t> cures;
};
ProgressionResult progression_sweep(SimulationState& state);

// One full step: region stats, lockdown update, due dose distributions
// (vaccine before medicine), movement, neighbor index rebuild, infection
// sweep, progression sweep, step counter increment. All phases consume the
// single RNG stream in this fixed order, agents in id order within a phase.
void step(SimulationState& state);

struct RunResult {
    std::vector<RegionSnapshot> timeseries;
    Summary summary;
    // Region ids in scenario order, for serializing the time series.
    std::vector<std::string> region_ids;
};

// Runs until no agent is infected or max_steps is hit. The summary reports
// the step index during which the last infection ended; hitting max_steps
// first sets truncated instead. The time series holds one snapshot per step
// counter value, starting with the initial state.
RunResult run(const ScenarioConfig& config, std::uint64_t seed);

}  // namespace hexplace

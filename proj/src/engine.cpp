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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "detmath.hpp"
#include "geometry.hpp"

namespace hexplace {

namespace {

// Coarse uniform grid over the boundary segments so a short move only tests
// nearby walls. Gathering is conservative: every boundary whose bounding box
// overlaps the motion's bounding box is visited (possibly more than once),
// and the caller picks the winner as the minimal (t, index) pair, so the
// outcome is identical to scanning all boundaries.
class BoundaryGrid {
  public:
    explicit BoundaryGrid(std::span<const BoundarySpec> boundaries) {
        if (boundaries.empty()) return;
        double min_x = std::numeric_limits<double>::infinity();
        double min_y = min_x;
        double max_x = -min_x;
        double max_y = -min_x;
        for (const BoundarySpec& boundary : boundaries) {
            min_x = std::min({min_x, boundary.p0.x, boundary.p1.x});
            min_y = std::min({min_y, boundary.p0.y, boundary.p1.y});
            max_x = std::max({max_x, boundary.p0.x, boundary.p1.x});
            max_y = std::max({max_y, boundary.p0.y, boundary.p1.y});
        }
        origin_ = {min_x, min_y};
        const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
        cell_ = span / 16.0;
        nx_ = static_cast<int>((max_x - min_x) / cell_) + 1;
        ny_ = static_cast<int>((max_y - min_y) / cell_) + 1;
        cells_.resize(static_cast<std::size_t>(nx_) * static_cast<std::size_t>(ny_));
        for (std::uint32_t i = 0; i < boundaries.size(); ++i) {
            const auto [cx0, cx1] = cell_range(boundaries[i].p0.x, boundaries[i].p1.x, origin_.x, nx_);
            const auto [cy0, cy1] = cell_range(boundaries[i].p0.y, boundaries[i].p1.y, origin_.y, ny_);
            for (int cx = cx0; cx <= cx1; ++cx) {
                for (int cy = cy0; cy <= cy1; ++cy) {
                    cells_[static_cast<std::size_t>(cy) * nx_ + cx].push_back(i);
                }
            }
        }
    }

    template <typename Visitor>
    void visit(Vec2 a, Vec2 b, Visitor&& visitor) const {
        if (cells_.empty()) return;
        const auto [cx0, cx1] = cell_range(a.x, b.x, origin_.x, nx_);
        const auto [cy0, cy1] = cell_range(a.y, b.y, origin_.y, ny_);
        if (cx0 > cx1 || cy0 > cy1) return;
        for (int cx = cx0; cx <= cx1; ++cx) {
            for (int cy = cy0; cy <= cy1; ++cy) {
                for (const std::uint32_t i : cells_[static_cast<std::size_t>(cy) * nx_ + cx]) {
                    visitor(i);
                }
            }
        }
    }

  private:
    // Clamped cell interval covered by [min(a,b), max(a,b)]; empty (1, 0)
    // when the interval lies fully outside the grid.
    std::pair<int, int> cell_range(double a, double b, double origin, int count) const {
        const double lo = std::min(a, b);
        const double hi = std::max(a, b);
        const int raw_lo = static_cast<int>(std::floor((lo - origin) / cell_));
        const int raw_hi = static_cast<int>(std::floor((hi - origin) / cell_));
        if (raw_hi < 0 || raw_lo >= count) return {1, 0};
        return {std::max(raw_lo, 0), std::min(raw_hi, count - 1)};
    }

    Vec2 origin_;
    double cell_ = 1.0;
    int nx_ = 0;
    int ny_ = 0;
    std::vector<std::vector<std::uint32_t>> cells_;
};

template <typename CandidateVisit>
MoveResult advance_impl(Vec2 position, Vec2 direction, double distance,
                        std::span<const BoundarySpec> boundaries, RngStream& rng,
                        CandidateVisit&& candidates) {
    constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
    int events = 0;
    // The boundary handled by the previous event starts the next sub-segment,
    // so it is skipped once to avoid a zero-length re-collision.
    std::int64_t last_hit = -1;
    while (distance > 0.0) {
        const Vec2 target = position + direction * distance;
        double best_t = std::numeric_limits<double>::infinity();
        std::uint32_t best_index = kNone;
        Vec2 best_point;
        candidates(position, target, [&](std::uint32_t i) {
            if (static_cast<std::int64_t>(i) == last_hit) return;
            const auto hit =
                segment_intersection(position, target, boundaries[i].p0, boundaries[i].p1);
            if (!hit) return;
            if (hit->t < best_t || (hit->t == best_t && i < best_index)) {
                best_t = hit->t;
                best_index = i;
                best_point = hit->point;
            }
        });
        if (best_index == kNone) {
            position = target;
            break;
        }
        const double draw = rng.next_double();
        position = best_point;
        distance *= 1.0 - best_t;
        if (draw < boundaries[best_index].impermeability) {
            direction =
                reflect_velocity(direction, boundaries[best_index].p1 - boundaries[best_index].p0);
        }
        last_hit = best_index;
        ++events;
        if (events == kMaxBoundaryEvents) break;
    }
    return {position, direction, events};
}

std::vector<std::uint32_t> region_assignments(const SimulationState& state) {
    std::vector<std::uint32_t> assignment(state.agents.size());
    const auto& regions = state.config->regions;
    for (std::size_t i = 0; i < state.agents.size(); ++i) {
        assignment[i] = static_cast<std::uint32_t>(nearest_region(state.agents[i].position, regions));
    }
    return assignment;
}

std::vector<RegionStats> stats_from(const SimulationState& state,
                                    std::span<const std::uint32_t> assignment) {
    std::vector<RegionStats> stats(state.config->regions.size());
    for (std::size_t r = 0; r < stats.size(); ++r) stats[r].region_index = r;
    for (std::size_t i = 0; i < state.agents.size(); ++i) {
        RegionStats& s = stats[assignment[i]];
        ++s.total;
        switch (state.agents[i].health) {
            case Health::Uninfected: ++s.uninfected; break;
            case Health::Infected: ++s.infected; break;
            case Health::Immune: ++s.immune; break;
        }
    }
    return stats;
}

Agent* find_agent(SimulationState& state, std::uint64_t id) {
    const auto it = std::lower_bound(
        state.agents.begin(), state.agents.end(), id,
        [](const Agent& agent, std::uint64_t value) { return agent.id < value; });
    return it != state.agents.end() && it->id == id ? &*it : nullptr;
}

std::uint64_t count_infected(const SimulationState& state) {
    std::uint64_t count = 0;
    for (const Agent& agent : state.agents) count += agent.health == Health::Infected ? 1 : 0;
    return count;
}

}  // namespace

SimulationState init_state(const ScenarioConfig& config, std::uint64_t seed) {
    SimulationState state{.rng = RngStream(seed), .config = &config};
    state.lockdown_flags.assign(config.regions.size(), 0);
    state.cumulative_dead.assign(config.regions.size(), 0);
    state.agents.reserve(config.total_population());

    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::uint64_t next_id = 0;
    for (const RegionSpec& region : config.regions) {
        for (std::uint64_t n = 0; n < region.population; ++n) {
            const double u_radius = state.rng.next_double();
            const double u_angle = state.rng.next_double();
            const double u_heading = state.rng.next_double();

            Agent agent;
            agent.id = next_id++;
            const double r = region.radius * std::sqrt(u_radius);
            const SinCos spawn = det_sincos(two_pi * u_angle);
            agent.position = region.center + Vec2{r * spawn.cos, r * spawn.sin};
            const SinCos heading = det_sincos(two_pi * u_heading);
            agent.direction = {heading.cos, heading.sin};
            agent.base_speed = region.mobility_factor;
            if (n < region.infected) {
                agent.health = Health::Infected;
                agent.infected_since = 0;
            }
            state.agents.push_back(agent);
        }
    }
    return state;
}

MoveResult advance_agent(Vec2 position, Vec2 direction, double distance,
                         std::span<const BoundarySpec> boundaries, RngStream& rng) {
    return advance_impl(position, direction, distance, boundaries, rng,
                        [&](Vec2, Vec2, auto&& consider) {
                            for (std::uint32_t i = 0; i < boundaries.size(); ++i) consider(i);
                        });
}

std::vector<RegionStats> compute_region_stats(const SimulationState& state) {
    return stats_from(state, region_assignments(state));
}

std::vector<std::uint64_t> infection_sweep(SimulationState& state, const NeighborIndex& index) {
    const DiseaseParams& disease = state.config->disease;
    std::vector<std::uint64_t> newly_infected;
    std::vector<std::uint64_t> neighbors;
    for (const Agent& agent : state.agents) {
        if (agent.health != Health::Uninfected) continue;
        index.query_into(agent.position, disease.spread_radius, neighbors);
        for (const std::uint64_t neighbor_id : neighbors) {
            if (neighbor_id == agent.id) continue;
            const Agent* neighbor = find_agent(state, neighbor_id);
            if (neighbor == nullptr || neighbor->health != Health::Infected) continue;
            if (state.rng.bernoulli(disease.transmission_probability)) {
                newly_infected.push_back(agent.id);
                break;
            }
        }
    }
    for (const std::uint64_t id : newly_infected) {
        Agent* agent = find_agent(state, id);
        agent->health = Health::Infected;
        agent->infected_since = state.step;
    }
    return newly_infected;
}

ProgressionResult progression_sweep(SimulationState& state) {
    const DiseaseParams& disease = state.config->disease;
    ProgressionResult result;
    for (const Agent& agent : state.agents) {
        if (agent.health != Health::Infected) continue;
        const std::uint64_t age = state.step - agent.infected_since;
        // The death check comes first: an agent reaching the cure threshold
        // on a check step can still die on that step.
        if (age % disease.kill_check_interval == 0 &&
            state.rng.bernoulli(disease.kill_probability)) {
            result.deaths.push_back(agent.id);
            continue;
        }
        if (age >= disease.cure_period) result.cures.push_back(agent.id);
    }
    for (const std::uint64_t id : result.cures) {
        Agent* agent = find_agent(state, id);
        agent->health = Health::Immune;
        agent->infected_since = kNoInfectionStep;
    }
    if (!result.deaths.empty()) {
        const auto& regions = state.config->regions;
        for (const std::uint64_t id : result.deaths) {
            const Agent* agent = find_agent(state, id);
            ++state.cumulative_dead[nearest_region(agent->position, regions)];
        }
        std::erase_if(state.agents, [&](const Agent& agent) {
            return std::binary_search(result.deaths.begin(), result.deaths.end(), agent.id);
        });
    }
    return result;
}

void step(SimulationState& state) {
    const ScenarioConfig& config = *state.config;

    const auto assignment = region_assignments(state);
    const auto stats = stats_from(state, assignment);

    update_lockdowns(stats, state.lockdown_flags, config.lockdown);

    if (distribution_due(state.step, config.vaccine)) {
        const auto allocation = allocate_doses(config.vaccine.mechanism, config.vaccine.quantity,
                                               stats, DoseKind::Vaccine);
        apply_doses(state, allocation, state.rng);
    }
    if (distribution_due(state.step, config.medicine)) {
        const auto allocation = allocate_doses(config.medicine.mechanism, config.medicine.quantity,
                                               stats, DoseKind::Medicine);
        apply_doses(state, allocation, state.rng);
    }

    const BoundaryGrid grid(config.boundaries);
    for (std::size_t i = 0; i < state.agents.size(); ++i) {
        Agent& agent = state.agents[i];
        double speed = agent.base_speed;
        if (config.lockdown.enabled && state.lockdown_flags[assignment[i]] != 0) {
            speed *= config.lockdown.mobility_multiplier;
        }
        const MoveResult moved =
            advance_impl(agent.position, agent.direction, speed, config.boundaries, state.rng,
                         [&](Vec2 a, Vec2 b, auto&& consider) { grid.visit(a, b, consider); });
        agent.position = moved.position;
        agent.direction = moved.direction;
    }

    std::vector<IndexedPoint> points;
    points.reserve(state.agents.size());
    for (const Agent& agent : state.agents) points.push_back({agent.id, agent.position});
    const NeighborIndex index(points, config.disease.spread_radius);

    infection_sweep(state, index);
    progression_sweep(state);

    ++state.step;
}

RunResult run(const ScenarioConfig& config, std::uint64_t seed) {
    SimulationState state = init_state(config, seed);

    RunResult result;
    result.region_ids.reserve(config.regions.size());
    for (const RegionSpec& region : config.regions) result.region_ids.push_back(region.id);
    result.timeseries.push_back(take_snapshot(state));

    bool truncated = false;
    while (true) {
        if (count_infected(state) == 0) break;
        if (state.step >= config.max_steps) {
            truncated = true;
            break;
        }
        step(state);
        result.timeseries.push_back(take_snapshot(state));
    }

    Summary& summary = result.summary;
    summary.initial_population = config.total_population();
    summary.truncated = truncated;
    // On natural termination the last executed step is the one during which
    // the final infection ended; its index is one below the counter.
    summary.simulation_period =
        truncated ? state.step : (state.step == 0 ? 0 : state.step - 1);
    for (const Agent& agent : state.agents) {
        summary.total_immune += agent.health == Health::Immune ? 1 : 0;
    }
    for (const std::uint64_t dead : state.cumulative_dead) summary.total_dead += dead;
    return result;
}

}  // namespace hexplace

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
#include "interventions.hpp"

#include <algorithm>
#include <numeric>

#include "engine.hpp"
#include "geometry.hpp"

namespace hexplace {

namespace {

std::uint64_t eligible_count(const RegionStats& stats, DoseKind kind) {
    return kind == DoseKind::Vaccine ? stats.uninfected : stats.infected;
}

// Largest-remainder split of `amount` proportional to `weights`, restricted
// to the regions in `active`, done in exact integer arithmetic: region i
// gets floor(amount * w_i / W) plus one of the leftover doses, which go to
// the largest remainders (ties toward the lower index).
std::vector<std::uint64_t> largest_remainder(std::uint64_t amount,
                                             std::span<const std::uint64_t> weights,
                                             std::span<const std::size_t> active) {
    std::vector<std::uint64_t> result(weights.size(), 0);
    unsigned __int128 weight_sum = 0;
    for (const std::size_t i : active) weight_sum += weights[i];
    if (weight_sum == 0 || amount == 0) return result;

    std::vector<std::pair<std::uint64_t, std::size_t>> remainders;
    remainders.reserve(active.size());
    std::uint64_t distributed = 0;
    for (const std::size_t i : active) {
        const unsigned __int128 product =
            static_cast<unsigned __int128>(amount) * weights[i];
        result[i] = static_cast<std::uint64_t>(product / weight_sum);
        remainders.emplace_back(static_cast<std::uint64_t>(product % weight_sum), i);
        distributed += result[i];
    }
    std::sort(remainders.begin(), remainders.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    std::uint64_t leftover = amount - distributed;
    for (const auto& [remainder, i] : remainders) {
        if (leftover == 0) break;
        ++result[i];
        --leftover;
    }
    return result;
}

DoseAllocation allocate_equitable(std::uint64_t quantity, std::span<const RegionStats> stats,
                                  DoseKind kind) {
    DoseAllocation allocation;
    allocation.kind = kind;
    allocation.per_region.assign(stats.size(), 0);

    std::vector<std::uint64_t> eligible(stats.size());
    for (std::size_t i = 0; i < stats.size(); ++i) eligible[i] = eligible_count(stats[i], kind);

    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < stats.size(); ++i) {
        if (eligible[i] > 0) active.push_back(i);
    }

    // First split over everyone, capped at eligibility; freed surplus gets
    // one more split over the regions that still have room; the rest is
    // discarded.
    std::uint64_t remaining = quantity;
    for (int pass = 0; pass < 2 && remaining > 0 && !active.empty(); ++pass) {
        const auto split = largest_remainder(remaining, eligible, active);
        for (const std::size_t i : active) {
            const std::uint64_t room = eligible[i] - allocation.per_region[i];
            allocation.per_region[i] += std::min(split[i], room);
        }
        remaining = quantity - allocation.total();
        std::erase_if(active, [&](std::size_t i) {
            return allocation.per_region[i] >= eligible[i];
        });
    }
    return allocation;
}

DoseAllocation allocate_priority(DistributionMechanism mechanism, std::uint64_t quantity,
                                 std::span<const RegionStats> stats, DoseKind kind) {
    DoseAllocation allocation;
    allocation.kind = kind;
    allocation.per_region.assign(stats.size(), 0);

    const auto key = [&](const RegionStats& s) -> std::uint64_t {
        switch (mechanism) {
            case DistributionMechanism::MaximumInfection: return s.infected;
            case DistributionMechanism::MaximumUninfected: return s.uninfected;
            default: return s.infected + s.uninfected;
        }
    };
    std::vector<std::size_t> order(stats.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const std::uint64_t ka = key(stats[a]);
        const std::uint64_t kb = key(stats[b]);
        if (ka != kb) return ka > kb;
        return a < b;
    });

    std::uint64_t remaining = quantity;
    for (const std::size_t i : order) {
        if (remaining == 0) break;
        const std::uint64_t granted = std::min(eligible_count(stats[i], kind), remaining);
        allocation.per_region[i] = granted;
        remaining -= granted;
    }
    return allocation;
}

}  // namespace

void update_lockdowns(std::span<const RegionStats> stats, std::vector<std::uint8_t>& flags,
                      const LockdownParams& params) {
    if (!params.enabled) return;
    for (const RegionStats& s : stats) {
        const double ratio =
            s.total > 0 ? static_cast<double>(s.infected) / static_cast<double>(s.total) : 0.0;
        std::uint8_t& flag = flags[s.region_index];
        if (flag == 0) {
            if (ratio > params.start_threshold) flag = 1;
        } else if (ratio < params.end_threshold) {
            flag = 0;
        }
    }
}

DoseAllocation allocate_doses(DistributionMechanism mechanism, std::uint64_t quantity,
                              std::span<const RegionStats> stats, DoseKind kind) {
    if (mechanism == DistributionMechanism::Equitable) {
        return allocate_equitable(quantity, stats, kind);
    }
    return allocate_priority(mechanism, quantity, stats, kind);
}

bool distribution_due(std::uint64_t step, const DistributionParams& params) {
    if (params.quantity == 0) return false;
    if (step < params.start_time) return false;
    return (step - params.start_time) % params.frequency == 0;
}

std::uint64_t apply_doses(SimulationState& state, const DoseAllocation& allocation,
                          RngStream& rng) {
    const auto& regions = state.config->regions;
    const Health wanted =
        allocation.kind == DoseKind::Vaccine ? Health::Uninfected : Health::Infected;

    // Eligible agent indices per region, in id order (the agent list is kept
    // sorted by id).
    std::vector<std::vector<std::size_t>> eligible(regions.size());
    for (std::size_t i = 0; i < state.agents.size(); ++i) {
        const Agent& agent = state.agents[i];
        if (agent.health != wanted) continue;
        eligible[nearest_region(agent.position, regions)].push_back(i);
    }

    std::uint64_t consumed = 0;
    for (std::size_t r = 0; r < regions.size(); ++r) {
        const std::uint64_t doses = r < allocation.per_region.size() ? allocation.per_region[r] : 0;
        if (doses == 0) continue;
        auto& list = eligible[r];
        const std::size_t take = std::min<std::uint64_t>(doses, list.size());
        for (std::size_t i = 0; i < take; ++i) {
            const std::size_t j = i + rng.bounded(list.size() - i);
            std::swap(list[i], list[j]);
        }
        for (std::size_t i = 0; i < take; ++i) {
            Agent& agent = state.agents[list[i]];
            agent.health =
                allocation.kind == DoseKind::Vaccine ? Health::Immune : Health::Uninfected;
            agent.infected_since = kNoInfectionStep;
        }
        consumed += take;
    }
    return consumed;
}

}  // namespace hexplace

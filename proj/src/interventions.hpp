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
#include <span>
#include <vector>

#include "rng.hpp"
#include "scenario.hpp"

namespace hexplace {

struct SimulationState;

// Live head counts of one region at the moment a decision is taken.
struct RegionStats {
    std::size_t region_index = 0;
    std::uint64_t uninfected = 0;
    std::uint64_t infected = 0;
    std::uint64_t immune = 0;
    std::uint64_t total = 0;
};

// Advances the per-region lockdown flags one step. A region locks when
// infected/total rises above start_threshold and unlocks when it falls below
// end_threshold; between the two it keeps its previous state. Empty regions
// count as ratio 0. No-op when params.enabled is false.
void update_lockdowns(std::span<const RegionStats> stats, std::vector<std::uint8_t>& flags,
                      const LockdownParams& params);

enum class DoseKind { Vaccine, Medicine };

struct DoseAllocation {
    DoseKind kind = DoseKind::Vaccine;
    // Doses granted per region, indexed like the stats the allocation was
    // computed from. Never exceeds the region's eligible count.
    std::vector<std::uint64_t> per_region;

    std::uint64_t total() const {
        std::uint64_t sum = 0;
        for (const std::uint64_t doses : per_region) sum += doses;
        return sum;
    }
};

// Splits `quantity` doses across regions. Eligibility is uninfected agents
// for vaccine and infected agents for medicine.
//
// equitable: largest-remainder split proportional to the eligible counts,
// capped at each region's eligible count, one redistribution pass over the
// uncapped regions, any rest discarded. The other three mechanisms sort
// regions by a priority key (maximumInfection: infected; maximumUninfected:
// uninfected; infectedAndUninfected: their sum), ties toward the lower
// region index, and grant greedily until doses run out.
DoseAllocation allocate_doses(DistributionMechanism mechanism, std::uint64_t quantity,
                              std::span<const RegionStats> stats, DoseKind kind);

// True when a schedule fires at `step`: quantity > 0, step >= start_time,
// and (step - start_time) is a multiple of frequency.
bool distribution_due(std::uint64_t step, const DistributionParams& params);

// Hands the allocated doses to concrete agents. Regions are processed in
// ascending index order; within a region the recipients are a uniform
// Fisher-Yates prefix of the eligible agents listed in id order. Vaccine
// turns Uninfected agents Immune; medicine turns Infected agents Uninfected
// and discards their infection timer. Returns the number of doses consumed.
std::uint64_t apply_doses(SimulationState& state, const DoseAllocation& allocation,
                          RngStream& rng);

}  // namespace hexplace

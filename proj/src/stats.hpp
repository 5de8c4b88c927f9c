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
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace hexplace {

struct SimulationState;

struct RegionCounts {
    std::uint64_t uninfected = 0;
    std::uint64_t infected = 0;
    std::uint64_t immune = 0;
    // Cumulative deaths attributed to the region, not a live count.
    std::uint64_t dead = 0;

    bool operator==(const RegionCounts&) const = default;
};

struct RegionSnapshot {
    std::uint64_t step = 0;
    // One row per region, in scenario order.
    std::vector<RegionCounts> rows;
    RegionCounts aggregate;
};

struct Summary {
    std::uint64_t initial_population = 0;
    std::uint64_t simulation_period = 0;
    std::uint64_t total_immune = 0;
    std::uint64_t total_dead = 0;
    bool truncated = false;

    bool operator==(const Summary&) const = default;
};

// Counts every live agent into the region whose center is nearest, and adds
// the per-region death ledger. aggregate is the column-wise sum, so
// uninfected + infected + immune + dead always equals the initial population.
RegionSnapshot take_snapshot(const SimulationState& state);

// CSV time series. Header: step,region_id,uninfected,infected,immune,dead.
// One row per region per snapshot plus an aggregate row with region_id ALL,
// all values plain integers, LF line endings. Stream failures surface as the
// stream's exception or its fail state, nothing is swallowed.
void write_timeseries(std::span<const RegionSnapshot> snapshots,
                      std::span<const std::string> region_ids, std::ostream& sink);

// Summary JSON with keys initialPopulation, simulationPeriod, totalImmune,
// totalDead, truncated.
std::string summary_to_json(const Summary& summary);
void write_summary(const Summary& summary, std::ostream& sink);

struct WaveReport {
    int wave_count = 0;
    // Indices into the (smoothed) series, strictly increasing.
    std::vector<std::size_t> peak_steps;
};

inline constexpr int kDefaultSmoothWindow = 51;

// Counts epidemic waves in an infected-count series: smooth with a centered
// moving average (window truncated at the series ends), then count the local
// maxima that rise at least min_prominence above both flanking minima.
// Maxima that fail the test are pruned weakest-first and the flanks merged
// across them, so a jagged summit counts as one wave, not zero.
WaveReport count_waves(std::span<const std::uint64_t> infected_series,
                       int smooth_window, double min_prominence);

// The conventional prominence floor: 2% of the initial population.
double default_min_prominence(std::uint64_t initial_population);

}  // namespace hexplace

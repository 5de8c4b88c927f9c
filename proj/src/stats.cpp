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
#include "stats.hpp"

#include <algorithm>
#include <limits>

#include "engine.hpp"
#include "geometry.hpp"
#include "json.hpp"

namespace hexplace {

RegionSnapshot take_snapshot(const SimulationState& state) {
    const auto& regions = state.config->regions;
    RegionSnapshot snapshot;
    snapshot.step = state.step;
    snapshot.rows.assign(regions.size(), {});
    for (const Agent& agent : state.agents) {
        RegionCounts& row = snapshot.rows[nearest_region(agent.position, regions)];
        switch (agent.health) {
            case Health::Uninfected: ++row.uninfected; break;
            case Health::Infected: ++row.infected; break;
            case Health::Immune: ++row.immune; break;
        }
    }
    for (std::size_t r = 0; r < regions.size(); ++r) {
        snapshot.rows[r].dead = state.cumulative_dead[r];
        snapshot.aggregate.uninfected += snapshot.rows[r].uninfected;
        snapshot.aggregate.infected += snapshot.rows[r].infected;
        snapshot.aggregate.immune += snapshot.rows[r].immune;
        snapshot.aggregate.dead += snapshot.rows[r].dead;
    }
    return snapshot;
}

void write_timeseries(std::span<const RegionSnapshot> snapshots,
                      std::span<const std::string> region_ids, std::ostream& sink) {
    sink << "step,region_id,uninfected,infected,immune,dead\n";
    for (const RegionSnapshot& snapshot : snapshots) {
        for (std::size_t r = 0; r < region_ids.size(); ++r) {
            const RegionCounts& row = snapshot.rows[r];
            sink << snapshot.step << ',' << region_ids[r] << ',' << row.uninfected << ','
                 << row.infected << ',' << row.immune << ',' << row.dead << '\n';
        }
        const RegionCounts& all = snapshot.aggregate;
        sink << snapshot.step << ",ALL," << all.uninfected << ',' << all.infected << ','
             << all.immune << ',' << all.dead << '\n';
    }
}

std::string summary_to_json(const Summary& summary) {
    nlohmann::ordered_json doc;
    doc["initialPopulation"] = summary.initial_population;
    doc["simulationPeriod"] = summary.simulation_period;
    doc["totalImmune"] = summary.total_immune;
    doc["totalDead"] = summary.total_dead;
    doc["truncated"] = summary.truncated;
    return doc.dump(2) + "\n";
}

void write_summary(const Summary& summary, std::ostream& sink) { sink << summary_to_json(summary); }

double default_min_prominence(std::uint64_t initial_population) {
    return 0.02 * static_cast<double>(initial_population);
}

WaveReport count_waves(std::span<const std::uint64_t> series, int smooth_window,
                       double min_prominence) {
    const std::size_t n = series.size();
    if (n == 0) return {};
    if (smooth_window < 1) smooth_window = 1;
    const std::size_t half = static_cast<std::size_t>(smooth_window) / 2;

    std::vector<std::uint64_t> prefix(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + series[i];
    std::vector<double> smoothed(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo = i > half ? i - half : 0;
        const std::size_t hi = std::min(i + half, n - 1);
        smoothed[i] = static_cast<double>(prefix[hi + 1] - prefix[lo]) /
                      static_cast<double>(hi - lo + 1);
    }

    // Runs of equal smoothed values; a plateau maximum is reported at the
    // step where the run starts.
    struct Run {
        std::size_t start;
        double value;
    };
    std::vector<Run> runs;
    for (std::size_t i = 0; i < n; ++i) {
        if (runs.empty() || smoothed[i] != runs.back().value) runs.push_back({i, smoothed[i]});
    }

    std::vector<std::size_t> peaks;  // indices into runs
    for (std::size_t k = 1; k + 1 < runs.size(); ++k) {
        if (runs[k].value > runs[k - 1].value && runs[k].value > runs[k + 1].value) {
            peaks.push_back(k);
        }
    }

    // Iteratively drop the weakest peak until every survivor rises at least
    // min_prominence above the lowest point separating it from its surviving
    // neighbors (or from the series ends).
    while (!peaks.empty()) {
        double weakest_prominence = std::numeric_limits<double>::infinity();
        std::size_t weakest = peaks.size();
        for (std::size_t p = 0; p < peaks.size(); ++p) {
            const std::size_t left_bound = p == 0 ? 0 : peaks[p - 1];
            const std::size_t right_bound = p + 1 == peaks.size() ? runs.size() - 1 : peaks[p + 1];
            double left_min = runs[peaks[p]].value;
            for (std::size_t k = left_bound; k <= peaks[p]; ++k) {
                left_min = std::min(left_min, runs[k].value);
            }
            double right_min = runs[peaks[p]].value;
            for (std::size_t k = peaks[p]; k <= right_bound; ++k) {
                right_min = std::min(right_min, runs[k].value);
            }
            const double prominence =
                runs[peaks[p]].value - std::max(left_min, right_min);
            if (prominence < weakest_prominence) {
                weakest_prominence = prominence;
                weakest = p;
            }
        }
        if (weakest_prominence >= min_prominence) break;
        peaks.erase(peaks.begin() + static_cast<std::ptrdiff_t>(weakest));
    }

    WaveReport report;
    report.wave_count = peaks.size();
    for (const std::size_t k : peaks) report.peak_steps.push_back(runs[k].start);
    return report;
}

}  // namespace hexplace

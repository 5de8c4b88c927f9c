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

// Batch front end over the C API: single runs, honeycomb preset generation,
// replication ensembles, and strategy comparison tables.
//
// Exit codes: 0 success, 1 configuration or usage error, 2 I/O error.
// HEXPLACE_LOG=error|info|debug controls diagnostics on stderr; data outputs
// are files only, so logging never corrupts them.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "hexplace.h"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;

enum class LogLevel { kError = 0, kInfo = 1, kDebug = 2 };

LogLevel g_log_level = LogLevel::kError;
std::mutex g_log_mutex;

void init_log_level() {
    const char* raw = std::getenv("HEXPLACE_LOG");
    if (raw == nullptr) return;
    const std::string value(raw);
    if (value == "error") {
        g_log_level = LogLevel::kError;
    } else if (value == "info") {
        g_log_level = LogLevel::kInfo;
    } else if (value == "debug") {
        g_log_level = LogLevel::kDebug;
    } else {
        std::cerr << "hexplace: ignoring unknown HEXPLACE_LOG value '" << value << "'\n";
    }
}

void log_at(LogLevel level, const char* tag, const std::string& message) {
    if (g_log_level < level) return;
    const std::lock_guard<std::mutex> lock(g_log_mutex);
    std::cerr << tag << message << '\n';
}

void log_error(const std::string& message) { log_at(LogLevel::kError, "hexplace: error: ", message); }
void log_info(const std::string& message) { log_at(LogLevel::kInfo, "hexplace: ", message); }
void log_debug(const std::string& message) { log_at(LogLevel::kDebug, "hexplace: debug: ", message); }

struct ScenarioDeleter {
    void operator()(hxp_scenario* scenario) const { hxp_scenario_free(scenario); }
};
using ScenarioHandle = std::unique_ptr<hxp_scenario, ScenarioDeleter>;

struct ResultDeleter {
    void operator()(hxp_result* result) const { hxp_result_free(result); }
};
using ResultHandle = std::unique_ptr<hxp_result, ResultDeleter>;

std::string take_string(char* text) {
    std::string copy(text);
    hxp_string_free(text);
    return copy;
}

// Shortest round-trip decimal form; locale-independent.
std::string format_double(double value) {
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, result.ptr);
}

bool read_file(const fs::path& path, std::string& out, std::string& error) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        error = "cannot read " + path.string();
        return false;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        error = "read failed for " + path.string();
        return false;
    }
    out = buffer.str();
    return true;
}

bool write_file(const fs::path& path, std::string_view content, std::string& error) {
    std::error_code ec;
    if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        error = "cannot open " + path.string() + " for writing";
        return false;
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
        error = "write failed for " + path.string();
        return false;
    }
    return true;
}

// Loads and validates a scenario file; on failure logs and returns the exit
// code, on success returns kExitOk with the handle filled in.
int load_scenario(const std::string& path, std::optional<std::uint64_t> max_steps,
                  ScenarioHandle& out) {
    std::string text;
    std::string error;
    if (!read_file(path, text, error)) {
        log_error(error);
        return kExitIo;
    }
    hxp_scenario* raw = nullptr;
    if (hxp_scenario_parse(text.c_str(), &raw) != HXP_OK) {
        log_error(path + ": " + hxp_last_error_message());
        return kExitConfig;
    }
    out.reset(raw);
    if (max_steps.has_value() &&
        hxp_scenario_set_max_steps(out.get(), *max_steps) != HXP_OK) {
        log_error(std::string("--max-steps: ") + hxp_last_error_message());
        return kExitConfig;
    }
    log_debug("loaded scenario " + path);
    return kExitOk;
}

struct SeedOutcome {
    std::uint64_t seed = 0;
    hxp_summary summary{};
    std::string csv;
    std::string json;
    std::string error;  // non-empty when the replication failed
};

SeedOutcome run_seed(const hxp_scenario* scenario, std::uint64_t seed) {
    SeedOutcome outcome;
    outcome.seed = seed;
    hxp_result* raw = nullptr;
    if (hxp_run(scenario, seed, &raw) != HXP_OK) {
        outcome.error = hxp_last_error_message();
        return outcome;
    }
    const ResultHandle result(raw);
    hxp_result_summary(result.get(), &outcome.summary);
    char* csv = nullptr;
    if (hxp_result_timeseries_csv(result.get(), &csv) != HXP_OK) {
        outcome.error = hxp_last_error_message();
        return outcome;
    }
    outcome.csv = take_string(csv);
    char* json = nullptr;
    if (hxp_result_summary_json(result.get(), &json) != HXP_OK) {
        outcome.error = hxp_last_error_message();
        return outcome;
    }
    outcome.json = take_string(json);
    return outcome;
}

// Runs all seeds over a worker pool. Outcomes land at the index of their
// seed, so the result is independent of scheduling.
std::vector<SeedOutcome> run_ensemble(const hxp_scenario* scenario,
                                      const std::vector<std::uint64_t>& seeds, unsigned jobs) {
    std::vector<SeedOutcome> outcomes(seeds.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= seeds.size()) break;
            outcomes[i] = run_seed(scenario, seeds[i]);
            if (outcomes[i].error.empty()) {
                log_info("seed " + std::to_string(seeds[i]) + ": period " +
                         std::to_string(outcomes[i].summary.simulation_period) + ", dead " +
                         std::to_string(outcomes[i].summary.total_dead) + ", immune " +
                         std::to_string(outcomes[i].summary.total_immune));
            }
        }
    };
    jobs = std::clamp<unsigned>(jobs, 1u, static_cast<unsigned>(std::max<std::size_t>(seeds.size(), 1)));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (std::thread& thread : pool) thread.join();
    }
    return outcomes;
}

struct EnsembleStats {
    double mean_total_dead = 0.0;
    double mean_total_immune = 0.0;
    double mean_simulation_period = 0.0;
    double std_total_dead = 0.0;
};

// Arithmetic means and population standard deviation over the ensemble.
EnsembleStats ensemble_stats(const std::vector<SeedOutcome>& outcomes) {
    EnsembleStats stats;
    const double n = static_cast<double>(outcomes.size());
    for (const SeedOutcome& outcome : outcomes) {
        stats.mean_total_dead += static_cast<double>(outcome.summary.total_dead);
        stats.mean_total_immune += static_cast<double>(outcome.summary.total_immune);
        stats.mean_simulation_period += static_cast<double>(outcome.summary.simulation_period);
    }
    stats.mean_total_dead /= n;
    stats.mean_total_immune /= n;
    stats.mean_simulation_period /= n;
    double sum_sq = 0.0;
    for (const SeedOutcome& outcome : outcomes) {
        const double delta = static_cast<double>(outcome.summary.total_dead) - stats.mean_total_dead;
        sum_sq += delta * delta;
    }
    stats.std_total_dead = std::sqrt(sum_sq / n);
    return stats;
}

std::string ensemble_to_json(const std::string& scenario_name,
                             const std::vector<SeedOutcome>& outcomes) {
    const EnsembleStats stats = ensemble_stats(outcomes);
    nlohmann::ordered_json doc;
    doc["scenarioName"] = scenario_name;
    doc["replications"] = outcomes.size();
    doc["meanTotalDead"] = stats.mean_total_dead;
    doc["meanTotalImmune"] = stats.mean_total_immune;
    doc["meanSimulationPeriod"] = stats.mean_simulation_period;
    doc["stdTotalDead"] = stats.std_total_dead;
    nlohmann::ordered_json per_seed = nlohmann::ordered_json::array();
    for (const SeedOutcome& outcome : outcomes) {
        nlohmann::ordered_json entry;
        entry["seed"] = outcome.seed;
        entry["initialPopulation"] = outcome.summary.initial_population;
        entry["simulationPeriod"] = outcome.summary.simulation_period;
        entry["totalImmune"] = outcome.summary.total_immune;
        entry["totalDead"] = outcome.summary.total_dead;
        entry["truncated"] = outcome.summary.truncated != 0;
        per_seed.push_back(std::move(entry));
    }
    doc["perSeedSummaries"] = std::move(per_seed);
    return doc.dump(2) + "\n";
}

std::vector<std::uint64_t> default_seeds(std::uint64_t n) {
    std::vector<std::uint64_t> seeds(n);
    std::iota(seeds.begin(), seeds.end(), std::uint64_t{0});
    return seeds;
}

int cmd_run(const std::string& scenario_path, std::uint64_t seed, const std::string& out_dir,
            std::optional<std::uint64_t> max_steps) {
    ScenarioHandle scenario;
    if (const int rc = load_scenario(scenario_path, max_steps, scenario); rc != kExitOk) return rc;
    log_info("running " + scenario_path + " with seed " + std::to_string(seed));
    const SeedOutcome outcome = run_seed(scenario.get(), seed);
    if (!outcome.error.empty()) {
        log_error(outcome.error);
        return kExitConfig;
    }
    const fs::path dir(out_dir);
    std::string error;
    if (!write_file(dir / ("timeseries_" + std::to_string(seed) + ".csv"), outcome.csv, error) ||
        !write_file(dir / ("summary_" + std::to_string(seed) + ".json"), outcome.json, error)) {
        log_error(error);
        return kExitIo;
    }
    log_info("period " + std::to_string(outcome.summary.simulation_period) + ", dead " +
             std::to_string(outcome.summary.total_dead) + ", immune " +
             std::to_string(outcome.summary.total_immune));
    return kExitOk;
}

int cmd_gen_hex(const std::string& preset, const std::string& out_path) {
    hxp_scenario* raw = nullptr;
    if (hxp_scenario_from_preset(preset.c_str(), &raw) != HXP_OK) {
        log_error(hxp_last_error_message());
        return kExitConfig;
    }
    const ScenarioHandle scenario(raw);
    char* json = nullptr;
    if (hxp_scenario_to_json(scenario.get(), &json) != HXP_OK) {
        log_error(hxp_last_error_message());
        return kExitConfig;
    }
    const std::string text = take_string(json);
    std::string error;
    if (!write_file(out_path, text, error)) {
        log_error(error);
        return kExitIo;
    }
    log_info("wrote preset '" + preset + "' to " + out_path);
    return kExitOk;
}

int cmd_replicate(const std::string& scenario_path, std::uint64_t n,
                  const std::vector<std::uint64_t>& explicit_seeds, const std::string& out_dir,
                  unsigned jobs, std::optional<std::uint64_t> max_steps) {
    ScenarioHandle scenario;
    if (const int rc = load_scenario(scenario_path, max_steps, scenario); rc != kExitOk) return rc;
    const std::vector<std::uint64_t> seeds =
        explicit_seeds.empty() ? default_seeds(n) : explicit_seeds;
    log_info("replicating " + scenario_path + " over " + std::to_string(seeds.size()) +
             " seeds with " + std::to_string(jobs) + " jobs");
    const std::vector<SeedOutcome> outcomes = run_ensemble(scenario.get(), seeds, jobs);

    const fs::path dir(out_dir);
    bool any_failed = false;
    bool io_failed = false;
    for (const SeedOutcome& outcome : outcomes) {
        if (!outcome.error.empty()) {
            log_error("seed " + std::to_string(outcome.seed) + ": " + outcome.error);
            any_failed = true;
            continue;
        }
        std::string error;
        if (!write_file(dir / ("timeseries_" + std::to_string(outcome.seed) + ".csv"), outcome.csv,
                        error) ||
            !write_file(dir / ("summary_" + std::to_string(outcome.seed) + ".json"), outcome.json,
                        error)) {
            log_error(error);
            io_failed = true;
        }
    }
    if (any_failed) return kExitConfig;
    std::string error;
    if (!write_file(dir / "ensemble.json",
                    ensemble_to_json(fs::path(scenario_path).stem().string(), outcomes), error)) {
        log_error(error);
        return kExitIo;
    }
    return io_failed ? kExitIo : kExitOk;
}

int cmd_compare(const std::vector<std::string>& scenario_paths, std::uint64_t n,
                const std::string& out_path, unsigned jobs,
                std::optional<std::uint64_t> max_steps) {
    struct Row {
        std::string name;
        EnsembleStats stats;
    };
    // Common seeds across scenarios keep the comparison paired.
    const std::vector<std::uint64_t> seeds = default_seeds(n);
    std::vector<Row> rows;
    rows.reserve(scenario_paths.size());
    for (const std::string& path : scenario_paths) {
        ScenarioHandle scenario;
        if (const int rc = load_scenario(path, max_steps, scenario); rc != kExitOk) return rc;
        log_info("comparing " + path + " over " + std::to_string(seeds.size()) + " seeds");
        const std::vector<SeedOutcome> outcomes = run_ensemble(scenario.get(), seeds, jobs);
        for (const SeedOutcome& outcome : outcomes) {
            if (!outcome.error.empty()) {
                log_error(path + ", seed " + std::to_string(outcome.seed) + ": " + outcome.error);
                return kExitConfig;
            }
        }
        rows.push_back({fs::path(path).stem().string(), ensemble_stats(outcomes)});
    }
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return a.stats.mean_total_dead < b.stats.mean_total_dead;
    });
    std::ostringstream table;
    table << "scenario,meanTotalDead,stdTotalDead,meanTotalImmune,meanSimulationPeriod\n";
    for (const Row& row : rows) {
        table << row.name << ',' << format_double(row.stats.mean_total_dead) << ','
              << format_double(row.stats.std_total_dead) << ','
              << format_double(row.stats.mean_total_immune) << ','
              << format_double(row.stats.mean_simulation_period) << '\n';
    }
    std::string error;
    if (!write_file(out_path, table.str(), error)) {
        log_error(error);
        return kExitIo;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    init_log_level();

    CLI::App app{"agent epidemic simulator over bounded hexagonal settlements"};
    app.require_subcommand(1);
    const unsigned default_jobs = std::max(1u, std::thread::hardware_concurrency());
    int exit_code = kExitOk;

    std::string run_scenario;
    std::uint64_t run_seed_value = 0;
    std::string run_out = ".";
    std::optional<std::uint64_t> run_max_steps;
    auto* run_cmd =
        app.add_subcommand("run", "Run one simulation; write timeseries_<seed>.csv and summary_<seed>.json");
    run_cmd->add_option("--scenario", run_scenario, "Scenario JSON file")->required();
    run_cmd->add_option("--seed", run_seed_value, "RNG seed")->capture_default_str();
    run_cmd->add_option("--out", run_out, "Output directory")->capture_default_str();
    run_cmd->add_option("--max-steps", run_max_steps, "Override the scenario step cap");
    run_cmd->callback(
        [&] { exit_code = cmd_run(run_scenario, run_seed_value, run_out, run_max_steps); });

    std::string gen_preset;
    std::string gen_out;
    auto* gen_cmd = app.add_subcommand("gen-hex", "Write a honeycomb preset scenario as JSON");
    gen_cmd->add_option("--preset", gen_preset, "Preset name (see docs for the list)")->required();
    gen_cmd->add_option("--out", gen_out, "Output file")->required();
    gen_cmd->callback([&] { exit_code = cmd_gen_hex(gen_preset, gen_out); });

    std::string rep_scenario;
    std::uint64_t rep_n = 20;
    std::vector<std::uint64_t> rep_seeds;
    std::string rep_out = ".";
    unsigned rep_jobs = default_jobs;
    std::optional<std::uint64_t> rep_max_steps;
    auto* rep_cmd = app.add_subcommand(
        "replicate", "Run an ensemble of seeds; write per-seed outputs plus ensemble.json");
    rep_cmd->add_option("--scenario", rep_scenario, "Scenario JSON file")->required();
    auto* rep_n_opt = rep_cmd->add_option("--n", rep_n, "Number of replications (seeds 0..n-1)")
                          ->check(CLI::PositiveNumber)
                          ->capture_default_str();
    rep_cmd->add_option("--seeds", rep_seeds, "Explicit comma-separated seed list")
        ->delimiter(',')
        ->excludes(rep_n_opt);
    rep_cmd->add_option("--out", rep_out, "Output directory")->capture_default_str();
    rep_cmd->add_option("--jobs", rep_jobs, "Worker threads")->capture_default_str();
    rep_cmd->add_option("--max-steps", rep_max_steps, "Override the scenario step cap");
    rep_cmd->callback([&] {
        exit_code = cmd_replicate(rep_scenario, rep_n, rep_seeds, rep_out, rep_jobs, rep_max_steps);
    });

    std::vector<std::string> cmp_scenarios;
    std::uint64_t cmp_n = 20;
    std::string cmp_out;
    unsigned cmp_jobs = default_jobs;
    std::optional<std::uint64_t> cmp_max_steps;
    auto* cmp_cmd = app.add_subcommand(
        "compare", "Rank scenarios by mean deaths over a common seed ensemble");
    cmp_cmd->add_option("--scenario", cmp_scenarios, "Scenario JSON files (at least two)")
        ->required()
        ->expected(2, std::numeric_limits<int>::max());
    cmp_cmd->add_option("--n", cmp_n, "Replications per scenario (seeds 0..n-1)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmp_cmd->add_option("--out", cmp_out, "Output CSV file")->required();
    cmp_cmd->add_option("--jobs", cmp_jobs, "Worker threads")->capture_default_str();
    cmp_cmd->add_option("--max-steps", cmp_max_steps, "Override the scenario step cap");
    cmp_cmd->callback([&] {
        exit_code = cmd_compare(cmp_scenarios, cmp_n, cmp_out, cmp_jobs, cmp_max_steps);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }
    return exit_code;
}

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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vec2.hpp"

namespace hexplace {

// A straight wall segment. When a moving agent's path crosses it, the agent
// is reflected with probability `impermeability` and passes through
// otherwise, so 1.0 is a solid wall and 0.0 is fully open.
struct BoundarySpec {
    Vec2 p0;
    Vec2 p1;
    double impermeability = 1.0;

    bool operator==(const BoundarySpec&) const = default;
};

// A circular spawn area with a population attached. Agents belong to the
// region whose center is nearest to their current position, so the circle
// only constrains initial placement, not later membership.
struct RegionSpec {
    std::string id;
    std::uint64_t population = 0;
    std::uint64_t infected = 0;
    Vec2 center;
    double radius = 1.0;
    double mobility_factor = 1.0;

    bool operator==(const RegionSpec&) const = default;
};

struct DiseaseParams {
    double spread_radius = 5.0;
    double transmission_probability = 0.7;
    std::uint64_t cure_period = 250;
    double kill_probability = 0.005;
    // An infected agent faces a death draw whenever
    // (step - infection step) % kill_check_interval == 0.
    std::uint64_t kill_check_interval = 1;

    bool operator==(const DiseaseParams&) const = default;
};

// Hysteresis loop per region: lock above start_threshold, unlock below
// end_threshold, hold in between.
struct LockdownParams {
    double start_threshold = 1.0;
    double end_threshold = 0.0;
    double mobility_multiplier = 1.0;
    bool enabled = false;

    bool operator==(const LockdownParams&) const = default;

    static LockdownParams disabled() { return LockdownParams{}; }
};

enum class DistributionMechanism {
    Equitable,
    MaximumInfection,
    MaximumUninfected,
    InfectedAndUninfected,
};

std::string_view to_string(DistributionMechanism mechanism);
std::optional<DistributionMechanism> parse_mechanism(std::string_view text);

// Periodic dose schedule. Fires at start_time, start_time + frequency, ...
// A zero quantity disables the schedule entirely.
struct DistributionParams {
    std::uint64_t start_time = 0;
    std::uint64_t frequency = 1;
    std::uint64_t quantity = 0;
    DistributionMechanism mechanism = DistributionMechanism::Equitable;

    bool operator==(const DistributionParams&) const = default;

    static DistributionParams disabled() { return DistributionParams{}; }
};

inline constexpr std::uint64_t kDefaultMaxSteps = 100000;

struct ScenarioConfig {
    std::vector<BoundarySpec> boundaries;
    std::vector<RegionSpec> regions;
    // Stored for schema fidelity; crossings are resolved by exact swept
    // segment intersection, so wall thickness never enters the dynamics.
    double boundary_thickness = 0.0;
    DiseaseParams disease;
    LockdownParams lockdown;
    DistributionParams vaccine;
    DistributionParams medicine;
    std::uint64_t max_steps = kDefaultMaxSteps;

    bool operator==(const ScenarioConfig&) const = default;

    std::uint64_t total_population() const {
        std::uint64_t total = 0;
        for (const auto& region : regions) total += region.population;
        return total;
    }
};

// Malformed JSON. The message carries the byte offset reported by the parser.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Well-formed JSON with an invalid value. The message names the offending
// field, including its index for array entries.
class ValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Parses and validates a scenario document. Throws ParseError or
// ValidationError.
ScenarioConfig parse_scenario(std::string_view json_text);

// Inverse of parse_scenario: parse_scenario(write_scenario(c)) == c for every
// valid config. Blocks that are disabled are omitted from the output.
std::string write_scenario(const ScenarioConfig& config);

// Throws ValidationError on the first violated constraint.
void validate_scenario(const ScenarioConfig& config);

}  // namespace hexplace

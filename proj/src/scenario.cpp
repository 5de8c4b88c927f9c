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
#include "scenario.hpp"

#include <cmath>
#include <limits>
#include <unordered_map>

#include "json.hpp"

namespace hexplace {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& message) { throw ValidationError(message); }

bool is_nonneg_int(const json& j) {
    return j.is_number_unsigned() ||
           (j.is_number_integer() && j.get<std::int64_t>() >= 0);
}

std::uint64_t require_count(const json& j, const std::string& name) {
    if (!is_nonneg_int(j)) fail(name + " must be a non-negative integer");
    return j.get<std::uint64_t>();
}

double require_number(const json& j, const std::string& name) {
    if (!j.is_number()) fail(name + " must be a number");
    return j.get<double>();
}

std::string field(const char* prefix, std::size_t index, const std::string& suffix) {
    return std::string(prefix) + "[" + std::to_string(index) + "]" + suffix;
}

BoundarySpec parse_boundary(const json& j, std::size_t index) {
    if (!j.is_array() || j.size() != 5) {
        fail(field("boundaries", index, " must be an array of 5 numbers"));
    }
    for (const auto& element : j) {
        if (!element.is_number()) {
            fail(field("boundaries", index, " must be an array of 5 numbers"));
        }
    }
    BoundarySpec boundary;
    boundary.p0 = {j[0].get<double>(), j[1].get<double>()};
    boundary.p1 = {j[2].get<double>(), j[3].get<double>()};
    boundary.impermeability = j[4].get<double>();
    return boundary;
}

RegionSpec parse_region(const json& j, std::size_t index) {
    if (!j.is_object()) fail(field("regions", index, " must be an object"));
    const auto need = [&](const char* key) -> const json& {
        const auto it = j.find(key);
        if (it == j.end()) fail(field("regions", index, std::string(".") + key + " missing"));
        return *it;
    };
    RegionSpec region;
    const json& id = need("id");
    if (!id.is_string()) fail(field("regions", index, ".id must be a string"));
    region.id = id.get<std::string>();
    region.population = require_count(need("population"), field("regions", index, ".population"));
    region.infected = require_count(need("infected"), field("regions", index, ".infected"));
    const json& center = need("center");
    if (!center.is_array() || center.size() != 2 || !center[0].is_number() || !center[1].is_number()) {
        fail(field("regions", index, ".center must be [x, y]"));
    }
    region.center = {center[0].get<double>(), center[1].get<double>()};
    region.radius = require_number(need("radius"), field("regions", index, ".radius"));
    region.mobility_factor =
        require_number(need("mobilityFactor"), field("regions", index, ".mobilityFactor"));
    return region;
}

DistributionParams parse_distribution(const json& j, const std::string& prefix) {
    DistributionParams params = DistributionParams::disabled();
    bool any = false;
    const auto read = [&](const char* suffix) -> const json* {
        const auto it = j.find(prefix + suffix);
        if (it == j.end()) return nullptr;
        any = true;
        return &*it;
    };
    if (const json* v = read("StartTime")) params.start_time = require_count(*v, prefix + "StartTime");
    if (const json* v = read("Frequency")) params.frequency = require_count(*v, prefix + "Frequency");
    if (const json* v = read("Quantity")) params.quantity = require_count(*v, prefix + "Quantity");
    const json* mechanism = read("Mechanism");
    if (mechanism != nullptr) {
        if (!mechanism->is_string()) fail(prefix + "Mechanism must be a string");
        const auto parsed = parse_mechanism(mechanism->get<std::string>());
        if (!parsed) {
            fail(prefix + "Mechanism unknown: \"" + mechanism->get<std::string>() +
                 "\" (valid: equitable, maximumInfection, maximumUninfected, infectedAndUninfected)");
        }
        params.mechanism = *parsed;
    }
    if (params.quantity > 0 && mechanism == nullptr) {
        fail(prefix + "Mechanism missing (required when " + prefix + "Quantity > 0)");
    }
    if (!any) return DistributionParams::disabled();
    return params;
}

LockdownParams parse_lockdown(const json& j) {
    const auto start = j.find("lockdownStartThreshold");
    const auto end = j.find("lockdownEndThreshold");
    const auto multiplier = j.find("lockdownMobilityMultiplier");
    const int present = int(start != j.end()) + int(end != j.end()) + int(multiplier != j.end());
    if (present == 0) return LockdownParams::disabled();
    if (present != 3) {
        fail("lockdown parameters incomplete: need lockdownStartThreshold, "
             "lockdownEndThreshold, lockdownMobilityMultiplier");
    }
    LockdownParams params;
    params.start_threshold = require_number(*start, "lockdownStartThreshold");
    params.end_threshold = require_number(*end, "lockdownEndThreshold");
    params.mobility_multiplier = require_number(*multiplier, "lockdownMobilityMultiplier");
    params.enabled = true;
    return params;
}

void check_probability(double value, const std::string& name) {
    if (!std::isfinite(value) || value < 0.0 || value > 1.0) fail(name + " out of range");
}

void check_distribution(const DistributionParams& params, const std::string& prefix) {
    if (params.frequency == 0) fail(prefix + "Frequency must be >= 1");
}

}  // namespace

std::string_view to_string(DistributionMechanism mechanism) {
    switch (mechanism) {
        case DistributionMechanism::Equitable: return "equitable";
        case DistributionMechanism::MaximumInfection: return "maximumInfection";
        case DistributionMechanism::MaximumUninfected: return "maximumUninfected";
        case DistributionMechanism::InfectedAndUninfected: return "infectedAndUninfected";
    }
    return "equitable";
}

std::optional<DistributionMechanism> parse_mechanism(std::string_view text) {
    if (text == "equitable") return DistributionMechanism::Equitable;
    if (text == "maximumInfection") return DistributionMechanism::MaximumInfection;
    if (text == "maximumUninfected") return DistributionMechanism::MaximumUninfected;
    if (text == "infectedAndUninfected") return DistributionMechanism::InfectedAndUninfected;
    return std::nullopt;
}

ScenarioConfig parse_scenario(std::string_view json_text) {
    json document;
    try {
        document = json::parse(json_text);
    } catch (const json::parse_error& error) {
        throw ParseError(std::string("JSON parse error: ") + error.what());
    }
    if (!document.is_object()) fail("top-level value must be an object");

    ScenarioConfig config;

    if (const auto it = document.find("boundaries"); it != document.end()) {
        if (!it->is_array()) fail("boundaries must be an array");
        config.boundaries.reserve(it->size());
        for (std::size_t i = 0; i < it->size(); ++i) {
            config.boundaries.push_back(parse_boundary((*it)[i], i));
        }
    }

    const auto regions = document.find("regions");
    if (regions == document.end()) fail("regions missing");
    if (!regions->is_array()) fail("regions must be an array");
    config.regions.reserve(regions->size());
    for (std::size_t i = 0; i < regions->size(); ++i) {
        config.regions.push_back(parse_region((*regions)[i], i));
    }

    if (const auto it = document.find("boundaryThickness"); it != document.end()) {
        config.boundary_thickness = require_number(*it, "boundaryThickness");
    }

    const auto need = [&](const char* key) -> const json& {
        const auto it = document.find(key);
        if (it == document.end()) fail(std::string(key) + " missing");
        return *it;
    };
    config.disease.spread_radius = require_number(need("spreadRadius"), "spreadRadius");
    config.disease.cure_period = require_count(need("curePeriod"), "curePeriod");
    config.disease.kill_probability = require_number(need("killProbability"), "killProbability");
    config.disease.transmission_probability =
        require_number(need("transmissionProbability"), "transmissionProbability");
    if (const auto it = document.find("killCheckInterval"); it != document.end()) {
        config.disease.kill_check_interval = require_count(*it, "killCheckInterval");
    }

    config.lockdown = parse_lockdown(document);
    config.vaccine = parse_distribution(document, "vaccineDistribution");
    config.medicine = parse_distribution(document, "medicineDistribution");

    if (const auto it = document.find("maxSteps"); it != document.end()) {
        config.max_steps = require_count(*it, "maxSteps");
    }

    validate_scenario(config);
    return config;
}

void validate_scenario(const ScenarioConfig& config) {
    for (std::size_t i = 0; i < config.boundaries.size(); ++i) {
        const BoundarySpec& boundary = config.boundaries[i];
        if (!std::isfinite(boundary.p0.x) || !std::isfinite(boundary.p0.y) ||
            !std::isfinite(boundary.p1.x) || !std::isfinite(boundary.p1.y)) {
            fail(field("boundaries", i, " coordinates must be finite"));
        }
        if (boundary.p0 == boundary.p1) fail(field("boundaries", i, ": degenerate segment"));
        if (!std::isfinite(boundary.impermeability) || boundary.impermeability < 0.0 ||
            boundary.impermeability > 1.0) {
            fail(field("boundaries", i, ".impermeability out of range"));
        }
    }

    if (config.regions.empty()) fail("regions: at least one region required");
    std::unordered_map<std::string, std::size_t> seen_ids;
    for (std::size_t i = 0; i < config.regions.size(); ++i) {
        const RegionSpec& region = config.regions[i];
        if (region.id == "ALL") fail(field("regions", i, ".id must not be \"ALL\""));
        const auto [it, inserted] = seen_ids.emplace(region.id, i);
        if (!inserted) {
            fail(field("regions", i, ".id duplicates ") + "regions[" +
                 std::to_string(it->second) + "].id");
        }
        if (region.infected > region.population) {
            fail(field("regions", i, ": infected exceeds population"));
        }
        if (!std::isfinite(region.center.x) || !std::isfinite(region.center.y)) {
            fail(field("regions", i, ".center must be finite"));
        }
        if (!std::isfinite(region.radius) || region.radius <= 0.0) {
            fail(field("regions", i, ".radius must be > 0"));
        }
        if (!std::isfinite(region.mobility_factor) || region.mobility_factor <= 0.0) {
            fail(field("regions", i, ".mobilityFactor must be > 0"));
        }
    }
    if (config.total_population() == 0) fail("total population must be at least 1");

    if (!std::isfinite(config.boundary_thickness) || config.boundary_thickness < 0.0) {
        fail("boundaryThickness must be >= 0");
    }
    if (!std::isfinite(config.disease.spread_radius) || config.disease.spread_radius <= 0.0) {
        fail("spreadRadius must be > 0");
    }
    check_probability(config.disease.transmission_probability, "transmissionProbability");
    check_probability(config.disease.kill_probability, "killProbability");
    if (config.disease.cure_period == 0) fail("curePeriod must be >= 1");
    if (config.disease.kill_check_interval == 0) fail("killCheckInterval must be >= 1");

    if (config.lockdown.enabled) {
        check_probability(config.lockdown.start_threshold, "lockdownStartThreshold");
        check_probability(config.lockdown.end_threshold, "lockdownEndThreshold");
        if (config.lockdown.end_threshold > config.lockdown.start_threshold) {
            fail("lockdownEndThreshold exceeds lockdownStartThreshold");
        }
        check_probability(config.lockdown.mobility_multiplier, "lockdownMobilityMultiplier");
    }
    check_distribution(config.vaccine, "vaccineDistribution");
    check_distribution(config.medicine, "medicineDistribution");

    if (config.max_steps == 0) fail("maxSteps must be >= 1");
}

std::string write_scenario(const ScenarioConfig& config) {
    ordered_json document;

    ordered_json boundaries = ordered_json::array();
    for (const BoundarySpec& boundary : config.boundaries) {
        boundaries.push_back({boundary.p0.x, boundary.p0.y, boundary.p1.x, boundary.p1.y,
                              boundary.impermeability});
    }
    document["boundaries"] = std::move(boundaries);

    ordered_json regions = ordered_json::array();
    for (const RegionSpec& region : config.regions) {
        ordered_json entry;
        entry["id"] = region.id;
        entry["population"] = region.population;
        entry["infected"] = region.infected;
        entry["center"] = {region.center.x, region.center.y};
        entry["radius"] = region.radius;
        entry["mobilityFactor"] = region.mobility_factor;
        regions.push_back(std::move(entry));
    }
    document["regions"] = std::move(regions);

    document["boundaryThickness"] = config.boundary_thickness;
    document["spreadRadius"] = config.disease.spread_radius;
    document["curePeriod"] = config.disease.cure_period;
    document["killProbability"] = config.disease.kill_probability;
    document["transmissionProbability"] = config.disease.transmission_probability;
    if (config.disease.kill_check_interval != 1) {
        document["killCheckInterval"] = config.disease.kill_check_interval;
    }
    if (config.lockdown.enabled) {
        document["lockdownStartThreshold"] = config.lockdown.start_threshold;
        document["lockdownEndThreshold"] = config.lockdown.end_threshold;
        document["lockdownMobilityMultiplier"] = config.lockdown.mobility_multiplier;
    }
    const auto write_distribution = [&](const DistributionParams& params, const char* prefix) {
        if (params == DistributionParams::disabled()) return;
        document[std::string(prefix) + "StartTime"] = params.start_time;
        document[std::string(prefix) + "Frequency"] = params.frequency;
        document[std::string(prefix) + "Quantity"] = params.quantity;
        document[std::string(prefix) + "Mechanism"] = std::string(to_string(params.mechanism));
    };
    write_distribution(config.vaccine, "vaccineDistribution");
    write_distribution(config.medicine, "medicineDistribution");
    if (config.max_steps != kDefaultMaxSteps) document["maxSteps"] = config.max_steps;

    return document.dump(2) + "\n";
}

}  // namespace hexplace

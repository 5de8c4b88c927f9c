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
#include "presets.hpp"

#include <array>

namespace hexplace {

namespace {

constexpr std::array<std::string_view, 11> kPresetNames = {
    "baseline",
    "lockdown",
    "vaccine_equitable",
    "vaccine_maximumInfection",
    "vaccine_maximumUninfected",
    "vaccine_infectedAndUninfected",
    "medicine_equitable",
    "medicine_maximumInfection",
    "medicine_maximumUninfected",
    "medicine_infectedAndUninfected",
    "combined",
};

LockdownParams standard_lockdown() {
    LockdownParams params;
    params.start_threshold = 0.1;
    params.end_threshold = 0.02;
    params.mobility_multiplier = 0.1;
    params.enabled = true;
    return params;
}

DistributionParams standard_distribution(DistributionMechanism mechanism) {
    DistributionParams params;
    params.start_time = 300;
    params.frequency = 100;
    params.quantity = 200;
    params.mechanism = mechanism;
    return params;
}

}  // namespace

HierarchyTable default_hierarchy_table() {
    HierarchyTable table;
    table.city = {750, 5, 1.0};
    table.town = {100, 5, 3.0};
    table.village = {15, 1, 5.0};
    return table;
}

PairImpermeability default_impermeability_table() {
    PairImpermeability table;
    table.set(Hierarchy::City, Hierarchy::Village, 0.7);
    table.set(Hierarchy::Town, Hierarchy::Village, 0.8);
    table.set(Hierarchy::Village, Hierarchy::Village, 1.0);
    return table;
}

std::span<const std::string_view> preset_names() { return kPresetNames; }

std::optional<ScenarioConfig> make_preset(std::string_view name) {
    ScenarioConfig config = generate_hex_scenario(kDefaultCellCircumradius,
                                                  default_hierarchy_table(),
                                                  default_impermeability_table());
    if (name == "baseline") return config;
    if (name == "lockdown") {
        config.lockdown = standard_lockdown();
        return config;
    }
    if (name == "combined") {
        config.lockdown = standard_lockdown();
        config.vaccine = standard_distribution(DistributionMechanism::InfectedAndUninfected);
        config.medicine = standard_distribution(DistributionMechanism::MaximumInfection);
        return config;
    }
    constexpr std::string_view vaccine_prefix = "vaccine_";
    constexpr std::string_view medicine_prefix = "medicine_";
    if (name.starts_with(vaccine_prefix)) {
        const auto mechanism = parse_mechanism(name.substr(vaccine_prefix.size()));
        if (!mechanism) return std::nullopt;
        config.vaccine = standard_distribution(*mechanism);
        return config;
    }
    if (name.starts_with(medicine_prefix)) {
        const auto mechanism = parse_mechanism(name.substr(medicine_prefix.size()));
        if (!mechanism) return std::nullopt;
        config.medicine = standard_distribution(*mechanism);
        return config;
    }
    return std::nullopt;
}

}  // namespace hexplace

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

#include <optional>
#include <span>
#include <string_view>

#include "hex_grid.hpp"
#include "scenario.hpp"

namespace hexplace {

// Named honeycomb scenarios. All share the standard 19-cell layout
// (city 750/5 movers at speed 1, towns 100/5 at speed 3, villages 15/1 at
// speed 5; city-village walls 0.7, town-village 0.8, village walls solid)
// and differ only in which interventions are switched on:
//
//   baseline                           no interventions
//   lockdown                           hysteresis lockdown 0.10 / 0.02, speed x0.1
//   vaccine_<mechanism>                vaccine doses, 200 every 100 steps from step 300
//   medicine_<mechanism>               medicine doses, same schedule
//   combined                           lockdown + vaccine infectedAndUninfected
//                                      + medicine maximumInfection
//
// <mechanism> is one of equitable, maximumInfection, maximumUninfected,
// infectedAndUninfected.
std::span<const std::string_view> preset_names();

// Returns the named scenario, or nullopt for an unknown name.
std::optional<ScenarioConfig> make_preset(std::string_view name);

// The shared layout tables, exposed for tests and custom variants.
HierarchyTable default_hierarchy_table();
PairImpermeability default_impermeability_table();

}  // namespace hexplace

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
#include <map>
#include <utility>

#include "scenario.hpp"

namespace hexplace {

// Settlement tiers of the honeycomb layout. The 19-cell grid places the city
// in the center, towns on the six corners of the outer ring, and villages
// everywhere else (the inner ring and the outer ring's edge cells).
enum class Hierarchy { City, Town, Village };

struct HierarchySettings {
    std::uint64_t population = 0;
    std::uint64_t infected = 0;
    double mobility_factor = 1.0;
};

struct HierarchyTable {
    HierarchySettings city;
    HierarchySettings town;
    HierarchySettings village;

    const HierarchySettings& of(Hierarchy h) const {
        switch (h) {
            case Hierarchy::City: return city;
            case Hierarchy::Town: return town;
            default: return village;
        }
    }
};

// Impermeability per unordered pair of tiers. Pairs that were never set
// resolve to 1.0, so unlisted adjacencies and the outer perimeter are solid.
class PairImpermeability {
  public:
    void set(Hierarchy a, Hierarchy b, double value) {
        values_[key(a, b)] = value;
    }

    double lookup(Hierarchy a, Hierarchy b) const {
        const auto it = values_.find(key(a, b));
        return it == values_.end() ? 1.0 : it->second;
    }

  private:
    static std::pair<int, int> key(Hierarchy a, Hierarchy b) {
        int x = static_cast<int>(a);
        int y = static_cast<int>(b);
        if (x > y) std::swap(x, y);
        return {x, y};
    }

    std::map<std::pair<int, int>, double> values_;
};

// Builds the 19-cell honeycomb scenario: one region per cell (circular spawn
// area inscribed in the hexagon, radius 0.95 of the apothem) and one boundary
// per unique hexagon edge. Shared edges are emitted exactly once, giving
// 72 boundary segments (42 interior and 30 on the perimeter). The grid is
// centered at the origin. Disease parameters take the library defaults;
// lockdown and dose schedules start disabled.
ScenarioConfig generate_hex_scenario(double cell_circumradius,
                                     const HierarchyTable& hierarchy,
                                     const PairImpermeability& impermeability);

inline constexpr double kDefaultCellCircumradius = 60.0;

}  // namespace hexplace

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
#include "hex_grid.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

namespace hexplace {

namespace {

// Axial coordinates, flat-top orientation. Direction k points at the
// neighbor across the edge between vertices k and k+1.
struct Cell {
    int q = 0;
    int r = 0;

    bool operator==(const Cell&) const = default;
};

constexpr std::array<Cell, 6> kDirections = {{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

int hex_distance(Cell c) {
    return (std::abs(c.q) + std::abs(c.r) + std::abs(c.q + c.r)) / 2;
}

bool is_ring_corner(Cell c, int ring) {
    for (const Cell& direction : kDirections) {
        if (c.q == direction.q * ring && c.r == direction.r * ring) return true;
    }
    return false;
}

Hierarchy tier_of(Cell c) {
    const int ring = hex_distance(c);
    if (ring == 0) return Hierarchy::City;
    if (ring == 2 && is_ring_corner(c, 2)) return Hierarchy::Town;
    return Hierarchy::Village;
}

}  // namespace

ScenarioConfig generate_hex_scenario(double cell_circumradius,
                                     const HierarchyTable& hierarchy,
                                     const PairImpermeability& impermeability) {
    const double radius = cell_circumradius;
    const double half = 0.5 * radius;
    const double apothem = std::sqrt(3.0) * 0.5 * radius;

    // Vertex offsets from a cell center, counterclockwise from the +x axis.
    const std::array<Vec2, 6> vertex = {{{radius, 0.0},
                                         {half, apothem},
                                         {-half, apothem},
                                         {-radius, 0.0},
                                         {-half, -apothem},
                                         {half, -apothem}}};

    std::vector<Cell> cells;
    for (int q = -2; q <= 2; ++q) {
        for (int r = -2; r <= 2; ++r) {
            if (hex_distance({q, r}) <= 2) cells.push_back({q, r});
        }
    }
    std::sort(cells.begin(), cells.end(), [](Cell a, Cell b) {
        const int ring_a = hex_distance(a);
        const int ring_b = hex_distance(b);
        if (ring_a != ring_b) return ring_a < ring_b;
        if (a.q != b.q) return a.q < b.q;
        return a.r < b.r;
    });

    const auto center_of = [&](Cell c) -> Vec2 {
        return {1.5 * radius * c.q, std::sqrt(3.0) * radius * (c.r + 0.5 * c.q)};
    };
    const auto in_grid = [&](Cell c) { return hex_distance(c) <= 2; };

    ScenarioConfig config;
    config.boundary_thickness = 1.0;

    int towns = 0;
    int villages = 0;
    for (const Cell& cell : cells) {
        const Hierarchy tier = tier_of(cell);
        const HierarchySettings& settings = hierarchy.of(tier);
        RegionSpec region;
        switch (tier) {
            case Hierarchy::City: region.id = "city"; break;
            case Hierarchy::Town: region.id = "town-" + std::to_string(++towns); break;
            case Hierarchy::Village: region.id = "village-" + std::to_string(++villages); break;
        }
        region.population = settings.population;
        region.infected = settings.infected;
        region.center = center_of(cell);
        region.radius = apothem * 0.95;
        region.mobility_factor = settings.mobility_factor;
        config.regions.push_back(std::move(region));
    }

    // Each interior edge is shared by two cells; the copy owned by the
    // lexicographically smaller cell is the one emitted, so every unique edge
    // appears exactly once and with a single coordinate derivation.
    for (const Cell& cell : cells) {
        const Vec2 center = center_of(cell);
        for (int k = 0; k < 6; ++k) {
            const Cell neighbor{cell.q + kDirections[k].q, cell.r + kDirections[k].r};
            BoundarySpec boundary;
            boundary.p0 = center + vertex[k];
            boundary.p1 = center + vertex[(k + 1) % 6];
            if (in_grid(neighbor)) {
                if (std::pair(neighbor.q, neighbor.r) < std::pair(cell.q, cell.r)) continue;
                boundary.impermeability = impermeability.lookup(tier_of(cell), tier_of(neighbor));
            } else {
                boundary.impermeability = 1.0;
            }
            config.boundaries.push_back(boundary);
        }
    }

    validate_scenario(config);
    return config;
}

}  // namespace hexplace

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

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "presets.hpp"
#include "scenario.hpp"

using namespace hexplace;

namespace {

ScenarioConfig standard_grid() {
    return generate_hex_scenario(kDefaultCellCircumradius, default_hierarchy_table(),
                                 default_impermeability_table());
}

// Undirected edge key on coordinates quantized to a fine lattice, so edges
// emitted from different cells still compare equal.
using EdgeKey = std::array<std::int64_t, 4>;

EdgeKey edge_key(Vec2 a, Vec2 b) {
    const auto quantize = [](double v) { return std::llround(v * 1e6); };
    std::array<std::int64_t, 2> p{quantize(a.x), quantize(a.y)};
    std::array<std::int64_t, 2> q{quantize(b.x), quantize(b.y)};
    if (q < p) std::swap(p, q);
    return {p[0], p[1], q[0], q[1]};
}

}  // namespace

TEST_CASE("honeycomb region roster") {
    const ScenarioConfig config = standard_grid();
    REQUIRE(config.regions.size() == 19);

    std::uint64_t population = 0;
    std::uint64_t infected = 0;
    int cities = 0, towns = 0, villages = 0;
    for (const RegionSpec& region : config.regions) {
        population += region.population;
        infected += region.infected;
        if (region.id == "city") ++cities;
        if (region.id.starts_with("town-")) ++towns;
        if (region.id.starts_with("village-")) ++villages;
    }
    CHECK(population == 1530);
    CHECK(infected == 47);  // 5 + 6*5 + 12*1
    CHECK(cities == 1);
    CHECK(towns == 6);
    CHECK(villages == 12);

    CHECK(config.regions[0].id == "city");
    CHECK(config.regions[0].center == Vec2{0.0, 0.0});
    CHECK(config.regions[0].population == 750);
    CHECK(config.regions[0].mobility_factor == 1.0);

    // Spawn circles are inscribed in the cells with a safety margin.
    const double apothem = std::sqrt(3.0) * 0.5 * kDefaultCellCircumradius;
    for (const RegionSpec& region : config.regions) {
        CHECK(region.radius == doctest::Approx(apothem * 0.95));
    }
}

TEST_CASE("honeycomb tier placement") {
    const ScenarioConfig config = standard_grid();
    // Towns sit at the six ring-2 corners: axial 2*d for each direction d.
    const std::array<std::pair<int, int>, 6> corners = {
        {{2, 0}, {0, 2}, {-2, 2}, {-2, 0}, {0, -2}, {2, -2}}};
    std::set<EdgeKey> town_centers;  // reuse the quantizer for point matching
    for (const RegionSpec& region : config.regions) {
        if (region.id.starts_with("town-")) {
            town_centers.insert(edge_key(region.center, region.center));
        }
    }
    const double radius = kDefaultCellCircumradius;
    int matched = 0;
    for (const auto& [q, r] : corners) {
        const Vec2 center{1.5 * radius * q, std::sqrt(3.0) * radius * (r + 0.5 * q)};
        if (town_centers.contains(edge_key(center, center))) ++matched;
    }
    CHECK(matched == 6);

    // Ring-1 cells are villages: all six cells adjacent to the city.
    std::set<EdgeKey> village_centers;
    for (const RegionSpec& region : config.regions) {
        if (region.id.starts_with("village-")) {
            village_centers.insert(edge_key(region.center, region.center));
        }
    }
    const std::array<std::pair<int, int>, 6> ring1 = {
        {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};
    int ring1_villages = 0;
    for (const auto& [q, r] : ring1) {
        const Vec2 center{1.5 * radius * q, std::sqrt(3.0) * radius * (r + 0.5 * q)};
        if (village_centers.contains(edge_key(center, center))) ++ring1_villages;
    }
    CHECK(ring1_villages == 6);
}

TEST_CASE("honeycomb edge deduplication against brute-force oracle") {
    const ScenarioConfig config = standard_grid();
    REQUIRE(config.boundaries.size() == 72);

    // No two emitted segments share an endpoint pair in either orientation.
    std::set<EdgeKey> emitted;
    for (const BoundarySpec& boundary : config.boundaries) {
        const auto [it, inserted] = emitted.insert(edge_key(boundary.p0, boundary.p1));
        CHECK(inserted);
    }

    // Brute-force oracle: rasterize all 19 cells x 6 edges and deduplicate
    // by quantized endpoints. The emitted set must match it exactly.
    const double radius = kDefaultCellCircumradius;
    const double half = 0.5 * radius;
    const double apothem = std::sqrt(3.0) * 0.5 * radius;
    const std::array<Vec2, 6> vertex = {{{radius, 0.0},
                                         {half, apothem},
                                         {-half, apothem},
                                         {-radius, 0.0},
                                         {-half, -apothem},
                                         {half, -apothem}}};
    std::map<EdgeKey, int> raw;  // key -> number of cells sharing the edge
    int cell_count = 0;
    for (int q = -2; q <= 2; ++q) {
        for (int r = -2; r <= 2; ++r) {
            if ((std::abs(q) + std::abs(r) + std::abs(q + r)) / 2 > 2) continue;
            ++cell_count;
            const Vec2 center{1.5 * radius * q, std::sqrt(3.0) * radius * (r + 0.5 * q)};
            for (int k = 0; k < 6; ++k) {
                ++raw[edge_key(center + vertex[k], center + vertex[(k + 1) % 6])];
            }
        }
    }
    CHECK(cell_count == 19);
    CHECK(raw.size() == 72);

    int shared = 0, perimeter = 0;
    for (const auto& [key, owners] : raw) {
        REQUIRE(owners <= 2);
        if (owners == 2) ++shared;
        if (owners == 1) ++perimeter;
        CHECK(emitted.contains(key));
    }
    CHECK(shared == 42);
    CHECK(perimeter == 30);
}

TEST_CASE("honeycomb impermeability classes") {
    const ScenarioConfig config = standard_grid();
    std::map<double, int> classes;
    for (const BoundarySpec& boundary : config.boundaries) {
        ++classes[boundary.impermeability];
    }
    // 6 city-village edges, 18 town-village edges, and 48 solid walls
    // (18 village-village plus the 30-segment perimeter).
    CHECK(classes[0.7] == 6);
    CHECK(classes[0.8] == 18);
    CHECK(classes[1.0] == 48);
    CHECK(classes.size() == 3);
}

TEST_CASE("hex generator is deterministic") {
    CHECK(standard_grid() == standard_grid());
}

TEST_CASE("hex generator population conservation for custom tables") {
    HierarchyTable table;
    table.city = {123, 7, 2.0};
    table.town = {45, 3, 1.5};
    table.village = {9, 1, 4.0};
    const ScenarioConfig config =
        generate_hex_scenario(25.0, table, default_impermeability_table());
    CHECK(config.total_population() == 123 + 6 * 45 + 12 * 9);
    validate_scenario(config);  // must not throw
}

TEST_CASE("unlisted hierarchy pairs default to solid walls") {
    PairImpermeability table;  // empty: everything resolves to 1.0
    const ScenarioConfig config =
        generate_hex_scenario(kDefaultCellCircumradius, default_hierarchy_table(), table);
    for (const BoundarySpec& boundary : config.boundaries) {
        CHECK(boundary.impermeability == 1.0);
    }
}

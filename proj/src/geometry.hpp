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

#include <cstddef>
#include <optional>
#include <span>

#include "scenario.hpp"
#include "vec2.hpp"

namespace hexplace {

struct SegmentHit {
    Vec2 point;
    // Parameter along the first segment, in (0, 1].
    double t = 0.0;
};

// Proper intersection of segments a0->a1 and b0->b1.
//
// Returns the crossing point and its parameter t along a0->a1. A hit at
// t == 0 (first segment starting exactly on the other segment) is ignored,
// which keeps a mover that just resolved a boundary event from re-colliding
// with the same line forever. Parallel and collinear overlaps return nullopt:
// sliding along a wall is not a crossing.
std::optional<SegmentHit> segment_intersection(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1);

// Specular reflection of velocity v off a wall with direction boundary_dir:
// v - 2 (v . n) n for the unit normal n. Preserves |v| and is an involution.
Vec2 reflect_velocity(Vec2 v, Vec2 boundary_dir);

// Index of the region whose center is nearest to p. Ties break toward the
// lowest index. regions must be non-empty.
std::size_t nearest_region(Vec2 p, std::span<const RegionSpec> regions);

}  // namespace hexplace

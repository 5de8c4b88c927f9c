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
#include "geometry.hpp"

namespace hexplace {

std::optional<SegmentHit> segment_intersection(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1) {
    const Vec2 d = a1 - a0;
    const Vec2 e = b1 - b0;
    const double denominator = cross(d, e);
    if (denominator == 0.0) return std::nullopt;
    const Vec2 offset = b0 - a0;
    const double t = cross(offset, e) / denominator;
    const double u = cross(offset, d) / denominator;
    if (t <= 0.0 || t > 1.0 || u < 0.0 || u > 1.0) return std::nullopt;
    return SegmentHit{a0 + t * d, t};
}

Vec2 reflect_velocity(Vec2 v, Vec2 boundary_dir) {
    const Vec2 normal = normalized(perp(boundary_dir));
    return v - 2.0 * dot(v, normal) * normal;
}

std::size_t nearest_region(Vec2 p, std::span<const RegionSpec> regions) {
    std::size_t best = 0;
    double best_distance = distance_squared(p, regions[0].center);
    for (std::size_t i = 1; i < regions.size(); ++i) {
        const double d = distance_squared(p, regions[i].center);
        if (d < best_distance) {
            best_distance = d;
            best = i;
        }
    }
    return best;
}

}  // namespace hexplace

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
#include "neighbor_index.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace hexplace {

namespace {

std::int64_t cell_coord(double value, double cell_size) {
    return static_cast<std::int64_t>(std::floor(value / cell_size));
}

std::uint64_t pack(std::int64_t cx, std::int64_t cy) {
    // Low 32 bits of each coordinate; positions span far fewer cells.
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(cx)) << 32) |
           static_cast<std::uint64_t>(static_cast<std::uint32_t>(cy));
}

}  // namespace

NeighborIndex::NeighborIndex(std::span<const IndexedPoint> points, double cell_size)
    : cell_size_(cell_size), points_(points.begin(), points.end()) {
    assert(cell_size > 0.0);
    buckets_.reserve(points_.size());
    for (std::uint32_t i = 0; i < points_.size(); ++i) {
        buckets_[bucket_key(points_[i].position)].push_back(i);
    }
}

std::uint64_t NeighborIndex::bucket_key(Vec2 position) const {
    return pack(cell_coord(position.x, cell_size_), cell_coord(position.y, cell_size_));
}

void NeighborIndex::query_into(Vec2 center, double radius,
                               std::vector<std::uint64_t>& out) const {
    assert(radius <= cell_size_);
    out.clear();
    const std::int64_t cx = cell_coord(center.x, cell_size_);
    const std::int64_t cy = cell_coord(center.y, cell_size_);
    const double radius_squared = radius * radius;
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
        for (std::int64_t dy = -1; dy <= 1; ++dy) {
            const auto it = buckets_.find(pack(cx + dx, cy + dy));
            if (it == buckets_.end()) continue;
            for (const std::uint32_t i : it->second) {
                if (distance_squared(points_[i].position, center) <= radius_squared) {
                    out.push_back(points_[i].id);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
}

std::vector<std::uint64_t> NeighborIndex::query(Vec2 center, double radius) const {
    std::vector<std::uint64_t> out;
    query_into(center, radius, out);
    return out;
}

std::vector<std::uint64_t> naive_radius_oracle(std::span<const IndexedPoint> points,
                                               Vec2 center, double radius) {
    std::vector<std::uint64_t> out;
    const double radius_squared = radius * radius;
    for (const IndexedPoint& point : points) {
        if (distance_squared(point.position, center) <= radius_squared) {
            out.push_back(point.id);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hexplace

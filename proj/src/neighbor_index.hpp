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
#include <span>
#include <unordered_map>
#include <vector>

#include "vec2.hpp"

namespace hexplace {

struct IndexedPoint {
    std::uint64_t id = 0;
    Vec2 position;
};

// Uniform-grid point index for fixed-radius neighbor queries.
//
// Points are bucketed by floor(position / cell_size). A query with
// radius <= cell_size only ever needs the 3x3 block of buckets around the
// query point, so the scan is independent of the total point count as long
// as local density is bounded.
class NeighborIndex {
  public:
    NeighborIndex(std::span<const IndexedPoint> points, double cell_size);

    // Ids of all indexed points with distance(position, center) <= radius,
    // ascending. Requires radius <= cell_size().
    std::vector<std::uint64_t> query(Vec2 center, double radius) const;

    // Same query writing into a caller-owned buffer; out is cleared first.
    void query_into(Vec2 center, double radius, std::vector<std::uint64_t>& out) const;

    double cell_size() const { return cell_size_; }
    std::size_t size() const { return points_.size(); }

  private:
    std::uint64_t bucket_key(Vec2 position) const;

    double cell_size_ = 1.0;
    std::vector<IndexedPoint> points_;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets_;
};

// Reference implementation used to cross-check the grid: a direct scan of
// the point list. Keep it free of any indexing logic.
std::vector<std::uint64_t> naive_radius_oracle(std::span<const IndexedPoint> points,
                                               Vec2 center, double radius);

}  // namespace hexplace

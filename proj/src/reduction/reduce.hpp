#pragma once

#include <vector>

#include "core/network.hpp"

namespace corridor {

// Corridor with every false bottleneck merged away. Surviving bottlenecks keep
// their capacities; each absorbs the demands of the screened-out origins
// directly upstream of it, up to the next survivor.
struct ReducedNetwork {
    CorridorNetwork network;
    std::vector<int> survivors;                  // reduced index -> original bottleneck index
    std::vector<std::vector<int>> origin_map;    // reduced index -> merged original origins
    std::vector<int> false_bottlenecks;          // original indices screened out

    int size() const { return network.size(); }
    // Reduced origin that original origin `i` was merged into.
    int reduced_index_of(int original) const;
};

// Upstream-to-downstream screening sweep. While a bottleneck's normalized
// demand is at least its upstream neighbour's, the neighbour is false and is
// merged downstream; a neighbour whose capacity is not strictly smaller is
// false outright. O(N), idempotent.
ReducedNetwork reduce(const CorridorNetwork& net);

// Normalized demands of the surviving bottlenecks, in reduced indexing:
// merged demand divided by the capacity drop to the next survivor (plain
// capacity for the most-upstream survivor). Strictly increasing upstream.
std::vector<double> normalized_demands(const CorridorNetwork& net);

bool is_reduced(const CorridorNetwork& net);

}  // namespace corridor

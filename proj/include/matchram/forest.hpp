#pragma once

#include <cstdint>
#include <vector>

#include "matchram/graph.hpp"

namespace matchram {

/// Forest with per-vertex non-negative integer weights. Rational weights are
/// supported by scaling to a common denominator; every comparison below is
/// exact integer arithmetic.
struct WeightedForest {
  Graph graph;
  std::vector<std::int64_t> weight;
};

/// A vertex whose removal leaves components of weight at most half the total.
/// Found by the descent walk: start anywhere in the heaviest component and
/// step into the heaviest remaining component until it weighs at most half.
int weighted_centroid(const WeightedForest& forest);

/// Given positive values with each s_i <= 2*total/3, returns indices whose
/// sum lands in [total/3, 2*total/3]: a single large element if one exists,
/// otherwise the shortest prefix reaching total/3.
std::vector<std::size_t> balanced_subset(const std::vector<std::int64_t>& s);

}  // namespace matchram

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "modsub/counting.hpp"
#include "modsub/graph.hpp"

namespace modsub {

// Brute-force ground truth on small sizes, independent of the recurrences
// and the moves: every a-structure crossed with every b-structure, kept when
// connected. Used to pin down counting and to give the samplers a universe
// to be tested against.

// Calls fn once per labeled cyclically reduced graph of size n, in a fixed
// deterministic order. 1 <= n <= 8; the n = 7 and 8 universes run to
// millions of graphs, so visit them instead of materializing.
void for_each_cyclically_reduced(int n, const std::function<void(const Graph&)>& fn);

// Same for labeled rooted reduced graphs: every cyclically reduced graph
// rooted at every vertex, plus every graph with one designated a- or b-loop
// deleted and its vertex rooted. For n = 1, the four one-vertex subgroup
// graphs.
void for_each_reduced(int n, const std::function<void(const Graph&)>& fn);

// Materialized variants for small n.
std::vector<Graph> enumerate_cyclically_reduced(int n);
std::vector<Graph> enumerate_reduced(int n);

// The enumerations bucketed by combinatorial type.
std::map<CombinatorialType, BigCount> count_by_type(int n);
std::map<CombinatorialType, BigCount> count_reduced_by_type(int n);

// Pearson statistic of the bins against the uniform null, with the upper
// tail of the chi-square distribution on bins.size() - 1 degrees of freedom.
// Needs at least two bins and at least one observation.
struct ChiSquare {
    double statistic;
    double p_value;
};
ChiSquare chi_square_uniform(const std::vector<std::uint64_t>& bins);

} // namespace modsub

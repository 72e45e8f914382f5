#pragma once

#include <functional>
#include <vector>

#include "modsub/moves.hpp"

namespace modsub {

// A silhouette graph is Delta1 on {1}, the preferred Delta2, or a normalized
// graph of type (n, n/2, 0, 0, 0) with n a positive multiple of 6.
bool is_silhouette_graph(const Graph& g);

// Rewrites g with contraction moves until none applies, then normalizes.
// The result is independent of the order moves were applied in; the default
// strategy always takes the first enumerated move. Requires a normalized,
// unrooted, cyclically reduced graph. The applied moves (in pre-move vertex
// labels) are appended to *trace when given.
Graph silhouette(const Graph& g, std::vector<Move>* trace = nullptr);

// Same rewrite, but each step picks the move at index choose(k) among the
// k currently applicable ones. Exists so order-independence is testable.
Graph silhouette_with_choice(const Graph& g,
                             const std::function<std::size_t(std::size_t)>& choose,
                             std::vector<Move>* trace = nullptr);

} // namespace modsub

#include "modsub/silhouette.hpp"

namespace modsub {

bool is_silhouette_graph(const Graph& g) {
    if (!g.is_normalized() || g.root()) return false;
    CombinatorialType t = g.combinatorial_type();
    if (t == CombinatorialType{1, 0, 0, 1, 1}) return true;
    if (t == CombinatorialType{2, 1, 1, 0, 0})
        return g.b_next(1) == std::optional<Label>(2); // preferred labeling only
    return t.n >= 6 && t.n % 6 == 0 && t.k2 * 2 == t.n && t.k3 == 0 && t.l2 == 0 &&
           t.l3 == 0 && g.is_connected();
}

Graph silhouette_with_choice(const Graph& g,
                             const std::function<std::size_t(std::size_t)>& choose,
                             std::vector<Move>* trace) {
    if (g.root()) throw PreconditionError("silhouette: graph must be unrooted");
    if (!g.is_normalized()) throw PreconditionError("silhouette: graph must be normalized");
    if (!g.is_cyclically_reduced())
        throw PreconditionError("silhouette: graph must be cyclically reduced");
    Graph cur = g;
    while (true) {
        std::vector<Move> moves = enumerate_moves(cur);
        if (moves.empty()) break;
        std::size_t i = choose(moves.size());
        if (i >= moves.size())
            throw PreconditionError("silhouette: move choice out of range");
        if (trace) trace->push_back(moves[i]);
        cur = apply_move(cur, moves[i]);
    }
    return cur.normalized();
}

Graph silhouette(const Graph& g, std::vector<Move>* trace) {
    return silhouette_with_choice(
        g, [](std::size_t) { return std::size_t{0}; }, trace);
}

} // namespace modsub

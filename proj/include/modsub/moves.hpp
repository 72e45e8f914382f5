#pragma once

#include <string>
#include <variant>
#include <vector>

#include "modsub/graph.hpp"

namespace modsub {

// Contraction moves on cyclically reduced graphs. Each move removes one or
// two vertices (the exceptional ones only relabel or collapse a terminal
// two-vertex graph) and each is invertible by the matching expansion below.

struct Lambda3Move { // b-loop at v, isolated a-edge {v,w}
    Label v, w;
};
struct Lambda21Move { // a-loop at v sitting on a b-triangle; wprime = b-successor
    Label v, wprime;
};
struct Lambda22Move { // a-loop at v, isolated b-edge v<->w, isolated a-edge {w,wprime}
    Label v, w, wprime;
    int eps; // +1: arc v->w, -1: arc w->v
};
struct Kappa3Move { // isolated b-edge v->w, isolated a-edges {v,vprime}, {w,wprime}
    Label v, w, vprime, wprime;
};
enum class ExcKind {
    Delta1Relabel, // Delta1 off {1} -> Delta1 on {1}
    Delta3Collapse, // Delta3 -> Delta1 on {1}
    Delta2Relabel, // non-preferred Delta2 -> b-arc 1->2 on {1,2}
};
struct ExceptionalMove {
    ExcKind kind;
};

using Move = std::variant<Lambda3Move, Lambda21Move, Lambda22Move, Kappa3Move, ExceptionalMove>;

std::string move_str(const Move& m);

// Type deltas realized by the moves (exceptional relabelings are 0).
inline constexpr TypeDelta kDeltaLambda3{-1, -1, 0, +1, -1};
inline constexpr TypeDelta kDeltaLambda21{-1, 0, +1, -1, 0};
inline constexpr TypeDelta kDeltaLambda22{-2, -1, -1, 0, 0};
inline constexpr TypeDelta kDeltaKappa3{-2, -1, -1, 0, 0};
inline constexpr TypeDelta kDeltaDelta3Collapse{-1, 0, -1, -1, +1};

// Preconditions are checked and violations raise PreconditionError; all
// functions require an unrooted graph.
Graph apply_lambda3(const Graph& g, Label v, Label w);
Graph apply_lambda21(const Graph& g, Label v);
Graph apply_lambda22(const Graph& g, Label v, Label w, Label wprime);
Graph apply_kappa3(const Graph& g, Label v, Label w, Label vprime, Label wprime);
Graph apply_exceptional(const Graph& g);
Graph apply_move(const Graph& g, const Move& m);

// All moves applicable to g, in the order the deterministic rewriting
// strategy consumes them: lambda3 by loop vertex, then the lambda2 family by
// loop vertex, then kappa3 by arc source, then the exceptional move.
std::vector<Move> enumerate_moves(const Graph& g);

// Label shifts used by the expansions: the order-preserving embeddings of
// {1..m} into {1..m+1} minus {v}, resp. {1..m+2} minus {v,w}.
Label shift1(Label x, Label v);
Label shift2(Label x, Label v, Label w);

// Expansions: inverse bijections of the contractions. Inputs must be
// normalized; outputs are normalized. New vertices take the given labels,
// old ones are shifted out of the way.
Graph expand_lambda3(const Graph& d, Label aloop_at, Label v);
Graph expand_lambda21(const Graph& d, Label bedge_from, Label v);
Graph expand_lambda22(const Graph& d, Label aloop_at, Label v, Label w, int eps);
Graph expand_kappa3(const Graph& d, std::pair<Label, Label> aedge, Label v, Label w, int eps);

} // namespace modsub

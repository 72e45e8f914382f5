#include "modsub/moves.hpp"

#include <algorithm>
#include <sstream>

namespace modsub {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw PreconditionError(std::string("move: ") + msg);
}

void require_unrooted(const Graph& g) {
    require(!g.root().has_value(), "graph must be unrooted");
}

void require_expansion_base(const Graph& d) {
    require(!d.root().has_value(), "expansion base must be unrooted");
    require(d.is_normalized(), "expansion base must be normalized");
}

bool is_weak_delta1(const Graph& g) {
    return g.combinatorial_type() == CombinatorialType{1, 0, 0, 1, 1};
}
bool is_weak_delta2(const Graph& g) {
    return g.combinatorial_type() == CombinatorialType{2, 1, 1, 0, 0};
}
bool is_weak_delta3(const Graph& g) {
    return g.combinatorial_type() == CombinatorialType{2, 0, 1, 2, 0};
}
bool is_preferred_delta2(const Graph& g) {
    return is_weak_delta2(g) && g.has_vertex(1) && g.has_vertex(2) &&
           g.b_next(1) == std::optional<Label>(2);
}

} // namespace

std::string move_str(const Move& m) {
    std::ostringstream os;
    std::visit(
        [&os](const auto& mv) {
            using T = std::decay_t<decltype(mv)>;
            if constexpr (std::is_same_v<T, Lambda3Move>) {
                os << "lambda3(v=" << mv.v << ",w=" << mv.w << ")";
            } else if constexpr (std::is_same_v<T, Lambda21Move>) {
                os << "lambda2.1(v=" << mv.v << ",w'=" << mv.wprime << ")";
            } else if constexpr (std::is_same_v<T, Lambda22Move>) {
                os << "lambda2.2(v=" << mv.v << ",w=" << mv.w << ",w'=" << mv.wprime
                   << ",eps=" << (mv.eps > 0 ? "+1" : "-1") << ")";
            } else if constexpr (std::is_same_v<T, Kappa3Move>) {
                os << "kappa3(v=" << mv.v << ",w=" << mv.w << ",v'=" << mv.vprime
                   << ",w'=" << mv.wprime << ")";
            } else {
                switch (mv.kind) {
                    case ExcKind::Delta1Relabel: os << "exc-delta1"; break;
                    case ExcKind::Delta3Collapse: os << "exc-delta3"; break;
                    case ExcKind::Delta2Relabel: os << "exc-delta2"; break;
                }
            }
        },
        m);
    return os.str();
}

// ---------------------------------------------------------------------------
// contractions

Graph apply_lambda3(const Graph& g, Label v, Label w) {
    require_unrooted(g);
    require(g.size() >= 2, "lambda3 needs at least 2 vertices");
    require(g.has_b_loop(v), "lambda3: no b-loop at v");
    require(g.a_partner(v) == std::optional<Label>(w), "lambda3: no a-edge {v,w}");
    Graph h = g;
    h.remove_vertex(v);
    h.add_a_loop(w);
    return h;
}

Graph apply_lambda21(const Graph& g, Label v) {
    require_unrooted(g);
    require(g.size() >= 3, "lambda2.1 needs at least 3 vertices");
    require(g.has_a_loop(v), "lambda2.1: no a-loop at v");
    require(g.on_b_triangle(v), "lambda2.1: v is not on a b-triangle");
    Graph h = g;
    h.remove_vertex(v); // drops the two triangle arcs through v, keeps the third
    return h;
}

Graph apply_lambda22(const Graph& g, Label v, Label w, Label wprime) {
    require_unrooted(g);
    require(g.size() >= 3, "lambda2.2 needs at least 3 vertices");
    require(g.has_a_loop(v), "lambda2.2: no a-loop at v");
    bool forward = g.b_next(v) == std::optional<Label>(w) && g.b_arc_isolated(v);
    bool backward = g.b_next(w) == std::optional<Label>(v) && g.b_arc_isolated(w);
    require(forward || backward, "lambda2.2: no isolated b-edge between v and w");
    require(g.a_partner(w) == std::optional<Label>(wprime), "lambda2.2: no a-edge {w,w'}");
    require(wprime != v, "lambda2.2: vertices must be distinct");
    Graph h = g;
    h.remove_vertex(v);
    h.remove_vertex(w);
    h.add_a_loop(wprime);
    return h;
}

Graph apply_kappa3(const Graph& g, Label v, Label w, Label vprime, Label wprime) {
    require_unrooted(g);
    require(g.size() >= 4, "kappa3 needs at least 4 vertices");
    require(g.b_next(v) == std::optional<Label>(w) && g.b_arc_isolated(v),
            "kappa3: no isolated b-edge v->w");
    require(g.a_partner(v) == std::optional<Label>(vprime), "kappa3: no a-edge {v,v'}");
    require(g.a_partner(w) == std::optional<Label>(wprime), "kappa3: no a-edge {w,w'}");
    require(vprime != w && wprime != v, "kappa3: vertices must be distinct");
    Graph h = g;
    h.remove_vertex(v);
    h.remove_vertex(w);
    h.add_a_edge(vprime, wprime);
    return h;
}

Graph apply_exceptional(const Graph& g) {
    require_unrooted(g);
    if (is_weak_delta1(g)) {
        require(!g.has_vertex(1), "exceptional: Delta1 already on {1}");
        return Graph::delta1();
    }
    if (is_weak_delta3(g)) return Graph::delta1();
    if (is_weak_delta2(g)) {
        require(!is_preferred_delta2(g), "exceptional: Delta2 already preferred");
        return Graph::delta2();
    }
    throw PreconditionError("move: exceptional step applies to Delta1/Delta2/Delta3 only");
}

Graph apply_move(const Graph& g, const Move& m) {
    return std::visit(
        [&g](const auto& mv) -> Graph {
            using T = std::decay_t<decltype(mv)>;
            if constexpr (std::is_same_v<T, Lambda3Move>)
                return apply_lambda3(g, mv.v, mv.w);
            else if constexpr (std::is_same_v<T, Lambda21Move>)
                return apply_lambda21(g, mv.v);
            else if constexpr (std::is_same_v<T, Lambda22Move>)
                return apply_lambda22(g, mv.v, mv.w, mv.wprime);
            else if constexpr (std::is_same_v<T, Kappa3Move>)
                return apply_kappa3(g, mv.v, mv.w, mv.vprime, mv.wprime);
            else
                return apply_exceptional(g);
        },
        m);
}

std::vector<Move> enumerate_moves(const Graph& g) {
    require_unrooted(g);
    std::vector<Move> out;
    int n = g.size();
    if (n >= 2) {
        for (Label v : g.b_loop_vertices())
            if (auto w = g.a_partner(v)) out.push_back(Lambda3Move{v, *w});
    }
    if (n >= 3) {
        for (Label v : g.a_loop_vertices()) {
            if (g.on_b_triangle(v)) {
                out.push_back(Lambda21Move{v, *g.b_next(v)});
                continue;
            }
            Label w;
            int eps;
            if (auto nxt = g.b_next(v); nxt && g.b_arc_isolated(v)) {
                w = *nxt;
                eps = +1;
            } else if (auto prv = g.b_prev(v); prv && g.b_arc_isolated(*prv)) {
                w = *prv;
                eps = -1;
            } else {
                continue;
            }
            auto wp = g.a_partner(w);
            if (wp && *wp != v) out.push_back(Lambda22Move{v, w, *wp, eps});
        }
    }
    if (n >= 4) {
        for (auto [v, w] : g.isolated_b_edges()) {
            auto vp = g.a_partner(v);
            auto wp = g.a_partner(w);
            if (vp && wp && *vp != w && *wp != v)
                out.push_back(Kappa3Move{v, w, *vp, *wp});
        }
    }
    if (n <= 2) {
        if (is_weak_delta1(g) && !g.has_vertex(1))
            out.push_back(ExceptionalMove{ExcKind::Delta1Relabel});
        else if (is_weak_delta3(g))
            out.push_back(ExceptionalMove{ExcKind::Delta3Collapse});
        else if (is_weak_delta2(g) && !is_preferred_delta2(g))
            out.push_back(ExceptionalMove{ExcKind::Delta2Relabel});
    }
    return out;
}

// ---------------------------------------------------------------------------
// expansions

Label shift1(Label x, Label v) { return x < v ? x : x + 1; }

Label shift2(Label x, Label v, Label w) {
    Label lo = std::min(v, w), hi = std::max(v, w);
    if (x < lo) return x;
    if (x < hi - 1) return x + 1;
    return x + 2;
}

Graph expand_lambda3(const Graph& d, Label aloop_at, Label v) {
    require_expansion_base(d);
    int m = d.size();
    require(v >= 1 && v <= m + 1, "expand lambda3: v out of range");
    require(d.has_a_loop(aloop_at), "expand lambda3: no a-loop at given vertex");
    Graph h = d.relabeled([v](Label x) { return shift1(x, v); });
    Label wt = shift1(aloop_at, v);
    h.remove_a_loop(wt);
    h.add_vertex(v);
    h.add_b_loop(v);
    h.add_a_edge(v, wt);
    return h;
}

Graph expand_lambda21(const Graph& d, Label bedge_from, Label v) {
    require_expansion_base(d);
    int m = d.size();
    require(v >= 1 && v <= m + 1, "expand lambda2.1: v out of range");
    require(d.b_arc_isolated(bedge_from), "expand lambda2.1: no isolated b-edge here");
    Label to = *d.b_next(bedge_from);
    Graph h = d.relabeled([v](Label x) { return shift1(x, v); });
    Label f = shift1(bedge_from, v), t = shift1(to, v);
    h.add_vertex(v);
    h.add_a_loop(v);
    h.add_b_edge(t, v); // closes the triangle f -> t -> v -> f
    h.add_b_edge(v, f);
    return h;
}

Graph expand_lambda22(const Graph& d, Label aloop_at, Label v, Label w, int eps) {
    require_expansion_base(d);
    int m = d.size();
    require(v != w && v >= 1 && w >= 1 && v <= m + 2 && w <= m + 2,
            "expand lambda2.2: bad vertex pair");
    require(eps == 1 || eps == -1, "expand lambda2.2: eps must be +-1");
    require(d.has_a_loop(aloop_at), "expand lambda2.2: no a-loop at given vertex");
    Graph h = d.relabeled([v, w](Label x) { return shift2(x, v, w); });
    Label at = shift2(aloop_at, v, w);
    h.remove_a_loop(at);
    h.add_vertex(v);
    h.add_vertex(w);
    h.add_a_loop(v);
    h.add_a_edge(w, at);
    if (eps > 0)
        h.add_b_edge(v, w);
    else
        h.add_b_edge(w, v);
    return h;
}

Graph expand_kappa3(const Graph& d, std::pair<Label, Label> aedge, Label v, Label w, int eps) {
    require_expansion_base(d);
    int m = d.size();
    require(v != w && v >= 1 && w >= 1 && v <= m + 2 && w <= m + 2,
            "expand kappa3: bad vertex pair");
    require(eps == 1 || eps == -1, "expand kappa3: eps must be +-1");
    require(d.a_partner(aedge.first) == std::optional<Label>(aedge.second),
            "expand kappa3: no such a-edge");
    Graph h = d.relabeled([v, w](Label x) { return shift2(x, v, w); });
    Label lo = shift2(std::min(aedge.first, aedge.second), v, w);
    Label hi = shift2(std::max(aedge.first, aedge.second), v, w);
    h.remove_a_edge(lo, hi);
    h.add_vertex(v);
    h.add_vertex(w);
    h.add_b_edge(v, w);
    if (eps > 0) {
        h.add_a_edge(v, lo);
        h.add_a_edge(w, hi);
    } else {
        h.add_a_edge(v, hi);
        h.add_a_edge(w, lo);
    }
    return h;
}

} // namespace modsub

#pragma once

#include "modsub/graph.hpp"

namespace fixtures {

// Three hand-built reference graphs, used across the test files.
//
// fig_h: two b-triangles joined by a perfect a-matching; already a
// silhouette. Its subgroup (rooted at 1) is generated by abaB and babab.
//
// fig_k: one b-triangle, one b-arc, one b-loop; subgroup generated by
// abab and babaB. Rewrites down to the preferred Delta2.
//
// fig_l: an 18-vertex graph mixing all features (five triangles, one arc,
// one b-loop, two a-loops). Rewrites down to a graph equal to fig_h.

inline modsub::Graph fig_h(bool rooted = false) {
    modsub::Graph g;
    for (int v = 1; v <= 6; ++v) g.add_vertex(v);
    g.add_b_triangle(1, 2, 3);
    g.add_b_triangle(4, 5, 6);
    g.add_a_edge(1, 4);
    g.add_a_edge(2, 5);
    g.add_a_edge(3, 6);
    if (rooted) g.set_root(1);
    g.check_valid();
    return g;
}

inline modsub::Graph fig_k(bool rooted = false) {
    modsub::Graph g;
    for (int v = 1; v <= 6; ++v) g.add_vertex(v);
    g.add_b_triangle(1, 2, 3);
    g.add_b_edge(4, 5);
    g.add_b_loop(6);
    g.add_a_edge(1, 4);
    g.add_a_edge(5, 3);
    g.add_a_edge(2, 6);
    if (rooted) g.set_root(1);
    g.check_valid();
    return g;
}

inline modsub::Graph fig_l(bool rooted = false) {
    modsub::Graph g;
    for (int v = 1; v <= 18; ++v) g.add_vertex(v);
    g.add_b_triangle(2, 3, 10);
    g.add_b_triangle(14, 17, 18);
    g.add_b_triangle(11, 12, 13);
    g.add_b_triangle(1, 4, 5);
    g.add_b_triangle(6, 8, 7);
    g.add_b_edge(15, 16);
    g.add_b_loop(9);
    g.add_a_edge(1, 2);
    g.add_a_edge(3, 15);
    g.add_a_edge(16, 17);
    g.add_a_edge(12, 14);
    g.add_a_edge(11, 4);
    g.add_a_edge(6, 5);
    g.add_a_edge(8, 9);
    g.add_a_edge(10, 13);
    g.add_a_loop(7);
    g.add_a_loop(18);
    if (rooted) g.set_root(1);
    g.check_valid();
    return g;
}

} // namespace fixtures

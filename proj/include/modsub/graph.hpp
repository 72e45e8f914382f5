#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "modsub/errors.hpp"

namespace modsub {

using Label = int;

struct TypeDelta {
    int n, k2, k3, l2, l3;
};

// (n, k2, k3, l2, l3): vertex count, isolated a-edges, isolated b-edges,
// a-loops, b-loops.
struct CombinatorialType {
    int n = 0, k2 = 0, k3 = 0, l2 = 0, l3 = 0;

    friend auto operator<=>(const CombinatorialType&, const CombinatorialType&) = default;

    bool all_nonneg() const { return n >= 0 && k2 >= 0 && k3 >= 0 && l2 >= 0 && l3 >= 0; }

    // Type of a graph in which every vertex meets both an a- and a b-item.
    bool valid_cyclic() const;

    // Rooted types where exactly the root misses one side.
    bool valid_rooted_a_defect() const; // root has a b-item but no a-item
    bool valid_rooted_b_defect() const; // root has an a-item but no b-item

    CombinatorialType plus(const TypeDelta& d) const {
        return {n + d.n, k2 + d.k2, k3 + d.k3, l2 + d.l2, l3 + d.l3};
    }

    std::string str() const;
};

// (l2, l3, r): a free product of l2 copies of Z/2, l3 copies of Z/3 and a
// free group of rank r.
struct IsomorphismType {
    int l2 = 0, l3 = 0, r = 0;

    friend auto operator<=>(const IsomorphismType&, const IsomorphismType&) = default;

    std::string str() const;
};

// A finite Stallings graph over the modular group Z/2 * Z/3.
//
// The a-structure is a set of a-loops plus a partial matching by isolated
// a-edges; the b-structure is a set of b-loops plus a partial injective
// successor map whose weakly connected components are single arcs or
// directed triangles. Vertices carry distinct positive labels; a graph is
// "normalized" when they are exactly {1..n}. An optional root marks a
// subgroup base point.
//
// Mutators keep the local invariants eagerly and throw PreconditionError
// on conflicts; the one global condition (triangle closure of the
// b-structure) is only checked by check_valid(), so a builder may pass
// through open-chain states while assembling a triangle.
//
// All named graph operations below and in the sibling headers are pure:
// they take const references and return fresh values.
class Graph {
  public:
    Graph() = default;

    // The four one- and two-vertex building blocks.
    static Graph delta1();                    // a-loop + b-loop on {1}
    static Graph delta2(bool reversed = false); // a-edge {1,2}, b-arc 1->2 (or 2->1)
    static Graph delta3(bool reversed = false); // a-loops at 1,2, b-arc 1->2 (or 2->1)
    static Graph delta4();                    // a-edge {1,2}, b-loops at 1 and 2

    // --- construction -----------------------------------------------------
    void add_vertex(Label v);
    void add_a_loop(Label v);
    void add_a_edge(Label u, Label v);
    void add_b_loop(Label v);
    void add_b_edge(Label from, Label to);
    void add_b_triangle(Label x, Label y, Label z); // arcs x->y->z->x
    void set_root(Label v);
    void clear_root();

    void remove_vertex(Label v); // detaches all incident items first
    void remove_a_loop(Label v);
    void remove_a_edge(Label u, Label v);
    void remove_b_loop(Label v);
    void remove_b_arc(Label from);

    // --- local queries ----------------------------------------------------
    int size() const { return static_cast<int>(labels_.size()); }
    const std::set<Label>& labels() const { return labels_; }
    bool has_vertex(Label v) const { return labels_.count(v) != 0; }
    std::optional<Label> root() const { return root_; }

    bool has_a_loop(Label v) const { return a_loops_.count(v) != 0; }
    bool has_b_loop(Label v) const { return b_loops_.count(v) != 0; }
    std::optional<Label> a_partner(Label v) const;
    std::optional<Label> b_next(Label v) const;
    std::optional<Label> b_prev(Label v) const;

    bool meets_a(Label v) const { return has_a_loop(v) || a_match_.count(v); }
    bool meets_b(Label v) const {
        return has_b_loop(v) || b_next_.count(v) || b_prev_.count(v);
    }
    bool on_b_triangle(Label v) const;
    // True iff v has an outgoing arc v->w that forms a whole b-component.
    bool b_arc_isolated(Label from) const;

    std::vector<Label> a_loop_vertices() const;
    std::vector<Label> b_loop_vertices() const;
    std::vector<std::pair<Label, Label>> a_edge_list() const;   // (min,max), sorted
    std::vector<std::pair<Label, Label>> b_arc_list() const;    // (from,to), by from
    std::vector<std::pair<Label, Label>> isolated_b_edges() const;

    // --- structure --------------------------------------------------------
    void check_valid() const; // throws PreconditionError with a reason
    bool is_valid() const;

    CombinatorialType combinatorial_type() const;
    bool is_cyclically_reduced() const; // every vertex meets both letters
    bool is_reduced() const;            // rooted, connected, non-root vertices meet both
    bool is_connected() const;

    // Kurosh decomposition parameters of the subgroup the graph carries.
    // Requires a cyclically reduced graph or a reduced rooted one.
    IsomorphismType isomorphism_type() const;

    bool is_normalized() const;
    Graph normalized() const; // order-preserving relabel onto {1..n}
    Graph relabeled(const std::function<Label(Label)>& f) const;

    friend bool operator==(const Graph&, const Graph&) = default;

    // Canonical one-line encoding; equal strings iff equal graphs.
    std::string key() const;

    // --- serialization ----------------------------------------------------
    // JSON object {n, root?, a_loops, b_loops, a_edges, b_edges} with
    // a-edges smaller-label-first and b-edges as [from,to]. Requires a
    // normalized graph; the parser re-validates everything and rejects
    // duplicates and unknown keys.
    std::string to_json() const;
    static Graph parse_json(const std::string& text);

    std::string to_dot() const;

  private:
    std::set<Label> labels_;
    std::set<Label> a_loops_;
    std::map<Label, Label> a_match_; // symmetric: holds both directions
    std::set<Label> b_loops_;
    std::map<Label, Label> b_next_;
    std::map<Label, Label> b_prev_; // inverse of b_next_
    std::optional<Label> root_;
};

} // namespace modsub

#include "modsub/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "json.hpp"

namespace modsub {

namespace {

std::string bad(const std::string& what) { return "invalid graph: " + what; }

} // namespace

// ---------------------------------------------------------------------------
// types

bool CombinatorialType::valid_cyclic() const {
    if (!all_nonneg() || n < 1) return false;
    if (n != 2 * k2 + l2) return false;
    int m = n - 2 * k3 - l3;
    return m >= 0 && m % 3 == 0;
}

bool CombinatorialType::valid_rooted_a_defect() const {
    if (!all_nonneg() || n < 1) return false;
    if (n - 1 != 2 * k2 + l2) return false;
    int m = n - 2 * k3 - l3;
    return m >= 0 && m % 3 == 0;
}

bool CombinatorialType::valid_rooted_b_defect() const {
    if (!all_nonneg() || n < 1) return false;
    if (n != 2 * k2 + l2) return false;
    int m = n - 1 - 2 * k3 - l3;
    return m >= 0 && m % 3 == 0;
}

std::string CombinatorialType::str() const {
    std::ostringstream os;
    os << '(' << n << ',' << k2 << ',' << k3 << ',' << l2 << ',' << l3 << ')';
    return os.str();
}

std::string IsomorphismType::str() const {
    std::ostringstream os;
    os << '(' << l2 << ',' << l3 << ',' << r << ')';
    return os.str();
}

// ---------------------------------------------------------------------------
// building blocks

Graph Graph::delta1() {
    Graph g;
    g.add_vertex(1);
    g.add_a_loop(1);
    g.add_b_loop(1);
    return g;
}

Graph Graph::delta2(bool reversed) {
    Graph g;
    g.add_vertex(1);
    g.add_vertex(2);
    g.add_a_edge(1, 2);
    if (reversed)
        g.add_b_edge(2, 1);
    else
        g.add_b_edge(1, 2);
    return g;
}

Graph Graph::delta3(bool reversed) {
    Graph g;
    g.add_vertex(1);
    g.add_vertex(2);
    g.add_a_loop(1);
    g.add_a_loop(2);
    if (reversed)
        g.add_b_edge(2, 1);
    else
        g.add_b_edge(1, 2);
    return g;
}

Graph Graph::delta4() {
    Graph g;
    g.add_vertex(1);
    g.add_vertex(2);
    g.add_a_edge(1, 2);
    g.add_b_loop(1);
    g.add_b_loop(2);
    return g;
}

// ---------------------------------------------------------------------------
// mutators

void Graph::add_vertex(Label v) {
    if (v < 1) throw PreconditionError(bad("labels must be positive"));
    if (!labels_.insert(v).second) throw PreconditionError(bad("duplicate vertex"));
}

void Graph::add_a_loop(Label v) {
    if (!has_vertex(v)) throw PreconditionError(bad("a-loop at unknown vertex"));
    if (a_match_.count(v)) throw PreconditionError(bad("a-loop on matched vertex"));
    if (!a_loops_.insert(v).second) throw PreconditionError(bad("duplicate a-loop"));
}

void Graph::add_a_edge(Label u, Label v) {
    if (u == v) throw PreconditionError(bad("a-edge endpoints must differ"));
    if (!has_vertex(u) || !has_vertex(v))
        throw PreconditionError(bad("a-edge at unknown vertex"));
    if (a_loops_.count(u) || a_loops_.count(v))
        throw PreconditionError(bad("a-edge on looped vertex"));
    if (a_match_.count(u) || a_match_.count(v))
        throw PreconditionError(bad("a-edge on already matched vertex"));
    a_match_[u] = v;
    a_match_[v] = u;
}

void Graph::add_b_loop(Label v) {
    if (!has_vertex(v)) throw PreconditionError(bad("b-loop at unknown vertex"));
    if (b_next_.count(v) || b_prev_.count(v))
        throw PreconditionError(bad("b-loop on vertex with b-arc"));
    if (!b_loops_.insert(v).second) throw PreconditionError(bad("duplicate b-loop"));
}

void Graph::add_b_edge(Label from, Label to) {
    if (from == to) throw PreconditionError(bad("b-arc endpoints must differ"));
    if (!has_vertex(from) || !has_vertex(to))
        throw PreconditionError(bad("b-arc at unknown vertex"));
    if (b_loops_.count(from) || b_loops_.count(to))
        throw PreconditionError(bad("b-arc on looped vertex"));
    if (b_next_.count(from)) throw PreconditionError(bad("two outgoing b-arcs"));
    if (b_prev_.count(to)) throw PreconditionError(bad("two incoming b-arcs"));
    auto it = b_next_.find(to);
    if (it != b_next_.end() && it->second == from)
        throw PreconditionError(bad("b-arcs must not form a 2-cycle"));
    b_next_[from] = to;
    b_prev_[to] = from;
}

void Graph::add_b_triangle(Label x, Label y, Label z) {
    add_b_edge(x, y);
    add_b_edge(y, z);
    add_b_edge(z, x);
}

void Graph::set_root(Label v) {
    if (!has_vertex(v)) throw PreconditionError(bad("root must be a vertex"));
    root_ = v;
}

void Graph::clear_root() { root_.reset(); }

void Graph::remove_vertex(Label v) {
    if (!has_vertex(v)) throw PreconditionError(bad("removing unknown vertex"));
    a_loops_.erase(v);
    b_loops_.erase(v);
    if (auto it = a_match_.find(v); it != a_match_.end()) {
        a_match_.erase(it->second);
        a_match_.erase(v);
    }
    if (auto it = b_next_.find(v); it != b_next_.end()) {
        b_prev_.erase(it->second);
        b_next_.erase(v);
    }
    if (auto it = b_prev_.find(v); it != b_prev_.end()) {
        b_next_.erase(it->second);
        b_prev_.erase(v);
    }
    if (root_ && *root_ == v) root_.reset();
    labels_.erase(v);
}

void Graph::remove_a_loop(Label v) {
    if (!a_loops_.erase(v)) throw PreconditionError(bad("no a-loop to remove"));
}

void Graph::remove_a_edge(Label u, Label v) {
    auto it = a_match_.find(u);
    if (it == a_match_.end() || it->second != v)
        throw PreconditionError(bad("no such a-edge"));
    a_match_.erase(u);
    a_match_.erase(v);
}

void Graph::remove_b_loop(Label v) {
    if (!b_loops_.erase(v)) throw PreconditionError(bad("no b-loop to remove"));
}

void Graph::remove_b_arc(Label from) {
    auto it = b_next_.find(from);
    if (it == b_next_.end()) throw PreconditionError(bad("no outgoing b-arc"));
    b_prev_.erase(it->second);
    b_next_.erase(it);
}

// ---------------------------------------------------------------------------
// local queries

std::optional<Label> Graph::a_partner(Label v) const {
    auto it = a_match_.find(v);
    if (it == a_match_.end()) return std::nullopt;
    return it->second;
}

std::optional<Label> Graph::b_next(Label v) const {
    auto it = b_next_.find(v);
    if (it == b_next_.end()) return std::nullopt;
    return it->second;
}

std::optional<Label> Graph::b_prev(Label v) const {
    auto it = b_prev_.find(v);
    if (it == b_prev_.end()) return std::nullopt;
    return it->second;
}

bool Graph::on_b_triangle(Label v) const {
    auto w = b_next(v);
    return w && b_next(*w).has_value();
}

bool Graph::b_arc_isolated(Label from) const {
    auto to = b_next(from);
    return to && !b_next_.count(*to);
}

std::vector<Label> Graph::a_loop_vertices() const {
    return {a_loops_.begin(), a_loops_.end()};
}

std::vector<Label> Graph::b_loop_vertices() const {
    return {b_loops_.begin(), b_loops_.end()};
}

std::vector<std::pair<Label, Label>> Graph::a_edge_list() const {
    std::vector<std::pair<Label, Label>> out;
    for (const auto& [u, v] : a_match_)
        if (u < v) out.emplace_back(u, v);
    return out; // map order keeps this sorted
}

std::vector<std::pair<Label, Label>> Graph::b_arc_list() const {
    return {b_next_.begin(), b_next_.end()};
}

std::vector<std::pair<Label, Label>> Graph::isolated_b_edges() const {
    std::vector<std::pair<Label, Label>> out;
    for (const auto& [from, to] : b_next_)
        if (!b_next_.count(to)) out.emplace_back(from, to);
    return out;
}

// ---------------------------------------------------------------------------
// validity

void Graph::check_valid() const {
    for (Label v : a_loops_)
        if (!has_vertex(v)) throw PreconditionError(bad("a-loop off the vertex set"));
    for (Label v : b_loops_)
        if (!has_vertex(v)) throw PreconditionError(bad("b-loop off the vertex set"));
    for (const auto& [u, v] : a_match_) {
        if (!has_vertex(u) || !has_vertex(v))
            throw PreconditionError(bad("a-edge off the vertex set"));
        if (u == v) throw PreconditionError(bad("a-edge is a loop"));
        auto it = a_match_.find(v);
        if (it == a_match_.end() || it->second != u)
            throw PreconditionError(bad("a-matching not symmetric"));
        if (a_loops_.count(u)) throw PreconditionError(bad("matched vertex has a-loop"));
    }
    for (const auto& [from, to] : b_next_) {
        if (!has_vertex(from) || !has_vertex(to))
            throw PreconditionError(bad("b-arc off the vertex set"));
        if (from == to) throw PreconditionError(bad("b-arc is a loop"));
        if (b_loops_.count(from) || b_loops_.count(to))
            throw PreconditionError(bad("b-arc touches a b-loop"));
        auto pit = b_prev_.find(to);
        if (pit == b_prev_.end() || pit->second != from)
            throw PreconditionError(bad("b_prev out of sync"));
        // component shape: single arc or directed triangle
        auto mid = b_next_.find(to);
        if (mid != b_next_.end()) {
            Label third = mid->second;
            if (third == from) throw PreconditionError(bad("b-arcs form a 2-cycle"));
            auto closing = b_next_.find(third);
            if (closing == b_next_.end() || closing->second != from)
                throw PreconditionError(bad("b-chain does not close to a triangle"));
        }
    }
    if (b_prev_.size() != b_next_.size())
        throw PreconditionError(bad("b_prev out of sync"));
    if (root_ && !has_vertex(*root_))
        throw PreconditionError(bad("root off the vertex set"));
}

bool Graph::is_valid() const {
    try {
        check_valid();
        return true;
    } catch (const PreconditionError&) {
        return false;
    }
}

// ---------------------------------------------------------------------------
// structure

CombinatorialType Graph::combinatorial_type() const {
    CombinatorialType t;
    t.n = size();
    t.k2 = static_cast<int>(a_match_.size() / 2);
    t.l2 = static_cast<int>(a_loops_.size());
    t.l3 = static_cast<int>(b_loops_.size());
    int k3 = 0;
    for (const auto& [from, to] : b_next_)
        if (!b_next_.count(to)) ++k3;
    t.k3 = k3;
    return t;
}

bool Graph::is_cyclically_reduced() const {
    for (Label v : labels_)
        if (!meets_a(v) || !meets_b(v)) return false;
    return true;
}

bool Graph::is_reduced() const {
    if (!root_) throw PreconditionError("is_reduced: graph has no root");
    if (!is_connected()) return false;
    for (Label v : labels_) {
        if (v == *root_) continue;
        if (!meets_a(v) || !meets_b(v)) return false;
    }
    return true;
}

bool Graph::is_connected() const {
    if (size() <= 1) return true;
    std::set<Label> seen;
    std::deque<Label> queue{*labels_.begin()};
    seen.insert(*labels_.begin());
    auto push = [&](std::optional<Label> u) {
        if (u && seen.insert(*u).second) queue.push_back(*u);
    };
    while (!queue.empty()) {
        Label v = queue.front();
        queue.pop_front();
        push(a_partner(v));
        push(b_next(v));
        push(b_prev(v));
    }
    return seen.size() == labels_.size();
}

IsomorphismType Graph::isomorphism_type() const {
    if (size() == 1) {
        Label v = *labels_.begin();
        return {has_a_loop(v) ? 1 : 0, has_b_loop(v) ? 1 : 0, 0};
    }
    CombinatorialType t = combinatorial_type();
    // Euler-type count: 6*(rank - 1) for a cyclically reduced graph.
    int phi = t.n - 2 * t.k3 - 3 * t.l2 - 4 * t.l3;
    int num;
    if (is_cyclically_reduced()) {
        num = phi + 6;
    } else {
        if (!root_ || !is_reduced())
            throw PreconditionError(
                "isomorphism_type: graph is neither cyclically reduced nor reduced");
        bool root_a = meets_a(*root_);
        bool root_b = meets_b(*root_);
        if (root_a && !root_b)
            num = phi + 2; // rank = 1/3 + phi/6
        else if (root_b && !root_a)
            num = phi + 3; // rank = 1/2 + phi/6
        else
            throw PreconditionError("isomorphism_type: unreachable root defect");
    }
    if (num < 0 || num % 6 != 0)
        throw InconsistencyError("isomorphism_type: rank formula is not integral for " +
                                 t.str());
    return {t.l2, t.l3, num / 6};
}

bool Graph::is_normalized() const {
    if (labels_.empty()) return true;
    return *labels_.begin() == 1 && *labels_.rbegin() == size();
}

Graph Graph::normalized() const {
    std::map<Label, Label> rank;
    Label next = 1;
    for (Label v : labels_) rank[v] = next++;
    return relabeled([&rank](Label v) { return rank.at(v); });
}

Graph Graph::relabeled(const std::function<Label(Label)>& f) const {
    Graph g;
    for (Label v : labels_) g.add_vertex(f(v));
    if (g.size() != size()) throw PreconditionError(bad("relabeling is not injective"));
    for (Label v : a_loops_) g.add_a_loop(f(v));
    for (const auto& [u, v] : a_match_)
        if (u < v) g.add_a_edge(f(u), f(v));
    for (Label v : b_loops_) g.add_b_loop(f(v));
    for (const auto& [from, to] : b_next_) {
        // bypass the 2-cycle builder check: images are re-validated below
        Label ff = f(from), ft = f(to);
        g.b_next_[ff] = ft;
        g.b_prev_[ft] = ff;
    }
    if (root_) g.set_root(f(*root_));
    g.check_valid();
    return g;
}

std::string Graph::key() const {
    std::ostringstream os;
    os << 'n' << size() << ";r";
    if (root_) os << *root_;
    os << ";al";
    for (Label v : a_loops_) os << ' ' << v;
    os << ";ae";
    for (const auto& [u, v] : a_match_)
        if (u < v) os << ' ' << u << '-' << v;
    os << ";bl";
    for (Label v : b_loops_) os << ' ' << v;
    os << ";be";
    for (const auto& [from, to] : b_next_) os << ' ' << from << '>' << to;
    return os.str();
}

// ---------------------------------------------------------------------------
// serialization

std::string Graph::to_json() const {
    if (!is_normalized())
        throw PreconditionError("to_json: graph must be normalized");
    nlohmann::json j;
    j["n"] = size();
    if (root_) j["root"] = *root_;
    j["a_loops"] = a_loop_vertices();
    j["b_loops"] = b_loop_vertices();
    auto pairs = [](const std::vector<std::pair<Label, Label>>& es) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [x, y] : es) arr.push_back({x, y});
        return arr;
    };
    j["a_edges"] = pairs(a_edge_list());
    j["b_edges"] = pairs(b_arc_list());
    return j.dump();
}

Graph Graph::parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("graph JSON: ") + e.what());
    }
    if (!j.is_object()) throw PreconditionError("graph JSON: not an object");
    static const std::set<std::string> known{"n",       "root",    "a_loops",
                                             "b_loops", "a_edges", "b_edges"};
    for (const auto& [k, _] : j.items())
        if (!known.count(k)) throw PreconditionError("graph JSON: unknown key '" + k + "'");
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw PreconditionError("graph JSON: missing integer 'n'");
    long long n = j["n"].get<long long>();
    if (n < 1 || n > 10'000'000) throw PreconditionError("graph JSON: n out of range");

    Graph g;
    for (Label v = 1; v <= static_cast<Label>(n); ++v) g.add_vertex(v);
    auto label_of = [&](const nlohmann::json& x, const char* where) -> Label {
        if (!x.is_number_integer())
            throw PreconditionError(std::string("graph JSON: non-integer label in ") + where);
        long long v = x.get<long long>();
        if (v < 1 || v > n)
            throw PreconditionError(std::string("graph JSON: label out of range in ") + where);
        return static_cast<Label>(v);
    };
    auto each = [&](const char* field, auto&& fn) {
        if (!j.contains(field)) return;
        if (!j[field].is_array())
            throw PreconditionError(std::string("graph JSON: ") + field + " must be an array");
        for (const auto& item : j[field]) fn(item);
    };
    try {
        each("a_loops", [&](const nlohmann::json& x) { g.add_a_loop(label_of(x, "a_loops")); });
        each("b_loops", [&](const nlohmann::json& x) { g.add_b_loop(label_of(x, "b_loops")); });
        each("a_edges", [&](const nlohmann::json& x) {
            if (!x.is_array() || x.size() != 2)
                throw PreconditionError("graph JSON: a_edges entries must be pairs");
            g.add_a_edge(label_of(x[0], "a_edges"), label_of(x[1], "a_edges"));
        });
        each("b_edges", [&](const nlohmann::json& x) {
            if (!x.is_array() || x.size() != 2)
                throw PreconditionError("graph JSON: b_edges entries must be pairs");
            g.add_b_edge(label_of(x[0], "b_edges"), label_of(x[1], "b_edges"));
        });
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(std::string("graph JSON: ") + e.what());
    }
    if (j.contains("root")) g.set_root(label_of(j["root"], "root"));
    g.check_valid();
    return g;
}

std::string Graph::to_dot() const {
    std::ostringstream os;
    os << "digraph stallings {\n";
    os << "  node [shape=circle];\n";
    for (Label v : labels_) {
        os << "  " << v;
        if (root_ && *root_ == v) os << " [shape=doublecircle]";
        os << ";\n";
    }
    for (Label v : a_loops_)
        os << "  " << v << " -> " << v << " [label=\"a\", dir=none];\n";
    for (const auto& [u, v] : a_match_)
        if (u < v) os << "  " << u << " -> " << v << " [label=\"a\", dir=none];\n";
    for (Label v : b_loops_)
        os << "  " << v << " -> " << v << " [label=\"b\"];\n";
    for (const auto& [from, to] : b_next_)
        os << "  " << from << " -> " << to << " [label=\"b\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace modsub

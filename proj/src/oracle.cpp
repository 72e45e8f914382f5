#include "modsub/oracle.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include "modsub/errors.hpp"

namespace modsub {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw PreconditionError(what);
}

// a-structure: part[v] = matched partner, with part[v] == v for an a-loop.
// b-structure: nxt[v] = b-successor, nxt[v] == v for a b-loop, nxt[v] == 0
// for the target of an isolated arc. Index 0 of both arrays is unused.

void a_structures(int n, std::vector<int>& part, std::vector<std::vector<int>>& out) {
    int x = 0;
    for (int i = 1; i <= n; ++i)
        if (part[i] == 0) {
            x = i;
            break;
        }
    if (x == 0) {
        out.push_back(part);
        return;
    }
    part[x] = x;
    a_structures(n, part, out);
    part[x] = 0;
    for (int y = x + 1; y <= n; ++y) {
        if (part[y] != 0) continue;
        part[x] = y;
        part[y] = x;
        a_structures(n, part, out);
        part[x] = part[y] = 0;
    }
}

void b_structures(int n, std::vector<int>& nxt, std::vector<bool>& used,
                  std::vector<std::vector<int>>& out) {
    int x = 0;
    for (int i = 1; i <= n; ++i)
        if (!used[i]) {
            x = i;
            break;
        }
    if (x == 0) {
        out.push_back(nxt);
        return;
    }
    used[x] = true;
    nxt[x] = x; // b-loop
    b_structures(n, nxt, used, out);
    for (int y = x + 1; y <= n; ++y) {
        if (used[y]) continue;
        used[y] = true;
        nxt[x] = y; // arc x -> y
        b_structures(n, nxt, used, out);
        nxt[x] = 0;
        nxt[y] = x; // arc y -> x
        b_structures(n, nxt, used, out);
        nxt[y] = 0;
        for (int z = y + 1; z <= n; ++z) {
            if (used[z]) continue;
            used[z] = true;
            nxt[x] = y, nxt[y] = z, nxt[z] = x; // triangle x -> y -> z -> x
            b_structures(n, nxt, used, out);
            nxt[x] = z, nxt[z] = y, nxt[y] = x; // triangle x -> z -> y -> x
            b_structures(n, nxt, used, out);
            nxt[x] = nxt[y] = nxt[z] = 0;
            used[z] = false;
        }
        used[y] = false;
    }
    nxt[x] = 0;
    used[x] = false;
}

int dsu_find(std::vector<int>& up, int v) {
    while (up[v] != v) {
        up[v] = up[up[v]];
        v = up[v];
    }
    return v;
}

bool connected(int n, const std::vector<int>& part, const std::vector<int>& nxt,
               std::vector<int>& up) {
    for (int v = 1; v <= n; ++v) up[v] = v;
    int components = n;
    auto join = [&](int a, int b) {
        const int ra = dsu_find(up, a), rb = dsu_find(up, b);
        if (ra != rb) {
            up[ra] = rb;
            --components;
        }
    };
    for (int v = 1; v <= n; ++v) {
        join(v, part[v]);
        if (nxt[v] != 0) join(v, nxt[v]);
    }
    return components == 1;
}

Graph materialize(int n, const std::vector<int>& part, const std::vector<int>& nxt) {
    Graph g;
    for (int v = 1; v <= n; ++v) g.add_vertex(v);
    for (int v = 1; v <= n; ++v) {
        if (part[v] == v)
            g.add_a_loop(v);
        else if (part[v] > v)
            g.add_a_edge(v, part[v]);
    }
    for (int v = 1; v <= n; ++v) {
        if (nxt[v] == v)
            g.add_b_loop(v);
        else if (nxt[v] != 0)
            g.add_b_edge(v, nxt[v]);
    }
    return g;
}

} // namespace

void for_each_cyclically_reduced(int n, const std::function<void(const Graph&)>& fn) {
    require(n >= 1 && n <= 8, "oracle: size must be between 1 and 8");
    std::vector<std::vector<int>> as, bs;
    {
        std::vector<int> part(static_cast<std::size_t>(n) + 1, 0);
        a_structures(n, part, as);
        std::vector<int> nxt(static_cast<std::size_t>(n) + 1, 0);
        std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
        b_structures(n, nxt, used, bs);
    }
    std::vector<int> up(static_cast<std::size_t>(n) + 1);
    for (const auto& part : as)
        for (const auto& nxt : bs)
            if (connected(n, part, nxt, up)) fn(materialize(n, part, nxt));
}

void for_each_reduced(int n, const std::function<void(const Graph&)>& fn) {
    if (n == 1) {
        for (int a = 0; a <= 1; ++a)
            for (int b = 0; b <= 1; ++b) {
                Graph g;
                g.add_vertex(1);
                if (a) g.add_a_loop(1);
                if (b) g.add_b_loop(1);
                g.set_root(1);
                fn(g);
            }
        return;
    }
    for_each_cyclically_reduced(n, [&fn](const Graph& g) {
        for (Label v : g.labels()) {
            Graph rooted = g;
            rooted.set_root(v);
            fn(rooted);
        }
        for (Label v : g.a_loop_vertices()) {
            Graph cut = g;
            cut.remove_a_loop(v);
            cut.set_root(v);
            fn(cut);
        }
        for (Label v : g.b_loop_vertices()) {
            Graph cut = g;
            cut.remove_b_loop(v);
            cut.set_root(v);
            fn(cut);
        }
    });
}

std::vector<Graph> enumerate_cyclically_reduced(int n) {
    std::vector<Graph> out;
    for_each_cyclically_reduced(n, [&out](const Graph& g) { out.push_back(g); });
    return out;
}

std::vector<Graph> enumerate_reduced(int n) {
    std::vector<Graph> out;
    for_each_reduced(n, [&out](const Graph& g) { out.push_back(g); });
    return out;
}

std::map<CombinatorialType, BigCount> count_by_type(int n) {
    std::map<CombinatorialType, BigCount> out;
    if (n < 1) return out;
    for_each_cyclically_reduced(n, [&out](const Graph& g) { out[g.combinatorial_type()] += 1; });
    return out;
}

std::map<CombinatorialType, BigCount> count_reduced_by_type(int n) {
    std::map<CombinatorialType, BigCount> out;
    if (n < 1) return out;
    for_each_reduced(n, [&out](const Graph& g) { out[g.combinatorial_type()] += 1; });
    return out;
}

ChiSquare chi_square_uniform(const std::vector<std::uint64_t>& bins) {
    require(bins.size() >= 2, "chi_square_uniform: need at least two bins");
    std::uint64_t total = 0;
    for (std::uint64_t c : bins) total += c;
    require(total > 0, "chi_square_uniform: need at least one observation");
    const double expected = static_cast<double>(total) / static_cast<double>(bins.size());
    double stat = 0.0;
    for (std::uint64_t c : bins) {
        const double d = static_cast<double>(c) - expected;
        stat += d * d / expected;
    }
    const double dof = static_cast<double>(bins.size() - 1);
    return {stat, boost::math::gamma_q(dof / 2.0, stat / 2.0)};
}

} // namespace modsub

#include "modsub/sampler.hpp"

#include <bit>
#include <numeric>
#include <utility>
#include <vector>

#include "modsub/errors.hpp"
#include "modsub/moves.hpp"

namespace modsub {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw PreconditionError(what);
}

} // namespace

int RandomSource::next_bit() {
    if (avail_ == 0) {
        buffer_ = engine_();
        avail_ = 64;
    }
    const int bit = static_cast<int>(buffer_ & 1u);
    buffer_ >>= 1;
    --avail_;
    ++bits_consumed_;
    return bit;
}

std::uint64_t RandomSource::uniform_int(std::uint64_t n) {
    require(n >= 1, "uniform_int: n must be positive");
    const int k = std::bit_width(n - 1);
    for (;;) {
        std::uint64_t x = 0;
        for (int i = 0; i < k; ++i) x = (x << 1) | static_cast<std::uint64_t>(next_bit());
        if (x < n) return x + 1;
    }
}

BigCount RandomSource::uniform_big(const BigCount& bound) {
    require(bound >= 1, "uniform_big: bound must be positive");
    if (bound == 1) return 0;
    const BigCount top = bound - 1;
    const std::size_t k = mpz_sizeinbase(top.get_mpz_t(), 2);
    const std::size_t words = (k + 63) / 64;
    const std::size_t lead = k - 64 * (words - 1); // bits in the first word
    std::vector<std::uint64_t> chunk(words);
    BigCount x;
    for (;;) {
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t acc = 0;
            const std::size_t nb = w == 0 ? lead : 64;
            for (std::size_t i = 0; i < nb; ++i)
                acc = (acc << 1) | static_cast<std::uint64_t>(next_bit());
            chunk[w] = acc;
        }
        mpz_import(x.get_mpz_t(), words, 1, sizeof(std::uint64_t), 0, 0, chunk.data());
        if (x < bound) return x;
    }
}

Bernoulli::Bernoulli(const BigCount& numer, const BigCount& denom) {
    require(denom >= 1, "bernoulli: denominator must be positive");
    require(numer >= 0 && numer <= denom, "bernoulli: need 0 <= numer <= denom");
    const std::size_t n = mpz_sizeinbase(denom.get_mpz_t(), 2);
    denom_bits_.resize(n);
    numer_bits_.resize(n); // numer <= denom, so its bits fit in the same width
    for (std::size_t i = 0; i < n; ++i) {
        const auto pos = static_cast<mp_bitcnt_t>(n - 1 - i);
        denom_bits_[i] = static_cast<unsigned char>(mpz_tstbit(denom.get_mpz_t(), pos));
        numer_bits_[i] = static_cast<unsigned char>(mpz_tstbit(numer.get_mpz_t(), pos));
    }
}

Bernoulli::Attempt Bernoulli::attempt(RandomSource& rng) {
    ++attempts_;
    // x is drawn bit by bit, most significant first; each comparison is
    // settled by the first position where x differs from the constant.
    int lt_denom = -1, lt_numer = -1;
    const std::size_t n = denom_bits_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const int bit = rng.next_bit();
        if (lt_denom < 0) {
            if (bit > denom_bits_[i]) return Attempt::Failure;
            if (bit < denom_bits_[i]) lt_denom = 1;
        }
        if (lt_numer < 0) {
            if (bit > numer_bits_[i]) lt_numer = 0;
            else if (bit < numer_bits_[i]) lt_numer = 1;
        }
        if (lt_denom >= 0 && lt_numer >= 0) return lt_numer ? Attempt::True : Attempt::False;
    }
    if (lt_denom < 0) return Attempt::Failure; // x equals the denominator
    return Attempt::False;                     // x equals the numerator
}

bool Bernoulli::sample(RandomSource& rng) {
    for (;;) {
        const Attempt a = attempt(rng);
        if (a == Attempt::Failure) continue;
        ++samples_;
        return a == Attempt::True;
    }
}

bool bernoulli(const BigCount& numer, const BigCount& denom, RandomSource& rng) {
    Bernoulli b(numer, denom);
    return b.sample(rng);
}

namespace {

// Uniform permutation of {1..n} by Fisher-Yates over the bit source.
std::vector<Label> random_permutation(int n, RandomSource& rng) {
    std::vector<Label> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    for (int i = n - 1; i >= 1; --i) {
        const auto j = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(i) + 1)) - 1;
        std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
    }
    return p;
}

template <typename T>
T uniform_choice(const std::vector<T>& xs, RandomSource& rng) {
    return xs[static_cast<std::size_t>(rng.uniform_int(xs.size()) - 1)];
}

// Ordered pair of distinct elements of {1..n}.
std::pair<Label, Label> uniform_pair(int n, RandomSource& rng) {
    const auto v = static_cast<Label>(rng.uniform_int(static_cast<std::uint64_t>(n)));
    auto w = static_cast<Label>(rng.uniform_int(static_cast<std::uint64_t>(n) - 1));
    if (w >= v) ++w;
    return {v, w};
}

// The types the recursion bottoms out on: no loops, no isolated b-edge.
// Detected structurally because their counts are never needed to sample
// them, and evaluating s there would dwarf the sampling itself.
bool is_silhouette_type(const CombinatorialType& t) {
    return t.l2 == 0 && t.l3 == 0 && t.k3 == 0 && t.n >= 6 && t.n % 6 == 0 && 2 * t.k2 == t.n;
}

Graph rcrg_recurse(const CombinatorialType& t, RandomSource& rng, CountTable& table,
                   const SamplerOptions& opts) {
    if (t == CombinatorialType{1, 0, 0, 1, 1}) return Graph::delta1();
    if (t == CombinatorialType{2, 1, 1, 0, 0}) return Graph::delta2(rng.next_bit() != 0);
    if (t == CombinatorialType{2, 0, 1, 2, 0}) return Graph::delta3(rng.next_bit() != 0);
    if (t == CombinatorialType{2, 1, 0, 0, 2}) return Graph::delta4();

    const int n = t.n;
    if (t.l3 > 0) {
        Graph d = rcrg_recurse(t.plus(kDeltaLambda3), rng, table, opts);
        const Label at = uniform_choice(d.a_loop_vertices(), rng);
        const Label v =
            opts.fresh_labels ? n : static_cast<Label>(rng.uniform_int(static_cast<std::uint64_t>(n)));
        return expand_lambda3(d, at, v);
    }
    if (t.l2 > 0) {
        // Branch on where a marked a-loop sits. Marking one of the l2
        // loops in each graph gives l2 * s(t) pairs, of which
        // n * (k3 + 1) * s(t + lambda21) have the loop on a b-triangle.
        const CombinatorialType triangle_type = t.plus(kDeltaLambda21);
        const BigCount first = BigCount(n) * (t.k3 + 1) * table.s(triangle_type);
        const BigCount whole = BigCount(t.l2) * table.s(t);
        bool on_triangle;
        if (opts.threshold_bernoulli) {
            on_triangle = bernoulli(first, whole, rng);
        } else {
            const BigCount x = rng.uniform_big(whole) + 1;
            on_triangle = x <= first;
        }
        if (on_triangle) {
            Graph d = rcrg_recurse(triangle_type, rng, table, opts);
            const auto edge = uniform_choice(d.isolated_b_edges(), rng);
            const Label v = opts.fresh_labels
                                ? n
                                : static_cast<Label>(rng.uniform_int(static_cast<std::uint64_t>(n)));
            return expand_lambda21(d, edge.first, v);
        }
        Graph d = rcrg_recurse(t.plus(kDeltaLambda22), rng, table, opts);
        const Label at = uniform_choice(d.a_loop_vertices(), rng);
        const auto [v, w] = opts.fresh_labels ? std::pair<Label, Label>{n, n - 1}
                                              : uniform_pair(n, rng);
        const int eps = rng.next_bit() ? 1 : -1;
        return expand_lambda22(d, at, v, w, eps);
    }
    if (t.k3 > 0) {
        Graph d = rcrg_recurse(t.plus(kDeltaKappa3), rng, table, opts);
        const auto edge = uniform_choice(d.a_edge_list(), rng);
        const auto [v, w] = opts.fresh_labels ? std::pair<Label, Label>{n, n - 1}
                                              : uniform_pair(n, rng);
        const int eps = rng.next_bit() ? 1 : -1;
        return expand_kappa3(d, edge, v, w, eps);
    }
    return random_silhouette_graph(n, rng);
}

} // namespace

Graph random_silhouette_graph(int n, RandomSource& rng, std::uint64_t* attempts) {
    require(n >= 6 && n % 6 == 0, "random_silhouette_graph: n must be a positive multiple of 6");
    for (;;) {
        if (attempts != nullptr) ++*attempts;
        // Conjugating the fixed a- and b-structures by independent uniform
        // permutations makes every pairing equally likely.
        const std::vector<Label> pa = random_permutation(n, rng);
        const std::vector<Label> pb = random_permutation(n, rng);
        Graph g;
        for (Label v = 1; v <= n; ++v) g.add_vertex(v);
        for (int i = 0; i + 1 < n; i += 2)
            g.add_a_edge(pa[static_cast<std::size_t>(i)], pa[static_cast<std::size_t>(i) + 1]);
        for (int i = 0; i + 2 < n; i += 3)
            g.add_b_triangle(pb[static_cast<std::size_t>(i)], pb[static_cast<std::size_t>(i) + 1],
                             pb[static_cast<std::size_t>(i) + 2]);
        if (g.is_connected()) return g;
    }
}

Graph random_cyclically_reduced_graph(const CombinatorialType& t, RandomSource& rng,
                                      CountTable& table, const SamplerOptions& opts) {
    if (!t.valid_cyclic() || (!is_silhouette_type(t) && table.s(t) == 0))
        throw EmptyTypeError("random_cyclically_reduced_graph: no graphs of type " + t.str());
    Graph g = rcrg_recurse(t, rng, table, opts);
    if (opts.fresh_labels && t.n > 1) g = random_relabel(g, rng);
    return g;
}

namespace {

// The one-vertex rooted graphs, which sit outside the loop-deletion
// decomposition used for n >= 2: the root may miss either letter or both.
Graph one_vertex_rooted(bool a_loop, bool b_loop) {
    Graph g;
    g.add_vertex(1);
    if (a_loop) g.add_a_loop(1);
    if (b_loop) g.add_b_loop(1);
    g.set_root(1);
    return g;
}

Graph delete_nth_a_loop(Graph g, unsigned long q) {
    const auto loops = g.a_loop_vertices();
    const Label at = loops.at(q);
    g.remove_a_loop(at);
    g.set_root(at);
    return g;
}

Graph delete_nth_b_loop(Graph g, unsigned long q) {
    const auto loops = g.b_loop_vertices();
    const Label at = loops.at(q);
    g.remove_b_loop(at);
    g.set_root(at);
    return g;
}

} // namespace

Graph random_reduced_graph(const CombinatorialType& t, RandomSource& rng, CountTable& table,
                           const SamplerOptions& opts) {
    if (t.n == 1) {
        if (table.L(t) == 0)
            throw EmptyTypeError("random_reduced_graph: no graphs of type " + t.str());
        return one_vertex_rooted(t.l2 == 1, t.l3 == 1);
    }
    const CombinatorialType ta{t.n, t.k2, t.k3, t.l2 + 1, t.l3};
    const CombinatorialType tb{t.n, t.k2, t.k3, t.l2, t.l3 + 1};
    const BigCount block_root = BigCount(t.n) * table.s(t);
    const BigCount block_a = BigCount(t.l2 + 1) * table.s(ta);
    const BigCount block_b = BigCount(t.l3 + 1) * table.s(tb);
    const BigCount total = block_root + block_a + block_b;
    if (total == 0) throw EmptyTypeError("random_reduced_graph: no graphs of type " + t.str());
    BigCount p = rng.uniform_big(total);
    if (p < block_root) {
        const unsigned long q = BigCount(p / table.s(t)).get_ui();
        Graph g = random_cyclically_reduced_graph(t, rng, table, opts);
        g.set_root(static_cast<Label>(q) + 1);
        return g;
    }
    p -= block_root;
    if (p < block_a) {
        const unsigned long q = BigCount(p / table.s(ta)).get_ui();
        return delete_nth_a_loop(random_cyclically_reduced_graph(ta, rng, table, opts), q);
    }
    p -= block_a;
    const unsigned long q = BigCount(p / table.s(tb)).get_ui();
    return delete_nth_b_loop(random_cyclically_reduced_graph(tb, rng, table, opts), q);
}

Graph random_subgroup_iso(int n, const IsomorphismType& sigma, RandomSource& rng,
                          CountTable& table, bool cyclic_only, const SamplerOptions& opts) {
    require(n >= 1, "random_subgroup_iso: size must be positive");
    if (table.count_iso(n, sigma, cyclic_only) == 0)
        throw EmptyTypeError("random_subgroup_iso: no size " + std::to_string(n) +
                             " subgroups of type " + sigma.str());
    if (n == 1) {
        // unique representative per signature; count_iso screened the rest
        return one_vertex_rooted(sigma.l2 == 1, sigma.l3 == 1);
    }
    std::vector<IsoBlock> blocks = iso_blocks(n, sigma);
    if (cyclic_only)
        std::erase_if(blocks, [](const IsoBlock& b) { return b.kind != IsoBlock::Kind::Root; });
    std::vector<BigCount> sizes;
    BigCount total = 0;
    for (const IsoBlock& b : blocks) {
        sizes.push_back(BigCount(b.multiplier) * table.s(b.type));
        total += sizes.back();
    }
    BigCount p = rng.uniform_big(total);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (p >= sizes[i]) {
            p -= sizes[i];
            continue;
        }
        const IsoBlock& b = blocks[i];
        const unsigned long q = BigCount(p / table.s(b.type)).get_ui();
        Graph g = random_cyclically_reduced_graph(b.type, rng, table, opts);
        switch (b.kind) {
        case IsoBlock::Kind::Root:
            g.set_root(static_cast<Label>(q) + 1);
            return g;
        case IsoBlock::Kind::BLoop:
            return delete_nth_b_loop(std::move(g), q);
        case IsoBlock::Kind::ALoop:
            return delete_nth_a_loop(std::move(g), q);
        }
    }
    throw InconsistencyError("random_subgroup_iso: block walk exhausted the total");
}

Graph random_relabel(const Graph& g, RandomSource& rng) {
    require(g.is_normalized(), "random_relabel: graph must be normalized");
    if (g.size() <= 1) return g;
    const std::vector<Label> p = random_permutation(g.size(), rng);
    return g.relabeled([&p](Label x) { return p[static_cast<std::size_t>(x) - 1]; });
}

} // namespace modsub

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "modsub/counting.hpp"
#include "modsub/graph.hpp"

namespace modsub {

// Seeded source of random bits and of exactly uniform integers built from
// them. All draws reduce to single bits of a fixed 64-bit engine so seeded
// runs reproduce bit-for-bit on any platform.
class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    int next_bit();

    // Uniform over {1..n} by rejection on bit_width(n-1) bits.
    std::uint64_t uniform_int(std::uint64_t n);

    // Uniform over {0..bound-1}; bound >= 1. Draws bitlength(bound - 1)
    // bits per attempt and rejects values >= bound, so the expected number
    // of attempts is below 2.
    BigCount uniform_big(const BigCount& bound);

    std::uint64_t bits_consumed() const { return bits_consumed_; }

  private:
    std::mt19937_64 engine_;
    std::uint64_t buffer_ = 0;
    int avail_ = 0;
    std::uint64_t bits_consumed_ = 0;
};

// Exact Bernoulli(numer/denom) by lazily comparing a stream of random bits
// against the binary expansions of numer and denom: a draw x < denom is
// accepted and the result is x < numer, so no arithmetic on big integers
// happens per sample. The expansions are computed once at construction.
class Bernoulli {
  public:
    Bernoulli(const BigCount& numer, const BigCount& denom);

    bool sample(RandomSource& rng);

    std::uint64_t attempts() const { return attempts_; } // includes rejected ones
    std::uint64_t samples() const { return samples_; }

  private:
    enum class Attempt { True, False, Failure };
    Attempt attempt(RandomSource& rng);

    std::vector<unsigned char> denom_bits_; // most significant first
    std::vector<unsigned char> numer_bits_; // padded to the same length
    std::uint64_t attempts_ = 0;
    std::uint64_t samples_ = 0;
};

// One-shot convenience wrapper.
bool bernoulli(const BigCount& numer, const BigCount& denom, RandomSource& rng);

struct SamplerOptions {
    // Insert fresh vertices as n (and n-1) during expansion and apply one
    // uniform relabeling at the end, instead of drawing every insertion
    // label. Both modes produce the uniform distribution.
    bool fresh_labels = true;
    // Decide the two-way branch with the exact Bernoulli above instead of
    // materializing a uniform big integer.
    bool threshold_bernoulli = true;
};

// Uniform labeled silhouette graph on n vertices (n a positive multiple
// of 6): conjugates fixed base permutations by a uniform permutation and
// rejects disconnected results. *attempts, when given, accumulates the
// number of trials including rejected ones.
Graph random_silhouette_graph(int n, RandomSource& rng, std::uint64_t* attempts = nullptr);

// Uniform labeled cyclically reduced graph of combinatorial type t.
Graph random_cyclically_reduced_graph(const CombinatorialType& t, RandomSource& rng,
                                      CountTable& table, const SamplerOptions& opts = {});

// Uniform labeled rooted reduced graph of combinatorial type t (n >= 2).
Graph random_reduced_graph(const CombinatorialType& t, RandomSource& rng, CountTable& table,
                           const SamplerOptions& opts = {});

// Uniform labeled rooted reduced graph of size n whose subgroup has Kurosh
// signature sigma; with cyclic_only, uniform over the rooted cyclically
// reduced ones.
Graph random_subgroup_iso(int n, const IsomorphismType& sigma, RandomSource& rng,
                          CountTable& table, bool cyclic_only = false,
                          const SamplerOptions& opts = {});

// Composes the labeling with a uniform permutation (Fisher-Yates).
Graph random_relabel(const Graph& g, RandomSource& rng);

} // namespace modsub

#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "modsub/graph.hpp"

namespace modsub {

using BigCount = mpz_class;

// num / den, throwing InconsistencyError unless the division is exact.
BigCount exact_div(const BigCount& num, const BigCount& den);

// Number of involutions without fixed points on [m] (m even), and of
// permutations all of whose cycles have length 3 on [m] (m divisible by 3).
// Other arguments are a parity violation and raise PreconditionError.
BigCount t2(long m);
BigCount t3(long m);

BigCount factorial(unsigned long n);
BigCount binomial(unsigned long n, unsigned long k);

// Exact counts of labeled Stallings graphs over Z/2 * Z/3, keyed by
// combinatorial type. Lazily memoized; precompute() fills every valid type
// up to a size bound so later queries are table lookups. One writer at a
// time: either precompute up front or serialize access externally.
class CountTable {
  public:
    // s: labeled cyclically reduced graphs of type t (0 if none exist).
    const BigCount& s(const CombinatorialType& t);

    // Labeled silhouette graphs on n vertices; 0 unless 6 | n, n >= 6.
    const BigCount& count_silhouette(long n);

    // L: labeled rooted reduced graphs of type t; H = L / n! counts the
    // subgroups whose reduced graph has type t.
    BigCount L(const CombinatorialType& t);
    BigCount H(const CombinatorialType& t);

    // Labeled rooted reduced graphs whose subgroup has Kurosh signature
    // sigma; with cyclic_only, only the cyclically reduced ones (the count
    // of conjugacy-class representatives, times n!).
    BigCount count_iso(int n, const IsomorphismType& sigma, bool cyclic_only = false);

    void precompute(int max_n);

    std::size_t entries() const { return memo_.size(); }
    std::size_t nonzero_entries() const;

    void save(std::ostream& out) const;
    void save_file(const std::string& path) const;
    static CountTable load(std::istream& in);
    static CountTable load_file(const std::string& path);

  private:
    const BigCount& memoize(const CombinatorialType& t, BigCount value);
    BigCount s_fresh(const CombinatorialType& t);
    const BigCount& silhouette_fill(long sz);

    std::map<CombinatorialType, BigCount> memo_;
};

// One addend of the rooted count for a given size and Kurosh signature:
// multiplier * s(type). The kind records how the root arises: rooting a
// cyclically reduced graph anywhere, or deleting one b-loop or one a-loop
// of the augmented type and rooting at the orphaned vertex.
struct IsoBlock {
    enum class Kind { Root, BLoop, ALoop };
    Kind kind;
    long multiplier; // n, l3 + 1, or l2 + 1
    CombinatorialType type;
};

// Block decomposition shared by count_iso and the isomorphism-type sampler.
// The parity of n - l2 decides which blocks can appear. One-vertex graphs
// whose root misses both letters fall outside every block, so callers
// special-case n == 1.
std::vector<IsoBlock> iso_blocks(int n, const IsomorphismType& sigma);

// All structurally valid cyclically reduced types with the given size.
std::vector<CombinatorialType> valid_cyclic_types(int n);

} // namespace modsub

#include "modsub/counting.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

namespace modsub {

BigCount exact_div(const BigCount& num, const BigCount& den) {
    if (den == 0) throw InconsistencyError("exact_div: zero divisor");
    BigCount q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0)
        throw InconsistencyError("exact_div: " + num.get_str() + " not divisible by " +
                                 den.get_str());
    return q;
}

BigCount t2(long m) {
    if (m < 0 || m % 2 != 0) throw PreconditionError("t2: argument must be even and >= 0");
    BigCount out = 1;
    for (long i = 1; 2 * i <= m; ++i) out *= 2 * i - 1;
    return out;
}

BigCount t3(long m) {
    if (m < 0 || m % 3 != 0)
        throw PreconditionError("t3: argument must be divisible by 3 and >= 0");
    BigCount out = 1;
    for (long i = 1; 3 * i <= m; ++i) out *= BigCount(3 * i - 1) * (3 * i - 2);
    return out;
}

BigCount factorial(unsigned long n) {
    BigCount out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

BigCount binomial(unsigned long n, unsigned long k) {
    BigCount out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

namespace {

const BigCount kZero = 0;

// The four types realized on at most 2 vertices, with their counts.
const std::pair<CombinatorialType, int> kBaseCounts[] = {
    {{1, 0, 0, 1, 1}, 1}, // Delta1
    {{2, 1, 1, 0, 0}, 2}, // Delta2, two arc directions
    {{2, 0, 1, 2, 0}, 2}, // Delta3, two arc directions
    {{2, 1, 0, 0, 2}, 1}, // Delta4
};

} // namespace

const BigCount& CountTable::memoize(const CombinatorialType& t, BigCount value) {
    return memo_.emplace(t, std::move(value)).first->second;
}

const BigCount& CountTable::s(const CombinatorialType& t) {
    if (!t.valid_cyclic()) return kZero;
    if (auto it = memo_.find(t); it != memo_.end()) return it->second;
    return memoize(t, s_fresh(t));
}

BigCount CountTable::s_fresh(const CombinatorialType& t) {
    if (t.n <= 2) {
        for (const auto& [base, count] : kBaseCounts)
            if (t == base) return count;
        return 0;
    }
    const int n = t.n;
    if (t.l3 > 0) {
        // peel a b-loop: each type-t graph contracts to n(l2+1)/l3 graphs
        // of the b-loop-free-er type and the map is a bijection on pairs
        BigCount sub = s({n - 1, t.k2 - 1, t.k3, t.l2 + 1, t.l3 - 1});
        return exact_div(BigCount(n) * (t.l2 + 1) * sub, t.l3);
    }
    if (t.l2 > 0) {
        // peel an a-loop: either it sits on a b-triangle or next to an
        // isolated b-edge; the two cases contract differently
        BigCount tri = s({n - 1, t.k2, t.k3 + 1, t.l2 - 1, t.l3});
        BigCount edge = s({n - 2, t.k2 - 1, t.k3 - 1, t.l2, t.l3});
        return exact_div(BigCount(n) * (t.k3 + 1) * tri, t.l2) +
               BigCount(2) * n * (n - 1) * edge;
    }
    if (t.k3 > 0) {
        BigCount sub = s({n - 2, t.k2 - 1, t.k3 - 1, 0, t.l3});
        return exact_div(BigCount(2) * n * (n - 1) * (t.k2 - 1) * sub, t.k3);
    }
    // loopless with no isolated b-edge: a silhouette type; validity already
    // gives 2*k2 = n and 3 | n, hence 6 | n
    return silhouette_fill(n);
}

const BigCount& CountTable::silhouette_fill(long sz) {
    const long M = sz / 6;
    // tt[j] = t2(6j) * t3(6j), built incrementally: rebuilding the two
    // factors per term would make the whole fill cubic in M.
    std::vector<BigCount> tt(static_cast<std::size_t>(M) + 1);
    BigCount f2 = 1, f3 = 1;
    tt[0] = 1;
    for (long j = 1; j <= M; ++j) {
        const long m = 6 * j;
        f2 *= BigCount(m - 1) * (m - 3) * (m - 5);
        f3 *= BigCount(m - 1) * (m - 2) * (m - 4) * (m - 5);
        tt[static_cast<std::size_t>(j)] = f2 * f3;
    }
    for (long mm = 6; mm <= sz; mm += 6) {
        const CombinatorialType st{static_cast<int>(mm), static_cast<int>(mm / 2), 0, 0, 0};
        if (memo_.count(st)) continue;
        const long Mloc = mm / 6;
        // all pairings minus those whose component of vertex 1 is smaller
        BigCount total = tt[static_cast<std::size_t>(Mloc)];
        BigCount bin; // C(mm-1, 6j-1), advanced by ratio updates
        mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(mm - 1), 5);
        for (long j = 1; 6 * j < mm; ++j) {
            const CombinatorialType part{static_cast<int>(6 * j), static_cast<int>(3 * j), 0, 0,
                                         0};
            total -= bin * memo_.at(part) * tt[static_cast<std::size_t>(Mloc - j)];
            for (long i = 6 * j; i < 6 * j + 6; ++i) {
                bin *= mm - i;
                mpz_divexact_ui(bin.get_mpz_t(), bin.get_mpz_t(), static_cast<unsigned long>(i));
            }
        }
        memoize(st, std::move(total));
    }
    return memo_.at({static_cast<int>(sz), static_cast<int>(sz / 2), 0, 0, 0});
}

const BigCount& CountTable::count_silhouette(long n) {
    if (n < 6 || n % 6 != 0) return kZero;
    return s({static_cast<int>(n), static_cast<int>(n / 2), 0, 0, 0});
}

BigCount CountTable::L(const CombinatorialType& t) {
    if (t.n == 1) {
        bool known = t == CombinatorialType{1, 0, 0, 1, 1} ||
                     t == CombinatorialType{1, 0, 0, 1, 0} ||
                     t == CombinatorialType{1, 0, 0, 0, 1} ||
                     t == CombinatorialType{1, 0, 0, 0, 0};
        return known ? 1 : 0;
    }
    if (t.n < 1) return 0;
    BigCount out = BigCount(t.n) * s(t);
    out += BigCount(t.l2 + 1) * s({t.n, t.k2, t.k3, t.l2 + 1, t.l3});
    out += BigCount(t.l3 + 1) * s({t.n, t.k2, t.k3, t.l2, t.l3 + 1});
    return out;
}

BigCount CountTable::H(const CombinatorialType& t) {
    BigCount l = L(t);
    if (l == 0) return l;
    return exact_div(l, factorial(static_cast<unsigned long>(t.n)));
}

BigCount CountTable::count_iso(int n, const IsomorphismType& sigma, bool cyclic_only) {
    if (sigma.l2 < 0 || sigma.l3 < 0 || sigma.r < 0) return 0;
    if (n == 1) {
        // the four one-vertex subgroup graphs; only Delta1 is cyclically reduced
        if (cyclic_only) return sigma == IsomorphismType{1, 1, 0} ? 1 : 0;
        bool known = sigma == IsomorphismType{0, 0, 0} || sigma == IsomorphismType{1, 0, 0} ||
                     sigma == IsomorphismType{0, 1, 0} || sigma == IsomorphismType{1, 1, 0};
        return known ? 1 : 0;
    }
    if (n < 1) return 0;
    BigCount total = 0;
    for (const IsoBlock& b : iso_blocks(n, sigma)) {
        if (cyclic_only && b.kind != IsoBlock::Kind::Root) continue;
        total += BigCount(b.multiplier) * s(b.type);
    }
    return total;
}

void CountTable::precompute(int max_n) {
    for (int n = 1; n <= max_n; ++n)
        for (const CombinatorialType& t : valid_cyclic_types(n)) s(t);
}

std::size_t CountTable::nonzero_entries() const {
    std::size_t count = 0;
    for (const auto& [t, value] : memo_)
        if (value != 0) ++count;
    return count;
}

std::vector<IsoBlock> iso_blocks(int n, const IsomorphismType& sigma) {
    std::vector<IsoBlock> out;
    if (n < 1 || sigma.l2 < 0 || sigma.l3 < 0 || sigma.r < 0) return out;
    const int l2 = sigma.l2, l3 = sigma.l3;
    const long p = static_cast<long>(n) - 3 * l2 - 4 * l3 - 6 * sigma.r;
    // Parity decides which blocks can be populated: the cyclically reduced
    // and deleted-b-loop blocks pair all n - l2 non-loop vertices with
    // a-edges, the deleted-a-loop block carries one extra a-loop. Note
    // p == n - l2 (mod 2), so the k3 values below are always integers.
    if ((n - l2) % 2 == 0) {
        const int k2 = (n - l2) / 2;
        if (p + 6 >= 0)
            out.push_back({IsoBlock::Kind::Root, n,
                           {n, k2, static_cast<int>((p + 6) / 2), l2, l3}});
        if (p + 2 >= 0)
            out.push_back({IsoBlock::Kind::BLoop, l3 + 1,
                           {n, k2, static_cast<int>((p + 2) / 2), l2, l3 + 1}});
    } else {
        const int k2 = (n - l2 - 1) / 2;
        if (p + 3 >= 0)
            out.push_back({IsoBlock::Kind::ALoop, l2 + 1,
                           {n, k2, static_cast<int>((p + 3) / 2), l2 + 1, l3}});
    }
    return out;
}

std::vector<CombinatorialType> valid_cyclic_types(int n) {
    std::vector<CombinatorialType> out;
    if (n < 1) return out;
    for (int l2 = n % 2; l2 <= n; l2 += 2) {
        const int k2 = (n - l2) / 2;
        for (int k3 = 0; 2 * k3 <= n; ++k3)
            for (int l3 = (n - 2 * k3) % 3; 2 * k3 + l3 <= n; l3 += 3)
                out.push_back({n, k2, k3, l2, l3});
    }
    return out;
}

// ---------------------------------------------------------------------------
// table file format: magic, entry count, then (type, magnitude) records.
// All fixed-width integers little-endian; magnitudes big-endian as exported.

namespace {

constexpr char kMagic[8] = {'M', 'S', 'U', 'B', 'T', 'B', 'L', '1'};

void put_u64(std::ostream& out, std::uint64_t x) {
    char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((x >> (8 * i)) & 0xff);
    out.write(buf, 8);
}

std::uint64_t get_u64(std::istream& in) {
    char buf[8];
    in.read(buf, 8);
    std::uint64_t x = 0;
    for (int i = 0; i < 8; ++i)
        x |= static_cast<std::uint64_t>(static_cast<unsigned char>(buf[i])) << (8 * i);
    return x;
}

} // namespace

void CountTable::save(std::ostream& out) const {
    out.write(kMagic, sizeof kMagic);
    put_u64(out, memo_.size());
    for (const auto& [t, value] : memo_) {
        put_u64(out, static_cast<std::uint64_t>(t.n));
        put_u64(out, static_cast<std::uint64_t>(t.k2));
        put_u64(out, static_cast<std::uint64_t>(t.k3));
        put_u64(out, static_cast<std::uint64_t>(t.l2));
        put_u64(out, static_cast<std::uint64_t>(t.l3));
        std::size_t bytes = 0;
        std::vector<unsigned char> mag((mpz_sizeinbase(value.get_mpz_t(), 2) + 7) / 8);
        if (value != 0)
            mpz_export(mag.data(), &bytes, 1, 1, 1, 0, value.get_mpz_t());
        put_u64(out, bytes);
        if (bytes) out.write(reinterpret_cast<const char*>(mag.data()), bytes);
    }
    if (!out) throw PreconditionError("count table: write failed");
}

CountTable CountTable::load(std::istream& in) {
    char magic[8];
    in.read(magic, 8);
    if (!in || !std::equal(magic, magic + 8, kMagic))
        throw PreconditionError("count table: bad magic or version");
    CountTable table;
    std::uint64_t count = get_u64(in);
    for (std::uint64_t i = 0; i < count && in; ++i) {
        CombinatorialType t;
        t.n = static_cast<int>(get_u64(in));
        t.k2 = static_cast<int>(get_u64(in));
        t.k3 = static_cast<int>(get_u64(in));
        t.l2 = static_cast<int>(get_u64(in));
        t.l3 = static_cast<int>(get_u64(in));
        std::uint64_t bytes = get_u64(in);
        BigCount value = 0;
        if (bytes) {
            std::vector<unsigned char> mag(bytes);
            in.read(reinterpret_cast<char*>(mag.data()), static_cast<std::streamsize>(bytes));
            mpz_import(value.get_mpz_t(), bytes, 1, 1, 1, 0, mag.data());
        }
        if (!in) break;
        table.memo_.emplace(t, std::move(value));
    }
    if (!in) throw PreconditionError("count table: truncated file");
    return table;
}

void CountTable::save_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw PreconditionError("count table: cannot open " + path);
    save(out);
}

CountTable CountTable::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PreconditionError("count table: cannot open " + path);
    return load(in);
}

} // namespace modsub

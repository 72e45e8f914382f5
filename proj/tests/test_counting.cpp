#include <cstdio>
#include <map>
#include <sstream>
#include <string>

#include "doctest.h"
#include "modsub/counting.hpp"
#include "modsub/oracle.hpp"

using namespace modsub;

TEST_CASE("arithmetic helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == BigCount("2432902008176640000"));
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(11, 5) == 462);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(3, 5) == 0);

    CHECK(exact_div(BigCount(12), BigCount(4)) == 3);
    CHECK_THROWS_AS(exact_div(BigCount(12), BigCount(5)), InconsistencyError);

    // fixed-point-free involutions and all-3-cycle permutations
    CHECK(t2(0) == 1);
    CHECK(t2(2) == 1);
    CHECK(t2(4) == 3);
    CHECK(t2(6) == 15);
    CHECK(t2(12) == 10395);
    CHECK_THROWS_AS(t2(3), PreconditionError);
    CHECK(t3(0) == 1);
    CHECK(t3(3) == 2);
    CHECK(t3(6) == 40);
    CHECK(t3(9) == 2240);
    CHECK(t3(12) == 246400);
    CHECK_THROWS_AS(t3(4), PreconditionError);
}

TEST_CASE("base type counts") {
    CountTable table;
    CHECK(table.s({1, 0, 0, 1, 1}) == 1);
    CHECK(table.s({2, 1, 1, 0, 0}) == 2);
    CHECK(table.s({2, 0, 1, 2, 0}) == 2);
    CHECK(table.s({2, 1, 0, 0, 2}) == 1);
    // structurally invalid types count zero
    CHECK(table.s({2, 1, 1, 1, 0}) == 0);
    CHECK(table.s({3, 1, 1, 0, 0}) == 0);
    CHECK(table.s({0, 0, 0, 0, 0}) == 0);
    // valid but unrealizable: only disconnected configurations exist
    CHECK(table.s({2, 0, 0, 2, 2}) == 0);
    CHECK(table.s({12, 4, 2, 4, 2}) == 0);
}

TEST_CASE("counts by size, frozen from the brute-force enumeration") {
    CountTable table;

    const std::map<CombinatorialType, BigCount> expected3 = {
        {{3, 0, 0, 3, 0}, 2}, {{3, 1, 0, 1, 0}, 6}, {{3, 1, 1, 1, 1}, 12}};
    const std::map<CombinatorialType, BigCount> expected4 = {
        {{4, 1, 0, 2, 1}, 24},
        {{4, 1, 2, 2, 0}, 48},
        {{4, 2, 0, 0, 1}, 24},
        {{4, 2, 1, 0, 2}, 24},
        {{4, 2, 2, 0, 0}, 24}};

    for (const auto& t : valid_cyclic_types(3)) {
        auto it = expected3.find(t);
        CHECK(table.s(t) == (it == expected3.end() ? BigCount(0) : it->second));
    }
    for (const auto& t : valid_cyclic_types(4)) {
        auto it = expected4.find(t);
        CHECK(table.s(t) == (it == expected4.end() ? BigCount(0) : it->second));
    }

    // totals per size
    const BigCount totals[] = {1, 5, 20, 144, 1320, 15120};
    for (int n = 1; n <= 6; ++n) {
        BigCount sum = 0;
        for (const auto& t : valid_cyclic_types(n)) sum += table.s(t);
        CHECK(sum == totals[n - 1]);
    }
}

TEST_CASE("recurrences agree with the enumeration oracle up to size 6") {
    CountTable table;
    for (int n = 1; n <= 6; ++n) {
        auto oracle = count_by_type(n);
        for (const auto& t : valid_cyclic_types(n)) {
            auto it = oracle.find(t);
            BigCount truth = it == oracle.end() ? BigCount(0) : it->second;
            CAPTURE(t.str());
            CHECK(table.s(t) == truth);
        }
        // and the oracle produces no type outside the valid list
        for (const auto& [t, c] : oracle) CHECK(t.valid_cyclic());
    }
}

TEST_CASE("silhouette counts") {
    CountTable table;
    CHECK(table.count_silhouette(6) == 600);
    CHECK(table.count_silhouette(12) == BigCount("2395008000"));
    CHECK(table.count_silhouette(18) == BigCount("393034608046080000"));
    CHECK(table.count_silhouette(24) == BigCount("701106693958560566476800000"));
    // silhouette types are part of the same table
    CHECK(table.s({12, 6, 0, 0, 0}) == BigCount("2395008000"));
    // sizes that are not positive multiples of 6 hold no silhouettes
    for (long n : {1L, 2L, 3L, 5L, 7L, 9L, 100L}) CHECK(table.count_silhouette(n) == 0);

    // n * s(n) / n! is a positive integer for every multiple of 6
    const BigCount ratios[] = {5, 60, 1105};
    for (long n = 6; n <= 72; n += 6) {
        BigCount q = exact_div(BigCount(n) * table.count_silhouette(n), factorial(n));
        CHECK(q > 0);
        if (n <= 18) CHECK(q == ratios[n / 6 - 1]);
    }
}

TEST_CASE("rooted counts and subgroup counts") {
    CountTable table;

    // size 1: four subgroups, one per choice of loops at the root
    for (int l2 : {0, 1})
        for (int l3 : {0, 1}) {
            CHECK(table.L({1, 0, 0, l2, l3}) == 1);
            CHECK(table.H({1, 0, 0, l2, l3}) == 1);
        }

    // size 2, frozen from the rooted enumeration
    CHECK(table.L({2, 1, 1, 0, 0}) == 4);
    CHECK(table.L({2, 0, 1, 2, 0}) == 4);
    CHECK(table.L({2, 1, 0, 0, 2}) == 2);
    CHECK(table.L({2, 0, 1, 1, 0}) == 4); // root misses the a-side
    CHECK(table.L({2, 1, 0, 0, 1}) == 2); // root misses the b-side
    CHECK(table.L({2, 0, 0, 2, 1}) == 0); // only disconnected realizations
    CHECK(table.H({2, 1, 1, 0, 0}) == 2);
    CHECK(table.H({2, 0, 1, 1, 0}) == 2);
    CHECK(table.H({2, 1, 0, 0, 1}) == 1);

    // rooted enumeration oracle, size <= 4
    for (int n = 2; n <= 4; ++n) {
        auto oracle = count_reduced_by_type(n);
        for (const auto& [t, c] : oracle) {
            CAPTURE(t.str());
            CHECK(table.L(t) == c);
        }
    }

    // subgroup totals by size
    const BigCount subgroups[] = {4, 8, 16, 34, 76, 167};
    for (int n = 1; n <= 6; ++n) {
        BigCount sum = 0;
        for (const auto& [t, c] : count_reduced_by_type(n)) {
            (void)c;
            sum += table.H(t);
        }
        CHECK(sum == subgroups[n - 1]);
    }

    // L is always divisible by n!
    for (int n = 2; n <= 5; ++n)
        for (const auto& [t, c] : count_reduced_by_type(n))
            CHECK(table.H(t) * factorial(static_cast<unsigned long>(n)) == c);
}

TEST_CASE("counts by isomorphism type") {
    CountTable table;

    SUBCASE("size 1 catalogue") {
        for (int l2 : {0, 1})
            for (int l3 : {0, 1})
                CHECK(table.count_iso(1, {l2, l3, 0}) == 1);
        CHECK(table.count_iso(1, {1, 1, 0}, true) == 1);
        CHECK(table.count_iso(1, {1, 0, 0}, true) == 0);
        CHECK(table.count_iso(1, {0, 0, 1}) == 0);
    }

    SUBCASE("frozen values, sizes 2 to 5") {
        CHECK(table.count_iso(2, {0, 0, 1}) == 4);
        CHECK(table.count_iso(2, {2, 0, 0}) == 4);
        CHECK(table.count_iso(2, {1, 0, 0}) == 4);
        CHECK(table.count_iso(2, {1, 0, 0}, true) == 0);
        CHECK(table.count_iso(4, {0, 0, 1}) == 120);
        CHECK(table.count_iso(4, {0, 0, 1}, true) == 96);
        CHECK(table.count_iso(4, {2, 0, 0}) == 216);
        CHECK(table.count_iso(4, {2, 0, 0}, true) == 192);
        CHECK(table.count_iso(5, {1, 1, 0}) == 2640);
        CHECK(table.count_iso(5, {1, 1, 0}, true) == 2400);
        CHECK(table.count_iso(5, {0, 2, 0}) == 120);
        CHECK(table.count_iso(3, {3, 0, 0}) == 6);
        // impossible signatures
        CHECK(table.count_iso(3, {0, 0, 2}) == 0);
        CHECK(table.count_iso(2, {0, 0, 0}) == 0);
    }

    SUBCASE("agreement with the rooted oracle up to size 5") {
        for (int n = 1; n <= 5; ++n) {
            std::map<std::string, BigCount> rooted, cyc;
            std::map<std::string, IsomorphismType> sig;
            for_each_reduced(n, [&](const Graph& g) {
                IsomorphismType s = g.isomorphism_type();
                rooted[s.str()] += 1;
                if (g.is_cyclically_reduced()) cyc[s.str()] += 1;
                sig[s.str()] = s;
            });
            for (const auto& [k, c] : rooted) {
                CAPTURE(n);
                CAPTURE(k);
                CHECK(table.count_iso(n, sig[k]) == c);
                BigCount cc = cyc.count(k) ? cyc[k] : BigCount(0);
                CHECK(table.count_iso(n, sig[k], true) == cc);
            }
        }
    }

    SUBCASE("block decomposition") {
        // n = 4, one copy of Z/2 * Z/2: a cyclically reduced block rooted
        // anywhere plus a deleted-b-loop block
        auto blocks = iso_blocks(4, {2, 0, 0});
        REQUIRE(blocks.size() == 2);
        CHECK(blocks[0].kind == IsoBlock::Kind::Root);
        CHECK(blocks[0].multiplier == 4);
        CHECK(blocks[0].type == CombinatorialType{4, 1, 2, 2, 0});
        CHECK(blocks[1].kind == IsoBlock::Kind::BLoop);
        CHECK(blocks[1].multiplier == 1);
        CHECK(blocks[1].type == CombinatorialType{4, 1, 0, 2, 1});
        // 4 * 48 + 1 * 24 = 216, matching count_iso above

        // odd parity of n - l2: only the deleted-a-loop block remains
        auto odd = iso_blocks(3, {0, 1, 0});
        REQUIRE(odd.size() == 1);
        CHECK(odd[0].kind == IsoBlock::Kind::ALoop);
        CHECK(odd[0].multiplier == 1);
        CHECK(odd[0].type == CombinatorialType{3, 1, 1, 1, 1});
    }
}

TEST_CASE("precompute and persistence") {
    CountTable table;
    table.precompute(2);
    CHECK(table.nonzero_entries() == 4);
    std::size_t entries = table.entries();
    CHECK(entries >= 4);

    table.precompute(6);
    CHECK(table.s({6, 3, 0, 0, 0}) == 600);

    std::ostringstream out;
    table.save(out);
    std::istringstream in(out.str());
    CountTable loaded = CountTable::load(in);
    CHECK(loaded.entries() == table.entries());
    CHECK(loaded.nonzero_entries() == table.nonzero_entries());
    CHECK(loaded.s({6, 3, 0, 0, 0}) == 600);
    CHECK(loaded.s({4, 1, 2, 2, 0}) == 48);

    SUBCASE("file round trip") {
        std::string path = "counting_test_table.bin";
        table.save_file(path);
        CountTable fromfile = CountTable::load_file(path);
        CHECK(fromfile.entries() == table.entries());
        std::remove(path.c_str());
    }

    SUBCASE("corrupt input is rejected") {
        std::istringstream garbage("not a table");
        CHECK_THROWS_AS(CountTable::load(garbage), PreconditionError);
        CHECK_THROWS_AS(CountTable::load_file("no_such_file.bin"), PreconditionError);
    }
}

TEST_CASE("type inventory is complete") {
    // every size-n valid type is produced, nothing else
    for (const auto& t : valid_cyclic_types(7)) {
        CHECK(t.n == 7);
        CHECK(t.valid_cyclic());
    }
    // spot check one inventory exactly
    std::vector<CombinatorialType> expect = {
        {2, 0, 0, 2, 2}, {2, 0, 1, 2, 0}, {2, 1, 0, 0, 2}, {2, 1, 1, 0, 0}};
    auto got = valid_cyclic_types(2);
    std::sort(got.begin(), got.end());
    std::sort(expect.begin(), expect.end());
    CHECK(got == expect);
}

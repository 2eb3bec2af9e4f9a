#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zsindex/enumgen.hpp"
#include "zsindex/zseq.hpp"

using namespace zsindex;

namespace {

ResidueSeq seq(Int n, std::vector<Int> terms) { return ResidueSeq(factorize(n), std::move(terms)); }

}  // namespace

TEST_CASE("terms outside [1, n-1] are rejected") {
    CHECK_THROWS_AS(seq(25, {0, 1, 2, 22}), std::invalid_argument);
    CHECK_THROWS_AS(seq(25, {1, 2, 3, 25}), std::invalid_argument);
    CHECK_THROWS_AS(seq(25, {-1, 2, 3, 21}), std::invalid_argument);
}

TEST_CASE("zero_sum_nu") {
    CHECK(zero_sum_nu(seq(1235, {13, 285, 975, 1197})) == 2);
    CHECK(zero_sum_nu(seq(25, {1, 1, 1, 22})) == 1);
    CHECK(!zero_sum_nu(seq(25, {1, 2, 3, 4})));
}

TEST_CASE("minimality checks all proper sub-multisets") {
    CHECK(is_minimal_zero_sum(seq(1235, {13, 285, 975, 1197})));
    CHECK(is_minimal_zero_sum(seq(25, {1, 1, 1, 22})));
    CHECK(!is_minimal_zero_sum(seq(25, {5, 20, 3, 22})));  // 5 + 20 = n
    CHECK(!is_minimal_zero_sum(seq(25, {1, 2, 3, 4})));    // not zero-sum

    // agree with the bit-mask oracle on every quadruple for small n
    for (Int n : {8, 12, 19, 25, 30}) {
        Modulus m = factorize(n);
        for (Int x1 = 1; x1 < n; ++x1)
            for (Int x2 = x1; x2 < n; ++x2)
                for (Int x3 = x2; x3 < n; ++x3)
                    for (Int x4 = x3; x4 < n; ++x4)
                        CHECK(is_minimal_zero_sum(ResidueSeq(m, {x1, x2, x3, x4})) ==
                              oracle::minimal_bitmask({x1, x2, x3, x4}, n));
    }
}

TEST_CASE("g_norm on the worked multipliers") {
    CHECK(g_norm(seq(1235, {13, 285, 975, 1197}), 18) == 1);  // 234+190+260+551 = 1235
    CHECK(g_norm(seq(2635, {17, 510, 2170, 2573}), 32) == 1); // 544+510+930+651 = 2635
    CHECK(g_norm(seq(1235, {13, 285, 975, 1197}), 1) == 2);   // normalized shape sums to 2n
    CHECK_THROWS_AS(g_norm(seq(10, {1, 2, 3, 4}), 5), std::invalid_argument);
    // non-zero-sum input reports the raw residue sum
    CHECK(g_norm(seq(25, {1, 2, 3, 4}), 1) == 10);
}

TEST_CASE("index_of") {
    IndexResult idx = index_of(seq(1001, {11, 182, 847, 962}));
    CHECK(idx.value == 1);
    CHECK(g_norm(seq(1001, {11, 182, 847, 962}), idx.witness) == 1);

    IndexResult easy = index_of(seq(25, {1, 1, 1, 22}));
    CHECK(easy.value == 1);
    CHECK(easy.witness == 1);

    // smallest off-hypothesis modulus with an index-2 quadruple
    IndexResult two = index_of(seq(6, {1, 3, 4, 4}));
    CHECK(two.value == 2);

    CHECK_THROWS_AS(index_of(seq(25, {1, 2, 3, 4})), std::invalid_argument);
}

TEST_CASE("index agrees with the full-scan oracle on every minimal quadruple, n <= 40") {
    for (Int n = 5; n <= 40; ++n) {
        Modulus m = factorize(n);
        enumerate_quadruples(m, EnumFilter{}, [&](const ResidueSeq& s) {
            CHECK(index_of(s).value == oracle::full_index(s.terms(), n));
            return true;
        });
    }
}

TEST_CASE("complement duality for zero-sum quadruples") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 4000; ++i) {
        Int n = 5 + static_cast<Int>(rng() % 296);
        Modulus m = factorize(n);
        auto s = random_instance(m, EnumFilter{}, rng());
        if (!s) continue;
        auto us = units(m);
        Int v = us[rng() % us.size()];
        CHECK(g_norm(*s, n - v) == 4 - g_norm(*s, v));
    }
}

TEST_CASE("index is a unit-orbit invariant") {
    std::mt19937_64 rng(13);
    for (Int n : {25, 49, 91, 143}) {
        Modulus m = factorize(n);
        auto us = units(m);
        for (int i = 0; i < 1000; ++i) {
            auto s = random_instance(m, EnumFilter{}, rng());
            if (!s) continue;
            Int v = us[rng() % us.size()];
            std::vector<Int> mult;
            for (Int x : s->terms()) mult.push_back(residue(v * x, m));
            CHECK(index_of(ResidueSeq(m, mult)).value == index_of(*s).value);
        }
    }
}

TEST_CASE("minimal zero-sum sequences of length <= 3 have index 1") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 3000; ++i) {
        Int n = 5 + static_cast<Int>(rng() % 196);
        Modulus m = factorize(n);
        Int x1 = 1 + static_cast<Int>(rng() % (n - 1));
        SUBCASE("") {}
        // length 2: (x, n-x)
        ResidueSeq pair(m, {x1, n - x1});
        if (is_minimal_zero_sum(pair)) CHECK(index_of(pair).value == 1);
        // length 3
        Int x2 = 1 + static_cast<Int>(rng() % (n - 1));
        Int x3 = residue(-(x1 + x2), m);
        if (x3 == n) continue;
        ResidueSeq triple(m, {x1, x2, x3});
        if (is_minimal_zero_sum(triple)) CHECK(index_of(triple).value == 1);
    }
}

TEST_CASE("canonical_rep is idempotent, orbit-constant and lex-minimal") {
    CHECK(canonical_rep(seq(25, {1, 1, 1, 22})) == seq(25, {1, 1, 1, 22}));

    std::mt19937_64 rng(19);
    for (int i = 0; i < 500; ++i) {
        Int n = 5 + static_cast<Int>(rng() % 196);
        Modulus m = factorize(n);
        auto s = random_instance(m, EnumFilter{}, rng());
        if (!s) continue;
        ResidueSeq rep = canonical_rep(*s);
        CHECK(canonical_rep(rep) == rep);
        CHECK(rep.terms() <= s->terms());
        auto us = units(m);
        Int v = us[rng() % us.size()];
        std::vector<Int> mult;
        for (Int x : s->terms()) mult.push_back(residue(v * x, m));
        CHECK(canonical_rep(ResidueSeq(m, mult)) == rep);
        // the orbit partitions under the unit-group action
        CHECK(m.phi % orbit_size(*s) == 0);
    }
}

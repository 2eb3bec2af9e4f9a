#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zsindex/modarith.hpp"

using namespace zsindex;

TEST_CASE("residue maps into [1, n] with multiples of n at n") {
    Modulus m7 = factorize(7);
    CHECK(residue(7, m7) == 7);
    CHECK(residue(0, m7) == 7);
    CHECK(residue(14, m7) == 7);
    CHECK(residue(18 * 285, factorize(1235)) == 190);
    CHECK(residue(-3, factorize(25)) == 22);

    std::mt19937_64 rng(1);
    for (int i = 0; i < 2000; ++i) {
        Int n = 2 + static_cast<Int>(rng() % 500);
        Int x = static_cast<Int>(rng() % 2000001) - 1000000;
        Int r = residue(x, n);
        CHECK(r >= 1);
        CHECK(r <= n);
        CHECK((r - x) % n == 0);
    }
}

TEST_CASE("complement identity and unit multiples stay off n") {
    for (Int n : {9, 10, 25, 91, 1001}) {
        Modulus m = factorize(n);
        for (Int x = 1; x < n; ++x) CHECK(residue(-x, m) == n - residue(x, m));
        for (Int v : units(m))
            for (Int x = 1; x < n; ++x) {
                Int r = residue(v * x, m);
                CHECK(r >= 1);
                CHECK(r <= n - 1);
            }
    }
}

TEST_CASE("factorize") {
    Modulus m = factorize(1235);
    CHECK(m.prime_factors == std::vector<std::pair<Int, int>>{{5, 1}, {13, 1}, {19, 1}});
    CHECK(factorize(1001).prime_factors ==
          std::vector<std::pair<Int, int>>{{7, 1}, {11, 1}, {13, 1}});
    CHECK(factorize(2048).prime_factors == std::vector<std::pair<Int, int>>{{2, 11}});
    CHECK(factorize(2048).phi == 1024);
    CHECK_THROWS_AS(factorize(1), std::invalid_argument);
    CHECK_THROWS_AS(factorize(-4), std::invalid_argument);

    for (Int n = 2; n <= 300; ++n) {
        Modulus mm = factorize(n);
        Int prod = 1;
        Int prev = 0;
        for (auto [p, e] : mm.prime_factors) {
            CHECK(p > prev);
            prev = p;
            CHECK(e >= 1);
            for (int i = 0; i < e; ++i) prod *= p;
        }
        CHECK(prod == n);
        Int count = 0;
        for (Int v = 1; v < n; ++v)
            if (std::gcd(v, n) == 1) ++count;
        CHECK(mm.phi == count);
    }
}

TEST_CASE("units stream is ascending, coprime, of length phi") {
    CHECK(units(factorize(7)) == std::vector<Int>{1, 2, 3, 4, 5, 6});
    CHECK(units(factorize(10)) == std::vector<Int>{1, 3, 7, 9});
    auto us = units(factorize(1235));
    CHECK(us.size() == 864);  // 4 * 12 * 18
    for (std::size_t i = 1; i < us.size(); ++i) CHECK(us[i - 1] < us[i]);
}

TEST_CASE("inverse") {
    CHECK(inverse(1, factorize(17)) == 1);
    CHECK(inverse(6, factorize(1001)) == 167);
    CHECK(inverse(3, factorize(10)) == 7);
    CHECK_THROWS_AS(inverse(5, factorize(10)), std::invalid_argument);

    // every unit of every n <= 1000
    for (Int n = 2; n <= 1000; ++n) {
        Modulus m = factorize(n);
        for (Int v : units(m)) {
            Int w = inverse(v, m);
            CHECK(w >= 1);
            CHECK(w <= n - 1);
            CHECK(residue(v * w, m) == residue(1, m));
        }
    }
}

TEST_CASE("rational bounds and integer cuts") {
    CHECK(Rational(4, 8) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(floor_rational(Rational(7, 2)) == 3);
    CHECK(ceil_rational(Rational(7, 2)) == 4);
    CHECK(floor_rational(Rational(-7, 2)) == -4);
    CHECK(ceil_rational(Rational(-7, 2)) == -3);
    CHECK(first_integer_at_least({Rational(6, 2), true}) == 3);
    CHECK(first_integer_at_least({Rational(6, 2), false}) == 4);
    CHECK(last_integer_at_most({Rational(6, 2), true}) == 3);
    CHECK(last_integer_at_most({Rational(6, 2), false}) == 2);
}

TEST_CASE("coprime_in_interval on the worked endpoints") {
    Modulus m1235 = factorize(1235);
    auto scan = coprime_in_interval({Rational(4 * 1235, 285), true},
                                    {Rational(4 * 1235, 260), true}, m1235);
    CHECK(scan.integers == 2);  // 18 and 19
    CHECK(scan.coprimes == 2);
    CHECK(scan.least_coprime == 18);

    Modulus m1001 = factorize(1001);
    auto scan2 = coprime_in_interval({Rational(1001, 182), true}, {Rational(1001, 154), true},
                                     m1001);
    CHECK(scan2.least_coprime == 6);

    auto scan3 = coprime_in_interval({Rational(1, 3), true}, {Rational(2, 3), true}, m1001);
    CHECK(scan3.integers == 0);
    CHECK(scan3.coprimes == 0);
    CHECK(!scan3.least_coprime);

    // empty when lo > hi after inclusivity
    auto scan4 = coprime_in_interval({Rational(3, 1), false}, {Rational(3, 1), true}, m1001);
    CHECK(scan4.integers == 0);
}

TEST_CASE("coprime_in_interval equals the cross-multiplied scan") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 3000; ++i) {
        Int n = 2 + static_cast<Int>(rng() % 499);
        Modulus m = factorize(n);
        Int lo_num = static_cast<Int>(rng() % (2 * static_cast<std::uint64_t>(n) * n));
        Int lo_den = 1 + static_cast<Int>(rng() % n);
        Int width_num = static_cast<Int>(rng() % (3 * static_cast<std::uint64_t>(n)));
        Int hi_den = 1 + static_cast<Int>(rng() % n);
        Int hi_num = lo_num * hi_den / lo_den + width_num;
        bool lo_inc = rng() & 1, hi_inc = rng() & 1;
        auto got = coprime_in_interval({Rational(lo_num, lo_den), lo_inc},
                                       {Rational(hi_num, hi_den), hi_inc}, m);
        auto want = oracle::interval_scan(lo_num, lo_den, lo_inc, hi_num, hi_den, hi_inc, n);
        CHECK(got.integers == want.integers);
        CHECK(got.coprimes == want.coprimes);
        CHECK(got.least_coprime == want.least_coprime);
    }
}

#pragma once

// Exact modular and rational arithmetic over a fixed modulus n >= 2.
//
// Residues follow the convention |x|_n in [1, n]: the representative of x
// mod n that lies in [1, n], so multiples of n map to n, never 0. All
// interval endpoints are exact rationals; no floating point is used
// anywhere in this library.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace zsindex {

using Int = std::int64_t;

// Modulus with its factorization and unit-group order. Values are sized for
// n up to 10^6; intermediate products go through __int128 where they can
// exceed 63 bits.
struct Modulus {
    Int n = 0;
    std::vector<std::pair<Int, int>> prime_factors;  // ascending primes, exponents >= 1
    Int phi = 0;

    bool squarefree() const;
    int distinct_primes() const { return static_cast<int>(prime_factors.size()); }
    bool is_unit(Int v) const;
};

// Trial-division factorization. Throws std::invalid_argument for n < 2.
Modulus factorize(Int n);

Int gcd_int(Int a, Int b);

// |x|_n in [1, n]. Accepts any 64-bit x, including negatives.
Int residue(Int x, Int n);
Int residue(Int x, const Modulus& m);

// All units of Z_n in ascending order; exactly m.phi values in [1, n-1].
std::vector<Int> units(const Modulus& m);

// Modular inverse in [1, n-1]. Throws std::invalid_argument if gcd(v, n) != 1.
Int inverse(Int v, const Modulus& m);

// Rational with positive denominator, stored in lowest terms.
struct Rational {
    Int num = 0;
    Int den = 1;

    Rational() = default;
    Rational(Int numerator, Int denominator);

    friend bool operator==(const Rational&, const Rational&);
    friend bool operator<(const Rational& x, const Rational& y);
    friend bool operator<=(const Rational& x, const Rational& y);
};

Int floor_rational(const Rational& r);
Int ceil_rational(const Rational& r);
bool is_integer(const Rational& r);

// Interval endpoint: exact rational plus an inclusivity flag.
struct RationalBound {
    Rational value;
    bool inclusive = true;
};

// First integer admitted by a lower bound / last admitted by an upper bound.
Int first_integer_at_least(const RationalBound& lo);
Int last_integer_at_most(const RationalBound& hi);

struct IntervalScan {
    std::optional<Int> least_coprime;  // least integer in the interval coprime to n
    Int integers = 0;                  // total integers in the interval
    Int coprimes = 0;                  // integers coprime to n
};

// Exact scan of the rational interval [lo, hi] (inclusivity per flags) for
// integers coprime to m.n. Empty intervals yield {absent, 0, 0}.
IntervalScan coprime_in_interval(const RationalBound& lo, const RationalBound& hi,
                                 const Modulus& m);

}  // namespace zsindex

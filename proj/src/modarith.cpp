#include "zsindex/modarith.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace zsindex {

bool Modulus::squarefree() const {
    for (const auto& [p, e] : prime_factors)
        if (e > 1) return false;
    return true;
}

bool Modulus::is_unit(Int v) const {
    return v >= 1 && v < n && gcd_int(v, n) == 1;
}

Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    return std::gcd(a, b);
}

Modulus factorize(Int n) {
    if (n < 2) throw std::invalid_argument("factorize: n must be >= 2, got " + std::to_string(n));
    Modulus m;
    m.n = n;
    Int rest = n;
    Int phi = 1;
    auto take = [&](Int p) {
        int e = 0;
        Int contrib = 1;
        while (rest % p == 0) {
            rest /= p;
            ++e;
            contrib *= p;
        }
        if (e > 0) {
            m.prime_factors.emplace_back(p, e);
            phi *= contrib / p * (p - 1);
        }
    };
    take(2);
    for (Int p = 3; p * p <= rest; p += 2) take(p);
    if (rest > 1) {
        m.prime_factors.emplace_back(rest, 1);
        phi *= rest - 1;
    }
    m.phi = phi;
    return m;
}

Int residue(Int x, Int n) {
    Int r = x % n;
    if (r <= 0) r += n;
    return r;
}

Int residue(Int x, const Modulus& m) { return residue(x, m.n); }

std::vector<Int> units(const Modulus& m) {
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(m.phi));
    for (Int v = 1; v < m.n; ++v)
        if (gcd_int(v, m.n) == 1) out.push_back(v);
    return out;
}

Int inverse(Int v, const Modulus& m) {
    // extended gcd on (v mod n, n)
    Int a = residue(v, m.n) % m.n;  // in [0, n-1]
    if (a == 0 || gcd_int(a, m.n) != 1)
        throw std::invalid_argument("inverse: " + std::to_string(v) + " is not a unit mod " +
                                    std::to_string(m.n));
    Int old_r = a, r = m.n;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    return residue(old_s, m.n);
}

Rational::Rational(Int numerator, Int denominator) {
    if (denominator == 0) throw std::invalid_argument("Rational: zero denominator");
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    Int g = gcd_int(numerator, denominator);
    if (g == 0) g = 1;
    num = numerator / g;
    den = denominator / g;
}

bool operator==(const Rational& x, const Rational& y) { return x.num == y.num && x.den == y.den; }

bool operator<(const Rational& x, const Rational& y) {
    return static_cast<__int128>(x.num) * y.den < static_cast<__int128>(y.num) * x.den;
}

bool operator<=(const Rational& x, const Rational& y) {
    return static_cast<__int128>(x.num) * y.den <= static_cast<__int128>(y.num) * x.den;
}

Int floor_rational(const Rational& r) {
    Int q = r.num / r.den;
    if (r.num % r.den != 0 && r.num < 0) --q;
    return q;
}

Int ceil_rational(const Rational& r) {
    Int q = r.num / r.den;
    if (r.num % r.den != 0 && r.num > 0) ++q;
    return q;
}

bool is_integer(const Rational& r) { return r.den == 1; }

Int first_integer_at_least(const RationalBound& lo) {
    Int c = ceil_rational(lo.value);
    if (!lo.inclusive && is_integer(lo.value)) ++c;
    return c;
}

Int last_integer_at_most(const RationalBound& hi) {
    Int f = floor_rational(hi.value);
    if (!hi.inclusive && is_integer(hi.value)) --f;
    return f;
}

IntervalScan coprime_in_interval(const RationalBound& lo, const RationalBound& hi,
                                 const Modulus& m) {
    IntervalScan scan;
    Int first = first_integer_at_least(lo);
    Int last = last_integer_at_most(hi);
    if (first > last) return scan;
    scan.integers = last - first + 1;
    for (Int x = first; x <= last; ++x) {
        if (gcd_int(x, m.n) == 1) {
            ++scan.coprimes;
            if (!scan.least_coprime) scan.least_coprime = x;
        }
    }
    return scan;
}

}  // namespace zsindex

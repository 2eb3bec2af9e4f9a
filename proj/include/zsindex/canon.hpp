#pragma once

// Normalization of minimal zero-sum quadruples into (e, c, b, a)
// coordinates and classification by gcd pattern.

#include <array>
#include <optional>
#include <string>

#include "zsindex/zseq.hpp"

namespace zsindex {

// Multiset shape of {gcd(x_i, n)} for a quadruple over n with three
// distinct primes p1, p2, p3:
//   A1 = {p1, p2, p1*p3, p2*p3}
//   A2 = {1, p1, p2, p1*p2}
//   A3 = {1, 1, 1, 1}
//   A4 = {1, p1*p2, p1*p3, p2*p3}
// Moduli with fewer than three distinct primes tag TwoPrimeOrFewer.
enum class PatternTag { A1, A2, A3, A4, TwoPrimeOrFewer, Other };

std::string pattern_name(PatternTag tag);
std::optional<PatternTag> pattern_from_name(const std::string& name);

struct GcdPattern {
    PatternTag tag = PatternTag::Other;
    // (p1, p2, p3) assignment realizing the pattern, when one exists.
    std::optional<std::array<Int, 3>> labeled_primes;
};

// Classifies a quadruple by its gcd multiset, trying all 6 assignments of
// the three primes. Throws std::invalid_argument unless |s| = 4.
GcdPattern classify(const ResidueSeq& s);

// Coordinates (e, c, b, a) of a quadruple in the form
// (e, c, n-b, n-a) with term sum exactly 2n. Invariants, checked on
// construction:
//   e + c = a + b,  1 <= e < a <= b < c < n/2,  s = floor(b/a) >= 1.
struct NormalizedQuadruple {
    Modulus mod;
    Int e = 0, c = 0, b = 0, a = 0;
    Int s = 0;                // floor(b/a)
    Int normalizing_unit = 0; // unit mapping the source sequence onto this form

    NormalizedQuadruple(Modulus mod, Int e, Int c, Int b, Int a, Int unit);

    friend bool operator==(const NormalizedQuadruple& x, const NormalizedQuadruple& y) {
        return x.mod.n == y.mod.n && x.e == y.e && x.c == y.c && x.b == y.b && x.a == y.a;
    }
};

// Searches all units v ascending; the first v whose sorted multiple
// (y1, y2, y3, y4) satisfies y1 < y2 < n/2 < y3 <= y4 < n - y1 with term
// sum 2n yields (e, c, b, a) = (y1, y2, n-y3, n-y4). Absent when no unit
// multiple fits the shape. Throws std::invalid_argument unless s is a
// minimal zero-sum quadruple.
std::optional<NormalizedQuadruple> normalize(const ResidueSeq& s);

// Every distinct normal form over the whole unit orbit, in ascending order
// of the witnessing unit (first occurrence wins per coordinate tuple).
std::vector<NormalizedQuadruple> all_normal_forms(const ResidueSeq& s);

// The normal form induced by one specific unit, if v*s fits the shape.
std::optional<NormalizedQuadruple> normal_form_under(const ResidueSeq& s, Int v);

// The sequence (e, c, n-b, n-a).
ResidueSeq denormalize(const NormalizedQuadruple& q);

}  // namespace zsindex

#pragma once

// Sequences over Z_n: zero-sum and minimality predicates, the generator
// norm and index, and unit-orbit canonicalization.

#include <optional>
#include <vector>

#include "zsindex/modarith.hpp"

namespace zsindex {

// Unordered multiset of residues over Z_n, stored sorted. Terms live in
// [1, n-1]: a term congruent to 0 would itself be a zero-sum subsequence,
// so constructors reject 0 and n.
class ResidueSeq {
public:
    ResidueSeq(Modulus mod, std::vector<Int> terms);

    const Modulus& mod() const { return mod_; }
    Int n() const { return mod_.n; }
    const std::vector<Int>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    friend bool operator==(const ResidueSeq& x, const ResidueSeq& y) {
        return x.mod_.n == y.mod_.n && x.terms_ == y.terms_;
    }

private:
    Modulus mod_;
    std::vector<Int> terms_;  // ascending
};

// nu = (sum of terms)/n when the sequence is zero-sum, absent otherwise.
std::optional<Int> zero_sum_nu(const ResidueSeq& s);

// True iff s is zero-sum and no nonempty proper sub-multiset sums to 0 mod n.
// Checks all 2^k - 2 proper subset sums (14 for quadruples).
bool is_minimal_zero_sum(const ResidueSeq& s);

// Coefficient sum of s with respect to the generator whose coefficient
// multiplier is v: sum of |v*x_i|_n, divided by n when zero-sum, raw
// otherwise. Throws std::invalid_argument for non-unit v.
Int g_norm(const ResidueSeq& s, Int v);

struct IndexResult {
    Int value = 0;    // min over units of g_norm
    Int witness = 0;  // least unit attaining it
};

// Minimum of g_norm over all units, with the least witness. Stops early
// once the running minimum hits 1 (the global minimum for a nonempty
// zero-sum sequence). Throws std::invalid_argument for non-zero-sum input.
IndexResult index_of(const ResidueSeq& s);

// Lexicographically least sorted term tuple over all unit multiples of s.
// Idempotent and constant on each unit orbit.
ResidueSeq canonical_rep(const ResidueSeq& s);

// Number of distinct sorted tuples among the unit multiples of s.
Int orbit_size(const ResidueSeq& s);

}  // namespace zsindex

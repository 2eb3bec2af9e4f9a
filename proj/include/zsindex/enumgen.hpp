#pragma once

// Exhaustive and sampled generation of minimal zero-sum quadruples over
// Z_n, with orbit deduplication and pattern filters.

#include <functional>
#include <optional>

#include "zsindex/canon.hpp"

namespace zsindex {

// All flags are independent; the empty filter admits every minimal
// zero-sum quadruple. Coordinate flags (a_gt_2e, a_gt_4e) require the
// instance to normalize and are evaluated on its normal form.
struct EnumFilter {
    std::optional<PatternTag> pattern;
    bool require_normalizable = false;
    std::optional<bool> a_gt_2e;
    std::optional<bool> a_gt_4e;

    bool passes(const ResidueSeq& s) const;
    bool trivial() const {
        return !pattern && !require_normalizable && !a_gt_2e && !a_gt_4e;
    }
};

// Visitor returns false to stop the stream.
using QuadVisitor = std::function<bool(const ResidueSeq&)>;

// Every sorted quadruple (x1 <= x2 <= x3 <= x4) over [1, n-1] that is
// minimal zero-sum and passes the filter, each exactly once, in ascending
// lexicographic order. A dedicated generator serves the A1 pattern over
// squarefree three-prime moduli; the generic path iterates x1 <= x2 <= x3
// and solves for x4. Requires n >= 5.
void enumerate_quadruples(const Modulus& m, const EnumFilter& f, const QuadVisitor& visit);

std::vector<ResidueSeq> collect_quadruples(const Modulus& m, const EnumFilter& f,
                                           std::size_t limit = SIZE_MAX);

enum class OrbitDedup {
    Auto,          // CanonicalRep for phi <= 10^4, HashSet beyond
    CanonicalRep,  // emit s iff s equals its canonical representative
    HashSet,       // track seen orbits by their sorted unit multiples
};

// Exactly one representative (the canonical one) per unit orbit of the
// filtered set, in ascending lexicographic order.
void enumerate_orbit_reps(const Modulus& m, const EnumFilter& f, const QuadVisitor& visit,
                          OrbitDedup dedup = OrbitDedup::Auto);

std::vector<ResidueSeq> collect_orbit_reps(const Modulus& m, const EnumFilter& f,
                                           std::size_t limit = SIZE_MAX,
                                           OrbitDedup dedup = OrbitDedup::Auto);

// Rejection-samples a filtered quadruple. Deterministic for a fixed seed;
// absent once the attempt budget is exhausted (impossible filters).
std::optional<ResidueSeq> random_instance(const Modulus& m, const EnumFilter& f,
                                          std::uint64_t seed);

}  // namespace zsindex

#pragma once

// Certificates that a minimal zero-sum quadruple has index 1, and the
// searches that produce them: direct multiplier witnesses, the 3n-sum and
// half-plane sufficient conditions, closed-interval multiplier searches
// over normalized coordinates, the M-type two-of-three bound, the small-a
// divisor family, and the renumbering step.

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zsindex/canon.hpp"

namespace zsindex {

enum class CertKind {
    Multiplier,  // unit v with g_norm(seq, v) == 1
    Sum3N,       // unit m whose residues sum to 3n; n - m is then a norm-1 witness
    HalfPlane,   // unit m leaving at most one residue on one side of n/2
    Interval,    // (k, m) with kn/c <= m <= kn/b, gcd(m, n) = 1, side condition
    MType,       // M <= n/2e satisfying two of |Ma|>n/2, |Mb|>n/2, |Mc|<n/2
    SmallA,      // multiplier (n + j*a)/a from the a | b, a < 2e family
};

std::string cert_kind_name(CertKind kind);

enum class HalfPlaneSide { LowMajority, HighMajority };

struct Certificate {
    CertKind kind;
    Int v = 0;  // the multiplier (m, M, or v)
    Int k = 0;  // Interval only
    HalfPlaneSide side = HalfPlaneSide::HighMajority;       // HalfPlane / SmallA
    std::array<bool, 3> satisfied = {false, false, false};  // MType: which inequalities held
    int small_a_index = -1;                                 // SmallA: j of (n + j*a)/a
    ResidueSeq seq;                                         // the certified sequence
    std::optional<NormalizedQuadruple> quad;                // coordinate context when used

    // Unit that a norm-1 witness follows from, where one is implied
    // directly (Multiplier, Sum3N, Interval, SmallA). HalfPlane and MType
    // are sufficient conditions without a direct witness.
    Int implied_unit() const;

    // Re-runs the defining check against the stored context; direct-witness
    // kinds additionally confirm g_norm(implied_unit) == 1, the others
    // confirm index 1 by the full unit scan.
    bool validate() const;

    std::string describe() const;
};

// Count of residues |v*x|_n of s strictly below / strictly above n/2.
struct HalfPlaneCount {
    int low = 0;
    int high = 0;
};
HalfPlaneCount halfplane_count(const ResidueSeq& s, Int v);

// Certificate iff the four residues |m*x_i|_n sum to exactly 3n.
// Throws std::invalid_argument for non-unit m.
std::optional<Certificate> check_sum_3n(const ResidueSeq& s, Int m);

// Certificate iff at most one residue lies in [1, n/2] or at most one lies
// in [n/2, n]. Throws std::invalid_argument for non-unit m.
std::optional<Certificate> check_halfplane(const ResidueSeq& s, Int m);

enum class IntervalMode {
    ProductBound,  // require m * a < n
    RatioBound,    // require a <= b / k
};

// Scans k = k_lo..k_max (capped at b) for the least coprime m in the
// closed interval [kn/c, kn/b] passing the mode condition. The
// certificate's multiplier is itself a norm-1 witness for (e, c, n-b, n-a).
// Any valid certificate is acceptable; pinning k_lo = k_max recovers the
// certificate at one specific k.
std::optional<Certificate> search_interval(const NormalizedQuadruple& q, Int k_max,
                                           IntervalMode mode = IntervalMode::ProductBound,
                                           Int k_lo = 1);

// Least M in [1, n/2e] coprime to n satisfying at least two of
// |Ma|_n > n/2, |Mb|_n > n/2, |Mc|_n < n/2.
std::optional<Certificate> search_M(const NormalizedQuadruple& q);

// Largest k <= b with ceil((k-1)n/c) = ceil((k-1)n/b) and an integer in the
// half-open interval [kn/c, kn/b). Absent when ceil(n/c) != ceil(n/b).
std::optional<Int> compute_k1(const NormalizedQuadruple& q);

// Coprime content of the window family
//   [(2s-2t-1)n/2b, (s-t)n/b]  for t in [0, floor(s/2) - 1]
// plus the ceiling-regime quantities m1 = ceil(n/c), the least k whose
// half-open interval [kn/c, kn/b) holds at least four integers, and the
// per-k integer counts up to it.
struct QuadDiagnostics {
    struct Window {
        Int t = 0;
        Rational lo, hi;
        Int integers = 0;
        Int coprimes = 0;
    };

    Int s = 0;
    std::vector<Window> windows;
    bool windows_all_blocked = true;  // no window contains an integer coprime to n
    Int m1 = 0;                       // ceil(n/c)
    std::optional<Int> k1;
    std::optional<Int> first_dense_k;  // least k with >= 4 integers in [kn/c, kn/b)
    std::vector<Int> halfopen_counts;  // integer counts of [kn/c, kn/b) for k = 1..first_dense_k
};

QuadDiagnostics quad_diagnostics(const NormalizedQuadruple& q);

struct SmallAResult {
    std::optional<Certificate> certificate;
    std::string report;  // reason when absent
};

// For quadruples with a < 2e, a | b and a | n: tries the multipliers
// (n+a)/a, (n+2a)/a, (n+3a)/a, (n+4a)/a, selecting by the b-range split
// b < n/4, n/4 < b < n/3, n/3 < b < n/2. Unmet preconditions are reported,
// never silently ignored.
SmallAResult search_small_a(const NormalizedQuadruple& q);

struct RenumberFailure {
    std::string reason;
};

using RenumberOutcome = std::variant<Certificate, NormalizedQuadruple, RenumberFailure>;

// Renumbering step for quadruples where e and a are both prime factors of a
// squarefree three-prime n, a < 2e and a | c. Either certifies index 1
// outright or returns a new normalized quadruple with e' in {a, 2a} and
// a' >= 10 e' (hard assertion). Configurations outside the implemented
// branches yield a failure report.
RenumberOutcome renumber(const NormalizedQuadruple& q);

}  // namespace zsindex

#pragma once

// Verification waterfall, per-modulus sweeps, the aspect-ratio window
// audit, and counterexample scans.

#include <map>
#include <string>

#include "zsindex/certs.hpp"
#include "zsindex/enumgen.hpp"

namespace zsindex {

enum class Strategy {
    None,
    Direct,         // a trivial unit (1 or n-1) is already a norm-1 witness
    Sum3N,          // 3n-sum condition over the bounded multiplier prefix
    HalfPlane,      // half-plane condition over the bounded multiplier prefix
    SmallA,         // a < 2e, a | b multiplier family
    Interval,       // closed-interval search with m*a < n
    IntervalRatio,  // closed-interval search with a <= b/k
    MType,          // two-of-three bound search
    Renumber,       // renumbering step, then one recursion
    OracleOnly,     // no strategy fired; full unit scan settles it
};

std::string strategy_name(Strategy st);

// The multiplier-prefix conditions are existence statements with no search
// bound of their own; the scan stops at min(n-1, notice_cap) and the full
// unit scan backstops completeness.
struct WaterfallConfig {
    Int notice_cap = 10000;
    bool direct = true;
    bool sum_3n = true;
    bool half_plane = true;
    bool small_a = true;
    bool interval = true;
    bool interval_ratio = true;
    bool m_search = true;
    bool renumber = true;
    int renumber_depth = 1;

    static WaterfallConfig all();
    static WaterfallConfig only(Strategy st);
};

struct DiagSummary {
    bool present = false;
    Int s = 0;
    std::optional<Int> k1;
    bool windows_all_blocked = false;
};

struct InstanceRecord {
    ResidueSeq sequence;
    GcdPattern pattern;
    Int index_value = 0;   // ground truth from the full unit scan
    Int witness_unit = 0;
    std::optional<NormalizedQuadruple> normalized;
    Strategy strategy = Strategy::None;
    std::optional<Certificate> certificate;
    DiagSummary diag;
    bool counterexample = false;       // index >= 2
    std::vector<std::string> defects;  // soundness or growth-claim violations
};

// Runs the waterfall on a minimal zero-sum quadruple: trivial witnesses,
// the two multiplier-prefix conditions, the small-a family, both interval
// modes, the two-of-three search, then the renumbering step with one
// recursion. The ground-truth index always comes from the full unit scan
// and is never overwritten by a strategy.
InstanceRecord verify_instance(const ResidueSeq& s,
                               const WaterfallConfig& cfg = WaterfallConfig::all());

struct Violation {
    std::string kind;  // "index_ge_2" | "soundness" | "window_growth"
    std::vector<Int> terms;
    std::string detail;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
    Int n = 0;
    Int instances = 0;  // quadruples, counting every orbit member
    Int orbits = 0;
    std::map<Int, Int> index_histogram;                 // index value -> instance count
    std::map<std::string, Int> strategy_histogram;      // strategy -> orbit count
    std::vector<Violation> violations;
    Int elapsed_ms = 0;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

VerificationReport verify_modulus(Int n, const EnumFilter& f, const WaterfallConfig& cfg,
                                  bool timings = false);

struct SweepOptions {
    Int n_lo = 5;
    Int n_hi = 5;
    EnumFilter filter;
    bool include_all_n = false;  // default restricts to gcd(n, 6) = 1
    int jobs = 1;
    WaterfallConfig waterfall = WaterfallConfig::all();
    bool timings = false;  // elapsed_ms stays 0 unless requested, keeping reports byte-stable
};

std::vector<Int> sweep_moduli(const SweepOptions& opts);

// Serial reference: one modulus after another, in ascending order.
std::vector<VerificationReport> sweep_serial(const SweepOptions& opts);

// OpenMP over moduli when jobs > 1; per-modulus work stays sequential, so
// reports are identical to the serial reference for any worker count.
std::vector<VerificationReport> sweep(const SweepOptions& opts);

bool sweep_has_violations(const std::vector<VerificationReport>& reports);

struct AuditFinding {
    Int n = 0;
    std::vector<Int> terms;
    Int e = 0, c = 0, b = 0, a = 0, s = 0;

    friend bool operator==(const AuditFinding&, const AuditFinding&) = default;
};

// Over all A1 normal forms with a > 2e for each given squarefree
// three-prime n coprime to 6: any form with s >= 10 whose windows contain
// no integer coprime to n is a finding. Findings are data, not failures.
std::vector<AuditFinding> window_audit(const std::vector<Int>& moduli, int jobs = 1);

// First `count` squarefree three-prime moduli above `above` with gcd(n,6)=1.
std::vector<Int> first_audit_moduli(int count, Int above);

// Lexicographically least minimal zero-sum quadruple over Z_n with index at
// least `threshold` (2 or 3), or absent.
std::optional<ResidueSeq> find_min_index_at_least(Int n, Int threshold);

struct CounterexampleHit {
    Int n;
    ResidueSeq sequence;
    Int index_value;
};

// Ascending scan over n in [n_lo, n_hi]; when only_off_hypothesis is set,
// moduli with gcd(n, 6) = 1 are skipped.
std::optional<CounterexampleHit> scan_for_counterexample(Int n_lo, Int n_hi, Int threshold,
                                                         bool only_off_hypothesis);

}  // namespace zsindex

#include "zsindex/certs.hpp"

#include <algorithm>
#include <stdexcept>

namespace zsindex {

std::string cert_kind_name(CertKind kind) {
    switch (kind) {
        case CertKind::Multiplier: return "multiplier";
        case CertKind::Sum3N: return "sum_3n";
        case CertKind::HalfPlane: return "half_plane";
        case CertKind::Interval: return "interval";
        case CertKind::MType: return "m_type";
        case CertKind::SmallA: return "small_a";
    }
    return "?";
}

HalfPlaneCount halfplane_count(const ResidueSeq& s, Int v) {
    HalfPlaneCount cnt;
    const Int n = s.n();
    for (Int x : s.terms()) {
        Int r = residue(v * x, n);
        if (2 * r < n) ++cnt.low;
        if (2 * r > n) ++cnt.high;
    }
    return cnt;
}

Int Certificate::implied_unit() const {
    if (kind == CertKind::Sum3N) return seq.n() - v;
    return v;
}

bool Certificate::validate() const {
    const Int n = seq.n();
    if (!seq.mod().is_unit(residue(v, n))) return false;
    switch (kind) {
        case CertKind::Multiplier:
            return g_norm(seq, v) == 1;
        case CertKind::Sum3N: {
            Int sum = 0;
            for (Int x : seq.terms()) sum += residue(v * x, n);
            return sum == 3 * n && g_norm(seq, implied_unit()) == 1;
        }
        case CertKind::HalfPlane: {
            HalfPlaneCount cnt = halfplane_count(seq, v);
            bool holds = side == HalfPlaneSide::HighMajority ? cnt.low <= 1 : cnt.high <= 1;
            return holds && index_of(seq).value == 1;
        }
        case CertKind::Interval: {
            if (!quad) return false;
            const auto& q = *quad;
            Rational lo(k * q.mod.n, q.c), hi(k * q.mod.n, q.b);
            Rational mv(v, 1);
            return k >= 1 && k <= q.b && lo <= mv && mv <= hi && g_norm(seq, v) == 1;
        }
        case CertKind::MType: {
            if (!quad) return false;
            const auto& q = *quad;
            if (!(Rational(v, 1) <= Rational(n, 2 * q.e))) return false;
            bool c1 = 2 * residue(v * q.a, n) > n;
            bool c2 = 2 * residue(v * q.b, n) > n;
            bool c3 = 2 * residue(v * q.c, n) < n;
            return c1 + c2 + c3 >= 2 && index_of(seq).value == 1;
        }
        case CertKind::SmallA: {
            HalfPlaneCount cnt = halfplane_count(seq, v);
            return cnt.low <= 1 && index_of(seq).value == 1;
        }
    }
    return false;
}

std::string Certificate::describe() const {
    std::string out = cert_kind_name(kind);
    switch (kind) {
        case CertKind::Interval: out += " k=" + std::to_string(k) + " m=" + std::to_string(v); break;
        case CertKind::Sum3N: out += " m=" + std::to_string(v); break;
        case CertKind::HalfPlane:
            out += " m=" + std::to_string(v);
            out += side == HalfPlaneSide::HighMajority ? " (at most one residue below n/2)"
                                                       : " (at most one residue above n/2)";
            break;
        case CertKind::MType: out += " M=" + std::to_string(v); break;
        case CertKind::SmallA:
            out += " m=" + std::to_string(v) + " (j=" + std::to_string(small_a_index) + ")";
            break;
        case CertKind::Multiplier: out += " v=" + std::to_string(v); break;
    }
    return out;
}

namespace {

void require_unit(const ResidueSeq& s, Int m, const char* who) {
    if (!s.mod().is_unit(residue(m, s.n())))
        throw std::invalid_argument(std::string(who) + ": multiplier " + std::to_string(m) +
                                    " is not a unit mod " + std::to_string(s.n()));
}

[[noreturn]] void soundness_failure(const std::string& what) {
    throw std::logic_error("certificate soundness violated: " + what);
}

}  // namespace

std::optional<Certificate> check_sum_3n(const ResidueSeq& s, Int m) {
    require_unit(s, m, "check_sum_3n");
    const Int n = s.n();
    Int sum = 0;
    for (Int x : s.terms()) sum += residue(m * x, n);
    if (sum != 3 * n) return std::nullopt;
    Certificate cert{CertKind::Sum3N, m, 0, HalfPlaneSide::HighMajority, {}, -1, s, std::nullopt};
    if (g_norm(s, cert.implied_unit()) != 1) soundness_failure(cert.describe());
    return cert;
}

std::optional<Certificate> check_halfplane(const ResidueSeq& s, Int m) {
    require_unit(s, m, "check_halfplane");
    HalfPlaneCount cnt = halfplane_count(s, m);
    // ties (2r == n) count on neither side, which only weakens the test
    if (cnt.low > 1 && cnt.high > 1) return std::nullopt;
    auto side = cnt.low <= 1 ? HalfPlaneSide::HighMajority : HalfPlaneSide::LowMajority;
    Certificate cert{CertKind::HalfPlane, m, 0, side, {}, -1, s, std::nullopt};
    if (index_of(s).value != 1) {
        // the condition is sufficient only for gcd(n, 6) = 1; off that
        // hypothesis it simply fails to certify
        if (gcd_int(s.n(), 6) == 1) soundness_failure(cert.describe());
        return std::nullopt;
    }
    return cert;
}

std::optional<Certificate> search_interval(const NormalizedQuadruple& q, Int k_max,
                                           IntervalMode mode) {
    const Int n = q.mod.n;
    k_max = std::min(k_max, q.b);
    ResidueSeq seq = denormalize(q);
    for (Int k = 1; k <= k_max; ++k) {
        if (mode == IntervalMode::RatioBound && q.a * k > q.b) break;
        Int first = first_integer_at_least({Rational(k * n, q.c), true});
        Int last = last_integer_at_most({Rational(k * n, q.b), true});
        for (Int m = first; m <= last; ++m) {
            if (gcd_int(m, n) != 1) continue;
            if (mode == IntervalMode::ProductBound && m * q.a >= n) break;  // grows with m
            Certificate cert{CertKind::Interval, m, k, HalfPlaneSide::HighMajority,
                             {},                 -1, seq, q};
            if (g_norm(seq, m) != 1) soundness_failure(cert.describe());
            return cert;
        }
    }
    return std::nullopt;
}

std::optional<Certificate> search_M(const NormalizedQuadruple& q) {
    const Int n = q.mod.n;
    ResidueSeq seq = denormalize(q);
    Int cap = last_integer_at_most({Rational(n, 2 * q.e), true});
    for (Int M = 1; M <= cap; ++M) {
        if (gcd_int(M, n) != 1) continue;
        bool c1 = 2 * residue(M * q.a, n) > n;
        bool c2 = 2 * residue(M * q.b, n) > n;
        bool c3 = 2 * residue(M * q.c, n) < n;
        if (c1 + c2 + c3 < 2) continue;
        Certificate cert{CertKind::MType, M, 0, HalfPlaneSide::HighMajority,
                         {c1, c2, c3},    -1, seq, q};
        if (index_of(seq).value != 1) {
            if (gcd_int(n, 6) == 1) soundness_failure(cert.describe());
            continue;
        }
        return cert;
    }
    return std::nullopt;
}

std::optional<Int> compute_k1(const NormalizedQuadruple& q) {
    const Int n = q.mod.n;
    if (ceil_rational(Rational(n, q.c)) != ceil_rational(Rational(n, q.b))) return std::nullopt;
    std::optional<Int> best;
    for (Int k = 1; k <= q.b; ++k) {
        if (ceil_rational(Rational((k - 1) * n, q.c)) != ceil_rational(Rational((k - 1) * n, q.b)))
            continue;
        Int first = first_integer_at_least({Rational(k * n, q.c), true});
        Int last = last_integer_at_most({Rational(k * n, q.b), false});
        if (first <= last) best = k;
    }
    return best;
}

QuadDiagnostics quad_diagnostics(const NormalizedQuadruple& q) {
    const Int n = q.mod.n;
    QuadDiagnostics diag;
    diag.s = q.s;
    // anchor windows [(2s-t-1)n/2b, (2s-t)n/2b] have width n/2b > 1, so each
    // must contain an integer for t in [0, s-1]
    for (Int t = 0; t < q.s; ++t) {
        Int first = first_integer_at_least({Rational((2 * q.s - t - 1) * n, 2 * q.b), true});
        Int last = last_integer_at_most({Rational((2 * q.s - t) * n, 2 * q.b), true});
        if (first > last) throw std::logic_error("quad_diagnostics: empty anchor window");
    }
    for (Int t = 0; t <= q.s / 2 - 1; ++t) {
        QuadDiagnostics::Window w;
        w.t = t;
        w.lo = Rational((2 * q.s - 2 * t - 1) * n, 2 * q.b);
        w.hi = Rational((q.s - t) * n, q.b);
        IntervalScan scan = coprime_in_interval({w.lo, true}, {w.hi, true}, q.mod);
        w.integers = scan.integers;
        w.coprimes = scan.coprimes;
        if (w.coprimes > 0) diag.windows_all_blocked = false;
        diag.windows.push_back(w);
    }
    diag.m1 = ceil_rational(Rational(n, q.c));
    diag.k1 = compute_k1(q);
    if (ceil_rational(Rational(n, q.c)) < ceil_rational(Rational(n, q.b))) {
        for (Int k = 1; k <= q.b; ++k) {
            Int first = first_integer_at_least({Rational(k * n, q.c), true});
            Int last = last_integer_at_most({Rational(k * n, q.b), false});
            Int count = std::max<Int>(0, last - first + 1);
            diag.halfopen_counts.push_back(count);
            if (count >= 4) {
                diag.first_dense_k = k;
                break;
            }
        }
        if (!diag.first_dense_k) diag.halfopen_counts.clear();
    }
    return diag;
}

namespace {

bool is_prime_factor_of(Int p, const Modulus& m) {
    for (const auto& [q, e] : m.prime_factors)
        if (q == p) return true;
    return false;
}

Certificate halfplane_cert(const ResidueSeq& seq, Int m, HalfPlaneSide side) {
    Certificate cert{CertKind::HalfPlane, m, 0, side, {}, -1, seq, std::nullopt};
    if (index_of(seq).value != 1) soundness_failure(cert.describe());
    return cert;
}

}  // namespace

SmallAResult search_small_a(const NormalizedQuadruple& q) {
    const Int n = q.mod.n;
    if (q.a >= 2 * q.e) return {std::nullopt, "requires a < 2e"};
    if (q.b % q.a != 0) return {std::nullopt, "requires a | b"};
    if (n % q.a != 0) return {std::nullopt, "requires a | n"};
    ResidueSeq seq = denormalize(q);
    const Int quot = n / q.a;

    auto attempt = [&](Int mult, int j) -> SmallAResult {
        if (gcd_int(mult, n) != 1)
            return {std::nullopt,
                    "multiplier " + std::to_string(mult) + " shares a factor with n"};
        HalfPlaneCount cnt = halfplane_count(seq, mult);
        if (cnt.high < 3)
            return {std::nullopt, "multiplier " + std::to_string(mult) +
                                      " leaves fewer than three residues above n/2"};
        Certificate cert{CertKind::SmallA, mult,        0,   HalfPlaneSide::HighMajority,
                         {},               j, seq, q};
        if (index_of(seq).value != 1) {
            if (gcd_int(n, 6) == 1) soundness_failure(cert.describe());
            return {std::nullopt, "condition held but the index is not 1 (gcd(n, 6) != 1)"};
        }
        return {cert, ""};
    };

    if (gcd_int(quot + 1, n) == 1) return attempt(quot + 1, 0);
    // b-range split selects among (n+2a)/a, (n+3a)/a, (n+4a)/a
    if (4 * q.b < n) return attempt(quot + 2, 1);
    if (3 * q.b < n && 4 * q.b > n) return attempt(quot + 4, 3);
    if (2 * q.b < n && 3 * q.b > n) return attempt(quot + 3, 2);
    return {std::nullopt, "b sits on a range boundary"};
}

RenumberOutcome renumber(const NormalizedQuadruple& q) {
    const Int n = q.mod.n;
    // Standing context: n squarefree with three prime factors coprime to 6,
    // both e and a prime factors of n, a < 2e, a | c. The a' >= 10e'
    // conclusion below is falsifiable without the primality of e.
    if (q.mod.distinct_primes() != 3 || !q.mod.squarefree())
        return RenumberFailure{"requires squarefree n with three prime factors"};
    if (gcd_int(n, 6) != 1) return RenumberFailure{"requires gcd(n, 6) = 1"};
    if (!is_prime_factor_of(q.a, q.mod)) return RenumberFailure{"requires a prime, a | n"};
    if (!is_prime_factor_of(q.e, q.mod)) return RenumberFailure{"requires e prime, e | n"};
    if (q.a >= 2 * q.e) return RenumberFailure{"requires a < 2e"};
    if (q.c % q.a != 0) return RenumberFailure{"requires a | c"};

    ResidueSeq seq = denormalize(q);

    auto renumbered = [&](Int mult, Int expected_e) -> RenumberOutcome {
        auto fitted = normal_form_under(seq, mult);
        if (!fitted)
            return RenumberFailure{"multiplied sequence does not fit the normalized shape"};
        if (fitted->e != expected_e)
            return RenumberFailure{"renumbered e' = " + std::to_string(fitted->e) +
                                   ", expected " + std::to_string(expected_e)};
        if (fitted->a < 10 * fitted->e)
            throw std::logic_error("renumber: conclusion a' >= 10e' violated at n = " +
                                   std::to_string(n));
        return *fitted;
    };

    Int m = (n - q.a) / q.a;
    if (gcd_int(m, n) == 1) {
        HalfPlaneCount cnt = halfplane_count(seq, m);
        if (cnt.high >= 3) return halfplane_cert(seq, m, HalfPlaneSide::HighMajority);
        return renumbered(m, q.a);
    }

    // m shares a factor with n; quotients below are integers since n/a is odd
    Int t2 = q.c / q.a;
    if (t2 % 2 == 0) {
        Int mp = (n / q.a + 1) / 2;
        if (gcd_int(mp, n) != 1)
            return RenumberFailure{"(n+a)/2a shares a factor with n"};
        HalfPlaneCount cnt = halfplane_count(seq, mp);
        if (cnt.low >= 3) return halfplane_cert(seq, mp, HalfPlaneSide::LowMajority);
        return RenumberFailure{"(n+a)/2a left fewer than three residues below n/2"};
    }
    if (4 * q.c < n) {
        Int m1 = (n - 2 * q.a) / q.a;
        if (gcd_int(m1, n) != 1)
            return RenumberFailure{"(n-2a)/a shares a factor with n"};
        HalfPlaneCount cnt = halfplane_count(seq, m1);
        if (cnt.high >= 3) return halfplane_cert(seq, m1, HalfPlaneSide::HighMajority);
        return renumbered(m1, 2 * q.a);
    }
    if (3 * q.c < n && 4 * q.c > n) {
        Int m3 = (n / q.a + 5) / 2;
        if (gcd_int(m3, n) != 1)
            return RenumberFailure{"(n+5a)/2a shares a factor with n"};
        HalfPlaneCount cnt = halfplane_count(seq, m3);
        if (cnt.low >= 3) return halfplane_cert(seq, m3, HalfPlaneSide::LowMajority);
        return RenumberFailure{"(n+5a)/2a left fewer than three residues below n/2"};
    }
    if (3 * q.c > n) {
        Int m2 = (n / q.a + 3) / 2;
        if (gcd_int(m2, n) != 1)
            return RenumberFailure{"(n+3a)/2a shares a factor with n"};
        HalfPlaneCount cnt = halfplane_count(seq, m2);
        if (cnt.low >= 3) return halfplane_cert(seq, m2, HalfPlaneSide::LowMajority);
        return RenumberFailure{"(n+3a)/2a left fewer than three residues below n/2"};
    }
    return RenumberFailure{"c sits on a range boundary"};
}

}  // namespace zsindex

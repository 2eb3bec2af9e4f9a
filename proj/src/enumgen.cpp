#include "zsindex/enumgen.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <stdexcept>

namespace zsindex {

namespace {

// For a sorted zero-sum quadruple the singleton and triple subset sums can
// never hit 0 mod n, so minimality reduces to the six pairwise sums.
bool minimal_quadruple_raw(Int x1, Int x2, Int x3, Int x4, Int n) {
    return x1 + x2 != n && x1 + x3 != n && x1 + x4 != n && x2 + x3 != n && x2 + x4 != n &&
           x3 + x4 != n;
}

bool shape_filters_pass(const EnumFilter& f, const ResidueSeq& s) {
    if (f.pattern && classify(s).tag != *f.pattern) return false;
    if (f.require_normalizable || f.a_gt_2e || f.a_gt_4e) {
        auto q = normalize(s);
        if (!q) return false;
        if (f.a_gt_2e && (q->a > 2 * q->e) != *f.a_gt_2e) return false;
        if (f.a_gt_4e && (q->a > 4 * q->e) != *f.a_gt_4e) return false;
    }
    return true;
}

// A1 quadruples have gcd multiset {q1, q2, q1*q3, q2*q3} for one of the
// three choices of q3; members of the two small divisor classes determine
// the fourth term, so the search space is far below the n^3 generic scan.
std::vector<std::array<Int, 4>> a1_candidates(const Modulus& m) {
    const Int n = m.n;
    std::array<Int, 3> ps{m.prime_factors[0].first, m.prime_factors[1].first,
                          m.prime_factors[2].first};
    std::set<std::array<Int, 4>> out;
    for (int i3 = 0; i3 < 3; ++i3) {
        Int q3 = ps[static_cast<std::size_t>(i3)];
        std::array<Int, 2> rest{};
        int idx = 0;
        for (int i = 0; i < 3; ++i)
            if (i != i3) rest[static_cast<std::size_t>(idx++)] = ps[static_cast<std::size_t>(i)];
        Int q1 = rest[0], q2 = rest[1];
        auto class_members = [&](Int d) {
            std::vector<Int> xs;
            for (Int u = 1; u < n / d; ++u)
                if (gcd_int(u, n / d) == 1) xs.push_back(d * u);
            return xs;
        };
        std::vector<Int> cls_q1q3 = class_members(q1 * q3);
        std::vector<Int> cls_q2q3 = class_members(q2 * q3);
        std::vector<Int> cls_q1 = class_members(q1);
        for (Int t1 : cls_q1q3) {
            for (Int t2 : cls_q2q3) {
                for (Int t3 : cls_q1) {
                    Int t4 = residue(-(t1 + t2 + t3), n);
                    if (t4 == n || gcd_int(t4, n) != q2) continue;
                    std::array<Int, 4> quad{t1, t2, t3, t4};
                    std::sort(quad.begin(), quad.end());
                    if (!minimal_quadruple_raw(quad[0], quad[1], quad[2], quad[3], n)) continue;
                    out.insert(quad);
                }
            }
        }
    }
    return {out.begin(), out.end()};
}

}  // namespace

bool EnumFilter::passes(const ResidueSeq& s) const {
    return is_minimal_zero_sum(s) && shape_filters_pass(*this, s);
}

void enumerate_quadruples(const Modulus& m, const EnumFilter& f, const QuadVisitor& visit) {
    const Int n = m.n;
    if (n < 5) throw std::invalid_argument("enumerate_quadruples: n >= 5 required");
    if (f.pattern == PatternTag::A1 && m.distinct_primes() == 3 && m.squarefree()) {
        for (const auto& quad : a1_candidates(m)) {
            ResidueSeq s(m, {quad[0], quad[1], quad[2], quad[3]});
            if (!shape_filters_pass(f, s)) continue;
            if (!visit(s)) return;
        }
        return;
    }
    for (Int x1 = 1; x1 < n; ++x1) {
        for (Int x2 = x1; x2 < n; ++x2) {
            for (Int x3 = x2; x3 < n; ++x3) {
                Int x4 = residue(-(x1 + x2 + x3), n);
                if (x4 == n || x4 < x3) continue;
                if (!minimal_quadruple_raw(x1, x2, x3, x4, n)) continue;
                ResidueSeq s(m, {x1, x2, x3, x4});
                if (!shape_filters_pass(f, s)) continue;
                if (!visit(s)) return;
            }
        }
    }
}

std::vector<ResidueSeq> collect_quadruples(const Modulus& m, const EnumFilter& f,
                                           std::size_t limit) {
    std::vector<ResidueSeq> out;
    enumerate_quadruples(m, f, [&](const ResidueSeq& s) {
        out.push_back(s);
        return out.size() < limit;
    });
    return out;
}

void enumerate_orbit_reps(const Modulus& m, const EnumFilter& f, const QuadVisitor& visit,
                          OrbitDedup dedup) {
    if (dedup == OrbitDedup::Auto)
        dedup = m.phi <= 10000 ? OrbitDedup::CanonicalRep : OrbitDedup::HashSet;
    if (dedup == OrbitDedup::CanonicalRep) {
        enumerate_quadruples(m, f, [&](const ResidueSeq& s) {
            if (!(canonical_rep(s) == s)) return true;
            return visit(s);
        });
        return;
    }
    std::set<std::vector<Int>> seen;
    enumerate_quadruples(m, f, [&](const ResidueSeq& s) {
        if (seen.count(s.terms())) return true;
        for (Int v = 1; v < m.n; ++v) {
            if (gcd_int(v, m.n) != 1) continue;
            std::vector<Int> mult;
            mult.reserve(s.size());
            for (Int x : s.terms()) mult.push_back(residue(v * x, m.n));
            std::sort(mult.begin(), mult.end());
            seen.insert(std::move(mult));
        }
        return visit(s);
    });
}

std::vector<ResidueSeq> collect_orbit_reps(const Modulus& m, const EnumFilter& f,
                                           std::size_t limit, OrbitDedup dedup) {
    std::vector<ResidueSeq> out;
    enumerate_orbit_reps(
        m, f,
        [&](const ResidueSeq& s) {
            out.push_back(s);
            return out.size() < limit;
        },
        dedup);
    return out;
}

std::optional<ResidueSeq> random_instance(const Modulus& m, const EnumFilter& f,
                                          std::uint64_t seed) {
    const Int n = m.n;
    if (n < 5) return std::nullopt;
    std::mt19937_64 rng(seed);
    auto draw = [&]() { return 1 + static_cast<Int>(rng() % static_cast<std::uint64_t>(n - 1)); };
    constexpr int kAttempts = 200000;
    for (int i = 0; i < kAttempts; ++i) {
        Int x1 = draw(), x2 = draw(), x3 = draw();
        Int x4 = residue(-(x1 + x2 + x3), n);
        if (x4 == n) continue;
        std::array<Int, 4> quad{x1, x2, x3, x4};
        std::sort(quad.begin(), quad.end());
        if (!minimal_quadruple_raw(quad[0], quad[1], quad[2], quad[3], n)) continue;
        ResidueSeq s(m, {quad[0], quad[1], quad[2], quad[3]});
        if (!shape_filters_pass(f, s)) continue;
        return s;
    }
    return std::nullopt;
}

}  // namespace zsindex

#include "zsindex/canon.hpp"

#include <algorithm>
#include <stdexcept>

namespace zsindex {

std::string pattern_name(PatternTag tag) {
    switch (tag) {
        case PatternTag::A1: return "a1";
        case PatternTag::A2: return "a2";
        case PatternTag::A3: return "a3";
        case PatternTag::A4: return "a4";
        case PatternTag::TwoPrimeOrFewer: return "two_prime_or_fewer";
        case PatternTag::Other: return "other";
    }
    return "other";
}

std::optional<PatternTag> pattern_from_name(const std::string& name) {
    if (name == "a1") return PatternTag::A1;
    if (name == "a2") return PatternTag::A2;
    if (name == "a3") return PatternTag::A3;
    if (name == "a4") return PatternTag::A4;
    if (name == "two_prime_or_fewer") return PatternTag::TwoPrimeOrFewer;
    if (name == "other") return PatternTag::Other;
    return std::nullopt;
}

namespace {

std::array<Int, 4> sorted4(std::array<Int, 4> xs) {
    std::sort(xs.begin(), xs.end());
    return xs;
}

bool matches(PatternTag tag, const std::array<Int, 4>& gcds, Int p1, Int p2, Int p3) {
    std::array<Int, 4> want{};
    switch (tag) {
        case PatternTag::A1: want = {p1, p2, p1 * p3, p2 * p3}; break;
        case PatternTag::A2: want = {1, p1, p2, p1 * p2}; break;
        case PatternTag::A4: want = {1, p1 * p2, p1 * p3, p2 * p3}; break;
        default: return false;
    }
    return sorted4(want) == gcds;
}

}  // namespace

GcdPattern classify(const ResidueSeq& s) {
    if (s.size() != 4) throw std::invalid_argument("classify: quadruple required");
    const Modulus& m = s.mod();
    GcdPattern out;
    if (m.distinct_primes() < 3) {
        out.tag = PatternTag::TwoPrimeOrFewer;
        return out;
    }
    std::array<Int, 4> gcds{};
    for (int i = 0; i < 4; ++i) gcds[static_cast<std::size_t>(i)] = gcd_int(s.terms()[static_cast<std::size_t>(i)], m.n);
    gcds = sorted4(gcds);
    if (gcds == std::array<Int, 4>{1, 1, 1, 1}) {
        out.tag = PatternTag::A3;
        return out;
    }
    if (m.distinct_primes() == 3 && m.squarefree()) {
        std::array<Int, 3> ps{m.prime_factors[0].first, m.prime_factors[1].first,
                              m.prime_factors[2].first};
        std::array<int, 3> order{0, 1, 2};
        for (PatternTag tag : {PatternTag::A1, PatternTag::A2, PatternTag::A4}) {
            std::array<int, 3> p = order;
            do {
                Int p1 = ps[static_cast<std::size_t>(p[0])];
                Int p2 = ps[static_cast<std::size_t>(p[1])];
                Int p3 = ps[static_cast<std::size_t>(p[2])];
                if (matches(tag, gcds, p1, p2, p3)) {
                    out.tag = tag;
                    out.labeled_primes = {p1, p2, p3};
                    return out;
                }
            } while (std::next_permutation(p.begin(), p.end()));
        }
    }
    out.tag = PatternTag::Other;
    return out;
}

NormalizedQuadruple::NormalizedQuadruple(Modulus mod_, Int e_, Int c_, Int b_, Int a_, Int unit)
    : mod(std::move(mod_)), e(e_), c(c_), b(b_), a(a_), normalizing_unit(unit) {
    const Int n = mod.n;
    if (e + c != a + b) throw std::logic_error("NormalizedQuadruple: e + c != a + b");
    if (!(1 <= e && e < a && a <= b && b < c && 2 * c < n))
        throw std::logic_error("NormalizedQuadruple: shape 1 <= e < a <= b < c < n/2 violated");
    // reconstruction (e, c, n-b, n-a) must have term sum exactly 2n
    if (e + c + (n - b) + (n - a) != 2 * n)
        throw std::logic_error("NormalizedQuadruple: reconstruction sum != 2n");
    s = b / a;
}

namespace {

std::optional<NormalizedQuadruple> fit_shape(const ResidueSeq& seq, Int v) {
    const Int n = seq.n();
    std::array<Int, 4> y{};
    for (int i = 0; i < 4; ++i)
        y[static_cast<std::size_t>(i)] = residue(v * seq.terms()[static_cast<std::size_t>(i)], n);
    std::sort(y.begin(), y.end());
    if (y[0] + y[1] + y[2] + y[3] != 2 * n) return std::nullopt;
    if (!(y[0] < y[1] && 2 * y[1] < n && 2 * y[2] > n && y[3] < n - y[0])) return std::nullopt;
    return NormalizedQuadruple(seq.mod(), y[0], y[1], n - y[2], n - y[3], v);
}

}  // namespace

std::optional<NormalizedQuadruple> normalize(const ResidueSeq& s) {
    if (s.size() != 4 || !is_minimal_zero_sum(s))
        throw std::invalid_argument("normalize: minimal zero-sum quadruple required");
    for (Int v = 1; v < s.n(); ++v) {
        if (gcd_int(v, s.n()) != 1) continue;
        if (auto q = fit_shape(s, v)) return q;
    }
    return std::nullopt;
}

std::optional<NormalizedQuadruple> normal_form_under(const ResidueSeq& s, Int v) {
    if (!s.mod().is_unit(v))
        throw std::invalid_argument("normal_form_under: " + std::to_string(v) + " is not a unit");
    return fit_shape(s, v);
}

std::vector<NormalizedQuadruple> all_normal_forms(const ResidueSeq& s) {
    if (s.size() != 4 || !is_minimal_zero_sum(s))
        throw std::invalid_argument("all_normal_forms: minimal zero-sum quadruple required");
    std::vector<NormalizedQuadruple> out;
    for (Int v = 1; v < s.n(); ++v) {
        if (gcd_int(v, s.n()) != 1) continue;
        auto q = fit_shape(s, v);
        if (!q) continue;
        bool dup = false;
        for (const auto& seen : out)
            if (seen == *q) { dup = true; break; }
        if (!dup) out.push_back(*q);
    }
    return out;
}

ResidueSeq denormalize(const NormalizedQuadruple& q) {
    return ResidueSeq(q.mod, {q.e, q.c, q.mod.n - q.b, q.mod.n - q.a});
}

}  // namespace zsindex

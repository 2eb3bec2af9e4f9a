#include "zsindex/zseq.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace zsindex {

ResidueSeq::ResidueSeq(Modulus mod, std::vector<Int> terms)
    : mod_(std::move(mod)), terms_(std::move(terms)) {
    for (Int t : terms_) {
        if (t < 1 || t >= mod_.n)
            throw std::invalid_argument("ResidueSeq: term " + std::to_string(t) +
                                        " outside [1, n-1] for n = " + std::to_string(mod_.n));
    }
    std::sort(terms_.begin(), terms_.end());
}

std::optional<Int> zero_sum_nu(const ResidueSeq& s) {
    Int sum = 0;
    for (Int t : s.terms()) sum += t;
    if (sum % s.n() != 0) return std::nullopt;
    return sum / s.n();
}

bool is_minimal_zero_sum(const ResidueSeq& s) {
    if (!zero_sum_nu(s)) return false;
    const auto& xs = s.terms();
    const int k = static_cast<int>(xs.size());
    const Int n = s.n();
    for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
        Int sum = 0;
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1u) sum += xs[i];
        if (sum % n == 0) return false;
    }
    return true;
}

Int g_norm(const ResidueSeq& s, Int v) {
    const Modulus& m = s.mod();
    if (!m.is_unit(v))
        throw std::invalid_argument("g_norm: " + std::to_string(v) + " is not a unit mod " +
                                    std::to_string(m.n));
    Int sum = 0;
    for (Int x : s.terms()) sum += residue(v * x, m.n);
    return sum % m.n == 0 ? sum / m.n : sum;
}

IndexResult index_of(const ResidueSeq& s) {
    if (!zero_sum_nu(s)) throw std::invalid_argument("index_of: sequence is not zero-sum");
    IndexResult best;
    for (Int v = 1; v < s.n(); ++v) {
        if (gcd_int(v, s.n()) != 1) continue;
        Int norm = g_norm(s, v);
        if (best.witness == 0 || norm < best.value) {
            best.value = norm;
            best.witness = v;
            if (norm == 1) break;
        }
    }
    return best;
}

namespace {

std::vector<Int> multiplied_sorted(const ResidueSeq& s, Int v) {
    std::vector<Int> out;
    out.reserve(s.size());
    for (Int x : s.terms()) out.push_back(residue(v * x, s.n()));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

ResidueSeq canonical_rep(const ResidueSeq& s) {
    std::vector<Int> best = s.terms();
    for (Int v = 2; v < s.n(); ++v) {
        if (gcd_int(v, s.n()) != 1) continue;
        std::vector<Int> cand = multiplied_sorted(s, v);
        if (cand < best) best = std::move(cand);
    }
    return ResidueSeq(s.mod(), std::move(best));
}

Int orbit_size(const ResidueSeq& s) {
    std::set<std::vector<Int>> seen;
    for (Int v = 1; v < s.n(); ++v) {
        if (gcd_int(v, s.n()) != 1) continue;
        seen.insert(multiplied_sorted(s, v));
    }
    return static_cast<Int>(seen.size());
}

}  // namespace zsindex

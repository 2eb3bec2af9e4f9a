#include "zsindex/harness.hpp"

#include <omp.h>

#include <chrono>
#include <exception>
#include <stdexcept>

namespace zsindex {

std::string strategy_name(Strategy st) {
    switch (st) {
        case Strategy::None: return "none";
        case Strategy::Direct: return "direct";
        case Strategy::Sum3N: return "sum_3n";
        case Strategy::HalfPlane: return "half_plane";
        case Strategy::SmallA: return "small_a";
        case Strategy::Interval: return "interval";
        case Strategy::IntervalRatio: return "interval_ratio";
        case Strategy::MType: return "m_type";
        case Strategy::Renumber: return "renumber";
        case Strategy::OracleOnly: return "oracle_only";
    }
    return "none";
}

WaterfallConfig WaterfallConfig::all() { return WaterfallConfig{}; }

WaterfallConfig WaterfallConfig::only(Strategy st) {
    WaterfallConfig cfg;
    cfg.direct = st == Strategy::Direct;
    cfg.sum_3n = st == Strategy::Sum3N;
    cfg.half_plane = st == Strategy::HalfPlane;
    cfg.small_a = st == Strategy::SmallA;
    cfg.interval = st == Strategy::Interval;
    cfg.interval_ratio = st == Strategy::IntervalRatio;
    cfg.m_search = st == Strategy::MType;
    cfg.renumber = st == Strategy::Renumber;
    return cfg;
}

namespace {

struct StrategyHit {
    Strategy strategy;
    Certificate certificate;
};

std::optional<StrategyHit> run_waterfall(const ResidueSeq& s,
                                         const std::optional<NormalizedQuadruple>& q,
                                         const WaterfallConfig& cfg, int depth) {
    const Int n = s.n();
    if (cfg.direct) {
        for (Int v : {Int{1}, n - 1}) {
            if (!s.mod().is_unit(v)) continue;
            if (g_norm(s, v) == 1) {
                Certificate cert{CertKind::Multiplier, v, 0, HalfPlaneSide::HighMajority,
                                 {},                   -1, s, q};
                return StrategyHit{Strategy::Direct, cert};
            }
        }
    }
    if (cfg.sum_3n || cfg.half_plane) {
        Int cap = std::min<Int>(n - 1, cfg.notice_cap);
        for (Int m = 1; m <= cap; ++m) {
            if (gcd_int(m, n) != 1) continue;
            if (cfg.sum_3n)
                if (auto cert = check_sum_3n(s, m)) return StrategyHit{Strategy::Sum3N, *cert};
            if (cfg.half_plane)
                if (auto cert = check_halfplane(s, m))
                    return StrategyHit{Strategy::HalfPlane, *cert};
        }
    }
    if (q) {
        if (cfg.small_a) {
            SmallAResult res = search_small_a(*q);
            if (res.certificate) return StrategyHit{Strategy::SmallA, *res.certificate};
        }
        if (cfg.interval) {
            if (auto cert = search_interval(*q, q->b, IntervalMode::ProductBound))
                return StrategyHit{Strategy::Interval, *cert};
        }
        if (cfg.interval_ratio) {
            if (auto cert = search_interval(*q, q->b, IntervalMode::RatioBound))
                return StrategyHit{Strategy::IntervalRatio, *cert};
        }
        if (cfg.m_search) {
            if (auto cert = search_M(*q)) return StrategyHit{Strategy::MType, *cert};
        }
        if (cfg.renumber && depth < cfg.renumber_depth) {
            RenumberOutcome outcome = renumber(*q);
            if (auto* cert = std::get_if<Certificate>(&outcome))
                return StrategyHit{Strategy::Renumber, *cert};
            if (auto* q2 = std::get_if<NormalizedQuadruple>(&outcome)) {
                // the renumbered quadruple certifies a unit multiple of s
                auto inner = run_waterfall(denormalize(*q2), *q2, cfg, depth + 1);
                if (inner) return StrategyHit{Strategy::Renumber, inner->certificate};
            }
        }
    }
    return std::nullopt;
}

// One hypothesis of the window-growth claim: the first half-open interval
// holds exactly one integer, i.e. n/b < m1 + 1.
bool growth_hypotheses_hold(const NormalizedQuadruple& q, Int m1) {
    return Rational(q.mod.n, q.b) < Rational(m1 + 1, 1);
}

}  // namespace

InstanceRecord verify_instance(const ResidueSeq& s, const WaterfallConfig& cfg) {
    if (s.size() != 4 || !is_minimal_zero_sum(s))
        throw std::invalid_argument("verify_instance: minimal zero-sum quadruple required");
    IndexResult ground_truth = index_of(s);
    InstanceRecord rec{s,       classify(s), ground_truth.value, ground_truth.witness,
                       normalize(s), Strategy::None, std::nullopt, {}, false, {}};
    if (rec.normalized) {
        QuadDiagnostics diag = quad_diagnostics(*rec.normalized);
        rec.diag = DiagSummary{true, diag.s, diag.k1, diag.windows_all_blocked};
        if (diag.first_dense_k && growth_hypotheses_hold(*rec.normalized, diag.m1)) {
            for (std::size_t i = 1; i < diag.halfopen_counts.size(); ++i) {
                if (diag.halfopen_counts[i] - diag.halfopen_counts[i - 1] > 2)
                    rec.defects.push_back("window_growth: interval count jumped by more than 2");
            }
        }
    }
    auto hit = run_waterfall(s, rec.normalized, cfg, 0);
    if (hit) {
        rec.strategy = hit->strategy;
        rec.certificate = hit->certificate;
        if (rec.index_value != 1 || !hit->certificate.validate())
            rec.defects.push_back("soundness: strategy " + strategy_name(hit->strategy) +
                                  " certified a quadruple of index " +
                                  std::to_string(rec.index_value));
    } else if (rec.index_value == 1) {
        rec.strategy = Strategy::OracleOnly;
    } else {
        rec.counterexample = true;
    }
    return rec;
}

VerificationReport verify_modulus(Int n, const EnumFilter& f, const WaterfallConfig& cfg,
                                  bool timings) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.n = n;
    Modulus m = factorize(n);
    enumerate_orbit_reps(m, f, [&](const ResidueSeq& rep) {
        InstanceRecord rec = verify_instance(rep, cfg);
        Int orbit = orbit_size(rep);
        report.instances += orbit;
        report.orbits += 1;
        report.index_histogram[rec.index_value] += orbit;
        report.strategy_histogram[strategy_name(rec.strategy)] += 1;
        if (rec.counterexample)
            report.violations.push_back(Violation{
                "index_ge_2", rep.terms(), "index " + std::to_string(rec.index_value)});
        for (const auto& defect : rec.defects)
            report.violations.push_back(Violation{
                defect.substr(0, defect.find(':')), rep.terms(), defect});
        return true;
    });
    if (timings) {
        auto elapsed = std::chrono::steady_clock::now() - start;
        report.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    return report;
}

std::vector<Int> sweep_moduli(const SweepOptions& opts) {
    std::vector<Int> out;
    for (Int n = std::max<Int>(5, opts.n_lo); n <= opts.n_hi; ++n) {
        if (!opts.include_all_n && gcd_int(n, 6) != 1) continue;
        out.push_back(n);
    }
    return out;
}

std::vector<VerificationReport> sweep_serial(const SweepOptions& opts) {
    std::vector<VerificationReport> reports;
    for (Int n : sweep_moduli(opts))
        reports.push_back(verify_modulus(n, opts.filter, opts.waterfall, opts.timings));
    return reports;
}

std::vector<VerificationReport> sweep(const SweepOptions& opts) {
    if (opts.jobs <= 1) return sweep_serial(opts);
    std::vector<Int> moduli = sweep_moduli(opts);
    std::vector<VerificationReport> reports(moduli.size());
    std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(dynamic) num_threads(opts.jobs)
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        try {
            reports[i] = verify_modulus(moduli[i], opts.filter, opts.waterfall, opts.timings);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return reports;
}

bool sweep_has_violations(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (!r.violations.empty()) return true;
    return false;
}

std::vector<AuditFinding> window_audit(const std::vector<Int>& moduli, int jobs) {
    for (Int n : moduli) {
        Modulus m = factorize(n);
        if (m.distinct_primes() != 3 || !m.squarefree() || gcd_int(n, 6) != 1)
            throw std::invalid_argument(
                "window_audit: n must be squarefree with three prime factors, coprime to 6");
    }
    std::vector<std::vector<AuditFinding>> per_n(moduli.size());
    std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(dynamic) num_threads(std::max(jobs, 1))
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        try {
            Modulus m = factorize(moduli[i]);
            EnumFilter f;
            f.pattern = PatternTag::A1;
            enumerate_orbit_reps(m, f, [&](const ResidueSeq& rep) {
                for (const auto& q : all_normal_forms(rep)) {
                    if (q.a <= 2 * q.e || q.s < 10) continue;
                    QuadDiagnostics diag = quad_diagnostics(q);
                    if (diag.windows_all_blocked)
                        per_n[i].push_back(
                            AuditFinding{m.n, rep.terms(), q.e, q.c, q.b, q.a, q.s});
                }
                return true;
            });
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    std::vector<AuditFinding> findings;
    for (auto& chunk : per_n)
        findings.insert(findings.end(), chunk.begin(), chunk.end());
    return findings;
}

std::vector<Int> first_audit_moduli(int count, Int above) {
    std::vector<Int> out;
    for (Int n = above + 1; static_cast<int>(out.size()) < count; ++n) {
        if (gcd_int(n, 6) != 1) continue;
        Modulus m = factorize(n);
        if (m.distinct_primes() == 3 && m.squarefree()) out.push_back(n);
    }
    return out;
}

std::optional<ResidueSeq> find_min_index_at_least(Int n, Int threshold) {
    if (threshold != 2 && threshold != 3)
        throw std::invalid_argument("find_min_index_at_least: threshold must be 2 or 3");
    std::optional<ResidueSeq> hit;
    enumerate_quadruples(factorize(n), EnumFilter{}, [&](const ResidueSeq& s) {
        if (index_of(s).value >= threshold) {
            hit = s;
            return false;
        }
        return true;
    });
    return hit;
}

std::optional<CounterexampleHit> scan_for_counterexample(Int n_lo, Int n_hi, Int threshold,
                                                         bool only_off_hypothesis) {
    for (Int n = std::max<Int>(5, n_lo); n <= n_hi; ++n) {
        if (only_off_hypothesis && gcd_int(n, 6) == 1) continue;
        if (auto s = find_min_index_at_least(n, threshold))
            return CounterexampleHit{n, *s, index_of(*s).value};
    }
    return std::nullopt;
}

}  // namespace zsindex

// Command-line surface for the index / certificate / sweep library.
//
// Exit codes, never conflated:
//   0  success, no mathematical violation
//   1  violation or counterexample found (an index >= 2 quadruple)
//   2  usage error or malformed input

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "zsindex/serialize.hpp"

namespace {

using namespace zsindex;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct FormatOpt {
    std::string value = "table";
};

void add_format(CLI::App* cmd, FormatOpt& fmt) {
    cmd->add_option("--format", fmt.value, "Output format")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
}

ResidueSeq parse_sequence(Int n, const std::vector<Int>& terms) {
    return ResidueSeq(factorize(n), terms);
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        atomic_write_file(out_path, content);
}

std::string json_dump(const json& j) { return j.dump(2) + "\n"; }

void print_terms_csv(const std::vector<Int>& terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) std::cout << (i ? " " : "") << terms[i];
}

// ---- index ----------------------------------------------------------

int cmd_index(Int n, const std::vector<Int>& terms, const std::string& fmt) {
    ResidueSeq s = parse_sequence(n, terms);
    auto nu = zero_sum_nu(s);
    bool minimal = is_minimal_zero_sum(s);
    std::optional<IndexResult> idx;
    if (nu) idx = index_of(s);
    if (fmt == "json") {
        json j{{"n", n}, {"terms", s.terms()}, {"zero_sum", nu.has_value()}, {"minimal", minimal}};
        j["nu"] = nu ? json(*nu) : json(nullptr);
        j["index"] = idx ? json(idx->value) : json(nullptr);
        j["witness_unit"] = idx ? json(idx->witness) : json(nullptr);
        std::cout << json_dump(j);
    } else if (fmt == "csv") {
        std::cout << "n,terms,zero_sum,nu,minimal,index,witness_unit\n" << n << ',';
        print_terms_csv(s.terms());
        std::cout << ',' << (nu ? "true" : "false") << ',' << (nu ? std::to_string(*nu) : "")
                  << ',' << (minimal ? "true" : "false") << ','
                  << (idx ? std::to_string(idx->value) : "") << ','
                  << (idx ? std::to_string(idx->witness) : "") << '\n';
    } else {
        if (!nu)
            std::cout << "not zero-sum\n";
        else
            std::cout << "index " << idx->value << " (witness unit " << idx->witness << ", nu "
                      << *nu << ", " << (minimal ? "minimal" : "not minimal") << ")\n";
    }
    return kOk;
}

// ---- certify --------------------------------------------------------

const std::vector<std::pair<std::string, Strategy>> kStrategyFlags = {
    {"direct", Strategy::Direct},        {"sum-3n", Strategy::Sum3N},
    {"half-plane", Strategy::HalfPlane}, {"small-a", Strategy::SmallA},
    {"interval", Strategy::Interval},    {"interval-ratio", Strategy::IntervalRatio},
    {"m-type", Strategy::MType},         {"renumber", Strategy::Renumber},
};

int cmd_certify(Int n, const std::vector<Int>& terms, const std::string& strategy, Int notice_cap,
                const std::string& fmt) {
    ResidueSeq s = parse_sequence(n, terms);
    if (s.size() != 4 || !is_minimal_zero_sum(s))
        throw std::invalid_argument("certify expects a minimal zero-sum quadruple");

    WaterfallConfig cfg = WaterfallConfig::all();
    if (strategy != "all")
        for (const auto& [name, st] : kStrategyFlags)
            if (name == strategy) cfg = WaterfallConfig::only(st);
    cfg.notice_cap = notice_cap;

    InstanceRecord rec = verify_instance(s, cfg);

    std::vector<std::pair<std::string, bool>> trace;
    for (const auto& [name, st] : kStrategyFlags) {
        if (strategy != "all" && strategy != name) continue;
        bool hit = rec.strategy == st;
        trace.emplace_back(name, hit);
        if (hit) break;
    }

    if (fmt == "json") {
        json jtrace = json::array();
        for (const auto& [name, hit] : trace)
            jtrace.push_back({{"strategy", name}, {"hit", hit}});
        json j = to_json(rec);
        j["trace"] = jtrace;
        std::cout << json_dump(j);
    } else if (fmt == "csv") {
        std::cout << "n,terms,index,witness_unit,strategy,certificate\n" << n << ',';
        print_terms_csv(s.terms());
        std::cout << ',' << rec.index_value << ',' << rec.witness_unit << ','
                  << strategy_name(rec.strategy) << ','
                  << (rec.certificate ? rec.certificate->describe() : "") << '\n';
    } else {
        for (const auto& [name, hit] : trace)
            std::cout << (hit ? "  + " : "  - ") << name << '\n';
        std::cout << "index " << rec.index_value << " via " << strategy_name(rec.strategy);
        if (rec.certificate) std::cout << ": " << rec.certificate->describe();
        std::cout << '\n';
    }
    return rec.index_value >= 2 ? kViolation : kOk;
}

// ---- normalize / classify -------------------------------------------

int cmd_normalize(Int n, const std::vector<Int>& terms, const std::string& fmt) {
    ResidueSeq s = parse_sequence(n, terms);
    auto q = normalize(s);
    if (fmt == "json") {
        json j{{"n", n}, {"terms", s.terms()}};
        j["normalized"] = q ? to_json(*q) : json(nullptr);
        std::cout << json_dump(j);
    } else if (fmt == "csv") {
        std::cout << "n,terms,e,c,b,a,s,unit\n" << n << ',';
        print_terms_csv(s.terms());
        if (q)
            std::cout << ',' << q->e << ',' << q->c << ',' << q->b << ',' << q->a << ',' << q->s
                      << ',' << q->normalizing_unit << '\n';
        else
            std::cout << ",,,,,,\n";
    } else {
        if (q)
            std::cout << "(e=" << q->e << ", c=" << q->c << ", b=" << q->b << ", a=" << q->a
                      << ") s=" << q->s << " unit=" << q->normalizing_unit << '\n';
        else
            std::cout << "no unit multiple fits the normalized shape\n";
    }
    return kOk;
}

int cmd_classify(Int n, const std::vector<Int>& terms, const std::string& fmt) {
    ResidueSeq s = parse_sequence(n, terms);
    GcdPattern p = classify(s);
    if (fmt == "json") {
        json j{{"n", n}, {"terms", s.terms()}, {"pattern", pattern_name(p.tag)}};
        if (p.labeled_primes) {
            const auto& ps = *p.labeled_primes;
            j["pattern_primes"] = json::array({ps[0], ps[1], ps[2]});
        }
        std::cout << json_dump(j);
    } else if (fmt == "csv") {
        std::cout << "n,terms,pattern,primes\n" << n << ',';
        print_terms_csv(s.terms());
        std::cout << ',' << pattern_name(p.tag) << ',';
        if (p.labeled_primes)
            std::cout << (*p.labeled_primes)[0] << ' ' << (*p.labeled_primes)[1] << ' '
                      << (*p.labeled_primes)[2];
        std::cout << '\n';
    } else {
        std::cout << pattern_name(p.tag);
        if (p.labeled_primes)
            std::cout << " with (p1, p2, p3) = (" << (*p.labeled_primes)[0] << ", "
                      << (*p.labeled_primes)[1] << ", " << (*p.labeled_primes)[2] << ")";
        std::cout << '\n';
    }
    return kOk;
}

// ---- enumerate ------------------------------------------------------

int cmd_enumerate(Int n, const EnumFilter& filter, bool orbit_reps, std::size_t limit,
                  const std::string& fmt) {
    Modulus m = factorize(n);
    std::vector<ResidueSeq> out = orbit_reps ? collect_orbit_reps(m, filter, limit)
                                             : collect_quadruples(m, filter, limit);
    if (fmt == "json") {
        json arr = json::array();
        for (const auto& s : out) arr.push_back(s.terms());
        std::cout << json_dump(json{{"n", n}, {"count", out.size()}, {"quadruples", arr}});
    } else if (fmt == "csv") {
        std::cout << "n,x1,x2,x3,x4\n";
        for (const auto& s : out)
            std::cout << n << ',' << s.terms()[0] << ',' << s.terms()[1] << ',' << s.terms()[2]
                      << ',' << s.terms()[3] << '\n';
    } else {
        for (const auto& s : out)
            std::cout << '(' << s.terms()[0] << ", " << s.terms()[1] << ", " << s.terms()[2]
                      << ", " << s.terms()[3] << ")\n";
        std::cout << out.size() << (orbit_reps ? " orbit representatives\n" : " quadruples\n");
    }
    return kOk;
}

// ---- sweep ----------------------------------------------------------

int cmd_sweep(const SweepOptions& opts, const std::string& out_path, const std::string& fmt) {
    std::vector<VerificationReport> reports = sweep(opts);
    if (fmt == "csv") {
        emit(out_path, reports_csv(reports));
    } else if (fmt == "table") {
        std::ostringstream os;
        for (const auto& r : reports)
            os << "n=" << r.n << " instances=" << r.instances << " orbits=" << r.orbits
               << " violations=" << r.violations.size() << '\n';
        emit(out_path, os.str());
    } else {
        emit(out_path, json_dump(to_json(reports)));
    }
    Int instances = 0;
    for (const auto& r : reports) instances += r.instances;
    std::cerr << "swept " << reports.size() << " moduli, " << instances << " quadruples, "
              << (sweep_has_violations(reports) ? "violations found" : "no violations") << '\n';
    return sweep_has_violations(reports) ? kViolation : kOk;
}

// ---- audit ----------------------------------------------------------

int cmd_audit(std::vector<Int> moduli, int count, Int above, int jobs,
              const std::string& out_path, const std::string& fmt) {
    if (moduli.empty()) moduli = first_audit_moduli(count, above);
    std::vector<AuditFinding> findings = window_audit(moduli, jobs);
    if (fmt == "csv") {
        emit(out_path, findings_csv(findings));
    } else if (fmt == "table") {
        std::ostringstream os;
        for (const auto& f : findings)
            os << "n=" << f.n << " (e=" << f.e << ", c=" << f.c << ", b=" << f.b << ", a=" << f.a
               << ") s=" << f.s << '\n';
        os << findings.size() << " findings over " << moduli.size() << " moduli\n";
        emit(out_path, os.str());
    } else {
        json jm = json::array();
        for (Int m : moduli) jm.push_back(m);
        json jf = json::array();
        for (const auto& f : findings) jf.push_back(to_json(f));
        emit(out_path, json_dump(json{{"moduli", jm}, {"findings", jf}}));
    }
    std::cerr << "audited " << moduli.size() << " moduli, " << findings.size() << " findings\n";
    return kOk;
}

// ---- find-counterexample ---------------------------------------------

int cmd_find_counterexample(Int n_lo, Int n_hi, Int threshold, bool all_n,
                            const std::string& fmt) {
    auto hit = scan_for_counterexample(n_lo, n_hi, threshold, /*only_off_hypothesis=*/!all_n);
    if (fmt == "json") {
        json j{{"found", hit.has_value()}};
        if (hit) {
            j["n"] = hit->n;
            j["terms"] = hit->sequence.terms();
            j["index"] = hit->index_value;
        }
        std::cout << json_dump(j);
    } else {
        if (hit)
            std::cout << "n=" << hit->n << " (" << hit->sequence.terms()[0] << ", "
                      << hit->sequence.terms()[1] << ", " << hit->sequence.terms()[2] << ", "
                      << hit->sequence.terms()[3] << ") index " << hit->index_value << '\n';
        else
            std::cout << "no quadruple of index >= " << threshold << " in [" << n_lo << ", "
                      << n_hi << "]\n";
    }
    return hit ? kViolation : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Index-1 certificates and exhaustive verification for minimal zero-sum "
                 "quadruples over Z_n"};
    app.require_subcommand(1);

    Int n = 0;
    std::vector<Int> terms;
    FormatOpt fmt;
    std::string strategy = "all";
    Int notice_cap = 10000;

    auto* index = app.add_subcommand("index", "Index of a sequence over Z_n");
    index->add_option("--n", n, "Group order")->required();
    index->add_option("terms", terms, "Sequence terms in [1, n-1]")->required()->expected(1, 4);
    add_format(index, fmt);

    auto* certify = app.add_subcommand("certify", "Certify index 1 through the waterfall");
    certify->add_option("--n", n, "Group order")->required();
    certify->add_option("terms", terms, "Quadruple terms")->required()->expected(4);
    {
        std::vector<std::string> names{"all"};
        for (const auto& [name, st] : kStrategyFlags) names.push_back(name);
        certify->add_option("--strategy", strategy, "Restrict to one strategy")
            ->check(CLI::IsMember(names))
            ->capture_default_str();
    }
    certify->add_option("--notice-cap", notice_cap, "Multiplier-prefix scan cap")
        ->capture_default_str();
    add_format(certify, fmt);

    auto* normalize_cmd = app.add_subcommand("normalize", "Normalized (e, c, b, a) coordinates");
    normalize_cmd->add_option("--n", n, "Group order")->required();
    normalize_cmd->add_option("terms", terms, "Quadruple terms")->required()->expected(4);
    add_format(normalize_cmd, fmt);

    auto* classify_cmd = app.add_subcommand("classify", "Gcd pattern of a quadruple");
    classify_cmd->add_option("--n", n, "Group order")->required();
    classify_cmd->add_option("terms", terms, "Quadruple terms")->required()->expected(4);
    add_format(classify_cmd, fmt);

    std::string pattern_opt;
    bool normalizable = false, a_gt_2e = false, a_gt_4e = false, orbit_reps = false;
    std::size_t limit = SIZE_MAX;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "Minimal zero-sum quadruples over Z_n");
    enumerate_cmd->add_option("--n", n, "Group order")->required();
    enumerate_cmd->add_option("--pattern", pattern_opt, "Gcd pattern filter")
        ->check(CLI::IsMember({"a1", "a2", "a3", "a4", "two_prime_or_fewer", "other"}));
    enumerate_cmd->add_flag("--normalizable", normalizable, "Require a normal form");
    enumerate_cmd->add_flag("--a-gt-2e", a_gt_2e, "Require a > 2e on the normal form");
    enumerate_cmd->add_flag("--a-gt-4e", a_gt_4e, "Require a > 4e on the normal form");
    enumerate_cmd->add_flag("--orbit-reps", orbit_reps, "One representative per unit orbit");
    enumerate_cmd->add_option("--limit", limit, "Stop after this many results");
    add_format(enumerate_cmd, fmt);

    Int min_n = 5, max_n = 5;
    int jobs = 1;
    bool include_all_n = false, timings = false;
    std::string out_path;
    auto* sweep_cmd = app.add_subcommand("sweep", "Verify every orbit over a range of moduli");
    sweep_cmd->add_option("--min-n", min_n, "Lowest modulus")->required();
    sweep_cmd->add_option("--max-n", max_n, "Highest modulus")->required();
    sweep_cmd->add_option("--pattern", pattern_opt, "Gcd pattern filter")
        ->check(CLI::IsMember({"a1", "a2", "a3", "a4", "two_prime_or_fewer", "other"}));
    sweep_cmd->add_flag("--include-all-n", include_all_n,
                        "Also sweep moduli with gcd(n, 6) != 1");
    sweep_cmd->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
    sweep_cmd->add_option("--notice-cap", notice_cap, "Multiplier-prefix scan cap")
        ->capture_default_str();
    sweep_cmd->add_flag("--timings", timings,
                        "Record wall time per modulus (breaks byte-for-byte determinism)");
    sweep_cmd->add_option("--out", out_path, "Write the report here instead of stdout");
    add_format(sweep_cmd, fmt);

    std::vector<Int> audit_moduli;
    int audit_count = 5;
    Int audit_above = 1000;
    auto* audit_cmd = app.add_subcommand("audit", "Window audit over three-prime moduli");
    audit_cmd->add_option("--n", audit_moduli, "Moduli to audit (repeatable)");
    audit_cmd->add_option("--count", audit_count, "How many moduli to pick when --n is absent")
        ->capture_default_str();
    audit_cmd->add_option("--above", audit_above, "Pick moduli above this bound")
        ->capture_default_str();
    audit_cmd->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
    audit_cmd->add_option("--out", out_path, "Write findings here instead of stdout");
    add_format(audit_cmd, fmt);

    Int threshold = 2;
    bool all_n = false;
    auto* find_cmd = app.add_subcommand("find-counterexample",
                                        "Least quadruple of index >= threshold, scanning n "
                                        "ascending (off-hypothesis moduli by default)");
    find_cmd->add_option("--min-n", min_n, "Lowest modulus")->capture_default_str();
    find_cmd->add_option("--max-n", max_n, "Highest modulus")->required();
    find_cmd->add_option("--threshold", threshold, "Index threshold (2 or 3)")
        ->capture_default_str();
    find_cmd->add_flag("--all-n", all_n, "Scan every modulus, not just gcd(n, 6) != 1");
    add_format(find_cmd, fmt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (index->parsed()) return cmd_index(n, terms, fmt.value);
        if (certify->parsed()) return cmd_certify(n, terms, strategy, notice_cap, fmt.value);
        if (normalize_cmd->parsed()) return cmd_normalize(n, terms, fmt.value);
        if (classify_cmd->parsed()) return cmd_classify(n, terms, fmt.value);
        if (enumerate_cmd->parsed()) {
            EnumFilter f;
            if (!pattern_opt.empty()) f.pattern = pattern_from_name(pattern_opt);
            f.require_normalizable = normalizable;
            if (a_gt_2e) f.a_gt_2e = true;
            if (a_gt_4e) f.a_gt_4e = true;
            return cmd_enumerate(n, f, orbit_reps, limit, fmt.value);
        }
        if (sweep_cmd->parsed()) {
            if (min_n < 5 || min_n > max_n)
                throw std::invalid_argument("sweep requires 5 <= min-n <= max-n");
            SweepOptions opts;
            opts.n_lo = min_n;
            opts.n_hi = max_n;
            if (!pattern_opt.empty()) opts.filter.pattern = pattern_from_name(pattern_opt);
            opts.include_all_n = include_all_n;
            opts.jobs = jobs;
            opts.waterfall.notice_cap = notice_cap;
            opts.timings = timings;
            return cmd_sweep(opts, out_path, fmt.value);
        }
        if (audit_cmd->parsed())
            return cmd_audit(audit_moduli, audit_count, audit_above, jobs, out_path, fmt.value);
        if (find_cmd->parsed())
            return cmd_find_counterexample(min_n, max_n, threshold, all_n, fmt.value);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

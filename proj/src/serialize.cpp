#include "zsindex/serialize.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace zsindex {

using nlohmann::json;

json to_json(const Violation& v) {
    return json{{"kind", v.kind}, {"terms", v.terms}, {"detail", v.detail}};
}

Violation violation_from_json(const json& j) {
    Violation v;
    v.kind = j.at("kind").get<std::string>();
    v.terms = j.at("terms").get<std::vector<Int>>();
    v.detail = j.at("detail").get<std::string>();
    return v;
}

json to_json(const VerificationReport& r) {
    json index_hist = json::object();
    for (const auto& [value, count] : r.index_histogram)
        index_hist[std::to_string(value)] = count;
    json strat_hist = json::object();
    for (const auto& [name, count] : r.strategy_histogram) strat_hist[name] = count;
    json violations = json::array();
    for (const auto& v : r.violations) violations.push_back(to_json(v));
    return json{{"n", r.n},
                {"totals", {{"instances", r.instances}, {"orbits", r.orbits}}},
                {"index_histogram", index_hist},
                {"strategy_histogram", strat_hist},
                {"violations", violations},
                {"elapsed_ms", r.elapsed_ms}};
}

VerificationReport report_from_json(const json& j) {
    VerificationReport r;
    r.n = j.at("n").get<Int>();
    r.instances = j.at("totals").at("instances").get<Int>();
    r.orbits = j.at("totals").at("orbits").get<Int>();
    for (const auto& [key, value] : j.at("index_histogram").items())
        r.index_histogram[std::stoll(key)] = value.get<Int>();
    for (const auto& [key, value] : j.at("strategy_histogram").items())
        r.strategy_histogram[key] = value.get<Int>();
    for (const auto& v : j.at("violations")) r.violations.push_back(violation_from_json(v));
    r.elapsed_ms = j.at("elapsed_ms").get<Int>();
    return r;
}

json to_json(const std::vector<VerificationReport>& reports) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr;
}

std::vector<VerificationReport> reports_from_json(const json& j) {
    std::vector<VerificationReport> out;
    for (const auto& item : j) out.push_back(report_from_json(item));
    return out;
}

json to_json(const Certificate& cert) {
    json j{{"kind", cert_kind_name(cert.kind)},
           {"multiplier", cert.v},
           {"implied_unit", cert.implied_unit()}};
    if (cert.kind == CertKind::Interval) j["k"] = cert.k;
    if (cert.kind == CertKind::HalfPlane)
        j["side"] = cert.side == HalfPlaneSide::HighMajority ? "high" : "low";
    if (cert.kind == CertKind::MType)
        j["satisfied"] = json{{"a_above", cert.satisfied[0]},
                              {"b_above", cert.satisfied[1]},
                              {"c_below", cert.satisfied[2]}};
    if (cert.kind == CertKind::SmallA) j["j"] = cert.small_a_index;
    return j;
}

json to_json(const NormalizedQuadruple& q) {
    return json{{"e", q.e}, {"c", q.c}, {"b", q.b},
                {"a", q.a}, {"s", q.s}, {"unit", q.normalizing_unit}};
}

json to_json(const AuditFinding& f) {
    return json{{"n", f.n}, {"terms", f.terms}, {"e", f.e}, {"c", f.c},
                {"b", f.b}, {"a", f.a},         {"s", f.s}};
}

json to_json(const InstanceRecord& rec) {
    json j{{"n", rec.sequence.n()},
           {"terms", rec.sequence.terms()},
           {"pattern", pattern_name(rec.pattern.tag)},
           {"index", rec.index_value},
           {"witness_unit", rec.witness_unit},
           {"strategy", strategy_name(rec.strategy)},
           {"counterexample", rec.counterexample}};
    if (rec.pattern.labeled_primes) {
        const auto& ps = *rec.pattern.labeled_primes;
        j["pattern_primes"] = json::array({ps[0], ps[1], ps[2]});
    }
    j["normalized"] = rec.normalized ? to_json(*rec.normalized) : json(nullptr);
    j["certificate"] = rec.certificate ? to_json(*rec.certificate) : json(nullptr);
    if (rec.diag.present) {
        json diag{{"s", rec.diag.s}, {"windows_all_blocked", rec.diag.windows_all_blocked}};
        diag["k1"] = rec.diag.k1 ? json(*rec.diag.k1) : json(nullptr);
        j["diagnostics"] = diag;
    }
    if (!rec.defects.empty()) j["defects"] = rec.defects;
    return j;
}

namespace {

Int histogram_at(const std::map<Int, Int>& hist, Int key) {
    auto it = hist.find(key);
    return it == hist.end() ? 0 : it->second;
}

Int strategy_at(const std::map<std::string, Int>& hist, const std::string& key) {
    auto it = hist.find(key);
    return it == hist.end() ? 0 : it->second;
}

}  // namespace

std::string reports_csv(const std::vector<VerificationReport>& reports) {
    std::ostringstream out;
    out << "n,instances,orbits,index_1,index_2,index_ge_3,direct,sum_3n,half_plane,small_a,"
           "interval,interval_ratio,m_type,renumber,oracle_only,violations,elapsed_ms\n";
    for (const auto& r : reports) {
        Int ge3 = 0;
        for (const auto& [value, count] : r.index_histogram)
            if (value >= 3) ge3 += count;
        out << r.n << ',' << r.instances << ',' << r.orbits << ','
            << histogram_at(r.index_histogram, 1) << ',' << histogram_at(r.index_histogram, 2)
            << ',' << ge3;
        for (const char* name : {"direct", "sum_3n", "half_plane", "small_a", "interval",
                                 "interval_ratio", "m_type", "renumber", "oracle_only"})
            out << ',' << strategy_at(r.strategy_histogram, name);
        out << ',' << r.violations.size() << ',' << r.elapsed_ms << '\n';
    }
    return out.str();
}

std::string findings_csv(const std::vector<AuditFinding>& findings) {
    std::ostringstream out;
    out << "n,terms,e,c,b,a,s\n";
    for (const auto& f : findings) {
        out << f.n << ',';
        for (std::size_t i = 0; i < f.terms.size(); ++i)
            out << (i ? " " : "") << f.terms[i];
        out << ',' << f.e << ',' << f.c << ',' << f.b << ',' << f.a << ',' << f.s << '\n';
    }
    return out.str();
}

void atomic_write_file(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

}  // namespace zsindex

#pragma once

// JSON (canonical) and CSV projections of reports, certificates and
// findings. All numeric fields are decimal integers; no floats appear in
// any serialized output.

#include <string>

#include <json.hpp>

#include "zsindex/harness.hpp"

namespace zsindex {

nlohmann::json to_json(const Violation& v);
Violation violation_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const std::vector<VerificationReport>& reports);
std::vector<VerificationReport> reports_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Certificate& cert);
nlohmann::json to_json(const NormalizedQuadruple& q);
nlohmann::json to_json(const AuditFinding& f);
nlohmann::json to_json(const InstanceRecord& rec);

// Fixed column order:
// n,instances,orbits,index_1,index_2,index_ge_3,direct,sum_3n,half_plane,
// small_a,interval,interval_ratio,m_type,renumber,oracle_only,violations,
// elapsed_ms
std::string reports_csv(const std::vector<VerificationReport>& reports);

// Fixed column order: n,terms,e,c,b,a,s
std::string findings_csv(const std::vector<AuditFinding>& findings);

// Write-then-rename so readers never observe a partial file.
void atomic_write_file(const std::string& path, const std::string& content);

}  // namespace zsindex

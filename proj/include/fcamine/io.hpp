#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "fcamine/context.hpp"
#include "fcamine/lattice.hpp"
#include "fcamine/mining.hpp"

namespace fcamine {

using ordered_json = nlohmann::ordered_json;

/// CSV schema: header `case_id,sex,age_band,drugs,events`; drugs and events
/// are ';'-separated label lists; sex and age_band may be empty. Fields may
/// be double-quoted but stay on one line; the writer rejects values holding
/// line breaks. Errors name the source and line.
std::vector<CaseReport> read_cases_csv(std::istream& in, const std::string& source = "<input>");
std::vector<CaseReport> read_cases_csv_file(const std::filesystem::path& path);

/// JSON-lines alternative with the same field names; drugs/events accept an
/// array of strings or a ';'-separated string.
std::vector<CaseReport> read_cases_jsonl(std::istream& in, const std::string& source = "<input>");
std::vector<CaseReport> read_cases_jsonl_file(const std::filesystem::path& path);

/// Writes the CSV schema above. demographics[0] lands in `sex`,
/// demographics[1] in `age_band`; more than two is an error.
void write_cases_csv(std::ostream& out, std::span<const CaseReport> records);

/// Canonically ordered array of {"intent": [labels], "extent": [case ids],
/// "support": n}.
ordered_json concepts_to_json(const FormalContext& ctx, const ConceptSet& cs);

ordered_json relationship_to_json(const Relationship& r);
Relationship relationship_from_json(const ordered_json& j);

/// Report serialization; an infinite PRR is rendered as the string "inf".
/// When options are given, the run parameters (thread count excluded) are
/// embedded under "parameters".
ordered_json report_to_json(const MiningReport& report, const MiningOptions* options = nullptr);
MiningReport report_from_json(const ordered_json& j);

/// Relationship rows only, columns
/// kind,drugs,events,demographics,support,a,b,c,d,prr,chi2,population_restricted.
void write_relationships_csv(std::ostream& out, const MiningReport& report);

/// Shortest round-trip decimal form; infinities print as "inf"/"-inf".
std::string format_double(double value);

std::string_view to_string(Chi2Correction correction);
std::string_view to_string(ContingencyMode mode);
Chi2Correction parse_chi2_correction(std::string_view name);
ContingencyMode parse_contingency_mode(std::string_view name);

}  // namespace fcamine

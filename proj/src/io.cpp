#include "fcamine/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace fcamine {

namespace {

constexpr const char* kCaseHeader[] = {"case_id", "sex", "age_band", "drugs", "events"};

[[noreturn]] void parse_error(const std::string& source, std::size_t line,
                              const std::string& message) {
    throw std::invalid_argument(source + ":" + std::to_string(line) + ": " + message);
}

std::vector<std::string> parse_csv_record(const std::string& line, const std::string& source,
                                          std::size_t lineno) {
    std::vector<std::string> fields;
    std::string cur;
    bool in_quotes = false;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size()) {
            if (in_quotes) parse_error(source, lineno, "unterminated quoted field");
            fields.push_back(std::move(cur));
            break;
        }
        const char c = line[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            in_quotes = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return fields;
}

std::vector<std::string> split_list(const std::string& field) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : field) {
        if (c == ';') {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of("\n\r") != std::string::npos)
        throw std::invalid_argument("value \"" + value +
                                    "\" contains a line break, which the line-based CSV "
                                    "schema cannot hold");
    if (value.find_first_of(",\"") == std::string::npos) return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string join_list(std::span<const std::string> items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (items[i].find(';') != std::string::npos)
            throw std::invalid_argument("label " + items[i] +
                                        " contains ';', which the CSV list form cannot hold");
        if (i != 0) out += ';';
        out += items[i];
    }
    return out;
}

ordered_json prr_to_json(double value) {
    if (std::isinf(value)) return ordered_json(value > 0 ? "inf" : "-inf");
    return ordered_json(value);
}

double prr_from_json(const ordered_json& j) {
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        if (s == "inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
        throw std::invalid_argument("invalid prr value \"" + s + "\"");
    }
    return j.get<double>();
}

}  // namespace

std::vector<CaseReport> read_cases_csv(std::istream& in, const std::string& source) {
    std::vector<CaseReport> out;
    std::string line;
    std::size_t lineno = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = parse_csv_record(line, source, lineno);
        if (!saw_header) {
            bool ok = fields.size() == std::size(kCaseHeader);
            for (std::size_t i = 0; ok && i < fields.size(); ++i) ok = fields[i] == kCaseHeader[i];
            if (!ok)
                parse_error(source, lineno, "expected header case_id,sex,age_band,drugs,events");
            saw_header = true;
            continue;
        }
        if (fields.size() != std::size(kCaseHeader))
            parse_error(source, lineno,
                        "expected 5 fields, got " + std::to_string(fields.size()));
        CaseReport rec;
        rec.case_id = std::move(fields[0]);
        if (rec.case_id.empty()) parse_error(source, lineno, "empty case_id");
        if (!fields[1].empty()) rec.demographics.push_back(std::move(fields[1]));
        if (!fields[2].empty()) rec.demographics.push_back(std::move(fields[2]));
        rec.drugs = split_list(fields[3]);
        rec.events = split_list(fields[4]);
        out.push_back(std::move(rec));
    }
    if (!saw_header) parse_error(source, 1, "missing header case_id,sex,age_band,drugs,events");
    return out;
}

std::vector<CaseReport> read_cases_csv_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path.string());
    return read_cases_csv(in, path.string());
}

namespace {

std::vector<std::string> labels_from_json(const ordered_json& j, const char* key,
                                          const std::string& source, std::size_t lineno) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return {};
    if (it->is_string()) return split_list(it->get<std::string>());
    if (!it->is_array())
        parse_error(source, lineno, std::string(key) + " must be an array or a string");
    std::vector<std::string> out;
    for (const auto& item : *it) {
        if (!item.is_string())
            parse_error(source, lineno, std::string(key) + " items must be strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

}  // namespace

std::vector<CaseReport> read_cases_jsonl(std::istream& in, const std::string& source) {
    std::vector<CaseReport> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        ordered_json j;
        try {
            j = ordered_json::parse(line);
        } catch (const ordered_json::exception& e) {
            parse_error(source, lineno, e.what());
        }
        if (!j.is_object()) parse_error(source, lineno, "expected a JSON object");
        CaseReport rec;
        auto id = j.find("case_id");
        if (id == j.end() || !id->is_string() || id->get_ref<const std::string&>().empty())
            parse_error(source, lineno, "case_id must be a non-empty string");
        rec.case_id = id->get<std::string>();
        for (const char* key : {"sex", "age_band"}) {
            auto it = j.find(key);
            if (it == j.end() || it->is_null()) continue;
            if (!it->is_string())
                parse_error(source, lineno, std::string(key) + " must be a string");
            if (!it->get_ref<const std::string&>().empty())
                rec.demographics.push_back(it->get<std::string>());
        }
        rec.drugs = labels_from_json(j, "drugs", source, lineno);
        rec.events = labels_from_json(j, "events", source, lineno);
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<CaseReport> read_cases_jsonl_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path.string());
    return read_cases_jsonl(in, path.string());
}

void write_cases_csv(std::ostream& out, std::span<const CaseReport> records) {
    out << "case_id,sex,age_band,drugs,events\n";
    for (const auto& rec : records) {
        if (rec.demographics.size() > 2)
            throw std::invalid_argument("case " + rec.case_id +
                                        " has more than two demographics; the CSV schema holds "
                                        "only sex and age_band");
        const std::string sex = rec.demographics.empty() ? "" : rec.demographics[0];
        const std::string age = rec.demographics.size() > 1 ? rec.demographics[1] : "";
        out << csv_field(rec.case_id) << ',' << csv_field(sex) << ',' << csv_field(age) << ','
            << csv_field(join_list(rec.drugs)) << ',' << csv_field(join_list(rec.events))
            << '\n';
    }
}

ordered_json concepts_to_json(const FormalContext& ctx, const ConceptSet& cs) {
    ordered_json out = ordered_json::array();
    for (const auto& c : cs) {
        ordered_json j;
        j["intent"] = ctx.attribute_labels(c.intent);
        j["extent"] = ctx.object_ids(c.extent);
        j["support"] = c.support;
        out.push_back(std::move(j));
    }
    return out;
}

ordered_json relationship_to_json(const Relationship& r) {
    ordered_json j;
    j["kind"] = to_string(r.kind);
    j["drugs"] = r.drugs;
    j["events"] = r.events;
    j["demographics"] = r.demographics;
    j["population_restricted"] = r.population_restricted;
    j["support"] = r.stats.support;
    j["extent"] = r.extent;
    j["table"] = {{"a", r.table.a}, {"b", r.table.b}, {"c", r.table.c}, {"d", r.table.d}};
    j["stats"] = {{"prr", prr_to_json(r.stats.prr)},
                  {"chi2", r.stats.chi2},
                  {"passes_mhra", r.stats.passes_mhra}};
    return j;
}

Relationship relationship_from_json(const ordered_json& j) {
    Relationship r;
    r.kind = parse_relationship_kind(j.at("kind").get<std::string>());
    r.drugs = j.at("drugs").get<std::vector<std::string>>();
    r.events = j.at("events").get<std::vector<std::string>>();
    r.demographics = j.at("demographics").get<std::vector<std::string>>();
    r.population_restricted = j.at("population_restricted").get<bool>();
    r.extent = j.at("extent").get<std::vector<std::string>>();
    const auto& table = j.at("table");
    r.table.a = table.at("a").get<std::uint64_t>();
    r.table.b = table.at("b").get<std::uint64_t>();
    r.table.c = table.at("c").get<std::uint64_t>();
    r.table.d = table.at("d").get<std::uint64_t>();
    const auto& stats = j.at("stats");
    r.stats.prr = prr_from_json(stats.at("prr"));
    r.stats.chi2 = stats.at("chi2").get<double>();
    r.stats.support = j.at("support").get<std::uint64_t>();
    r.stats.passes_mhra = stats.at("passes_mhra").get<bool>();
    return r;
}

ordered_json report_to_json(const MiningReport& report, const MiningOptions* options) {
    ordered_json j;
    if (options != nullptr) {
        j["parameters"] = {{"min_support", options->thresholds.min_support},
                           {"min_prr", options->thresholds.min_prr},
                           {"min_chi2", options->thresholds.min_chi2},
                           {"chi2_correction", to_string(options->correction)},
                           {"contingency_mode", to_string(options->mode)}};
    }
    j["total_concepts"] = report.total_concepts;
    j["strip_concepts"] = report.strip_concepts;
    j["filtered_concepts"] = report.filtered_concepts;
    ordered_json per_kind = ordered_json::object();
    for (std::size_t k = 0; k < kRelationshipKindCount; ++k)
        per_kind[std::string(to_string(static_cast<RelationshipKind>(k)))] = report.per_kind[k];
    j["per_kind"] = std::move(per_kind);
    ordered_json rels = ordered_json::array();
    for (const auto& r : report.relationships) rels.push_back(relationship_to_json(r));
    j["relationships"] = std::move(rels);
    return j;
}

MiningReport report_from_json(const ordered_json& j) {
    MiningReport report;
    report.total_concepts = j.at("total_concepts").get<std::uint64_t>();
    report.strip_concepts = j.at("strip_concepts").get<std::uint64_t>();
    report.filtered_concepts = j.at("filtered_concepts").get<std::uint64_t>();
    const auto& per_kind = j.at("per_kind");
    for (std::size_t k = 0; k < kRelationshipKindCount; ++k) {
        report.per_kind[k] =
            per_kind.at(std::string(to_string(static_cast<RelationshipKind>(k))))
                .get<std::uint64_t>();
    }
    for (const auto& r : j.at("relationships"))
        report.relationships.push_back(relationship_from_json(r));
    return report;
}

void write_relationships_csv(std::ostream& out, const MiningReport& report) {
    out << "kind,drugs,events,demographics,support,a,b,c,d,prr,chi2,population_restricted\n";
    for (const auto& r : report.relationships) {
        out << to_string(r.kind) << ',' << csv_field(join_list(r.drugs)) << ','
            << csv_field(join_list(r.events)) << ',' << csv_field(join_list(r.demographics))
            << ',' << r.stats.support << ',' << r.table.a << ',' << r.table.b << ',' << r.table.c
            << ',' << r.table.d << ',' << format_double(r.stats.prr) << ','
            << format_double(r.stats.chi2) << ','
            << (r.population_restricted ? "true" : "false") << '\n';
    }
}

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

std::string_view to_string(Chi2Correction correction) {
    return correction == Chi2Correction::Yates ? "yates" : "pearson";
}

std::string_view to_string(ContingencyMode mode) {
    return mode == ContingencyMode::Conjunction ? "conjunction" : "extent";
}

Chi2Correction parse_chi2_correction(std::string_view name) {
    if (name == "yates") return Chi2Correction::Yates;
    if (name == "pearson") return Chi2Correction::Pearson;
    throw std::invalid_argument("unknown chi2 correction \"" + std::string(name) +
                                "\" (expected yates or pearson)");
}

ContingencyMode parse_contingency_mode(std::string_view name) {
    if (name == "conjunction") return ContingencyMode::Conjunction;
    if (name == "extent") return ContingencyMode::Extent;
    throw std::invalid_argument("unknown contingency mode \"" + std::string(name) +
                                "\" (expected conjunction or extent)");
}

}  // namespace fcamine

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fcamine/generate.hpp"
#include "fcamine/io.hpp"
#include "fcamine/mining.hpp"
#include "fcamine/version.hpp"

namespace {

using namespace fcamine;

std::vector<CaseReport> load_cases(const std::string& input, const std::string& format) {
    std::string effective = format;
    if (effective == "auto") {
        const bool jsonl = input.ends_with(".jsonl") || input.ends_with(".ndjson");
        effective = jsonl ? "jsonl" : "csv";
    }
    if (input == "-") {
        return effective == "jsonl" ? read_cases_jsonl(std::cin, "<stdin>")
                                    : read_cases_csv(std::cin, "<stdin>");
    }
    return effective == "jsonl" ? read_cases_jsonl_file(input) : read_cases_csv_file(input);
}

/// Opens the report sink; "-" is standard output.
struct OutputStream {
    explicit OutputStream(const std::string& path) {
        if (path == "-") return;
        file.open(path);
        if (!file) throw std::invalid_argument("cannot open output file " + path);
    }
    std::ostream& get() { return file.is_open() ? file : std::cout; }
    bool to_stdout() const { return !file.is_open(); }
    std::ofstream file;
};

void print_summary(std::ostream& out, const MiningReport& report) {
    out << "total_concepts: " << report.total_concepts << '\n'
        << "strip_concepts: " << report.strip_concepts << '\n'
        << "filtered_concepts: " << report.filtered_concepts << '\n';
    for (std::size_t k = 0; k < kRelationshipKindCount; ++k)
        out << to_string(static_cast<RelationshipKind>(k)) << ": " << report.per_kind[k] << '\n';
}

PlantedAssociation parse_planted(const std::string& spec) {
    const std::size_t first = spec.find(':');
    const std::size_t last = spec.rfind(':');
    if (first == std::string::npos || first == last)
        throw std::invalid_argument("planted association \"" + spec +
                                    "\" must look like DRUG:EVENT:COUNT");
    PlantedAssociation p;
    p.drug = spec.substr(0, first);
    p.event = spec.substr(first + 1, last - first - 1);
    const char* begin = spec.data() + last + 1;
    const char* end = spec.data() + spec.size();
    const auto res = std::from_chars(begin, end, p.count);
    if (res.ec != std::errc{} || res.ptr != end || p.drug.empty() || p.event.empty())
        throw std::invalid_argument("planted association \"" + spec +
                                    "\" must look like DRUG:EVENT:COUNT");
    return p;
}

struct CommonArgs {
    std::string input;
    std::string format = "auto";
    std::string output = "-";
    unsigned threads = 1;
};

void add_input_flags(CLI::App& cmd, CommonArgs& args) {
    cmd.add_option("-i,--input", args.input, "case reports, or - for standard input")
        ->required();
    cmd.add_option("--format", args.format, "input format")
        ->check(CLI::IsMember({"auto", "csv", "jsonl"}))
        ->default_str("auto");
    cmd.add_option("-o,--output", args.output, "output file, - for standard output")
        ->default_str("-");
    cmd.add_option("-t,--threads", args.threads, "worker threads, 0 for all cores")
        ->default_str("1");
}

int run(int argc, char** argv) {
    CLI::App app{"concept-lattice mining of adverse drug event reports"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    CommonArgs args;
    MiningOptions options;
    std::string correction = "yates";
    std::string mode = "conjunction";
    std::string output_format = "json";

    auto* mine_cmd = app.add_subcommand("mine", "run the full mining pipeline");
    add_input_flags(*mine_cmd, args);
    mine_cmd->add_option("--min-support", options.thresholds.min_support)->default_str("3");
    mine_cmd->add_option("--min-prr", options.thresholds.min_prr)->default_str("2");
    mine_cmd->add_option("--min-chi2", options.thresholds.min_chi2)->default_str("4");
    mine_cmd->add_option("--chi2-correction", correction)
        ->check(CLI::IsMember({"yates", "pearson"}))
        ->default_str("yates");
    mine_cmd->add_option("--contingency-mode", mode)
        ->check(CLI::IsMember({"conjunction", "extent"}))
        ->default_str("conjunction");
    mine_cmd->add_option("--output-format", output_format)
        ->check(CLI::IsMember({"json", "csv"}))
        ->default_str("json");

    auto* lattice_cmd = app.add_subcommand("lattice", "dump the concept lattice");
    CommonArgs lattice_args;
    std::uint64_t lattice_min_support = 0;
    add_input_flags(*lattice_cmd, lattice_args);
    lattice_cmd->add_option("--min-support", lattice_min_support)->default_str("0");

    auto* stats_cmd = app.add_subcommand("stats", "score one 2x2 table");
    std::vector<std::uint64_t> cells;
    std::string stats_correction = "yates";
    stats_cmd->add_option("cells", cells, "the four counts a b c d")->expected(4);
    stats_cmd->add_option("--chi2-correction", stats_correction)
        ->check(CLI::IsMember({"yates", "pearson"}))
        ->default_str("yates");

    auto* gen_cmd = app.add_subcommand("generate", "write a synthetic case report file");
    GeneratorOptions gen;
    std::vector<std::string> planted_specs;
    std::string gen_output = "-";
    gen_cmd->add_option("--cases", gen.cases)->default_str("1000");
    gen_cmd->add_option("--drugs", gen.drugs)->default_str("50");
    gen_cmd->add_option("--events", gen.events)->default_str("60");
    gen_cmd->add_option("--density", gen.density)->default_str("0.01");
    gen_cmd->add_option("--planted", planted_specs, "DRUG:EVENT:COUNT, repeatable");
    gen_cmd->add_option("--seed", gen.seed)->default_str("42");
    gen_cmd->add_option("-o,--output", gen_output, "output file, - for standard output")
        ->default_str("-");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (mine_cmd->parsed()) {
        options.correction = parse_chi2_correction(correction);
        options.mode = parse_contingency_mode(mode);
        options.threads = args.threads;
        const auto records = load_cases(args.input, args.format);
        const FormalContext ctx = FormalContext::ingest(records);
        const MiningReport report = mine(ctx, options);
        OutputStream out(args.output);
        if (output_format == "csv") {
            write_relationships_csv(out.get(), report);
        } else {
            out.get() << report_to_json(report, &options).dump(2) << '\n';
        }
        // the summary moves aside when the report itself claims standard output
        print_summary(out.to_stdout() ? std::cerr : std::cout, report);
        return 0;
    }

    if (lattice_cmd->parsed()) {
        const auto records = load_cases(lattice_args.input, lattice_args.format);
        const FormalContext ctx = FormalContext::ingest(records);
        const ConceptSet cs =
            enumerate_concepts(ctx, lattice_min_support, lattice_args.threads);
        OutputStream out(lattice_args.output);
        out.get() << concepts_to_json(ctx, cs).dump(2) << '\n';
        return 0;
    }

    if (stats_cmd->parsed()) {
        const ContingencyTable t{cells[0], cells[1], cells[2], cells[3]};
        const auto result =
            evaluate_concept_stats(t, t.a, parse_chi2_correction(stats_correction));
        ordered_json j;
        j["prr"] = std::isinf(result.prr) ? ordered_json("inf") : ordered_json(result.prr);
        j["chi2"] = result.chi2;
        j["support"] = result.support;
        j["passes_mhra"] = result.passes_mhra;
        std::cout << j.dump(2) << '\n';
        return 0;
    }

    for (const auto& spec : planted_specs) gen.planted.push_back(parse_planted(spec));
    const auto records = generate_cases(gen);
    OutputStream out(gen_output);
    write_cases_csv(out.get(), records);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}

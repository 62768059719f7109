#include "fcamine/generate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace fcamine {

namespace {

// raw engine bits so the stream is identical across standard libraries
double u01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::string padded(char prefix, std::uint64_t index, std::uint64_t total) {
    const std::string digits = std::to_string(index + 1);
    const std::size_t width = std::to_string(total).size();
    std::string out(1, prefix);
    if (digits.size() < width) out.append(width - digits.size(), '0');
    out += digits;
    return out;
}

void add_unique(std::vector<std::string>& labels, const std::string& label) {
    if (std::find(labels.begin(), labels.end(), label) == labels.end()) labels.push_back(label);
}

}  // namespace

std::string generated_case_id(std::uint64_t index, std::uint64_t total) {
    return padded('C', index, total);
}

std::string generated_drug_label(std::uint64_t index, std::uint64_t total) {
    return padded('D', index, total);
}

std::string generated_event_label(std::uint64_t index, std::uint64_t total) {
    return padded('E', index, total);
}

std::vector<CaseReport> generate_cases(const GeneratorOptions& options) {
    if (options.cases == 0 || options.drugs == 0 || options.events == 0)
        throw std::invalid_argument("cases, drugs and events must all be at least 1");
    if (!(options.density > 0.0) || !(options.density < 1.0))
        throw std::invalid_argument("density must lie strictly between 0 and 1");
    for (const auto& p : options.planted) {
        if (p.drug.empty() || p.event.empty())
            throw std::invalid_argument("planted association needs a drug and an event label");
        if (p.count > options.cases)
            throw std::invalid_argument("planted count " + std::to_string(p.count) +
                                        " exceeds the case count");
    }

    static constexpr const char* kAgeBands[] = {"0-17", "18-44", "45-64", "65+"};
    static constexpr const char* kSexes[] = {"F", "M"};

    std::mt19937_64 rng(options.seed);
    std::vector<CaseReport> out;
    out.reserve(options.cases);
    for (std::uint64_t i = 0; i < options.cases; ++i) {
        CaseReport rec;
        rec.case_id = generated_case_id(i, options.cases);
        rec.demographics.push_back(kSexes[u01(rng) < 0.5 ? 0 : 1]);
        rec.demographics.push_back(
            kAgeBands[std::min<std::size_t>(3, static_cast<std::size_t>(u01(rng) * 4.0))]);
        for (std::uint64_t d = 0; d < options.drugs; ++d)
            if (u01(rng) < options.density)
                rec.drugs.push_back(generated_drug_label(d, options.drugs));
        for (std::uint64_t e = 0; e < options.events; ++e)
            if (u01(rng) < options.density)
                rec.events.push_back(generated_event_label(e, options.events));
        out.push_back(std::move(rec));
    }

    // evenly spaced case indices, offset per association, so each pair lands
    // in exactly `count` distinct cases
    for (std::size_t p = 0; p < options.planted.size(); ++p) {
        const auto& assoc = options.planted[p];
        for (std::uint64_t k = 0; k < assoc.count; ++k) {
            const std::uint64_t slot = (p + k * options.cases / assoc.count) % options.cases;
            auto& rec = out[slot];
            add_unique(rec.drugs, assoc.drug);
            add_unique(rec.events, assoc.event);
        }
    }
    return out;
}

}  // namespace fcamine

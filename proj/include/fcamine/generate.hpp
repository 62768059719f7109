#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fcamine/context.hpp"

namespace fcamine {

/// A drug/event pair co-occurring in exactly `count` generated cases.
struct PlantedAssociation {
    std::string drug;
    std::string event;
    std::uint64_t count = 0;

    bool operator==(const PlantedAssociation&) const = default;
};

struct GeneratorOptions {
    std::uint64_t cases = 1000;
    std::uint64_t drugs = 50;
    std::uint64_t events = 60;
    double density = 0.01;
    std::vector<PlantedAssociation> planted;
    std::uint64_t seed = 42;
};

/// Deterministic synthetic case reports: every case gets a sex and an age
/// band, each drug/event independently at probability `density`, then the
/// planted pairs are injected into a fixed spread of cases. Equal options
/// produce equal records.
///
/// Throws std::invalid_argument on zero counts, density outside (0,1), or a
/// planted count exceeding the case count.
std::vector<CaseReport> generate_cases(const GeneratorOptions& options);

/// Zero-padded identifiers used by the generator, e.g. generated_drug_label(6,
/// 500) == "D007".
std::string generated_case_id(std::uint64_t index, std::uint64_t total);
std::string generated_drug_label(std::uint64_t index, std::uint64_t total);
std::string generated_event_label(std::uint64_t index, std::uint64_t total);

}  // namespace fcamine

#pragma once

#include <cstdint>

#include "fcamine/context.hpp"

namespace fcamine {

/// 2x2 exposure/event table over the whole case population:
///   a = all exposure drugs AND all target events
///   b = all exposure drugs, NOT all target events
///   c = NOT all exposure drugs, all target events
///   d = neither
struct ContingencyTable {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint64_t c = 0;
    std::uint64_t d = 0;

    std::uint64_t n() const { return a + b + c + d; }

    friend bool operator==(const ContingencyTable&, const ContingencyTable&) = default;
};

enum class Chi2Correction : std::uint8_t { Yates, Pearson };

/// Which cases count as "exposed" for a concept's table: conjunction of the
/// intent drugs only, or of the intent drugs and demographics (making a the
/// concept's extent size).
enum class ContingencyMode : std::uint8_t { Conjunction, Extent };

/// Decision rule thresholds; the defaults are the MHRA criteria.
struct MhraThresholds {
    double min_prr = 2.0;
    double min_chi2 = 4.0;
    std::uint64_t min_support = 3;
};

struct DisproportionalityResult {
    double prr = 0.0;
    double chi2 = 0.0;
    std::uint64_t support = 0;
    bool passes_mhra = false;

    friend bool operator==(const DisproportionalityResult&,
                           const DisproportionalityResult&) = default;
};

/// Builds the 2x2 table for a concept whose intent carries at least one drug
/// and one adverse event; throws otherwise.
ContingencyTable contingency_from_concept(const FormalContext& ctx, const FormalConcept& node,
                                          ContingencyMode mode = ContingencyMode::Conjunction);

/// (a/(a+b)) / (c/(c+d)). 0 when a = 0, +inf when c = 0 with a > 0; throws
/// when a + b = 0 (no exposed cases). With haldane set, 0.5 is added to every
/// cell first (smoothing off by default; the decision rule expects the raw
/// ratio).
double prr(const ContingencyTable& t, bool haldane = false);

/// Pearson statistic, Yates-corrected by default with the per-cell deviation
/// clamped at zero. Defined as 0 when any marginal total is zero.
double chi_square(const ContingencyTable& t, Chi2Correction correction = Chi2Correction::Yates);

/// prr > min_prr AND chi2 > min_chi2 AND support >= min_support, the first
/// two strict.
bool apply_mhra(double prr_value, double chi2_value, std::uint64_t support,
                const MhraThresholds& thresholds = {});

DisproportionalityResult evaluate_concept_stats(const ContingencyTable& t, std::uint64_t support,
                                                Chi2Correction correction = Chi2Correction::Yates,
                                                const MhraThresholds& thresholds = {});

}  // namespace fcamine

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fcamine/context.hpp"
#include "fcamine/lattice.hpp"
#include "fcamine/stats.hpp"

namespace fcamine {

/// Five-way taxonomy by the number of drugs (nd) and adverse events (ne) in
/// the intent, demographics not counted:
///   (1,1) signal, (2,1) drug interaction, (1,>=2) syndrome,
///   (>=3,1) complex interaction, (>=2,>=2) complex syndrome.
enum class RelationshipKind : std::uint8_t {
    Signal = 0,
    DrugInteraction = 1,
    Syndrome = 2,
    ComplexInteraction = 3,
    ComplexSyndrome = 4,
};

inline constexpr std::size_t kRelationshipKindCount = 5;

std::string_view to_string(RelationshipKind kind);
RelationshipKind parse_relationship_kind(std::string_view name);

struct Classification {
    RelationshipKind kind;
    bool population_restricted;
};

/// A concept that survived the strip selection and the decision rule,
/// flattened into report form. Label lists are sorted; extent holds the
/// concept's case ids.
struct Relationship {
    RelationshipKind kind = RelationshipKind::Signal;
    std::vector<std::string> drugs;
    std::vector<std::string> events;
    std::vector<std::string> demographics;
    std::vector<std::string> extent;
    ContingencyTable table;
    DisproportionalityResult stats;
    bool population_restricted = false;

    std::uint64_t support() const { return stats.support; }

    friend bool operator==(const Relationship&, const Relationship&) = default;
};

struct MiningThresholds {
    std::uint64_t min_support = 3;
    double min_prr = 2.0;
    double min_chi2 = 4.0;
};

struct MiningOptions {
    MiningThresholds thresholds;
    Chi2Correction correction = Chi2Correction::Yates;
    ContingencyMode mode = ContingencyMode::Conjunction;
    unsigned threads = 1;
};

struct MiningReport {
    std::uint64_t total_concepts = 0;     ///< concepts enumerated at min_support
    std::uint64_t strip_concepts = 0;     ///< of those, intent has >=1 drug and >=1 event
    std::uint64_t filtered_concepts = 0;  ///< of those, passing the decision rule
    std::array<std::uint64_t, kRelationshipKindCount> per_kind{};
    std::vector<Relationship> relationships;

    friend bool operator==(const MiningReport&, const MiningReport&) = default;
};

/// Keeps the concepts whose intent has at least one drug and one adverse
/// event and whose support reaches min_support.
ConceptSet select_strip(const FormalContext& ctx, const ConceptSet& cs,
                        std::uint64_t min_support = 3);

/// Classifies a strip concept; throws when the intent lacks a drug or an
/// event.
Classification classify_concept(const FormalContext& ctx, const FormalConcept& node);

/// Full pipeline: enumerate (support-pruned), select the strip, score each
/// concept, filter by the thresholds, classify, and aggregate. Relationships
/// come back ordered by (kind, drugs, events, demographics).
MiningReport mine(const FormalContext& ctx, const MiningOptions& options = {});

}  // namespace fcamine

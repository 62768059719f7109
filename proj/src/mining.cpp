#include "fcamine/mining.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "fcamine/parallel.hpp"

namespace fcamine {

std::string_view to_string(RelationshipKind kind) {
    switch (kind) {
        case RelationshipKind::Signal: return "signal";
        case RelationshipKind::DrugInteraction: return "drug_interaction";
        case RelationshipKind::Syndrome: return "syndrome";
        case RelationshipKind::ComplexInteraction: return "complex_interaction";
        case RelationshipKind::ComplexSyndrome: return "complex_syndrome";
    }
    throw std::invalid_argument("unknown relationship kind");
}

RelationshipKind parse_relationship_kind(std::string_view name) {
    for (std::size_t k = 0; k < kRelationshipKindCount; ++k) {
        const auto kind = static_cast<RelationshipKind>(k);
        if (name == to_string(kind)) return kind;
    }
    throw std::invalid_argument("unknown relationship kind \"" + std::string(name) + "\"");
}

ConceptSet select_strip(const FormalContext& ctx, const ConceptSet& cs,
                        std::uint64_t min_support) {
    const Bitset& drug_mask = ctx.kind_mask(AttributeKind::Drug);
    const Bitset& event_mask = ctx.kind_mask(AttributeKind::AdverseEvent);
    std::vector<FormalConcept> kept;
    for (const auto& c : cs) {
        if (c.support < min_support) continue;
        if (!c.intent.intersects(drug_mask) || !c.intent.intersects(event_mask)) continue;
        kept.push_back(c);
    }
    return ConceptSet::from_unsorted(std::move(kept));
}

Classification classify_concept(const FormalContext& ctx, const FormalConcept& node) {
    const std::size_t nd = Bitset::and_count(node.intent, ctx.kind_mask(AttributeKind::Drug));
    const std::size_t ne =
        Bitset::and_count(node.intent, ctx.kind_mask(AttributeKind::AdverseEvent));
    if (nd == 0 || ne == 0)
        throw std::invalid_argument("concept intent needs at least one drug and one adverse event");

    RelationshipKind kind;
    if (ne == 1) {
        kind = nd == 1   ? RelationshipKind::Signal
               : nd == 2 ? RelationshipKind::DrugInteraction
                         : RelationshipKind::ComplexInteraction;
    } else {
        kind = nd == 1 ? RelationshipKind::Syndrome : RelationshipKind::ComplexSyndrome;
    }
    return Classification{kind, node.intent.intersects(ctx.kind_mask(AttributeKind::Demographic))};
}

MiningReport mine(const FormalContext& ctx, const MiningOptions& options) {
    MiningReport report;
    const ConceptSet all =
        enumerate_concepts(ctx, options.thresholds.min_support, options.threads);
    report.total_concepts = all.size();
    const ConceptSet strip = select_strip(ctx, all, options.thresholds.min_support);
    report.strip_concepts = strip.size();

    const MhraThresholds rule{options.thresholds.min_prr, options.thresholds.min_chi2,
                              options.thresholds.min_support};
    std::vector<std::optional<Relationship>> slots(strip.size());
    detail::parallel_for(strip.size(), options.threads, [&](std::size_t i) {
        const FormalConcept& c = strip[i];
        const ContingencyTable t = contingency_from_concept(ctx, c, options.mode);
        if (t.a + t.b == 0) return;  // no exposed cases, the ratio test cannot pass
        const DisproportionalityResult stats =
            evaluate_concept_stats(t, c.support, options.correction, rule);
        if (!stats.passes_mhra) return;

        Relationship r;
        const Classification cls = classify_concept(ctx, c);
        r.kind = cls.kind;
        r.population_restricted = cls.population_restricted;
        r.drugs = ctx.attribute_labels(c.intent, AttributeKind::Drug);
        r.events = ctx.attribute_labels(c.intent, AttributeKind::AdverseEvent);
        r.demographics = ctx.attribute_labels(c.intent, AttributeKind::Demographic);
        r.extent = ctx.object_ids(c.extent);
        r.table = t;
        r.stats = stats;
        slots[i] = std::move(r);
    });

    for (auto& slot : slots) {
        if (!slot) continue;
        ++report.per_kind[static_cast<std::size_t>(slot->kind)];
        report.relationships.push_back(std::move(*slot));
    }
    report.filtered_concepts = report.relationships.size();
    std::sort(report.relationships.begin(), report.relationships.end(),
              [](const Relationship& x, const Relationship& y) {
                  return std::tie(x.kind, x.drugs, x.events, x.demographics) <
                         std::tie(y.kind, y.drugs, y.events, y.demographics);
              });
    return report;
}

}  // namespace fcamine

#include "fcamine/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fcamine {

ContingencyTable contingency_from_concept(const FormalContext& ctx, const FormalConcept& node,
                                          ContingencyMode mode) {
    const std::size_t nattr = ctx.attribute_count();
    if (node.intent.size() != nattr)
        throw std::invalid_argument("concept intent size mismatch");

    Bitset drugs(nattr);
    drugs.assign_and(node.intent, ctx.kind_mask(AttributeKind::Drug));
    Bitset events(nattr);
    events.assign_and(node.intent, ctx.kind_mask(AttributeKind::AdverseEvent));
    if (drugs.none() || events.none())
        throw std::invalid_argument("concept intent needs at least one drug and one adverse event");

    Bitset exposure = std::move(drugs);
    if (mode == ContingencyMode::Extent) {
        Bitset demos(nattr);
        demos.assign_and(node.intent, ctx.kind_mask(AttributeKind::Demographic));
        exposure |= demos;
    }
    const Bitset exposed = ctx.derive_attributes(exposure);
    const Bitset eventful = ctx.derive_attributes(events);

    ContingencyTable t;
    t.a = Bitset::and_count(exposed, eventful);
    t.b = exposed.count() - t.a;
    t.c = eventful.count() - t.a;
    t.d = ctx.object_count() - t.a - t.b - t.c;
    return t;
}

double prr(const ContingencyTable& t, bool haldane) {
    if (t.a + t.b == 0) throw std::invalid_argument("no exposed cases (a + b = 0)");
    if (haldane) {
        const double a = static_cast<double>(t.a) + 0.5;
        const double b = static_cast<double>(t.b) + 0.5;
        const double c = static_cast<double>(t.c) + 0.5;
        const double d = static_cast<double>(t.d) + 0.5;
        return (a / (a + b)) / (c / (c + d));
    }
    if (t.a == 0) return 0.0;
    if (t.c == 0) return std::numeric_limits<double>::infinity();
    return (static_cast<double>(t.a) * static_cast<double>(t.c + t.d)) /
           (static_cast<double>(t.a + t.b) * static_cast<double>(t.c));
}

double chi_square(const ContingencyTable& t, Chi2Correction correction) {
    const double a = static_cast<double>(t.a);
    const double b = static_cast<double>(t.b);
    const double c = static_cast<double>(t.c);
    const double d = static_cast<double>(t.d);
    const double row1 = a + b;
    const double row2 = c + d;
    const double col1 = a + c;
    const double col2 = b + d;
    if (row1 == 0 || row2 == 0 || col1 == 0 || col2 == 0) return 0.0;
    const double n = row1 + row2;

    const double observed[4] = {a, b, c, d};
    const double expected[4] = {row1 * col1 / n, row1 * col2 / n, row2 * col1 / n,
                                row2 * col2 / n};
    double sum = 0.0;
    for (int i = 0; i < 4; ++i) {
        double dev = std::abs(observed[i] - expected[i]);
        if (correction == Chi2Correction::Yates) dev = std::max(dev - 0.5, 0.0);
        sum += dev * dev / expected[i];
    }
    return sum;
}

bool apply_mhra(double prr_value, double chi2_value, std::uint64_t support,
                const MhraThresholds& thresholds) {
    return prr_value > thresholds.min_prr && chi2_value > thresholds.min_chi2 &&
           support >= thresholds.min_support;
}

DisproportionalityResult evaluate_concept_stats(const ContingencyTable& t, std::uint64_t support,
                                                Chi2Correction correction,
                                                const MhraThresholds& thresholds) {
    DisproportionalityResult r;
    r.prr = prr(t);
    r.chi2 = chi_square(t, correction);
    r.support = support;
    r.passes_mhra = apply_mhra(r.prr, r.chi2, support, thresholds);
    return r;
}

}  // namespace fcamine

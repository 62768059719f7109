#include "fcamine/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "fcamine/parallel.hpp"

namespace fcamine {

ConceptSet ConceptSet::from_unsorted(std::vector<FormalConcept> concepts) {
    std::sort(concepts.begin(), concepts.end(), [](const FormalConcept& x, const FormalConcept& y) {
        return Bitset::compare_lex(x.intent, y.intent) < 0;
    });
    ConceptSet cs;
    cs.concepts_ = std::move(concepts);
    cs.by_intent_.reserve(cs.concepts_.size());
    for (std::size_t i = 0; i < cs.concepts_.size(); ++i) {
        if (!cs.by_intent_.emplace(cs.concepts_[i].intent, i).second)
            throw std::invalid_argument("duplicate concept intent");
    }
    return cs;
}

std::optional<std::size_t> ConceptSet::find_by_intent(const Bitset& intent) const {
    auto it = by_intent_.find(intent);
    if (it == by_intent_.end()) return std::nullopt;
    return it->second;
}

namespace {

/// Close-by-One: a branch on attribute j closes extent & column(j) and is
/// kept only when the closure adds no attribute below j, so every closed set
/// is produced from exactly one branch point.
struct Enumerator {
    const FormalContext& ctx;
    std::uint64_t min_support;

    void branch(const Bitset& extent, const Bitset& intent, std::size_t j,
                std::vector<FormalConcept>& out) const {
        const std::uint64_t support = Bitset::and_count(extent, ctx.column(j));
        if (support < min_support) return;
        Bitset child_extent(ctx.object_count());
        child_extent.assign_and(extent, ctx.column(j));
        Bitset child_intent = ctx.derive_objects(child_extent);
        if (!child_intent.equal_below(intent, j)) return;
        expand(std::move(child_extent), std::move(child_intent), support, j + 1, out);
    }

    void expand(Bitset extent, Bitset intent, std::uint64_t support, std::size_t from,
                std::vector<FormalConcept>& out) const {
        FormalConcept node{std::move(extent), std::move(intent), support};
        const std::size_t nattr = ctx.attribute_count();
        for (std::size_t j = from; j < nattr; ++j) {
            if (node.intent.test(j)) continue;
            branch(node.extent, node.intent, j, out);
        }
        out.push_back(std::move(node));
    }
};

}  // namespace

ConceptSet enumerate_concepts(const FormalContext& ctx, std::uint64_t min_support,
                              unsigned threads) {
    Bitset all_objects(ctx.object_count(), true);
    Bitset top_intent = ctx.derive_objects(all_objects);
    const std::uint64_t top_support = ctx.object_count();
    if (top_support < min_support) return ConceptSet::from_unsorted({});

    const Enumerator e{ctx, min_support};
    std::vector<FormalConcept> found;

    const unsigned workers = detail::resolve_threads(threads);
    if (workers <= 1) {
        e.expand(std::move(all_objects), std::move(top_intent), top_support, 0, found);
        return ConceptSet::from_unsorted(std::move(found));
    }

    std::vector<std::size_t> branches;
    for (std::size_t j = 0; j < ctx.attribute_count(); ++j)
        if (!top_intent.test(j)) branches.push_back(j);

    std::vector<std::vector<FormalConcept>> parts(branches.size());
    detail::parallel_for(branches.size(), workers, [&](std::size_t t) {
        e.branch(all_objects, top_intent, branches[t], parts[t]);
    });

    std::size_t total = 1;
    for (const auto& p : parts) total += p.size();
    found.reserve(total);
    found.push_back(FormalConcept{std::move(all_objects), std::move(top_intent), top_support});
    for (auto& p : parts)
        for (auto& c : p) found.push_back(std::move(c));
    return ConceptSet::from_unsorted(std::move(found));
}

bool is_concept(const FormalContext& ctx, const Bitset& extent, const Bitset& intent) {
    return ctx.derive_objects(extent) == intent && ctx.derive_attributes(intent) == extent;
}

bool leq(const FormalConcept& lhs, const FormalConcept& rhs) {
    return lhs.extent.is_subset_of(rhs.extent);
}

std::vector<std::pair<std::size_t, std::size_t>> covering_edges(const ConceptSet& cs) {
    const std::size_t n = cs.size();
    std::vector<std::size_t> by_support(n);
    std::iota(by_support.begin(), by_support.end(), std::size_t{0});
    std::sort(by_support.begin(), by_support.end(), [&](std::size_t x, std::size_t y) {
        if (cs[x].support != cs[y].support) return cs[x].support < cs[y].support;
        return x < y;
    });

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::size_t> covers;
    for (std::size_t child = 0; child < n; ++child) {
        covers.clear();
        // candidates in ascending support order: a strict superset already
        // dominated by an accepted cover is not a covering parent
        for (std::size_t cand : by_support) {
            if (cs[cand].support <= cs[child].support) continue;
            if (!cs[child].extent.is_subset_of(cs[cand].extent)) continue;
            bool dominated = false;
            for (std::size_t k : covers) {
                if (cs[k].extent.is_subset_of(cs[cand].extent)) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) covers.push_back(cand);
        }
        for (std::size_t parent : covers) edges.emplace_back(child, parent);
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace fcamine

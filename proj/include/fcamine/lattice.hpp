#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fcamine/context.hpp"

namespace fcamine {

/// Concepts of one context in canonical order: intents compared as ascending
/// attribute-id sequences. Intents (and extents) are pairwise distinct.
class ConceptSet {
public:
    ConceptSet() = default;

    /// Sorts into canonical order and indexes by intent. Throws on duplicate
    /// intents.
    static ConceptSet from_unsorted(std::vector<FormalConcept> concepts);

    std::size_t size() const { return concepts_.size(); }
    bool empty() const { return concepts_.empty(); }
    const FormalConcept& operator[](std::size_t i) const { return concepts_[i]; }
    const std::vector<FormalConcept>& concepts() const { return concepts_; }
    auto begin() const { return concepts_.begin(); }
    auto end() const { return concepts_.end(); }

    std::optional<std::size_t> find_by_intent(const Bitset& intent) const;
    bool contains_intent(const Bitset& intent) const { return find_by_intent(intent).has_value(); }

private:
    struct BitsetHash {
        std::size_t operator()(const Bitset& b) const { return b.hash(); }
    };

    std::vector<FormalConcept> concepts_;
    std::unordered_map<Bitset, std::size_t, BitsetHash> by_intent_;
};

/// Enumerates the concepts with support >= min_support (all of them for 0)
/// by Close-by-One over the context's bit rows. The search tree is split
/// across `threads` workers (0 = hardware concurrency); output is canonical
/// regardless of the worker count.
ConceptSet enumerate_concepts(const FormalContext& ctx, std::uint64_t min_support = 0,
                              unsigned threads = 1);

/// True exactly when X' = Y and Y' = X.
bool is_concept(const FormalContext& ctx, const Bitset& extent, const Bitset& intent);

/// Lattice order: extent inclusion.
bool leq(const FormalConcept& lhs, const FormalConcept& rhs);

/// Hasse edges of the concept order as (child, parent) index pairs into cs,
/// sorted by (child, parent). Child < parent with nothing in between.
std::vector<std::pair<std::size_t, std::size_t>> covering_edges(const ConceptSet& cs);

}  // namespace fcamine

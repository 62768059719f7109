#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fcamine/bitset.hpp"

namespace fcamine {

enum class AttributeKind : std::uint8_t {
    Drug = 0,
    AdverseEvent = 1,
    Demographic = 2,
};

inline constexpr std::size_t kAttributeKindCount = 3;

std::string_view to_string(AttributeKind kind);

struct Attribute {
    AttributeKind kind;
    std::string label;

    friend bool operator==(const Attribute&, const Attribute&) = default;
};

/// Canonical attribute order: drugs, then adverse events, then demographics,
/// each group sorted by label.
bool operator<(const Attribute& lhs, const Attribute& rhs);

/// One spontaneous report. Label vectors have set semantics; duplicates are
/// collapsed at ingest. Empty drug or event sets are legal.
struct CaseReport {
    std::string case_id;
    std::vector<std::string> demographics;
    std::vector<std::string> drugs;
    std::vector<std::string> events;

    friend bool operator==(const CaseReport&, const CaseReport&) = default;
};

/// A closed (extent, intent) pair of some context. extent indexes objects,
/// intent indexes attributes, support == |extent|.
struct FormalConcept {
    Bitset extent;
    Bitset intent;
    std::uint64_t support = 0;

    friend bool operator==(const FormalConcept&, const FormalConcept&) = default;
};

/// Binary case x attribute incidence with dual bit-packed storage (rows over
/// attributes, columns over objects). Objects are ordered by case id and
/// attributes by (kind, label), so the context is independent of record
/// order. Immutable after ingest; concurrent reads are safe.
class FormalContext {
public:
    FormalContext() = default;

    /// Builds a context from case reports. Rejects duplicate case ids and
    /// empty labels, naming the offender.
    static FormalContext ingest(std::span<const CaseReport> records);

    std::size_t object_count() const { return case_ids_.size(); }
    std::size_t attribute_count() const { return attributes_.size(); }
    const std::vector<std::string>& case_ids() const { return case_ids_; }
    const std::vector<Attribute>& attributes() const { return attributes_; }
    const std::string& case_id(std::size_t object) const { return case_ids_[object]; }
    const Attribute& attribute(std::size_t attr) const { return attributes_[attr]; }

    bool incidence(std::size_t object, std::size_t attr) const {
        return rows_[object].test(attr);
    }

    /// Attribute set of one object.
    const Bitset& row(std::size_t object) const { return rows_[object]; }
    /// Object set of one attribute.
    const Bitset& column(std::size_t attr) const { return cols_[attr]; }
    /// All attribute ids of the given kind, as a mask over attributes.
    const Bitset& kind_mask(AttributeKind kind) const {
        return kind_masks_[static_cast<std::size_t>(kind)];
    }

    std::optional<std::size_t> find_object(std::string_view case_id) const;
    std::optional<std::size_t> find_attribute(AttributeKind kind, std::string_view label) const;

    /// Resolves a label to an attribute id. Accepts "drug:", "event:" and
    /// "demo:" prefixes; a bare label must be unambiguous across kinds.
    std::size_t resolve_attribute(std::string_view spec) const;

    Bitset object_set(std::span<const std::string> case_ids) const;
    Bitset attribute_set(std::span<const std::string> labels) const;

    /// Attributes shared by every object in the set; all attributes for the
    /// empty set.
    Bitset derive_objects(const Bitset& objects) const;
    /// Objects holding every attribute in the set; all objects for the empty
    /// set.
    Bitset derive_attributes(const Bitset& attributes) const;
    /// The concept (Y', Y'') generated by an attribute set Y.
    FormalConcept close_attributes(const Bitset& attributes) const;

    // label-level conveniences (validating; throw on unknown names)
    std::vector<std::string> derive_objects(std::span<const std::string> case_ids) const;
    std::vector<std::string> derive_attributes(std::span<const std::string> labels) const;
    FormalConcept close_attributes(std::span<const std::string> labels) const;

    /// Labels of an attribute set in canonical attribute order.
    std::vector<std::string> attribute_labels(const Bitset& attrs) const;
    /// Labels of the given kind only.
    std::vector<std::string> attribute_labels(const Bitset& attrs, AttributeKind kind) const;
    /// Case ids of an object set in canonical object order.
    std::vector<std::string> object_ids(const Bitset& objects) const;

private:
    std::vector<std::string> case_ids_;
    std::vector<Attribute> attributes_;
    std::vector<Bitset> rows_;
    std::vector<Bitset> cols_;
    std::array<Bitset, kAttributeKindCount> kind_masks_;
    std::unordered_map<std::string, std::size_t> object_index_;
    std::array<std::unordered_map<std::string, std::size_t>, kAttributeKindCount> attribute_index_;
};

}  // namespace fcamine

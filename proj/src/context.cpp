#include "fcamine/context.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace fcamine {

namespace {

[[noreturn]] void fail(const std::string& message) { throw std::invalid_argument(message); }

std::string quoted(std::string_view s) {
    std::string out;
    out.reserve(s.size() + 2);
    out += '"';
    out += s;
    out += '"';
    return out;
}

}  // namespace

std::string_view to_string(AttributeKind kind) {
    switch (kind) {
        case AttributeKind::Drug: return "drug";
        case AttributeKind::AdverseEvent: return "event";
        case AttributeKind::Demographic: return "demo";
    }
    fail("unknown attribute kind");
}

bool operator<(const Attribute& lhs, const Attribute& rhs) {
    if (lhs.kind != rhs.kind) return lhs.kind < rhs.kind;
    return lhs.label < rhs.label;
}

FormalContext FormalContext::ingest(std::span<const CaseReport> records) {
    FormalContext ctx;

    std::set<std::string> ids;
    std::set<Attribute> attrs;
    for (const auto& rec : records) {
        if (rec.case_id.empty()) fail("case report with empty case id");
        if (!ids.insert(rec.case_id).second) fail("duplicate case id " + quoted(rec.case_id));
        auto collect = [&](const std::vector<std::string>& labels, AttributeKind kind) {
            for (const auto& label : labels) {
                if (label.empty())
                    fail("case " + quoted(rec.case_id) + " has an empty " +
                         std::string(to_string(kind)) + " label");
                attrs.insert(Attribute{kind, label});
            }
        };
        collect(rec.drugs, AttributeKind::Drug);
        collect(rec.events, AttributeKind::AdverseEvent);
        collect(rec.demographics, AttributeKind::Demographic);
    }

    ctx.case_ids_.assign(ids.begin(), ids.end());
    ctx.attributes_.assign(attrs.begin(), attrs.end());

    const std::size_t nobj = ctx.case_ids_.size();
    const std::size_t nattr = ctx.attributes_.size();
    for (std::size_t o = 0; o < nobj; ++o) ctx.object_index_.emplace(ctx.case_ids_[o], o);
    for (std::size_t a = 0; a < nattr; ++a) {
        const auto& attr = ctx.attributes_[a];
        ctx.attribute_index_[static_cast<std::size_t>(attr.kind)].emplace(attr.label, a);
    }

    ctx.rows_.assign(nobj, Bitset(nattr));
    ctx.cols_.assign(nattr, Bitset(nobj));
    for (auto& mask : ctx.kind_masks_) mask = Bitset(nattr);
    for (std::size_t a = 0; a < nattr; ++a)
        ctx.kind_masks_[static_cast<std::size_t>(ctx.attributes_[a].kind)].set(a);

    for (const auto& rec : records) {
        const std::size_t o = ctx.object_index_.at(rec.case_id);
        auto mark = [&](const std::vector<std::string>& labels, AttributeKind kind) {
            const auto& index = ctx.attribute_index_[static_cast<std::size_t>(kind)];
            for (const auto& label : labels) {
                const std::size_t a = index.at(label);
                ctx.rows_[o].set(a);
                ctx.cols_[a].set(o);
            }
        };
        mark(rec.drugs, AttributeKind::Drug);
        mark(rec.events, AttributeKind::AdverseEvent);
        mark(rec.demographics, AttributeKind::Demographic);
    }

    return ctx;
}

std::optional<std::size_t> FormalContext::find_object(std::string_view case_id) const {
    auto it = object_index_.find(std::string(case_id));
    if (it == object_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> FormalContext::find_attribute(AttributeKind kind,
                                                         std::string_view label) const {
    const auto& index = attribute_index_[static_cast<std::size_t>(kind)];
    auto it = index.find(std::string(label));
    if (it == index.end()) return std::nullopt;
    return it->second;
}

std::size_t FormalContext::resolve_attribute(std::string_view spec) const {
    static constexpr std::pair<std::string_view, AttributeKind> kPrefixes[] = {
        {"drug:", AttributeKind::Drug},
        {"event:", AttributeKind::AdverseEvent},
        {"demo:", AttributeKind::Demographic},
    };
    for (const auto& [prefix, kind] : kPrefixes) {
        if (spec.starts_with(prefix)) {
            auto found = find_attribute(kind, spec.substr(prefix.size()));
            if (!found) fail("unknown attribute " + quoted(spec));
            return *found;
        }
    }
    std::optional<std::size_t> found;
    for (std::size_t k = 0; k < kAttributeKindCount; ++k) {
        auto hit = find_attribute(static_cast<AttributeKind>(k), spec);
        if (!hit) continue;
        if (found) fail("ambiguous attribute " + quoted(spec) + "; qualify with drug:/event:/demo:");
        found = hit;
    }
    if (!found) fail("unknown attribute " + quoted(spec));
    return *found;
}

Bitset FormalContext::object_set(std::span<const std::string> ids) const {
    Bitset out(object_count());
    for (const auto& id : ids) {
        auto o = find_object(id);
        if (!o) fail("unknown case id " + quoted(id));
        out.set(*o);
    }
    return out;
}

Bitset FormalContext::attribute_set(std::span<const std::string> labels) const {
    Bitset out(attribute_count());
    for (const auto& label : labels) out.set(resolve_attribute(label));
    return out;
}

Bitset FormalContext::derive_objects(const Bitset& objects) const {
    if (objects.size() != object_count()) fail("object set size mismatch");
    Bitset out(attribute_count(), true);
    objects.for_each([&](std::size_t o) { out &= rows_[o]; });
    return out;
}

Bitset FormalContext::derive_attributes(const Bitset& attributes) const {
    if (attributes.size() != attribute_count()) fail("attribute set size mismatch");
    Bitset out(object_count(), true);
    attributes.for_each([&](std::size_t a) { out &= cols_[a]; });
    return out;
}

FormalConcept FormalContext::close_attributes(const Bitset& attributes) const {
    FormalConcept c;
    c.extent = derive_attributes(attributes);
    c.intent = derive_objects(c.extent);
    c.support = c.extent.count();
    return c;
}

std::vector<std::string> FormalContext::derive_objects(
    std::span<const std::string> ids) const {
    return attribute_labels(derive_objects(object_set(ids)));
}

std::vector<std::string> FormalContext::derive_attributes(
    std::span<const std::string> labels) const {
    return object_ids(derive_attributes(attribute_set(labels)));
}

FormalConcept FormalContext::close_attributes(std::span<const std::string> labels) const {
    return close_attributes(attribute_set(labels));
}

std::vector<std::string> FormalContext::attribute_labels(const Bitset& attrs) const {
    std::vector<std::string> out;
    out.reserve(attrs.count());
    attrs.for_each([&](std::size_t a) { out.push_back(attributes_[a].label); });
    return out;
}

std::vector<std::string> FormalContext::attribute_labels(const Bitset& attrs,
                                                         AttributeKind kind) const {
    std::vector<std::string> out;
    attrs.for_each([&](std::size_t a) {
        if (attributes_[a].kind == kind) out.push_back(attributes_[a].label);
    });
    return out;
}

std::vector<std::string> FormalContext::object_ids(const Bitset& objects) const {
    std::vector<std::string> out;
    out.reserve(objects.count());
    objects.for_each([&](std::size_t o) { out.push_back(case_ids_[o]); });
    return out;
}

}  // namespace fcamine

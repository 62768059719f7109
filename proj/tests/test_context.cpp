#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "fcamine/context.hpp"
#include "fixture.hpp"
#include "oracles.hpp"

using namespace fcamine;
using fcatest::reference_cases;
using fcatest::reference_context;

TEST_CASE("ingest orders objects by id and attributes by kind then label") {
    const FormalContext& ctx = reference_context();
    CHECK(ctx.object_count() == 8);
    CHECK(ctx.attribute_count() == 9);
    CHECK(ctx.case_ids() ==
          std::vector<std::string>{"P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8"});

    const std::vector<std::pair<AttributeKind, std::string>> expected = {
        {AttributeKind::Drug, "D1"},         {AttributeKind::Drug, "D2"},
        {AttributeKind::Drug, "D3"},         {AttributeKind::Drug, "D4"},
        {AttributeKind::Drug, "D5"},         {AttributeKind::AdverseEvent, "AE1"},
        {AttributeKind::AdverseEvent, "AE2"}, {AttributeKind::Demographic, "F"},
        {AttributeKind::Demographic, "M"},
    };
    REQUIRE(ctx.attributes().size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(ctx.attribute(i).kind == expected[i].first);
        CHECK(ctx.attribute(i).label == expected[i].second);
    }

    CHECK(ctx.kind_mask(AttributeKind::Drug).count() == 5);
    CHECK(ctx.kind_mask(AttributeKind::AdverseEvent).count() == 2);
    CHECK(ctx.kind_mask(AttributeKind::Demographic).count() == 2);
}

TEST_CASE("ingest is independent of record order") {
    auto reversed = reference_cases();
    std::reverse(reversed.begin(), reversed.end());
    const FormalContext flipped = FormalContext::ingest(reversed);
    const FormalContext& ctx = reference_context();
    CHECK(flipped.case_ids() == ctx.case_ids());
    CHECK(flipped.attributes() == ctx.attributes());
    for (std::size_t o = 0; o < ctx.object_count(); ++o) CHECK(flipped.row(o) == ctx.row(o));
}

TEST_CASE("incidence, rows and columns agree") {
    const FormalContext& ctx = reference_context();
    const std::size_t p2 = *ctx.find_object("P2");
    const std::size_t d2 = *ctx.find_attribute(AttributeKind::Drug, "D2");
    const std::size_t ae2 = *ctx.find_attribute(AttributeKind::AdverseEvent, "AE2");
    CHECK(ctx.incidence(p2, d2));
    CHECK_FALSE(ctx.incidence(p2, ae2));
    CHECK(ctx.row(p2).test(d2));
    CHECK(ctx.column(d2).test(p2));
    CHECK(ctx.column(d2).count() == 3);  // P2, P5, P6
    std::size_t total = 0;
    for (std::size_t o = 0; o < ctx.object_count(); ++o) total += ctx.row(o).count();
    std::size_t total_cols = 0;
    for (std::size_t a = 0; a < ctx.attribute_count(); ++a) total_cols += ctx.column(a).count();
    CHECK(total == total_cols);
}

TEST_CASE("derivation matches the worked examples") {
    const FormalContext& ctx = reference_context();
    const std::vector<std::string> p45 = {"P4", "P5"};
    CHECK(ctx.derive_objects(p45) == std::vector<std::string>{"F"});

    const std::vector<std::string> f = {"F"};
    CHECK(ctx.derive_attributes(f) ==
          std::vector<std::string>{"P4", "P5", "P6", "P7", "P8"});

    const FormalConcept closed = ctx.close_attributes(f);
    CHECK(ctx.object_ids(closed.extent) ==
          std::vector<std::string>{"P4", "P5", "P6", "P7", "P8"});
    CHECK(ctx.attribute_labels(closed.intent) == std::vector<std::string>{"F"});
    CHECK(closed.support == 5);
}

TEST_CASE("closure adds the attributes forced by the data") {
    const FormalContext& ctx = reference_context();
    // every case with both D3 and AE1 also carries D1 and M
    const std::vector<std::string> seed = {"D3", "AE1"};
    const FormalConcept closed = ctx.close_attributes(seed);
    CHECK(ctx.attribute_labels(closed.intent) ==
          std::vector<std::string>{"D1", "D3", "AE1", "M"});
    CHECK(ctx.object_ids(closed.extent) == std::vector<std::string>{"P1", "P2", "P3"});

    const std::vector<std::string> stable = {"D1", "AE1"};
    const FormalConcept kept = ctx.close_attributes(stable);
    CHECK(ctx.attribute_labels(kept.intent) == std::vector<std::string>{"D1", "AE1"});
    CHECK(kept.support == 4);
}

TEST_CASE("deriving the empty set yields the universe") {
    const FormalContext& ctx = reference_context();
    CHECK(ctx.derive_objects(Bitset(8)).count() == 9);  // every attribute, vacuously
    CHECK(ctx.derive_objects(Bitset(8, true)).count() == 0);  // nothing shared by all 8 cases
    CHECK(ctx.derive_attributes(Bitset(9)).count() == 8);
    const FormalContext empty = FormalContext::ingest(std::vector<CaseReport>{});
    CHECK(empty.object_count() == 0);
    CHECK(empty.attribute_count() == 0);
    const FormalConcept top = empty.close_attributes(Bitset(0));
    CHECK(top.support == 0);
}

TEST_CASE("resolve_attribute honours prefixes and rejects ambiguity") {
    const FormalContext& ctx = reference_context();
    CHECK(ctx.resolve_attribute("D1") == *ctx.find_attribute(AttributeKind::Drug, "D1"));
    CHECK(ctx.resolve_attribute("drug:D1") == ctx.resolve_attribute("D1"));
    CHECK(ctx.resolve_attribute("demo:M") ==
          *ctx.find_attribute(AttributeKind::Demographic, "M"));
    CHECK_THROWS_AS((void)ctx.resolve_attribute("nope"), std::invalid_argument);
    CHECK_THROWS_AS((void)ctx.resolve_attribute("drug:AE1"), std::invalid_argument);

    const std::vector<CaseReport> clashing = {
        {"C1", {}, {"X"}, {"X"}},
    };
    const FormalContext clash = FormalContext::ingest(clashing);
    CHECK_THROWS_AS((void)clash.resolve_attribute("X"), std::invalid_argument);
    CHECK(clash.attribute(clash.resolve_attribute("drug:X")).kind == AttributeKind::Drug);
    CHECK(clash.attribute(clash.resolve_attribute("event:X")).kind ==
          AttributeKind::AdverseEvent);
}

TEST_CASE("ingest rejects duplicate ids and empty labels") {
    std::vector<CaseReport> dup = reference_cases();
    dup.push_back({"P1", {}, {"D9"}, {}});
    CHECK_THROWS_WITH_AS((void)FormalContext::ingest(dup), doctest::Contains("P1"),
                         std::invalid_argument);

    const std::vector<CaseReport> unnamed = {{"", {}, {"D1"}, {}}};
    CHECK_THROWS_AS((void)FormalContext::ingest(unnamed), std::invalid_argument);

    const std::vector<CaseReport> blank_label = {{"C1", {}, {""}, {}}};
    CHECK_THROWS_WITH_AS((void)FormalContext::ingest(blank_label), doctest::Contains("C1"),
                         std::invalid_argument);
}

TEST_CASE("repeated labels in one record collapse to a set") {
    const std::vector<CaseReport> records = {{"C1", {"M", "M"}, {"D1", "D1"}, {"E1"}}};
    const FormalContext ctx = FormalContext::ingest(records);
    CHECK(ctx.attribute_count() == 3);
    CHECK(ctx.row(0).count() == 3);
}

TEST_CASE("unknown names in label-level calls are rejected") {
    const FormalContext& ctx = reference_context();
    const std::vector<std::string> bad_obj = {"P1", "P99"};
    CHECK_THROWS_AS((void)ctx.object_set(bad_obj), std::invalid_argument);
    const std::vector<std::string> bad_attr = {"D1", "D99"};
    CHECK_THROWS_AS((void)ctx.attribute_set(bad_attr), std::invalid_argument);
}

TEST_CASE("closure laws hold on random contexts") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 60; ++round) {
        fcatest::oracle::RandomSpec spec;
        spec.objects = 1 + rng() % 9;
        spec.drugs = 1 + rng() % 4;
        spec.events = 1 + rng() % 4;
        spec.demos = rng() % 3;
        spec.density = 0.15 + 0.7 * fcatest::oracle::u01(rng);
        const auto records = fcatest::oracle::random_records(rng, spec);
        const FormalContext ctx = FormalContext::ingest(records);
        const std::size_t nattr = ctx.attribute_count();

        Bitset y1(nattr), y2(nattr);
        for (std::size_t a = 0; a < nattr; ++a) {
            if (rng() % 3 == 0) y1.set(a);
            if (rng() % 2 == 0) y2.set(a);
        }
        Bitset y_small = y1;
        y_small &= y2;  // y_small is a subset of both

        // extensive: Y is contained in Y''
        const Bitset closure1 = ctx.close_attributes(y1).intent;
        CHECK(y1.is_subset_of(closure1));
        // idempotent: closing a closure changes nothing
        CHECK(ctx.close_attributes(closure1).intent == closure1);
        // monotone: smaller seeds close into smaller closures
        CHECK(ctx.close_attributes(y_small).intent.is_subset_of(closure1));

        // Galois antitone on the object side: more objects share fewer attrs
        Bitset x1(ctx.object_count());
        for (std::size_t o = 0; o < ctx.object_count(); ++o)
            if (rng() % 2 == 0) x1.set(o);
        Bitset x2 = x1;
        if (ctx.object_count() > 0) x2.set(rng() % ctx.object_count());
        CHECK(ctx.derive_objects(x2).is_subset_of(ctx.derive_objects(x1)));
        // and the composition is extensive on objects too
        CHECK(x1.is_subset_of(ctx.derive_attributes(ctx.derive_objects(x1))));
    }
}

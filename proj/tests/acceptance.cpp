// Acceptance gate: one line per criterion, non-zero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fcamine/generate.hpp"
#include "fcamine/io.hpp"
#include "fcamine/mining.hpp"
#include "fcamine/reference.hpp"
#include "fixture.hpp"
#include "oracles.hpp"

namespace {

using namespace fcamine;
namespace oracle = fcatest::oracle;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string show_seconds(double s) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(2) << s << " s";
    return out.str();
}

Bitset random_attribute_set(std::mt19937_64& rng, std::size_t nattrs, double density = 0.3) {
    Bitset out(nattrs);
    for (std::size_t i = 0; i < nattrs; ++i)
        if (oracle::u01(rng) < density) out.set(i);
    return out;
}

std::set<std::string> relationship_keys(const MiningReport& report) {
    std::set<std::string> keys;
    for (const auto& r : report.relationships) {
        std::string k = std::string(to_string(r.kind));
        for (const auto& s : r.drugs) k += "|" + s;
        for (const auto& s : r.events) k += "/" + s;
        for (const auto& s : r.demographics) k += "+" + s;
        keys.insert(k);
    }
    return keys;
}

// criteria 5 and 6 share one large synthetic run
struct BigRun {
    FormalContext ctx;
    MiningReport report;
    std::string report_dump;
    std::string lattice_dump;
    double mine_seconds = 0.0;
    double lattice_seconds = 0.0;
};

const std::vector<PlantedAssociation>& planted_pairs() {
    static const std::vector<PlantedAssociation> pairs = {
        {"D010", "E010", 20}, {"D020", "E020", 22}, {"D030", "E030", 24},
        {"D040", "E040", 26}, {"D050", "E050", 28},
    };
    return pairs;
}

const BigRun& big_run() {
    static const BigRun run = [] {
        GeneratorOptions gen;
        gen.cases = 3000;
        gen.drugs = 500;
        gen.events = 600;
        gen.density = 0.01;
        gen.seed = 20260814;
        gen.planted = planted_pairs();

        BigRun r;
        r.ctx = FormalContext::ingest(generate_cases(gen));

        auto start = Clock::now();
        const ConceptSet cs = enumerate_concepts(r.ctx, 3, 1);
        r.lattice_seconds = seconds_since(start);
        r.lattice_dump = concepts_to_json(r.ctx, cs).dump();

        start = Clock::now();
        r.report = mine(r.ctx);
        r.mine_seconds = seconds_since(start);
        r.report_dump = report_to_json(r.report).dump();
        return r;
    }();
    return run;
}

bool criterion_oracle_equivalence(std::string& detail) {
    std::mt19937_64 rng(101);
    const auto start = Clock::now();
    for (int round = 0; round < 200; ++round) {
        oracle::RandomSpec spec;
        spec.objects = 1 + rng() % 10;
        spec.drugs = 1 + rng() % 5;
        spec.events = 1 + rng() % 5;
        spec.demos = rng() % 3;  // at most 12 attributes in total
        spec.density = 0.1 + 0.8 * oracle::u01(rng);
        const auto records = oracle::random_records(rng, spec);
        const FormalContext ctx = FormalContext::ingest(records);
        const auto mined = oracle::to_label_concepts(ctx, enumerate_concepts(ctx));
        const auto expected = oracle::all_concepts(records);
        if (mined != expected) {
            detail = "round " + std::to_string(round) + ": " + std::to_string(mined.size()) +
                     " concepts vs oracle " + std::to_string(expected.size());
            return false;
        }
    }
    const double elapsed = seconds_since(start);
    detail = "200 contexts, " + show_seconds(elapsed);
    return elapsed < 10.0;
}

bool criterion_fixture_facts(std::string& detail) {
    const FormalContext& ctx = fcatest::reference_context();

    const std::vector<std::string> p45 = {"P4", "P5"};
    if (ctx.derive_objects(p45) != std::vector<std::string>{"F"}) {
        detail = "derivation of {P4,P5}";
        return false;
    }

    const std::vector<std::string> female = {"F"};
    const FormalConcept cf = ctx.close_attributes(female);
    if (ctx.object_ids(cf.extent) != std::vector<std::string>{"P4", "P5", "P6", "P7", "P8"} ||
        ctx.attribute_labels(cf.intent) != std::vector<std::string>{"F"}) {
        detail = "closure of {F}";
        return false;
    }

    const std::vector<std::string> quad = {"P1", "P2", "P3", "P4"};
    const std::vector<std::string> pair = {"D1", "AE1"};
    if (!is_concept(ctx, ctx.object_set(quad), ctx.attribute_set(pair))) {
        detail = "({P1..P4}, {D1,AE1}) not recognized as a concept";
        return false;
    }

    MiningOptions loose;
    loose.thresholds = {1, 0.001, 0.0};
    for (const MiningReport& report : {mine(ctx), mine(ctx, loose)}) {
        for (const auto& r : report.relationships) {
            if (r.drugs == std::vector<std::string>{"D3"} &&
                r.events == std::vector<std::string>{"AE1"} && r.demographics.empty()) {
                detail = "non-closed pair {D3,AE1} was reported";
                return false;
            }
        }
    }
    return true;
}

bool criterion_statistics_goldens(std::string& detail) {
    const ContingencyTable worked{3, 2, 10, 85};
    if (std::abs(prr(worked) - 5.7) > 1e-9) {
        detail = "prr(3,2,10,85) = " + format_double(prr(worked));
        return false;
    }
    if (std::abs(chi_square(worked) - 6.3705) > 1e-3) {
        detail = "chi2(3,2,10,85) = " + format_double(chi_square(worked));
        return false;
    }
    if (prr({1, 1, 1, 1}) != 1.0) {
        detail = "prr(1,1,1,1)";
        return false;
    }
    const ContingencyTable degenerate[] = {{0, 0, 5, 7}, {5, 7, 0, 0}, {0, 5, 0, 7}, {5, 0, 7, 0}};
    for (const auto& t : degenerate) {
        if (chi_square(t, Chi2Correction::Yates) != 0.0 ||
            chi_square(t, Chi2Correction::Pearson) != 0.0) {
            detail = "zero-marginal chi2 not 0";
            return false;
        }
    }
    if (apply_mhra(2.0, 10.0, 5) || apply_mhra(5.0, 4.0, 3) ||
        !apply_mhra(2.0000001, 4.0000001, 3)) {
        detail = "decision-rule boundary strictness";
        return false;
    }
    return true;
}

bool criterion_classification_partition(std::string& detail) {
    for (std::size_t nd = 1; nd <= 6; ++nd) {
        for (std::size_t ne = 1; ne <= 6; ++ne) {
            CaseReport rec;
            rec.case_id = "C1";
            for (std::size_t d = 0; d < nd; ++d) rec.drugs.push_back("d" + std::to_string(d));
            for (std::size_t e = 0; e < ne; ++e) rec.events.push_back("e" + std::to_string(e));
            const std::vector<CaseReport> records = {rec};
            const FormalContext ctx = FormalContext::ingest(records);
            const RelationshipKind got =
                classify_concept(ctx, ctx.close_attributes(Bitset(nd + ne, true))).kind;

            RelationshipKind expected;
            if (nd == 1 && ne == 1) expected = RelationshipKind::Signal;
            else if (nd == 2 && ne == 1) expected = RelationshipKind::DrugInteraction;
            else if (nd == 1 && ne >= 2) expected = RelationshipKind::Syndrome;
            else if (nd >= 3 && ne == 1) expected = RelationshipKind::ComplexInteraction;
            else expected = RelationshipKind::ComplexSyndrome;

            if (got != expected) {
                detail = "(" + std::to_string(nd) + "," + std::to_string(ne) + ") -> " +
                         std::string(to_string(got));
                return false;
            }
        }
    }
    return true;
}

bool criterion_planted_recovery(std::string& detail) {
    const BigRun& run = big_run();
    for (const auto& planted : planted_pairs()) {
        bool found = false;
        for (const auto& r : run.report.relationships) {
            if (r.kind == RelationshipKind::Signal &&
                r.drugs == std::vector<std::string>{planted.drug} &&
                r.events == std::vector<std::string>{planted.event} && r.demographics.empty()) {
                found = r.support() >= planted.count;
                break;
            }
        }
        if (!found) {
            detail = "planted pair " + planted.drug + ":" + planted.event + " missing";
            return false;
        }
    }
    detail = "5 of 5 pairs, mining took " + show_seconds(run.mine_seconds);
    return run.mine_seconds < 60.0;
}

bool criterion_scale_and_parallel_identity(std::string& detail) {
    const BigRun& run = big_run();
    const double single = run.lattice_seconds + run.mine_seconds;
    if (single >= 60.0) {
        detail = "single-threaded run took " + show_seconds(single);
        return false;
    }

    MiningOptions parallel;
    parallel.threads = 4;
    if (report_to_json(mine(run.ctx, parallel)).dump() != run.report_dump) {
        detail = "4-worker mining report differs from the single-threaded one";
        return false;
    }
    if (concepts_to_json(run.ctx, enumerate_concepts(run.ctx, 3, 4)).dump() !=
        run.lattice_dump) {
        detail = "4-worker lattice dump differs from the single-threaded one";
        return false;
    }
    detail = std::to_string(run.report.total_concepts) + " concepts, " + show_seconds(single) +
             " single-threaded, parallel output byte-identical";
    return true;
}

bool criterion_disclosure(std::string& detail) {
    // The published headline figures came from a confidential extract and are
    // not recomputable here. They live in fcamine/reference.hpp as constants;
    // nothing in this suite compares pipeline output against them. Only their
    // internal arithmetic is checked.
    namespace ref = fcamine::reference;
    std::uint64_t kind_sum = 0;
    for (auto k : ref::kStudyPerKind) kind_sum += k;
    if (kind_sum != ref::kStudyFilteredConcepts ||
        ref::kStudyFilteredConcepts > ref::kStudyDrugEventConcepts ||
        ref::kStudyDrugEventConcepts > ref::kStudyTotalConcepts ||
        ref::kStudyUnrestrictedSignals > ref::kStudyPerKind[0]) {
        detail = "documentation constants are not self-consistent";
        return false;
    }
    detail = "headline figures are documentation constants, never asserted";
    return true;
}

bool criterion_invariant_suites(std::string& detail) {
    std::mt19937_64 rng(808);
    int violations = 0;

    // closure laws: extensive, idempotent, monotone
    for (int round = 0; round < 100; ++round) {
        oracle::RandomSpec spec;
        spec.objects = 4 + rng() % 10;
        const auto records = oracle::random_records(rng, spec);
        const FormalContext ctx = FormalContext::ingest(records);
        const std::size_t n = ctx.attribute_count();
        const Bitset y1 = random_attribute_set(rng, n);
        const Bitset y2 = random_attribute_set(rng, n);
        Bitset y_small(n);
        y_small.assign_and(y1, y2);

        const Bitset c1 = ctx.close_attributes(y1).intent;
        if (!y1.is_subset_of(c1)) ++violations;
        if (ctx.close_attributes(c1).intent != c1) ++violations;
        if (!ctx.close_attributes(y_small).intent.is_subset_of(c1)) ++violations;
    }

    // Galois derivation is antitone on object sets
    for (int round = 0; round < 100; ++round) {
        oracle::RandomSpec spec;
        spec.objects = 4 + rng() % 10;
        const auto records = oracle::random_records(rng, spec);
        const FormalContext ctx = FormalContext::ingest(records);
        Bitset x1(ctx.object_count());
        Bitset x2(ctx.object_count());
        for (std::size_t o = 0; o < ctx.object_count(); ++o) {
            const double p = oracle::u01(rng);
            if (p < 0.3) x1.set(o);
            if (p < 0.6) x2.set(o);  // x1 is a subset of x2
        }
        if (!ctx.derive_objects(x2).is_subset_of(ctx.derive_objects(x1))) ++violations;
    }

    // support never grows when moving down the lattice order
    for (int round = 0; round < 100; ++round) {
        oracle::RandomSpec spec;
        spec.objects = 4 + rng() % 8;
        spec.drugs = 3;
        spec.events = 3;
        spec.demos = 1;
        const auto records = oracle::random_records(rng, spec);
        const ConceptSet cs = enumerate_concepts(FormalContext::ingest(records));
        for (std::size_t i = 0; i < cs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j)
                if (leq(cs[i], cs[j]) && cs[i].support > cs[j].support) ++violations;
    }

    // raising thresholds only removes relationships
    for (int round = 0; round < 100; ++round) {
        oracle::RandomSpec spec;
        spec.objects = 6 + rng() % 12;
        spec.density = 0.25 + 0.4 * oracle::u01(rng);
        const auto records = oracle::random_records(rng, spec);
        const FormalContext ctx = FormalContext::ingest(records);
        MiningOptions loose;
        loose.thresholds = {1, 0.5, 0.1};
        MiningOptions tight;
        tight.thresholds = {2, 1.1, 0.9};
        const auto loose_keys = relationship_keys(mine(ctx, loose));
        for (const auto& key : relationship_keys(mine(ctx, tight)))
            if (!loose_keys.count(key)) ++violations;
    }

    // worker count changes nothing
    for (int round = 0; round < 100; ++round) {
        oracle::RandomSpec spec;
        spec.objects = 6 + rng() % 12;
        const auto records = oracle::random_records(rng, spec);
        const FormalContext ctx = FormalContext::ingest(records);
        if (enumerate_concepts(ctx, 0, 3).concepts() !=
            enumerate_concepts(ctx, 0, 1).concepts())
            ++violations;
        MiningOptions single;
        single.thresholds = {1, 1.0, 0.5};
        MiningOptions quad = single;
        quad.threads = 4;
        if (mine(ctx, quad) != mine(ctx, single)) ++violations;
    }

    if (violations != 0) {
        detail = std::to_string(violations) + " violation(s)";
        return false;
    }
    detail = "5 suites x 100 instances, zero violations";
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        bool (*fn)(std::string&);
    };
    const Criterion criteria[] = {
        {"concept enumeration equals the brute-force oracle on 200 random contexts",
         criterion_oracle_equivalence},
        {"reference fixture derivations, closures and mined pairs are exact",
         criterion_fixture_facts},
        {"PRR and chi-square golden values and decision-rule boundaries",
         criterion_statistics_goldens},
        {"taxonomy covers every drug/event count combination", criterion_classification_partition},
        {"every planted association is recovered from the synthetic dataset",
         criterion_planted_recovery},
        {"full-scale run inside the time budget with byte-identical parallel output",
         criterion_scale_and_parallel_identity},
        {"study headline figures stay documentation-only", criterion_disclosure},
        {"closure, order, monotonicity and determinism invariants hold",
         criterion_invariant_suites},
    };

    int failures = 0;
    for (std::size_t i = 0; i < std::size(criteria); ++i) {
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << (i + 1) << ": "
                  << criteria[i].name;
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << '\n';
        if (!ok) ++failures;
    }
    if (failures != 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}

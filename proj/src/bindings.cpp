#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fcamine/generate.hpp"
#include "fcamine/io.hpp"
#include "fcamine/lattice.hpp"
#include "fcamine/mining.hpp"
#include "fcamine/version.hpp"

namespace py = pybind11;
using namespace fcamine;

PYBIND11_MODULE(_core, m) {
    m.doc() = "concept-lattice mining of adverse drug event reports";
    m.attr("__version__") = kVersion;

    py::enum_<AttributeKind>(m, "AttributeKind")
        .value("DRUG", AttributeKind::Drug)
        .value("ADVERSE_EVENT", AttributeKind::AdverseEvent)
        .value("DEMOGRAPHIC", AttributeKind::Demographic);

    py::enum_<Chi2Correction>(m, "Chi2Correction")
        .value("YATES", Chi2Correction::Yates)
        .value("PEARSON", Chi2Correction::Pearson);

    py::enum_<ContingencyMode>(m, "ContingencyMode")
        .value("CONJUNCTION", ContingencyMode::Conjunction)
        .value("EXTENT", ContingencyMode::Extent);

    py::enum_<RelationshipKind>(m, "RelationshipKind")
        .value("SIGNAL", RelationshipKind::Signal)
        .value("DRUG_INTERACTION", RelationshipKind::DrugInteraction)
        .value("SYNDROME", RelationshipKind::Syndrome)
        .value("COMPLEX_INTERACTION", RelationshipKind::ComplexInteraction)
        .value("COMPLEX_SYNDROME", RelationshipKind::ComplexSyndrome);

    py::class_<Bitset>(m, "Bitset")
        .def("__len__", &Bitset::size)
        .def("count", &Bitset::count)
        .def("test", &Bitset::test, py::arg("index"))
        .def("indices", &Bitset::to_indices)
        .def("__eq__", [](const Bitset& a, const Bitset& b) { return a == b; })
        .def("__repr__", [](const Bitset& b) {
            return "Bitset(" + std::to_string(b.count()) + " of " + std::to_string(b.size()) +
                   ")";
        });

    py::class_<Attribute>(m, "Attribute")
        .def_readonly("kind", &Attribute::kind)
        .def_readonly("label", &Attribute::label)
        .def("__eq__", [](const Attribute& a, const Attribute& b) { return a == b; })
        .def("__repr__", [](const Attribute& a) {
            return "Attribute(" + std::string(to_string(a.kind)) + ", " + a.label + ")";
        });

    py::class_<CaseReport>(m, "CaseReport")
        .def(py::init([](std::string case_id, std::vector<std::string> drugs,
                         std::vector<std::string> events, std::vector<std::string> demographics) {
                 return CaseReport{std::move(case_id), std::move(demographics), std::move(drugs),
                                   std::move(events)};
             }),
             py::arg("case_id"), py::arg("drugs") = std::vector<std::string>{},
             py::arg("events") = std::vector<std::string>{},
             py::arg("demographics") = std::vector<std::string>{})
        .def_readwrite("case_id", &CaseReport::case_id)
        .def_readwrite("demographics", &CaseReport::demographics)
        .def_readwrite("drugs", &CaseReport::drugs)
        .def_readwrite("events", &CaseReport::events)
        .def("__eq__", [](const CaseReport& a, const CaseReport& b) { return a == b; })
        .def("__repr__",
             [](const CaseReport& r) { return "CaseReport(" + r.case_id + ")"; });

    py::class_<FormalConcept>(m, "FormalConcept")
        .def_readonly("extent", &FormalConcept::extent)
        .def_readonly("intent", &FormalConcept::intent)
        .def_readonly("support", &FormalConcept::support)
        .def("__eq__",
             [](const FormalConcept& a, const FormalConcept& b) { return a == b; });

    py::class_<FormalContext>(m, "FormalContext")
        .def_static("ingest",
                    [](const std::vector<CaseReport>& records) {
                        return FormalContext::ingest(records);
                    },
                    py::arg("records"))
        .def("object_count", &FormalContext::object_count)
        .def("attribute_count", &FormalContext::attribute_count)
        .def("case_ids", &FormalContext::case_ids)
        .def("attributes", &FormalContext::attributes)
        .def("incidence", &FormalContext::incidence, py::arg("object"), py::arg("attribute"))
        .def("resolve_attribute",
             [](const FormalContext& ctx, const std::string& spec) {
                 return ctx.resolve_attribute(spec);
             },
             py::arg("spec"))
        .def("object_set",
             [](const FormalContext& ctx, const std::vector<std::string>& ids) {
                 return ctx.object_set(ids);
             },
             py::arg("case_ids"))
        .def("attribute_set",
             [](const FormalContext& ctx, const std::vector<std::string>& labels) {
                 return ctx.attribute_set(labels);
             },
             py::arg("labels"))
        .def("derive_objects",
             [](const FormalContext& ctx, const std::vector<std::string>& ids) {
                 return ctx.derive_objects(ids);
             },
             py::arg("case_ids"))
        .def("derive_attributes",
             [](const FormalContext& ctx, const std::vector<std::string>& labels) {
                 return ctx.derive_attributes(labels);
             },
             py::arg("labels"))
        .def("close_attributes",
             [](const FormalContext& ctx, const std::vector<std::string>& labels) {
                 return ctx.close_attributes(labels);
             },
             py::arg("labels"))
        .def("close_attribute_set",
             [](const FormalContext& ctx, const Bitset& attrs) {
                 return ctx.close_attributes(attrs);
             },
             py::arg("attributes"))
        .def("attribute_labels",
             [](const FormalContext& ctx, const Bitset& attrs) {
                 return ctx.attribute_labels(attrs);
             },
             py::arg("attributes"))
        .def("object_ids",
             [](const FormalContext& ctx, const Bitset& objects) {
                 return ctx.object_ids(objects);
             },
             py::arg("objects"));

    py::class_<ConceptSet>(m, "ConceptSet")
        .def("__len__", &ConceptSet::size)
        .def("__getitem__",
             [](const ConceptSet& cs, std::size_t i) {
                 if (i >= cs.size()) throw py::index_error();
                 return cs[i];
             })
        .def(
            "__iter__",
            [](const ConceptSet& cs) { return py::make_iterator(cs.begin(), cs.end()); },
            py::keep_alive<0, 1>())
        .def("find_by_intent", &ConceptSet::find_by_intent, py::arg("intent"))
        .def("contains_intent", &ConceptSet::contains_intent, py::arg("intent"));

    m.def("enumerate_concepts", &enumerate_concepts, py::arg("ctx"), py::arg("min_support") = 0,
          py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());
    m.def("is_concept", &is_concept, py::arg("ctx"), py::arg("extent"), py::arg("intent"));
    m.def("leq", &leq, py::arg("lhs"), py::arg("rhs"));
    m.def("covering_edges", &covering_edges, py::arg("concepts"));

    py::class_<ContingencyTable>(m, "ContingencyTable")
        .def(py::init([](std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
                 return ContingencyTable{a, b, c, d};
             }),
             py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"))
        .def_readwrite("a", &ContingencyTable::a)
        .def_readwrite("b", &ContingencyTable::b)
        .def_readwrite("c", &ContingencyTable::c)
        .def_readwrite("d", &ContingencyTable::d)
        .def("n", &ContingencyTable::n)
        .def("__eq__",
             [](const ContingencyTable& x, const ContingencyTable& y) { return x == y; })
        .def("__repr__", [](const ContingencyTable& t) {
            return "ContingencyTable(a=" + std::to_string(t.a) + ", b=" + std::to_string(t.b) +
                   ", c=" + std::to_string(t.c) + ", d=" + std::to_string(t.d) + ")";
        });

    py::class_<MhraThresholds>(m, "MhraThresholds")
        .def(py::init([](double min_prr, double min_chi2, std::uint64_t min_support) {
                 return MhraThresholds{min_prr, min_chi2, min_support};
             }),
             py::arg("min_prr") = 2.0, py::arg("min_chi2") = 4.0, py::arg("min_support") = 3)
        .def_readwrite("min_prr", &MhraThresholds::min_prr)
        .def_readwrite("min_chi2", &MhraThresholds::min_chi2)
        .def_readwrite("min_support", &MhraThresholds::min_support);

    py::class_<DisproportionalityResult>(m, "DisproportionalityResult")
        .def_readonly("prr", &DisproportionalityResult::prr)
        .def_readonly("chi2", &DisproportionalityResult::chi2)
        .def_readonly("support", &DisproportionalityResult::support)
        .def_readonly("passes_mhra", &DisproportionalityResult::passes_mhra)
        .def("__repr__", [](const DisproportionalityResult& r) {
            return "DisproportionalityResult(prr=" + format_double(r.prr) +
                   ", chi2=" + format_double(r.chi2) + ", support=" + std::to_string(r.support) +
                   ", passes_mhra=" + (r.passes_mhra ? std::string("True") : std::string("False")) +
                   ")";
        });

    m.def("contingency_from_concept", &contingency_from_concept, py::arg("ctx"),
          py::arg("concept"), py::arg("mode") = ContingencyMode::Conjunction);
    m.def("prr", &prr, py::arg("table"), py::arg("haldane") = false);
    m.def("chi_square", &chi_square, py::arg("table"),
          py::arg("correction") = Chi2Correction::Yates);
    m.def("apply_mhra", &apply_mhra, py::arg("prr"), py::arg("chi2"), py::arg("support"),
          py::arg("thresholds") = MhraThresholds{});
    m.def("evaluate_concept_stats", &evaluate_concept_stats, py::arg("table"),
          py::arg("support"), py::arg("correction") = Chi2Correction::Yates,
          py::arg("thresholds") = MhraThresholds{});

    py::class_<Classification>(m, "Classification")
        .def_readonly("kind", &Classification::kind)
        .def_readonly("population_restricted", &Classification::population_restricted);

    py::class_<Relationship>(m, "Relationship")
        .def_readonly("kind", &Relationship::kind)
        .def_readonly("drugs", &Relationship::drugs)
        .def_readonly("events", &Relationship::events)
        .def_readonly("demographics", &Relationship::demographics)
        .def_readonly("extent", &Relationship::extent)
        .def_readonly("table", &Relationship::table)
        .def_readonly("stats", &Relationship::stats)
        .def_readonly("population_restricted", &Relationship::population_restricted)
        .def("support", &Relationship::support)
        .def("__repr__", [](const Relationship& r) {
            return "Relationship(" + std::string(to_string(r.kind)) + ", drugs=" +
                   std::to_string(r.drugs.size()) + ", events=" + std::to_string(r.events.size()) +
                   ")";
        });

    py::class_<MiningThresholds>(m, "MiningThresholds")
        .def(py::init([](std::uint64_t min_support, double min_prr, double min_chi2) {
                 return MiningThresholds{min_support, min_prr, min_chi2};
             }),
             py::arg("min_support") = 3, py::arg("min_prr") = 2.0, py::arg("min_chi2") = 4.0)
        .def_readwrite("min_support", &MiningThresholds::min_support)
        .def_readwrite("min_prr", &MiningThresholds::min_prr)
        .def_readwrite("min_chi2", &MiningThresholds::min_chi2);

    py::class_<MiningOptions>(m, "MiningOptions")
        .def(py::init([](MiningThresholds thresholds, Chi2Correction correction,
                         ContingencyMode mode, unsigned threads) {
                 return MiningOptions{thresholds, correction, mode, threads};
             }),
             py::arg("thresholds") = MiningThresholds{},
             py::arg("correction") = Chi2Correction::Yates,
             py::arg("mode") = ContingencyMode::Conjunction, py::arg("threads") = 1)
        .def_readwrite("thresholds", &MiningOptions::thresholds)
        .def_readwrite("correction", &MiningOptions::correction)
        .def_readwrite("mode", &MiningOptions::mode)
        .def_readwrite("threads", &MiningOptions::threads);

    py::class_<MiningReport>(m, "MiningReport")
        .def_readonly("total_concepts", &MiningReport::total_concepts)
        .def_readonly("strip_concepts", &MiningReport::strip_concepts)
        .def_readonly("filtered_concepts", &MiningReport::filtered_concepts)
        .def_readonly("per_kind", &MiningReport::per_kind)
        .def_readonly("relationships", &MiningReport::relationships)
        .def("to_json",
             [](const MiningReport& report) { return report_to_json(report).dump(2); })
        .def("__eq__",
             [](const MiningReport& a, const MiningReport& b) { return a == b; });

    m.def("select_strip", &select_strip, py::arg("ctx"), py::arg("concepts"),
          py::arg("min_support") = 3);
    m.def("classify_concept", &classify_concept, py::arg("ctx"), py::arg("concept"));
    m.def("mine", &mine, py::arg("ctx"), py::arg("options") = MiningOptions{},
          py::call_guard<py::gil_scoped_release>());

    py::class_<PlantedAssociation>(m, "PlantedAssociation")
        .def(py::init([](std::string drug, std::string event, std::uint64_t count) {
                 return PlantedAssociation{std::move(drug), std::move(event), count};
             }),
             py::arg("drug"), py::arg("event"), py::arg("count"))
        .def_readwrite("drug", &PlantedAssociation::drug)
        .def_readwrite("event", &PlantedAssociation::event)
        .def_readwrite("count", &PlantedAssociation::count);

    py::class_<GeneratorOptions>(m, "GeneratorOptions")
        .def(py::init([](std::uint64_t cases, std::uint64_t drugs, std::uint64_t events,
                         double density, std::vector<PlantedAssociation> planted,
                         std::uint64_t seed) {
                 return GeneratorOptions{cases,   drugs, events,
                                         density, std::move(planted), seed};
             }),
             py::arg("cases") = 1000, py::arg("drugs") = 50, py::arg("events") = 60,
             py::arg("density") = 0.01, py::arg("planted") = std::vector<PlantedAssociation>{},
             py::arg("seed") = 42)
        .def_readwrite("cases", &GeneratorOptions::cases)
        .def_readwrite("drugs", &GeneratorOptions::drugs)
        .def_readwrite("events", &GeneratorOptions::events)
        .def_readwrite("density", &GeneratorOptions::density)
        .def_readwrite("planted", &GeneratorOptions::planted)
        .def_readwrite("seed", &GeneratorOptions::seed);

    m.def("generate_cases", &generate_cases, py::arg("options"));
    m.def("generated_case_id", &generated_case_id, py::arg("index"), py::arg("total"));
    m.def("generated_drug_label", &generated_drug_label, py::arg("index"), py::arg("total"));
    m.def("generated_event_label", &generated_event_label, py::arg("index"), py::arg("total"));

    m.def("read_cases_csv",
          [](const std::string& path) { return read_cases_csv_file(path); }, py::arg("path"));
    m.def("read_cases_jsonl",
          [](const std::string& path) { return read_cases_jsonl_file(path); }, py::arg("path"));
    m.def("write_cases_csv",
          [](const std::string& path, const std::vector<CaseReport>& records) {
              std::ofstream out(path);
              if (!out) throw std::invalid_argument("cannot open output file " + path);
              write_cases_csv(out, records);
          },
          py::arg("path"), py::arg("records"));
    m.def("concepts_json",
          [](const FormalContext& ctx, const ConceptSet& cs) {
              return concepts_to_json(ctx, cs).dump(2);
          },
          py::arg("ctx"), py::arg("concepts"));
    m.def("relationships_csv",
          [](const MiningReport& report) {
              std::ostringstream out;
              write_relationships_csv(out, report);
              return out.str();
          },
          py::arg("report"));
    m.def("report_from_json",
          [](const std::string& text) { return report_from_json(ordered_json::parse(text)); },
          py::arg("text"));
    m.def("format_double", &format_double, py::arg("value"));
}

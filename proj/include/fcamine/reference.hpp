#pragma once

#include <array>
#include <cstdint>

// Headline figures reported for the original study, which ran on a
// confidential national pharmacovigilance extract. That data is not
// distributable, so these numbers cannot be recomputed here; they are kept as
// documentation constants only and are never asserted by the test suite.
namespace fcamine::reference {

inline constexpr std::uint64_t kStudyCases = 3249;
inline constexpr std::uint64_t kStudyDrugs = 527;
inline constexpr std::uint64_t kStudyAdverseEvents = 639;

inline constexpr std::uint64_t kStudyTotalConcepts = 13178;
inline constexpr std::uint64_t kStudyDrugEventConcepts = 842;
inline constexpr std::uint64_t kStudyFilteredConcepts = 593;

// Indexed by RelationshipKind: Signal, DrugInteraction, Syndrome,
// ComplexInteraction, ComplexSyndrome.
inline constexpr std::array<std::uint64_t, 5> kStudyPerKind = {360, 110, 56, 42, 25};

// Signals whose intent carries no demographic attribute.
inline constexpr std::uint64_t kStudyUnrestrictedSignals = 181;

}  // namespace fcamine::reference

#pragma once

// Aggregated reports behind the command-line tool. Every numeric field is
// serialized as a decimal string ("p" or "p/q"); JSON objects use sorted
// keys, so identical inputs give byte-identical output.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "seifert/family.hpp"
#include "seifert/gauge.hpp"
#include "seifert/homology.hpp"
#include "seifert/lattice.hpp"
#include "seifert/legendrian.hpp"

namespace seifert {

using Json = nlohmann::json;

/// Largest Lambda_q searched inside a structure report.
inline constexpr long kReportMaxLatticeQ = 4;

/// The stabilization choice realizing xi^{+-}_r on the family diagram:
/// for n = 2g the last knot carries (alpha+r)/2 positive stabilizations;
/// for n > 2g the first chain component is stabilized once with the sign,
/// and the last one carries the remaining alpha - 1.
StabilizationChoice family_choice(const PlusMinusDiagram& diagram, const FamilyParams& p);

struct StructureReport {
    FamilyParams params;
    Rational r1;
    PlusMinusDiagram diagram;
    StabilizationChoice choice;
    IntegralPresentation presentation;
    FirstHomology homology;
    Integer mu_order;
    SpinCClass offset;
    std::optional<SpinCClass> c1;  // only for n = 2g
    DedekindContext dedekind;
    Rational omega_long;
    Rational omega_closed;
    FillabilityReport fill;
    MoyVerdict moy;
    std::optional<long> d;
    std::optional<ObstructionReport> obstruction;
    std::map<std::string, bool> cross_checks;

    bool all_checks_pass() const;
};

/// Throws Error for inadmissible input.
StructureReport build_structure_report(const FamilyParams& p);

Json to_json(const Rational& r);
Json to_json(const Integer& v);
Json to_json(const PlusMinusDiagram& d);
Json to_json(const StabilizationChoice& c);
Json to_json(const StructureReport& r);
Json to_json(const ObstructionReport& r);
Json to_json(const DistinctWitness& w);

std::string render_text(const StructureReport& r);
std::string render_text(const PlusMinusDiagram& d, const Rational& r);
std::string render_text(const ObstructionReport& r);
std::string render_text(const DistinctWitness& w);

struct IntRange {
    long lo = 1;
    long hi = 0;
    bool empty() const { return lo > hi; }
};

/// "a..b" or a single integer. Throws Error(InvalidArgument).
IntRange parse_range(const std::string& text);

struct SweepOptions {
    IntRange g{1, 3};
    std::optional<IntRange> n;  // default: 2g..2g+4 for each g
    IntRange alpha{1, 15};
    bool mu_only = false;
};

struct CheckTally {
    long checked = 0;
    long failed = 0;
};

struct SweepSummary {
    std::map<std::string, CheckTally> checks;
    std::vector<std::string> failures;  // first few, human readable
    long total_checked() const;
    long total_failed() const;
};

SweepSummary run_sweep(const SweepOptions& options);

Json to_json(const SweepSummary& s);
std::string render_text(const SweepSummary& s);

}  // namespace seifert

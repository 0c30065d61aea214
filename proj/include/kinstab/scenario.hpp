#pragma once

#include "kinstab/betaflow.hpp"
#include "kinstab/lct.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kinstab {

enum class Mode { Beta, Alpha, Both };

std::string to_string(Mode m);
Mode mode_from_string(const std::string& s);

struct SingularityDecl {
    std::string label;
    long long order;
    std::array<long long, 2> raw_weights;
};

using GermDecl = std::vector<std::array<long long, 2>>;
using NamedGerms = std::vector<std::pair<std::string, GermDecl>>;

struct CurvesDecl {
    std::vector<std::string> names;
    std::vector<std::vector<Rational>> gram;
    std::vector<Rational> antican;
    std::vector<Rational> hdeg; // empty when not supplied
};

struct BlowupDecl {
    std::string point;
    std::array<long long, 2> weights;
    NamedGerms germs; // curve name -> germ monomials
};

struct LctComponentDecl {
    Rational mult;
    NamedGerms germs; // point label -> germ monomials
};

struct LctDecl {
    std::vector<LctComponentDecl> components;
    std::vector<std::string> points;
};

/// A complete problem statement: the surface, its curve configuration with
/// exact intersection numbers, the singular points, and either a blow-up to
/// drive the beta pipeline, a boundary divisor to drive the lct pipeline,
/// or both.
struct Scenario {
    SurfaceSpec surface{};
    std::optional<CurvesDecl> curves;
    std::vector<SingularityDecl> singularities;
    std::optional<BlowupDecl> blowup;
    std::optional<LctDecl> lct;
    Mode mode = Mode::Beta;
};

/// Parses the JSON scenario format. Parse failures and schema violations
/// raise ParseError with a line-anchored message.
Scenario parse_scenario(const std::string& json_text, const std::string& source_name = "scenario");

/// Canonical serialization; parse followed by serialize is the identity on
/// canonical files.
std::string scenario_to_json(const Scenario& s);

/// Shipped presets: s9, s27, s45, fam-6n9(n), fam-11nm(n,m), fam-3n4(n).
/// Families take parameters; fam-11nm requires n < m unless allow_boundary.
Scenario make_preset(const std::string& name, long long n = -1, long long m = -1,
                     bool allow_boundary = false);

const std::vector<std::string>& preset_names();

struct BetaOutcome {
    QuotientPoint point;
    std::array<long long, 2> raw_weights;
    BlowupResult blowup;
    std::vector<ConfigCheck> checks;
    Rational nef_threshold;
    BetaReport report;
};

struct AlphaOutcome {
    AlphaReport report;
};

struct Report {
    Scenario scenario;
    long long index = 0;
    Rational o1_square;
    Rational antican_sq;
    std::optional<BetaOutcome> beta;
    std::optional<AlphaOutcome> alpha;
    Verdict verdict = Verdict::Inconclusive;
};

/// The curve configuration described by a beta-mode scenario, with the
/// marked point normalized and germs resolved against curve names.
CurveSystem scenario_curve_system(const Scenario& s);

/// The boundary divisor of an alpha-mode scenario.
BoundaryDivisor scenario_boundary(const Scenario& s);

/// Declared singular points, normalized; the second form looks one up.
std::vector<QuotientPoint> scenario_points(const Scenario& s);
QuotientPoint scenario_point(const Scenario& s, const std::string& label);

/// Validates the scenario, runs the requested pipelines and assembles the
/// full report with every intermediate quantity.
Report run_scenario(const Scenario& s);

Report run_preset(const std::string& name, long long n = -1, long long m = -1,
                  bool allow_boundary = false);

std::string report_to_json(const Report& r);
std::string report_to_text(const Report& r);

struct SweepRow {
    std::vector<long long> params;
    Rational value;
    Verdict verdict;
};

struct SweepTable {
    std::string family;
    std::vector<std::string> param_names;
    std::string value_name; // "beta" or "lct_ub"
    std::vector<SweepRow> rows;
};

/// One pipeline run per parameter tuple, computed concurrently. Each row is
/// cross-checked against the family's closed form; a mismatch is an
/// internal error, not a report.
SweepTable sweep(const std::string& family, long long n_lo, long long n_hi, long long m_lo,
                 long long m_hi, bool allow_boundary = false);

std::string sweep_to_csv(const SweepTable& t);
std::string sweep_to_json(const SweepTable& t);

/// Closed forms used by sweep cross-checks.
Rational closed_form_value(const std::string& family, long long n, long long m);

} // namespace kinstab

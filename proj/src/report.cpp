#include "kinstab/errors.hpp"
#include "kinstab/scenario.hpp"

#include <json.hpp>

#include <sstream>

namespace kinstab {

using Json = nlohmann::ordered_json;

namespace {

Json rational_array(const std::vector<Rational>& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(x.str());
    return arr;
}

Json gram_json(const SymMatrix& g) {
    Json rows = Json::array();
    for (int i = 0; i < g.order(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < g.order(); ++j) row.push_back(g(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json witness_json(const LctWitness& w) {
    Json j;
    if (w.kind == LctWitness::Kind::PointValuation) {
        j["kind"] = "point_valuation";
        j["point"] = w.point;
        j["weights"] = {w.weights[0], w.weights[1]};
    } else {
        j["kind"] = "component_multiplicity";
        j["component"] = w.component;
    }
    return j;
}

std::string type_string(const QuotientPoint& p) {
    std::ostringstream os;
    os << "1/" << p.order << "(" << p.local_weights[0] << "," << p.local_weights[1] << ")";
    return os.str();
}

std::string quadratic_string(const std::array<Rational, 3>& c) {
    std::ostringstream os;
    os << c[0].str();
    if (!c[1].is_zero()) os << " + " << c[1].str() << " x";
    if (!c[2].is_zero()) os << " + " << c[2].str() << " x^2";
    return os.str();
}

} // namespace

std::string report_to_json(const Report& r) {
    Json j;
    j["scenario"] = Json::parse(scenario_to_json(r.scenario));
    j["surface"] = {{"weights", {r.scenario.surface.weights[0], r.scenario.surface.weights[1],
                                 r.scenario.surface.weights[2], r.scenario.surface.weights[3]}},
                    {"degree", r.scenario.surface.degree},
                    {"index", r.index},
                    {"o1_square", r.o1_square.str()},
                    {"antican_square", r.antican_sq.str()}};

    if (r.beta) {
        const BetaOutcome& b = *r.beta;
        Json jb;
        jb["point"] = {{"label", b.point.label},
                       {"type", type_string(b.point)},
                       {"raw_weights", {b.raw_weights[0], b.raw_weights[1]}}};
        jb["blowup_weights"] = {b.blowup.weights[0], b.blowup.weights[1]};
        jb["log_discrepancy"] = b.blowup.log_discrepancy.str();
        jb["k_coefficient"] = (b.blowup.log_discrepancy - Rational(1)).str();
        jb["e_square"] = b.blowup.e_square.str();
        Json ord = Json::object();
        for (size_t i = 0; i + 1 < b.blowup.curves.names.size(); ++i)
            ord[b.blowup.curves.names[i]] = b.blowup.pullback_coeffs[i].str();
        jb["ord_e"] = std::move(ord);
        jb["gram_after"] = gram_json(b.blowup.curves.gram);
        jb["pullback_anticanonical"] = rational_array(pullback_anticanonical(b.blowup));
        Json checks = Json::array();
        for (const auto& c : b.checks)
            checks.push_back({{"identity", c.identity}, {"lhs", c.lhs.str()}, {"rhs", c.rhs.str()},
                              {"ok", c.ok}});
        jb["config_checks"] = std::move(checks);
        jb["nef_threshold"] = b.nef_threshold.str();
        jb["tau"] = b.report.tau.str();
        Json bps = Json::array();
        for (const auto& x : b.report.curve.breakpoints()) bps.push_back(x.str());
        jb["breakpoints"] = std::move(bps);
        Json segs = Json::array();
        for (const auto& s : b.report.curve.segments()) {
            Json seg;
            seg["interval"] = {s.lo.str(), s.hi.str()};
            seg["coeffs"] = {s.coeffs[0].str(), s.coeffs[1].str(), s.coeffs[2].str()};
            Json names = Json::array();
            for (int idx : s.support) names.push_back(b.blowup.curves.names[idx]);
            seg["support"] = std::move(names);
            segs.push_back(std::move(seg));
        }
        jb["segments"] = std::move(segs);
        jb["a_times_antican_square"] = (b.report.log_discrepancy * b.report.antican_sq).str();
        jb["integral"] = b.report.integral.str();
        jb["beta"] = b.report.beta.str();
        jb["verdict"] = to_string(b.report.verdict);
        j["beta"] = std::move(jb);
    }

    if (r.alpha) {
        const AlphaReport& a = r.alpha->report;
        Json ja;
        ja["lct_ub"] = a.lct_bound.str();
        ja["witness"] = witness_json(a.witness);
        ja["alpha_ub"] = a.alpha_bound.str();
        ja["delta_ub"] = a.delta_bound.str();
        ja["verdict"] = to_string(a.verdict);
        j["alpha"] = std::move(ja);
    }

    j["verdict"] = to_string(r.verdict);
    return j.dump(2) + "\n";
}

std::string report_to_text(const Report& r) {
    std::ostringstream os;
    const auto& w = r.scenario.surface.weights;
    os << "surface: degree " << r.scenario.surface.degree << " in P(" << w[0] << "," << w[1] << ","
       << w[2] << "," << w[3] << ")  index " << r.index << "\n";
    os << "O(1)^2 = " << r.o1_square << "   (-K)^2 = " << r.antican_sq << "\n";

    if (r.beta) {
        const BetaOutcome& b = *r.beta;
        os << "\n-- beta pipeline --\n";
        os << "singular point " << b.point.label << ": type " << type_string(b.point) << " (raw ("
           << b.raw_weights[0] << "," << b.raw_weights[1] << "))\n";
        os << "weighted blow-up with weights (" << b.blowup.weights[0] << ","
           << b.blowup.weights[1] << "):\n";
        os << "  A(E) = " << b.blowup.log_discrepancy << "   K coefficient = "
           << (b.blowup.log_discrepancy - Rational(1)) << "   E^2 = " << b.blowup.e_square << "\n";
        const auto& names = b.blowup.curves.names;
        os << "  ord_E:";
        for (size_t i = 0; i + 1 < names.size(); ++i)
            os << " " << names[i] << " = " << b.blowup.pullback_coeffs[i];
        os << "\n  intersection table after blow-up (basis";
        for (const auto& name : names) os << " " << name;
        os << "):\n";
        const SymMatrix& g = b.blowup.curves.gram;
        for (int i = 0; i < g.order(); ++i) {
            os << "   ";
            for (int j = 0; j < g.order(); ++j) os << " " << g(i, j);
            os << "\n";
        }
        os << "pullback of -K: ";
        auto pb = pullback_anticanonical(b.blowup);
        for (size_t i = 0; i < names.size(); ++i)
            os << (i ? " + " : "") << pb[i] << " " << names[i];
        os << "\n";
        os << "nef threshold: " << b.nef_threshold << "\n";
        os << "volume of pi*(-K) - x E:\n";
        for (const auto& s : b.report.curve.segments()) {
            os << "  [" << s.lo << ", " << s.hi << "]  " << quadratic_string(s.coeffs)
               << "   support {";
            for (size_t k = 0; k < s.support.size(); ++k)
                os << (k ? "," : "") << names[s.support[k]];
            os << "}\n";
        }
        os << "tau = " << b.report.tau << "\n";
        os << "integral = " << b.report.integral << "\n";
        os << "A(E) (-K)^2 = " << (b.report.log_discrepancy * b.report.antican_sq) << "\n";
        os << "beta = " << b.report.beta << "\n";
    }

    if (r.alpha) {
        const AlphaReport& a = r.alpha->report;
        os << "\n-- lct/alpha pipeline --\n";
        os << "lct upper bound = " << a.lct_bound;
        if (a.witness.kind == LctWitness::Kind::PointValuation)
            os << "   witness: valuation at " << a.witness.point << " with weights ("
               << a.witness.weights[0] << "," << a.witness.weights[1] << ")";
        else
            os << "   witness: component " << a.witness.component << " multiplicity";
        os << "\n";
        os << "alpha upper bound = " << a.alpha_bound << "\n";
        os << "delta upper bound = " << a.delta_bound << "\n";
    }

    os << "\nVERDICT " << to_string(r.verdict) << "\n";
    return os.str();
}

} // namespace kinstab

#include "kinstab/scenario.hpp"

#include "kinstab/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <future>
#include <sstream>

namespace kinstab {

using Json = nlohmann::ordered_json;

std::string to_string(Mode m) {
    switch (m) {
        case Mode::Beta: return "beta";
        case Mode::Alpha: return "alpha";
        case Mode::Both: return "both";
    }
    throw Error("unreachable");
}

Mode mode_from_string(const std::string& s) {
    if (s == "beta") return Mode::Beta;
    if (s == "alpha") return Mode::Alpha;
    if (s == "both") return Mode::Both;
    throw ParseError("mode must be beta, alpha or both, got \"" + s + "\"");
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

Rational rational_from(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const ParseError& e) {
            fail(where, e.what());
        }
    }
    fail(where, "expected an integer or a \"p/q\" string");
}

long long integer_from(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    return j.get<long long>();
}

const Json& member(const Json& j, const std::string& key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) fail(where, "missing key \"" + key + "\"");
    return *it;
}

GermDecl germ_from(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) fail(where, "germ must be a nonempty array of [a, g] pairs");
    GermDecl g;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2) fail(where, "germ entries are [a, g] pairs");
        g.push_back({integer_from(pair[0], where), integer_from(pair[1], where)});
    }
    return g;
}

NamedGerms germs_from(const Json& j, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object of germs");
    NamedGerms out;
    for (const auto& [key, value] : j.items()) out.push_back({key, germ_from(value, where + "." + key)});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

Scenario scenario_from_json(const Json& j) {
    Scenario s;
    const Json& surf = member(j, "surface", "scenario");
    const Json& w = member(surf, "weights", "surface");
    if (!w.is_array() || w.size() != 4) fail("surface.weights", "expected 4 integers");
    for (int i = 0; i < 4; ++i) s.surface.weights[i] = integer_from(w[i], "surface.weights");
    s.surface.degree = integer_from(member(surf, "degree", "surface"), "surface.degree");

    if (j.contains("curves")) {
        const Json& c = j["curves"];
        CurvesDecl cd;
        for (const auto& name : member(c, "names", "curves")) {
            if (!name.is_string()) fail("curves.names", "expected strings");
            cd.names.push_back(name.get<std::string>());
        }
        const Json& gram = member(c, "gram", "curves");
        if (!gram.is_array() || gram.size() != cd.names.size())
            fail("curves.gram", "expected one row per curve");
        for (size_t i = 0; i < gram.size(); ++i) {
            if (!gram[i].is_array() || gram[i].size() != cd.names.size())
                fail("curves.gram", "row " + std::to_string(i) + " has the wrong length");
            std::vector<Rational> row;
            for (size_t k = 0; k < gram[i].size(); ++k)
                row.push_back(rational_from(gram[i][k], "curves.gram[" + std::to_string(i) + "][" +
                                                            std::to_string(k) + "]"));
            cd.gram.push_back(std::move(row));
        }
        const Json& anti = member(c, "antican", "curves");
        if (!anti.is_array() || anti.size() != cd.names.size())
            fail("curves.antican", "expected one coefficient per curve");
        for (size_t i = 0; i < anti.size(); ++i)
            cd.antican.push_back(rational_from(anti[i], "curves.antican[" + std::to_string(i) + "]"));
        if (c.contains("hdeg")) {
            const Json& hd = c["hdeg"];
            if (!hd.is_array() || hd.size() != cd.names.size())
                fail("curves.hdeg", "expected one degree per curve");
            for (size_t i = 0; i < hd.size(); ++i)
                cd.hdeg.push_back(rational_from(hd[i], "curves.hdeg[" + std::to_string(i) + "]"));
        }
        s.curves = std::move(cd);
    }

    if (j.contains("singularities")) {
        const Json& sing = j["singularities"];
        if (!sing.is_array()) fail("singularities", "expected an array");
        for (const auto& p : sing) {
            SingularityDecl d;
            d.label = member(p, "label", "singularities").get<std::string>();
            d.order = integer_from(member(p, "m", "singularities"), "singularities.m");
            const Json& raw = member(p, "raw_weights", "singularities");
            if (!raw.is_array() || raw.size() != 2) fail("singularities.raw_weights", "expected 2 integers");
            d.raw_weights = {integer_from(raw[0], "singularities.raw_weights"),
                             integer_from(raw[1], "singularities.raw_weights")};
            s.singularities.push_back(std::move(d));
        }
    }

    if (j.contains("blowup")) {
        const Json& b = j["blowup"];
        BlowupDecl bd;
        bd.point = member(b, "point", "blowup").get<std::string>();
        const Json& bw = member(b, "weights", "blowup");
        if (!bw.is_array() || bw.size() != 2) fail("blowup.weights", "expected 2 integers");
        bd.weights = {integer_from(bw[0], "blowup.weights"), integer_from(bw[1], "blowup.weights")};
        bd.germs = germs_from(member(b, "germs", "blowup"), "blowup.germs");
        s.blowup = std::move(bd);
    }

    if (j.contains("lct")) {
        const Json& l = j["lct"];
        LctDecl ld;
        for (const auto& comp : member(l, "components", "lct")) {
            LctComponentDecl cd;
            cd.mult = rational_from(member(comp, "mult", "lct.components"), "lct.components.mult");
            cd.germs = germs_from(member(comp, "germs", "lct.components"), "lct.components.germs");
            ld.components.push_back(std::move(cd));
        }
        for (const auto& p : member(l, "points", "lct")) ld.points.push_back(p.get<std::string>());
        s.lct = std::move(ld);
    }

    s.mode = mode_from_string(member(j, "mode", "scenario").get<std::string>());
    return s;
}

Json germs_to_json(NamedGerms germs) {
    // canonical form: keys sorted, matching what parsing produces
    std::sort(germs.begin(), germs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Json out = Json::object();
    for (const auto& [name, germ] : germs) {
        Json arr = Json::array();
        for (const auto& mo : germ) arr.push_back({mo[0], mo[1]});
        out[name] = std::move(arr);
    }
    return out;
}

Json scenario_to_json_object(const Scenario& s) {
    Json j;
    j["surface"] = {{"weights", {s.surface.weights[0], s.surface.weights[1], s.surface.weights[2],
                                 s.surface.weights[3]}},
                    {"degree", s.surface.degree}};
    if (s.curves) {
        Json c;
        c["names"] = s.curves->names;
        Json gram = Json::array();
        for (const auto& row : s.curves->gram) {
            Json r = Json::array();
            for (const auto& x : row) r.push_back(x.str());
            gram.push_back(std::move(r));
        }
        c["gram"] = std::move(gram);
        Json anti = Json::array();
        for (const auto& x : s.curves->antican) anti.push_back(x.str());
        c["antican"] = std::move(anti);
        if (!s.curves->hdeg.empty()) {
            Json hd = Json::array();
            for (const auto& x : s.curves->hdeg) hd.push_back(x.str());
            c["hdeg"] = std::move(hd);
        }
        j["curves"] = std::move(c);
    }
    if (!s.singularities.empty()) {
        Json arr = Json::array();
        for (const auto& d : s.singularities)
            arr.push_back({{"label", d.label},
                           {"m", d.order},
                           {"raw_weights", {d.raw_weights[0], d.raw_weights[1]}}});
        j["singularities"] = std::move(arr);
    }
    if (s.blowup) {
        Json b;
        b["point"] = s.blowup->point;
        b["weights"] = {s.blowup->weights[0], s.blowup->weights[1]};
        b["germs"] = germs_to_json(s.blowup->germs);
        j["blowup"] = std::move(b);
    }
    if (s.lct) {
        Json l;
        Json comps = Json::array();
        for (const auto& comp : s.lct->components)
            comps.push_back({{"mult", comp.mult.str()}, {"germs", germs_to_json(comp.germs)}});
        l["components"] = std::move(comps);
        l["points"] = s.lct->points;
        j["lct"] = std::move(l);
    }
    j["mode"] = to_string(s.mode);
    return j;
}

} // namespace

Scenario parse_scenario(const std::string& json_text, const std::string& source_name) {
    Json j;
    try {
        j = Json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        // anchor the byte offset to a line for the caller
        size_t line = 1;
        for (size_t i = 0; i < json_text.size() && i + 1 < size_t(e.byte); ++i)
            if (json_text[i] == '\n') ++line;
        throw ParseError(source_name + ":" + std::to_string(line) + ": " + e.what());
    }
    try {
        return scenario_from_json(j);
    } catch (const ParseError& e) {
        throw ParseError(source_name + ": " + e.what());
    }
}

std::string scenario_to_json(const Scenario& s) { return scenario_to_json_object(s).dump(2) + "\n"; }

namespace {

QuotientPoint resolve_point(const Scenario& s, const std::string& label) {
    for (const auto& d : s.singularities)
        if (d.label == label)
            return normalize_quotient(d.order, d.raw_weights, d.label, {"u", "v"});
    throw ParseError("point label \"" + label + "\" does not resolve to a declared singularity");
}

CurveSystem build_curve_system(const Scenario& s) {
    if (!s.curves) throw ParseError("beta mode needs a curves section");
    if (!s.blowup) throw ParseError("beta mode needs a blowup section");
    const CurvesDecl& cd = *s.curves;
    CurveSystem cs;
    cs.names = cd.names;
    cs.gram = SymMatrix::from_rows(cd.gram);
    cs.antican_coeffs = cd.antican;
    cs.marked_point = resolve_point(s, s.blowup->point);
    cs.germs.assign(cs.names.size(), std::nullopt);
    for (const auto& [name, germ] : s.blowup->germs) {
        int idx = cs.index_of(name);
        if (idx < 0) throw ParseError("blowup.germs references unknown curve \"" + name + "\"");
        cs.germs[idx] = MonomialGerm(germ);
    }
    if (!cd.hdeg.empty()) {
        cs.hyperplane_degrees.assign(cs.names.size(), std::nullopt);
        for (size_t i = 0; i < cd.hdeg.size(); ++i) cs.hyperplane_degrees[i] = cd.hdeg[i];
    }
    return cs;
}

BoundaryDivisor build_boundary(const Scenario& s) {
    if (!s.lct) throw ParseError("alpha mode needs an lct section");
    BoundaryDivisor divisor;
    for (const auto& comp : s.lct->components) {
        BoundaryComponent bc;
        bc.multiplicity = comp.mult;
        for (const auto& [label, germ] : comp.germs) bc.germs[label] = MonomialGerm(germ);
        divisor.components.push_back(std::move(bc));
    }
    return divisor;
}

} // namespace

CurveSystem scenario_curve_system(const Scenario& s) { return build_curve_system(s); }

BoundaryDivisor scenario_boundary(const Scenario& s) { return build_boundary(s); }

std::vector<QuotientPoint> scenario_points(const Scenario& s) {
    std::vector<QuotientPoint> points;
    for (const auto& d : s.singularities)
        points.push_back(normalize_quotient(d.order, d.raw_weights, d.label, {"u", "v"}));
    return points;
}

QuotientPoint scenario_point(const Scenario& s, const std::string& label) {
    return resolve_point(s, label);
}

Report run_scenario(const Scenario& s) {
    Report r;
    r.scenario = s;
    r.index = validate(s.surface);
    r.o1_square = hyperplane_square(s.surface);
    r.antican_sq = antican_square(s.surface);

    bool want_beta = s.mode == Mode::Beta || s.mode == Mode::Both;
    bool want_alpha = s.mode == Mode::Alpha || s.mode == Mode::Both;

    if (want_beta) {
        CurveSystem cs = build_curve_system(s);
        auto checks = validate_config(s.surface, cs);
        require_consistent(checks);
        QuotientPoint point = *cs.marked_point;
        std::array<long long, 2> raw{};
        for (const auto& d : s.singularities)
            if (d.label == point.label) raw = d.raw_weights;
        BlowupResult br = blow_up(s.surface, cs, point, s.blowup->weights);
        BetaReport rep = beta(s.surface, br);
        BetaOutcome out{point, raw, std::move(br), std::move(checks),
                        rep.curve.breakpoints()[1], std::move(rep)};
        r.beta = std::move(out);
    }
    if (want_alpha) {
        BoundaryDivisor divisor = build_boundary(s);
        std::vector<QuotientPoint> points;
        for (const auto& label : s.lct->points) points.push_back(resolve_point(s, label));
        r.alpha = AlphaOutcome{alpha_verdict(s.surface, divisor, points)};
    }

    bool unstable = (r.beta && r.beta->report.verdict == Verdict::NotKSemistable) ||
                    (r.alpha && r.alpha->report.verdict == Verdict::NotKSemistable);
    r.verdict = unstable ? Verdict::NotKSemistable : Verdict::Inconclusive;
    return r;
}

Report run_preset(const std::string& name, long long n, long long m, bool allow_boundary) {
    return run_scenario(make_preset(name, n, m, allow_boundary));
}

SweepTable sweep(const std::string& family, long long n_lo, long long n_hi, long long m_lo,
                 long long m_hi, bool allow_boundary) {
    if (n_lo > n_hi) throw BadParameters("empty n range");
    SweepTable table;
    table.family = family;

    std::vector<std::vector<long long>> tuples;
    if (family == "fam-11nm") {
        if (m_lo > m_hi) throw BadParameters("empty m range");
        table.param_names = {"n", "m"};
        table.value_name = "beta";
        for (long long n = n_lo; n <= n_hi; ++n)
            for (long long m = m_lo; m <= m_hi; ++m) {
                if (n > m || (n == m && !allow_boundary)) continue;
                tuples.push_back({n, m});
            }
    } else if (family == "fam-3n4") {
        table.param_names = {"n"};
        table.value_name = "beta";
        for (long long n = n_lo; n <= n_hi; ++n) tuples.push_back({n});
    } else if (family == "fam-6n9") {
        table.param_names = {"n"};
        table.value_name = "lct_ub";
        for (long long n = n_lo; n <= n_hi; ++n) tuples.push_back({n});
    } else {
        throw BadParameters("unknown sweep family: " + family);
    }

    auto row_for = [&](const std::vector<long long>& params) -> SweepRow {
        long long n = params[0];
        long long m = params.size() > 1 ? params[1] : -1;
        Report rep = run_preset(family, n, m, allow_boundary);
        Rational value;
        Verdict verdict = rep.verdict;
        if (table.value_name == "beta")
            value = rep.beta->report.beta;
        else
            value = rep.alpha->report.lct_bound;
        Rational expected = closed_form_value(family, n, m);
        if (value != expected)
            throw Error("sweep cross-check failed for " + family + ": computed " + value.str() +
                        ", closed form " + expected.str());
        return SweepRow{params, value, verdict};
    };

    std::vector<std::future<SweepRow>> futures;
    futures.reserve(tuples.size());
    for (const auto& params : tuples)
        futures.push_back(std::async(std::launch::async, row_for, params));
    for (auto& f : futures) table.rows.push_back(f.get());
    return table;
}

std::string sweep_to_csv(const SweepTable& t) {
    std::ostringstream os;
    os << "family";
    for (const auto& p : t.param_names) os << ',' << p;
    os << ',' << t.value_name << ",verdict\n";
    for (const auto& row : t.rows) {
        os << t.family;
        for (long long p : row.params) os << ',' << p;
        os << ',' << row.value.str() << ',' << to_string(row.verdict) << '\n';
    }
    return os.str();
}

std::string sweep_to_json(const SweepTable& t) {
    Json rows = Json::array();
    for (const auto& row : t.rows) {
        Json r;
        r["family"] = t.family;
        for (size_t i = 0; i < t.param_names.size(); ++i) r[t.param_names[i]] = row.params[i];
        r[t.value_name] = row.value.str();
        r["verdict"] = to_string(row.verdict);
        rows.push_back(std::move(r));
    }
    return rows.dump(2) + "\n";
}

} // namespace kinstab

#include "kinstab/errors.hpp"
#include "kinstab/scenario.hpp"

namespace kinstab {

namespace {

void require_param(bool ok, const std::string& msg) {
    if (!ok) throw BadParameters(msg);
}

// Degree 9 in P(1,3,3,4): t^2 x + y z (a y + b z) + x^3 f(x,y,z) = 0.
// H_x = L1 + L2 + L3 meeting at the 1/4(1,1) point p_t, where the local
// coordinates are (y, z).
Scenario preset_s9() {
    Scenario s;
    s.surface = {{1, 3, 3, 4}, 9};
    CurvesDecl c;
    c.names = {"L1", "L2", "L3"};
    Rational self(-5, 12), other(1, 4);
    c.gram = {{self, other, other}, {other, self, other}, {other, other, self}};
    c.antican = {2, 2, 2};
    c.hdeg = {Rational(1, 12), Rational(1, 12), Rational(1, 12)};
    s.curves = c;
    s.singularities = {{"p_t", 4, {3, 3}}};
    BlowupDecl b;
    b.point = "p_t";
    b.weights = {1, 1};
    b.germs = {{"L1", {{1, 0}}}, {"L2", {{0, 1}}}, {"L3", {{1, 0}, {0, 1}}}};
    s.blowup = b;
    s.mode = Mode::Beta;
    return s;
}

// Degree n+m+2 in P(1,1,n+1,m+1): t z + f(x,y) = 0 with f a product of
// n+m+2 distinct lines. H_z splits into those lines, all through the
// 1/(m+1)(1,1) point p_t with local coordinates (x, y).
Scenario preset_fam11nm(long long n, long long m, bool allow_boundary) {
    require_param(n >= 0 && m >= 0, "fam-11nm needs n, m >= 0");
    if (!allow_boundary) require_param(n < m, "fam-11nm needs n < m (pass --allow-boundary for n = m)");
    require_param(n <= m, "fam-11nm needs n <= m");
    Scenario s;
    s.surface = {{1, 1, n + 1, m + 1}, n + m + 2};
    long long count = n + m + 2;
    CurvesDecl c;
    Rational self = Rational(-1) + Rational(1, m + 1);
    Rational other(1, m + 1);
    for (long long i = 1; i <= count; ++i) c.names.push_back("L" + std::to_string(i));
    c.gram.assign(count, std::vector<Rational>(count, other));
    for (long long i = 0; i < count; ++i) c.gram[i][i] = self;
    c.antican.assign(count, Rational(2, n + 1));
    c.hdeg.assign(count, Rational(1, m + 1));
    s.curves = c;
    if (n >= 1) s.singularities.push_back({"p_z", n + 1, {1, 1}});
    s.singularities.push_back({"p_t", m + 1, {1, 1}});
    BlowupDecl b;
    b.point = "p_t";
    b.weights = {1, 1};
    for (const auto& name : c.names) b.germs.push_back({name, {{1, 0}, {0, 1}}});
    s.blowup = b;
    s.mode = Mode::Beta;
    return s;
}

// Degree 6n+11 in P(1,3,3n+4,3n+5): t^2 x + t y^{n+2} + z^2 y + x f = 0.
// H_x = L + R; at the 1/(3n+5) point p_t the local coordinates are (y, z)
// with ambient weights (3, 3n+4), and the blow-up weights are (2, n+1).
Scenario preset_fam3n4(long long n) {
    require_param(n >= 0, "fam-3n4 needs n >= 0");
    Scenario s;
    long long p = 3 * n + 4, q = 3 * n + 5;
    s.surface = {{1, 3, p, q}, 6 * n + 11};
    CurvesDecl c;
    c.names = {"L", "R"};
    Rational l2 = -Rational(6 * n + 7, p * q);
    Rational r2 = -Rational(4, 3 * q);
    Rational lr(2, q);
    c.gram = {{l2, lr}, {lr, r2}};
    c.antican = {2, 2};
    c.hdeg = {Rational(1, p * q), Rational(2, 3 * q)};
    s.curves = c;
    s.singularities = {{"p_t", q, {3, p}}};
    BlowupDecl b;
    b.point = "p_t";
    b.weights = {2, n + 1};
    b.germs = {{"L", {{1, 0}}}, {"R", {{n + 1, 0}, {0, 2}}}};
    s.blowup = b;
    s.mode = Mode::Beta;
    return s;
}

// Degree 27 in P(1,6,9,13): t^2 x + z^3 + ... = 0. H_x is cut out by
// z(z^2 + y^3) in P(6,9,13); both factors pass through the 1/13 point p_t
// with local coordinates (y, z) of ambient weights (6, 9).
Scenario preset_s27() {
    Scenario s;
    s.surface = {{1, 6, 9, 13}, 27};
    s.singularities = {{"p_t", 13, {6, 9}}};
    LctDecl l;
    l.components.push_back({Rational(1), {{"p_t", {{0, 1}}}}});
    l.components.push_back({Rational(1), {{"p_t", {{0, 2}, {3, 0}}}}});
    l.points = {"p_t"};
    s.lct = l;
    s.mode = Mode::Alpha;
    return s;
}

// Degree 45 in P(1,9,15,22): z^3 + y^5 + x f = 0. H_x is the irreducible
// curve z^3 + y^5 through the 1/22 point p_t, local weights (9, 15).
Scenario preset_s45() {
    Scenario s;
    s.surface = {{1, 9, 15, 22}, 45};
    s.singularities = {{"p_t", 22, {9, 15}}};
    LctDecl l;
    l.components.push_back({Rational(1), {{"p_t", {{0, 3}, {5, 0}}}}});
    l.points = {"p_t"};
    s.lct = l;
    s.mode = Mode::Alpha;
    return s;
}

// Degree 6n+9 in P(1,3,3n+3,3n+4): t^2 x + t x f + z^2 y + a z y^{n+2}
// + b y^{2n+3} + x g = 0. H_x is y (z^2 + a z y^{n+1} + b y^{2n+2}) in
// P(3,3n+3,3n+4); p_t has order 3n+4 with local weights (3, 3n+3).
Scenario preset_fam6n9(long long n) {
    require_param(n >= 0, "fam-6n9 needs n >= 0");
    Scenario s;
    s.surface = {{1, 3, 3 * n + 3, 3 * n + 4}, 6 * n + 9};
    s.singularities = {{"p_t", 3 * n + 4, {3, 3 * n + 3}}};
    LctDecl l;
    l.components.push_back({Rational(1), {{"p_t", {{1, 0}}}}});
    l.components.push_back({Rational(1), {{"p_t", {{0, 2}, {n + 1, 1}, {2 * n + 2, 0}}}}});
    l.points = {"p_t"};
    s.lct = l;
    s.mode = Mode::Alpha;
    return s;
}

} // namespace

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {"s9",       "s27",      "s45",
                                                   "fam-6n9",  "fam-11nm", "fam-3n4"};
    return names;
}

Scenario make_preset(const std::string& name, long long n, long long m, bool allow_boundary) {
    if (name == "s9") return preset_s9();
    if (name == "s27") return preset_s27();
    if (name == "s45") return preset_s45();
    if (name == "fam-6n9") {
        require_param(n >= 0, "fam-6n9 needs --n");
        return preset_fam6n9(n);
    }
    if (name == "fam-11nm") {
        require_param(n >= 0 && m >= 0, "fam-11nm needs --n and --m");
        return preset_fam11nm(n, m, allow_boundary);
    }
    if (name == "fam-3n4") {
        require_param(n >= 0, "fam-3n4 needs --n");
        return preset_fam3n4(n);
    }
    throw BadParameters("unknown preset: " + name);
}

Rational closed_form_value(const std::string& family, long long n, long long m) {
    if (family == "fam-11nm") {
        Rational a(8, 3 * (m + 1) * (m + 1));
        Rational b(8, 3 * (n + 1) * (n + 1));
        return a - b;
    }
    if (family == "fam-3n4") {
        // beta = A (-K)^2 - integral with
        //   A (-K)^2 = 4(n+3)(6n+11) / (3 (3n+4)(3n+5)^2),
        //   integral = (8/27)(108 n^3 + 594 n^2 + 1053 n + 601) / ((3n+4)^2 (3n+5)^2).
        Int nn = n;
        Int cubic = ((Int(54) * nn + 189) * nn + 171) * nn + 14;
        Int denom = Int(3 * n + 4) * (3 * n + 4) * (3 * n + 5) * (3 * n + 5);
        return -Rational(Int(4) * cubic, Int(27) * denom);
    }
    if (family == "fam-6n9") return Rational(n + 2, 2 * n + 3);
    throw BadParameters("no closed form for family " + family);
}

} // namespace kinstab

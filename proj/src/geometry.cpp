#include "kinstab/geometry.hpp"

#include "kinstab/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kinstab {

namespace {

long long mod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

MonomialGerm::MonomialGerm(std::vector<std::array<long long, 2>> monomials) {
    for (const auto& mo : monomials)
        if (mo[0] < 0 || mo[1] < 0) throw BadParameters("germ exponents must be nonnegative");
    std::sort(monomials.begin(), monomials.end());
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
    // keep only Newton-minimal exponents
    for (const auto& mo : monomials) {
        bool dominated = false;
        for (const auto& other : monomials_)
            if (other[0] <= mo[0] && other[1] <= mo[1]) {
                dominated = true;
                break;
            }
        if (!dominated) monomials_.push_back(mo);
    }
}

Int MonomialGerm::weighted_order(std::array<long long, 2> w) const {
    if (monomials_.empty()) throw MissingGerm("empty monomial germ");
    Int best;
    bool first = true;
    for (const auto& mo : monomials_) {
        Int v = Int(mo[0]) * w[0] + Int(mo[1]) * w[1];
        if (first || v < best) {
            best = v;
            first = false;
        }
    }
    return best;
}

int CurveSystem::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (names[i] == name) return i;
    return -1;
}

std::vector<ConfigCheck> validate_config(const SurfaceSpec& spec, const CurveSystem& cs) {
    long long index = validate(spec);
    int n = cs.size();
    if (cs.gram.order() != n || int(cs.antican_coeffs.size()) != n)
        throw BadParameters("curve system dimensions disagree");
    for (int i = 0; i < n; ++i)
        if (cs.antican_coeffs[i].sign() < 0)
            throw BadParameters("anticanonical coefficient of " + cs.names[i] + " is negative");

    std::vector<ConfigCheck> checks;

    Rational square;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            square += cs.antican_coeffs[i] * cs.antican_coeffs[j] * cs.gram(i, j);
    Rational expected = antican_square(spec);
    checks.push_back({"(sum c_i C_i)^2 == I^2 d/(a0 a1 a2 a3)", square, expected, square == expected});

    if (!cs.hyperplane_degrees.empty()) {
        if (int(cs.hyperplane_degrees.size()) != n)
            throw BadParameters("hyperplane degree list length disagrees with curves");
        Rational inv_index(1, index);
        for (int j = 0; j < n; ++j) {
            if (!cs.hyperplane_degrees[j]) continue;
            Rational row;
            for (int i = 0; i < n; ++i) row += cs.antican_coeffs[i] * inv_index * cs.gram(i, j);
            checks.push_back({"H . " + cs.names[j] + " == sum_i (c_i/I) C_i . " + cs.names[j],
                              *cs.hyperplane_degrees[j], row, *cs.hyperplane_degrees[j] == row});
        }
    }
    return checks;
}

void require_consistent(const std::vector<ConfigCheck>& checks) {
    for (const auto& c : checks)
        if (!c.ok)
            throw InconsistentGram("violated identity: " + c.identity + " (" + c.lhs.str() +
                                   " vs " + c.rhs.str() + ")");
}

namespace {

// (w1,w2) must be congruent to a multiple of (q1,q2) mod m, and (w1,w2)/m
// must be primitive in the lattice Z^2 + Z(q1,q2)/m. A non-primitive vector
// is j times a lattice vector for some divisor j >= 2 of gcd(w1,w2).
void check_admissible(const QuotientPoint& p, std::array<long long, 2> w) {
    if (w[0] <= 0 || w[1] <= 0) throw InadmissibleWeights("blow-up weights must be positive");
    long long m = p.order;
    long long q2 = p.local_weights[1]; // canonical form has q1 = 1
    if (m > 1 && mod(w[1] - w[0] * q2, m) != 0) {
        std::ostringstream msg;
        msg << "(" << w[0] << ", " << w[1] << ") is not a multiple of (1, " << q2 << ") mod " << m;
        throw InadmissibleWeights(msg.str());
    }
    long long g = std::gcd(w[0], w[1]);
    for (long long j = 2; j <= g; ++j) {
        if (g % j != 0) continue;
        long long c = mod(w[0] / j, m);
        if (mod(w[1] / j - c * q2, m) == 0) {
            std::ostringstream msg;
            msg << "(" << w[0] << ", " << w[1] << ")/" << m << " is " << j
                << " times a lattice vector";
            throw NonPrimitiveWeights(msg.str());
        }
    }
}

} // namespace

BlowupResult blow_up(const SurfaceSpec& spec, const CurveSystem& cs,
                     const QuotientPoint& point, std::array<long long, 2> weights) {
    validate(spec);
    if (cs.marked_point && cs.marked_point->label != point.label)
        throw BadParameters("blow-up point does not match the marked point of the configuration");
    if (int(cs.germs.size()) != cs.size())
        throw BadParameters("germ list length disagrees with curves");
    if (cs.index_of("E") >= 0) throw BadParameters("curve name E is reserved for the exceptional divisor");
    check_admissible(point, weights);

    long long m = point.order;
    Rational a_log(weights[0] + weights[1], m);
    Rational e_sq = -Rational(m, weights[0] * weights[1]);
    Rational neg_e_sq = -e_sq; // m/(w1 w2)

    int n = cs.size();
    std::vector<Rational> ord(n);
    for (int i = 0; i < n; ++i) {
        if (!cs.germs[i]) continue; // not through the point
        if (cs.germs[i]->empty())
            throw MissingGerm("curve " + cs.names[i] + " has an empty germ at " + point.label);
        ord[i] = Rational(cs.germs[i]->weighted_order(weights), Int(m));
    }

    BlowupResult br;
    br.order = m;
    br.weights = weights;
    br.log_discrepancy = a_log;
    br.e_square = e_sq;
    br.pullback_coeffs = ord;

    CurveSystem& ext = br.curves;
    ext.names = cs.names;
    ext.names.push_back("E");
    ext.gram = SymMatrix(n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j)
            ext.gram.set(i, j, cs.gram(i, j) - ord[i] * ord[j] * neg_e_sq);
        ext.gram.set(i, n, ord[i] * neg_e_sq);
    }
    ext.gram.set(n, n, e_sq);

    ext.antican_coeffs = cs.antican_coeffs;
    Rational e_coeff;
    for (int i = 0; i < n; ++i) e_coeff += cs.antican_coeffs[i] * ord[i];
    ext.antican_coeffs.push_back(e_coeff);
    ext.germs.assign(size_t(n) + 1, std::nullopt);

    // pullback invariance: (Cb + ord(C)E).(Db + ord(D)E) = C.D, and pi*C.E = 0
    for (int i = 0; i < n; ++i) {
        Rational pe = ext.gram(i, n) + ord[i] * e_sq;
        if (!pe.is_zero()) throw Error("pullback not orthogonal to E");
        for (int j = i; j < n; ++j) {
            Rational prod = ext.gram(i, j) + ord[i] * ext.gram(j, n) + ord[j] * ext.gram(i, n) +
                            ord[i] * ord[j] * e_sq;
            if (prod != cs.gram(i, j)) throw Error("pullback does not preserve products");
        }
    }
    return br;
}

std::vector<Rational> pullback_anticanonical(const BlowupResult& br) {
    return br.curves.antican_coeffs;
}

} // namespace kinstab

#pragma once

#include "kinstab/geometry.hpp"
#include "kinstab/linalg.hpp"
#include "kinstab/rational.hpp"
#include "kinstab/scenario.hpp"

#include <random>
#include <string_view>
#include <vector>

namespace kinstab::test {

inline Rational R(std::string_view s) { return Rational::parse(s); }

// independent determinant oracle (plain Gaussian elimination)
inline Rational determinant(std::vector<std::vector<Rational>> a) {
    int n = int(a.size());
    Rational det(1);
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (!a[i][k].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (int i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            Rational f = a[i][k] / a[k][k];
            for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

// leading principal minors alternate in sign starting negative
inline bool negdef_by_minors(const SymMatrix& m) {
    auto rows = m.rows();
    for (int k = 1; k <= m.order(); ++k) {
        std::vector<std::vector<Rational>> lead(k, std::vector<Rational>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) lead[i][j] = rows[i][j];
        Rational d = determinant(lead);
        if ((k % 2 == 1 && d.sign() >= 0) || (k % 2 == 0 && d.sign() <= 0)) return false;
    }
    return true;
}

inline Rational quadratic_form(const SymMatrix& m, const std::vector<Rational>& x) {
    Rational s;
    for (int i = 0; i < m.order(); ++i)
        for (int j = 0; j < m.order(); ++j) s += x[i] * m(i, j) * x[j];
    return s;
}

inline Rational random_rational(std::mt19937& rng, int num_bound = 4, int den_bound = 4) {
    std::uniform_int_distribution<int> num(-num_bound, num_bound);
    std::uniform_int_distribution<int> den(1, den_bound);
    return Rational(num(rng), den(rng));
}

// Random curve configuration shaped like a real one: a negative definite
// block with nonnegative off-diagonal entries (distinct curves never meet
// negatively; strict diagonal dominance gives definiteness) plus one curve
// of positive square meeting everything nonnegatively.
inline CurveSystem random_config(std::mt19937& rng, int max_negative = 5) {
    std::uniform_int_distribution<int> count(1, max_negative);
    std::uniform_int_distribution<int> meet(0, 2);
    std::uniform_int_distribution<int> extra(1, 3);

    int k = count(rng);
    CurveSystem cs;
    cs.gram = SymMatrix(k + 1);
    std::vector<long long> row_sum(k, 0);
    for (int i = 0; i < k; ++i) {
        cs.names.push_back("C" + std::to_string(i + 1));
        for (int j = i + 1; j < k; ++j) {
            long long e = meet(rng) == 2 ? 1 : 0;
            if (meet(rng) == 0) e = meet(rng); // occasional 2, mostly sparse
            cs.gram.set(i, j, Rational(e));
            row_sum[i] += e;
            row_sum[j] += e;
        }
    }
    for (int i = 0; i < k; ++i) cs.gram.set(i, i, Rational(-(row_sum[i] + extra(rng))));
    cs.names.push_back("A");
    for (int i = 0; i < k; ++i) cs.gram.set(i, k, Rational(meet(rng)));
    cs.gram.set(k, k, Rational(extra(rng)));
    cs.antican_coeffs.assign(k + 1, Rational(1));
    cs.germs.assign(k + 1, std::nullopt);
    return cs;
}

inline CurveSystem preset_system(const std::string& name, long long n = -1, long long m = -1) {
    return scenario_curve_system(make_preset(name, n, m, true));
}

inline BlowupResult preset_blowup(const std::string& name, long long n = -1, long long m = -1) {
    Scenario s = make_preset(name, n, m, true);
    CurveSystem cs = scenario_curve_system(s);
    return blow_up(s.surface, cs, *cs.marked_point, s.blowup->weights);
}

} // namespace kinstab::test

#include "kinstab/zariski.hpp"

#include "kinstab/errors.hpp"

#include <algorithm>

namespace kinstab {

Rational intersect(const SymMatrix& gram, const RDivisor& a, const RDivisor& b) {
    int n = gram.order();
    if (int(a.size()) != n || int(b.size()) != n) throw BadParameters("divisor dimension mismatch");
    Rational s;
    for (int i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        Rational row;
        for (int j = 0; j < n; ++j)
            if (!b[j].is_zero()) row += gram(i, j) * b[j];
        s += a[i] * row;
    }
    return s;
}

namespace {

Rational curve_product(const SymMatrix& gram, const RDivisor& d, int j) {
    Rational s;
    for (int i = 0; i < int(d.size()); ++i)
        if (!d[i].is_zero()) s += d[i] * gram(i, j);
    return s;
}

struct Candidate {
    RDivisor positive;
    std::vector<Rational> coeffs; // aligned with the subset passed in
};

// Solves for the negative part on a fixed support: coefficients a with
// Gram_S a = (D . C_j)_{j in S}, so that P = D - sum a_j C_j is orthogonal
// to the support.
Candidate solve_on_support(const CurveSystem& cs, const RDivisor& d,
                           const std::vector<int>& support) {
    Candidate c;
    c.positive = d;
    if (support.empty()) return c;
    SymMatrix sub = cs.gram.principal_submatrix(support);
    std::vector<Rational> rhs(support.size());
    for (size_t j = 0; j < support.size(); ++j) rhs[j] = curve_product(cs.gram, d, support[j]);
    c.coeffs = solve(sub, rhs);
    for (size_t j = 0; j < support.size(); ++j) c.positive[support[j]] -= c.coeffs[j];
    return c;
}

Decomposition finish(const CurveSystem& cs, std::vector<int> support, Candidate cand) {
    // drop zero coefficients; the positive part is unchanged
    Decomposition dec;
    dec.positive = std::move(cand.positive);
    for (size_t j = 0; j < support.size(); ++j) {
        if (cand.coeffs[j].is_zero()) continue;
        dec.support.push_back(support[j]);
        dec.coeffs.push_back(cand.coeffs[j]);
    }
    if (!dec.support.empty() && !is_negative_definite(cs.gram.principal_submatrix(dec.support)))
        throw NotPseudoeffective("support intersection form is not negative definite");
    for (const auto& a : dec.coeffs)
        if (a.sign() < 0) throw NotPseudoeffective("negative coefficient in the negative part");
    for (int j = 0; j < cs.size(); ++j)
        if (curve_product(cs.gram, dec.positive, j).sign() < 0)
            throw Error("positive part is not nef after convergence");
    return dec;
}

} // namespace

bool nef_check(const CurveSystem& cs, const RDivisor& d) {
    if (int(d.size()) != cs.size()) throw BadParameters("divisor dimension mismatch");
    for (int j = 0; j < cs.size(); ++j)
        if (curve_product(cs.gram, d, j).sign() < 0) return false;
    return true;
}

Decomposition decompose(const CurveSystem& cs, const RDivisor& d) {
    int n = cs.size();
    if (int(d.size()) != n) throw BadParameters("divisor dimension mismatch");

    std::vector<char> in_support(n, 0);
    std::vector<int> support;
    Candidate cand;
    cand.positive = d;

    for (;;) {
        bool grew = false;
        for (int j = 0; j < n; ++j) {
            if (in_support[j]) continue;
            if (curve_product(cs.gram, cand.positive, j).sign() < 0) {
                in_support[j] = 1;
                grew = true;
            }
        }
        if (!grew) break;
        support.clear();
        for (int j = 0; j < n; ++j)
            if (in_support[j]) support.push_back(j);
        try {
            cand = solve_on_support(cs, d, support);
        } catch (const SingularMatrix&) {
            throw NotPseudoeffective("support intersection form is singular");
        }
    }
    return finish(cs, support, std::move(cand));
}

Decomposition decompose_bruteforce(const CurveSystem& cs, const RDivisor& d) {
    int n = cs.size();
    if (n > 16) throw BadParameters("brute-force decomposition is capped at 16 curves");
    if (int(d.size()) != n) throw BadParameters("divisor dimension mismatch");

    std::vector<Decomposition> found;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> subset;
        for (int j = 0; j < n; ++j)
            if (mask & (1u << j)) subset.push_back(j);
        if (!subset.empty() && !is_negative_definite(cs.gram.principal_submatrix(subset)))
            continue;
        Candidate cand;
        try {
            cand = solve_on_support(cs, d, subset);
        } catch (const SingularMatrix&) {
            continue; // cannot happen for definite forms; guard anyway
        }
        bool ok = true;
        for (const auto& a : cand.coeffs)
            if (a.sign() < 0) { ok = false; break; }
        if (ok)
            for (int j = 0; j < n && ok; ++j)
                if (curve_product(cs.gram, cand.positive, j).sign() < 0) ok = false;
        if (!ok) continue;

        Decomposition dec;
        dec.positive = std::move(cand.positive);
        for (size_t j = 0; j < subset.size(); ++j) {
            if (cand.coeffs[j].is_zero()) continue;
            dec.support.push_back(subset[j]);
            dec.coeffs.push_back(cand.coeffs[j]);
        }
        found.push_back(std::move(dec));
    }
    if (found.empty()) throw NotPseudoeffective("no subset yields a valid decomposition");
    for (size_t i = 1; i < found.size(); ++i)
        if (!(found[i] == found[0]))
            throw Error("decomposition is not unique over qualifying subsets");
    return found[0];
}

Rational volume(const CurveSystem& cs, const RDivisor& d) {
    try {
        Decomposition dec = decompose(cs, d);
        return intersect(cs.gram, dec.positive, dec.positive);
    } catch (const NotPseudoeffective&) {
        return Rational(0);
    }
}

} // namespace kinstab

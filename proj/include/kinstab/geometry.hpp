#pragma once

#include "kinstab/linalg.hpp"
#include "kinstab/rational.hpp"
#include "kinstab/surface.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace kinstab {

/// Local behavior of a curve branch at a marked quotient point, as the set
/// of Newton-minimal exponent pairs of its local equation. Dominated
/// monomials are dropped on construction; they can never change a weighted
/// order.
class MonomialGerm {
public:
    MonomialGerm() = default;
    explicit MonomialGerm(std::vector<std::array<long long, 2>> monomials);

    bool empty() const { return monomials_.empty(); }
    const std::vector<std::array<long long, 2>>& monomials() const { return monomials_; }

    /// min over monomials of alpha*w1 + gamma*w2. Throws MissingGerm when empty.
    Int weighted_order(std::array<long long, 2> w) const;

    friend bool operator==(const MonomialGerm&, const MonomialGerm&) = default;

private:
    std::vector<std::array<long long, 2>> monomials_; // sorted, minimal
};

/// A finite configuration of curves with its exact intersection form, the
/// coefficients writing -K as a combination of them, and optional local
/// data at one marked quotient point.
struct CurveSystem {
    std::vector<std::string> names;
    SymMatrix gram;
    std::vector<Rational> antican_coeffs;
    std::optional<QuotientPoint> marked_point;
    std::vector<std::optional<MonomialGerm>> germs;      // aligned with names
    std::vector<std::optional<Rational>> hyperplane_degrees; // optional H . C_i

    int size() const { return int(names.size()); }
    int index_of(const std::string& name) const; // -1 when absent
};

struct ConfigCheck {
    std::string identity;
    Rational lhs, rhs;
    bool ok;
};

/// Verifies (sum c_i C_i)^2 = (-K)^2 and, when hyperplane degrees are
/// supplied, H . C_j = sum_i (c_i / I) C_i . C_j. Returns one entry per
/// identity checked.
std::vector<ConfigCheck> validate_config(const SurfaceSpec& spec, const CurveSystem& cs);

/// Throws InconsistentGram naming the first violated identity, if any.
void require_consistent(const std::vector<ConfigCheck>& checks);

/// Result of one weighted blow-up: the extended configuration (exceptional
/// curve appended last), the log discrepancy A = (w1+w2)/m, the orders
/// ord_E(C_i) of the original curves, and E^2 = -m/(w1 w2).
struct BlowupResult {
    CurveSystem curves;
    Rational log_discrepancy;
    std::vector<Rational> pullback_coeffs;
    Rational e_square;
    long long order = 1;
    std::array<long long, 2> weights{1, 1};

    int e_index() const { return curves.size() - 1; }
};

/// Weighted blow-up at a quotient point 1/m(q1,q2) with weight vector
/// (w1,w2). The weights must lie in the lattice Z^2 + Z(q1,q2)/m up to the
/// group action and (w1,w2)/m must be primitive there. New intersection
/// numbers follow from pullback invariance:
///   Cb.Db = C.D - ord(C) ord(D) m/(w1 w2),  Cb.E = ord(C) m/(w1 w2).
/// Curves without a germ do not pass through the point and are unchanged.
BlowupResult blow_up(const SurfaceSpec& spec, const CurveSystem& cs,
                     const QuotientPoint& point, std::array<long long, 2> weights);

/// Coefficients of pi*(-K) on the extended basis: the original antican
/// coefficients followed by sum_i c_i ord_E(C_i) on E.
std::vector<Rational> pullback_anticanonical(const BlowupResult& br);

} // namespace kinstab

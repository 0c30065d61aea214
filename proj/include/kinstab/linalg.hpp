#pragma once

#include "kinstab/rational.hpp"

#include <vector>

namespace kinstab {

/// Small dense symmetric matrix of exact rationals. Intersection forms of
/// curve configurations live here; orders stay in the dozens at most.
class SymMatrix {
public:
    SymMatrix() : n_(0) {}
    explicit SymMatrix(int order);
    /// Builds from full rows; throws Error unless the rows are square and symmetric.
    static SymMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    int order() const { return n_; }
    const Rational& operator()(int i, int j) const { return a_[size_t(i) * n_ + j]; }
    /// Sets entry (i,j) and its mirror (j,i).
    void set(int i, int j, const Rational& v);

    SymMatrix principal_submatrix(const std::vector<int>& indices) const;
    std::vector<std::vector<Rational>> rows() const;

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
    int n_;
    std::vector<Rational> a_;
};

/// Solves Mx = v exactly by Gaussian elimination with full pivoting.
/// Throws SingularMatrix when no nonzero pivot remains.
std::vector<Rational> solve(const SymMatrix& m, const std::vector<Rational>& v);

/// Exact LDL^T sign test: true iff every pivot is strictly negative,
/// equivalently the leading principal minors alternate in sign starting
/// negative. No rounding is involved.
bool is_negative_definite(const SymMatrix& m);

} // namespace kinstab

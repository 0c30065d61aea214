#include "kinstab/linalg.hpp"

#include "kinstab/errors.hpp"

#include <numeric>
#include <utility>

namespace kinstab {

SymMatrix::SymMatrix(int order) : n_(order), a_(size_t(order) * order) {
    if (order < 0) throw Error("negative matrix order");
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    int n = int(rows.size());
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (int(rows[i].size()) != n) throw Error("matrix rows are not square");
        for (int j = 0; j < n; ++j) m.a_[size_t(i) * n + j] = rows[i][j];
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m(i, j) != m(j, i)) throw Error("matrix is not symmetric");
    return m;
}

void SymMatrix::set(int i, int j, const Rational& v) {
    a_[size_t(i) * n_ + j] = v;
    a_[size_t(j) * n_ + i] = v;
}

SymMatrix SymMatrix::principal_submatrix(const std::vector<int>& indices) const {
    SymMatrix s(int(indices.size()));
    for (size_t i = 0; i < indices.size(); ++i)
        for (size_t j = 0; j < indices.size(); ++j)
            s.a_[i * indices.size() + j] = (*this)(indices[i], indices[j]);
    return s;
}

std::vector<std::vector<Rational>> SymMatrix::rows() const {
    std::vector<std::vector<Rational>> r(n_);
    for (int i = 0; i < n_; ++i) {
        r[i].resize(n_);
        for (int j = 0; j < n_; ++j) r[i][j] = (*this)(i, j);
    }
    return r;
}

std::vector<Rational> solve(const SymMatrix& m, const std::vector<Rational>& v) {
    int n = m.order();
    if (int(v.size()) != n) throw Error("solve: dimension mismatch");
    if (n == 0) return {};

    std::vector<std::vector<Rational>> a = m.rows();
    std::vector<Rational> b = v;
    std::vector<int> col(n);
    std::iota(col.begin(), col.end(), 0);

    for (int k = 0; k < n; ++k) {
        // full pivoting: scan the remaining block for any nonzero entry
        int pr = -1, pc = -1;
        for (int i = k; i < n && pr < 0; ++i)
            for (int j = k; j < n; ++j)
                if (!a[i][j].is_zero()) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) throw SingularMatrix("zero pivot after full pivoting");
        std::swap(a[k], a[pr]);
        std::swap(b[k], b[pr]);
        if (pc != k) {
            for (int i = 0; i < n; ++i) std::swap(a[i][k], a[i][pc]);
            std::swap(col[k], col[pc]);
        }
        for (int i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            Rational f = a[i][k] / a[k][k];
            for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }

    std::vector<Rational> y(n);
    for (int k = n - 1; k >= 0; --k) {
        Rational s = b[k];
        for (int j = k + 1; j < n; ++j) s -= a[k][j] * y[j];
        y[k] = s / a[k][k];
    }
    std::vector<Rational> x(n);
    for (int k = 0; k < n; ++k) x[col[k]] = y[k];
    return x;
}

bool is_negative_definite(const SymMatrix& m) {
    int n = m.order();
    if (n == 0) return true; // empty form, vacuously definite
    std::vector<std::vector<Rational>> a = m.rows();
    // Symmetric elimination without pivoting; a negative definite matrix has
    // every leading pivot nonzero, so any zero or nonnegative pivot refutes.
    for (int k = 0; k < n; ++k) {
        if (a[k][k].sign() >= 0) return false;
        for (int i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            Rational f = a[i][k] / a[k][k];
            for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return true;
}

} // namespace kinstab

#pragma once

#include "wallx/error.hpp"
#include "wallx/rational.hpp"

#include <vector>

namespace wallx {

// Dense matrix over Q. Row-major. Zero-row and zero-column shapes are legal
// everywhere; much of the complex bookkeeping relies on that.
struct QMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> a;

    QMatrix() = default;
    QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rational(0)) {
        if (r < 0 || c < 0) throw Error("negative matrix shape");
    }

    Rational& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Rational& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static QMatrix identity(int n);
    QMatrix operator*(const QMatrix& o) const;
    bool operator==(const QMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

int rank(QMatrix m); // exact Gaussian elimination

// One solution x of A x = b, or nothing if inconsistent.
std::vector<std::vector<Rational>> nullspace_basis(QMatrix m);
bool solve(const QMatrix& A, const std::vector<Rational>& b, std::vector<Rational>& x_out);

} // namespace wallx

#include "wallx/qlinalg.hpp"

namespace wallx {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols != o.rows) throw Error("matrix shape mismatch in product");
    QMatrix r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Rational& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols; ++j) {
                const Rational& w = o.at(k, j);
                if (w != 0) r.at(i, j) += v * w;
            }
        }
    return r;
}

namespace {

// Reduce in place; returns pivot columns.
std::vector<int> row_echelon(QMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int r = row; r < m.rows; ++r)
            if (m.at(r, col) != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
        Rational inv = Rational(1) / m.at(row, col);
        for (int j = col; j < m.cols; ++j) m.at(row, j) *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row) continue;
            Rational f = m.at(r, col);
            if (f == 0) continue;
            for (int j = col; j < m.cols; ++j) m.at(r, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

int rank(QMatrix m) {
    return static_cast<int>(row_echelon(m).size());
}

std::vector<std::vector<Rational>> nullspace_basis(QMatrix m) {
    std::vector<int> pivots = row_echelon(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols, Rational(0));
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool solve(const QMatrix& A, const std::vector<Rational>& b, std::vector<Rational>& x_out) {
    if (static_cast<int>(b.size()) != A.rows) throw Error("rhs length mismatch");
    QMatrix aug(A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols) = b[i];
    }
    std::vector<int> pivots = row_echelon(aug);
    for (int c : pivots)
        if (c == A.cols) return false; // pivot in the rhs column: inconsistent
    x_out.assign(A.cols, Rational(0));
    for (size_t r = 0; r < pivots.size(); ++r) x_out[pivots[r]] = aug.at(static_cast<int>(r), A.cols);
    return true;
}

} // namespace wallx

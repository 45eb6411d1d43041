#include "sltk/exact.hpp"

#include <cassert>
#include <utility>

namespace sltk::exact {

Matrix Matrix::from_columns(const std::vector<std::vector<Rational>>& columns) {
    if (columns.empty()) return {};
    Matrix m(columns.front().size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        assert(columns[c].size() == m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = columns[c][r];
    }
    return m;
}

std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
        Rational inv = 1 / m(row, col);
        for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0) continue;
            Rational f = m(r, col);
            for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::vector<Vector> nullspace(Matrix m) {
    auto pivots = rref(m);
    std::vector<bool> isPivot(m.cols(), false);
    for (auto p : pivots) isPivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (isPivot[free]) continue;
        Vector v(m.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Vector multiply(const Matrix& m, const Vector& x) {
    assert(x.size() == m.cols());
    Vector y(m.rows(), Rational(0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) y[r] += m(r, c) * x[c];
    return y;
}

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

bool in_span(const std::vector<Vector>& columns, const Vector& v) {
    auto with = columns;
    with.push_back(v);
    return rank(Matrix::from_columns(columns)) == rank(Matrix::from_columns(with));
}

}  // namespace sltk::exact

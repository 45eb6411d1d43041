#pragma once

#include "sltk/rational.hpp"

#include <cstddef>
#include <vector>

namespace sltk::exact {

/// Dense row-major matrix over Q. Meant for small systems such as 4x4.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    static Matrix from_columns(const std::vector<std::vector<Rational>>& columns);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

using Vector = std::vector<Rational>;

/// Reduced row echelon form in place; returns pivot column indices.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of {x : m x = 0}, one vector per free column, free entry 1.
std::vector<Vector> nullspace(Matrix m);

Vector multiply(const Matrix& m, const Vector& x);

bool is_zero(const Vector& v);

/// True iff v lies in the column span of `columns`.
bool in_span(const std::vector<Vector>& columns, const Vector& v);

}  // namespace sltk::exact

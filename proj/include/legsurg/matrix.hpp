#pragma once

#include "legsurg/rational.hpp"

#include <cstddef>
#include <vector>

namespace legsurg {

// Dense matrix over exact rationals. Small sizes only; everything is value
// semantics and exact.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static QMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rational& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const QMatrix& o) const = default;

    bool is_symmetric() const;
    bool is_integral() const;

    QMatrix scaled(const Rational& s) const;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

using QVector = std::vector<Rational>;

// Determinant by fraction-free (Bareiss) elimination. det of the empty
// matrix is 1.
Rational det(const QMatrix& m);

// Solves m * x = b exactly by Gauss-Jordan elimination.
// Throws std::domain_error when m is singular or not square.
QVector solve(const QMatrix& m, const QVector& b);

Rational dot(const QVector& a, const QVector& b);

}  // namespace legsurg

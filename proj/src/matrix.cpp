#include "legsurg/matrix.hpp"

#include <stdexcept>

namespace legsurg {

QMatrix QMatrix::identity(size_t n) {
    QMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool QMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool QMatrix::is_integral() const {
    for (const Rational& x : a_)
        if (!is_integer(x)) return false;
    return true;
}

QMatrix QMatrix::scaled(const Rational& s) const {
    QMatrix m = *this;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(i, j) *= s;
    return m;
}

Rational det(const QMatrix& m) {
    if (m.rows() != m.cols()) throw std::domain_error("det: matrix not square");
    size_t n = m.rows();
    if (n == 0) return 1;
    QMatrix w = m;
    Rational prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            size_t p = k + 1;
            while (p < n && w.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        // Bareiss step: divisions are exact.
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

QVector solve(const QMatrix& m, const QVector& b) {
    if (m.rows() != m.cols()) throw std::domain_error("solve: matrix not square");
    size_t n = m.rows();
    if (b.size() != n) throw std::domain_error("solve: size mismatch");
    QMatrix w = m;
    QVector x = b;
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && w.at(p, k) == 0) ++p;
        if (p == n) throw std::domain_error("solve: singular matrix");
        if (p != k) {
            for (size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            std::swap(x[k], x[p]);
        }
        Rational piv = w.at(k, k);
        for (size_t j = 0; j < n; ++j) w.at(k, j) /= piv;
        x[k] /= piv;
        for (size_t i = 0; i < n; ++i) {
            if (i == k || w.at(i, k) == 0) continue;
            Rational f = w.at(i, k);
            for (size_t j = 0; j < n; ++j) w.at(i, j) -= f * w.at(k, j);
            x[i] -= f * x[k];
        }
    }
    return x;
}

Rational dot(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw std::domain_error("dot: size mismatch");
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace legsurg

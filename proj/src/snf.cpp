#include "legsurg/snf.hpp"

#include <stdexcept>

namespace legsurg {

ZMatrix ZMatrix::identity(size_t n) {
    ZMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ZMatrix mul(const ZMatrix& a, const ZMatrix& b) {
    if (a.cols() != b.rows()) throw std::domain_error("mul: size mismatch");
    ZMatrix c(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (size_t j = 0; j < b.cols(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

Integer det(const ZMatrix& m) {
    if (m.rows() != m.cols()) throw std::domain_error("det: matrix not square");
    size_t n = m.rows();
    if (n == 0) return 1;
    ZMatrix w = m;
    Integer prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            size_t p = k + 1;
            while (p < n && w.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

namespace {

Integer int_abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Row/column operations mirrored on the transform matrices.
struct SnfWork {
    ZMatrix a, u, v;

    void swap_rows(size_t i, size_t j) {
        for (size_t c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
        for (size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void swap_cols(size_t i, size_t j) {
        for (size_t r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
        for (size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    void add_row(size_t dst, size_t src, const Integer& f) {
        for (size_t c = 0; c < a.cols(); ++c) a.at(dst, c) += f * a.at(src, c);
        for (size_t c = 0; c < u.cols(); ++c) u.at(dst, c) += f * u.at(src, c);
    }
    void add_col(size_t dst, size_t src, const Integer& f) {
        for (size_t r = 0; r < a.rows(); ++r) a.at(r, dst) += f * a.at(r, src);
        for (size_t r = 0; r < v.rows(); ++r) v.at(r, dst) += f * v.at(r, src);
    }
    void negate_row(size_t i) {
        for (size_t c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
        for (size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
    }
};

}  // namespace

SnfResult smith_normal_form(const ZMatrix& input) {
    SnfWork w{input, ZMatrix::identity(input.rows()), ZMatrix::identity(input.cols())};
    size_t n = input.rows(), m = input.cols();
    size_t t = std::min(n, m);

    for (size_t k = 0; k < t; ++k) {
        // Find a nonzero pivot with minimal absolute value in the remaining block.
        size_t pi = k, pj = k;
        bool found = false;
        for (size_t i = k; i < n; ++i)
            for (size_t j = k; j < m; ++j) {
                const Integer& x = w.a.at(i, j);
                if (x == 0) continue;
                if (!found || int_abs(x) < int_abs(w.a.at(pi, pj))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;  // remaining block is zero
        w.swap_rows(k, pi);
        w.swap_cols(k, pj);

        // Clear row and column k; restart when a remainder shrinks the pivot.
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (size_t i = k + 1; i < n; ++i) {
                if (w.a.at(i, k) == 0) continue;
                Integer q = w.a.at(i, k) / w.a.at(k, k);
                w.add_row(i, k, -q);
                if (w.a.at(i, k) != 0) {
                    w.swap_rows(k, i);  // smaller remainder becomes the pivot
                    dirty = true;
                }
            }
            for (size_t j = k + 1; j < m; ++j) {
                if (w.a.at(k, j) == 0) continue;
                Integer q = w.a.at(k, j) / w.a.at(k, k);
                w.add_col(j, k, -q);
                if (w.a.at(k, j) != 0) {
                    w.swap_cols(k, j);
                    dirty = true;
                }
            }
        }

        // Enforce the divisibility chain: fold any non-multiple into the pivot.
        bool chain_ok = false;
        while (!chain_ok) {
            chain_ok = true;
            for (size_t i = k + 1; i < n && chain_ok; ++i)
                for (size_t j = k + 1; j < m && chain_ok; ++j) {
                    if (w.a.at(i, j) % w.a.at(k, k) != 0) {
                        w.add_row(k, i, 1);
                        // Re-clear row k, which may change the pivot.
                        bool dirty2 = true;
                        while (dirty2) {
                            dirty2 = false;
                            for (size_t j2 = k + 1; j2 < m; ++j2) {
                                if (w.a.at(k, j2) == 0) continue;
                                Integer q = w.a.at(k, j2) / w.a.at(k, k);
                                w.add_col(j2, k, -q);
                                if (w.a.at(k, j2) != 0) {
                                    w.swap_cols(k, j2);
                                    dirty2 = true;
                                }
                            }
                            for (size_t i2 = k + 1; i2 < n; ++i2) {
                                if (w.a.at(i2, k) == 0) continue;
                                Integer q = w.a.at(i2, k) / w.a.at(k, k);
                                w.add_row(i2, k, -q);
                                if (w.a.at(i2, k) != 0) {
                                    w.swap_rows(k, i2);
                                    dirty2 = true;
                                }
                            }
                        }
                        chain_ok = false;
                    }
                }
        }

        if (w.a.at(k, k) < 0) w.negate_row(k);
    }

    SnfResult res;
    res.divisors.resize(t);
    for (size_t k = 0; k < t; ++k) res.divisors[k] = w.a.at(k, k);
    res.u = std::move(w.u);
    res.v = std::move(w.v);
    return res;
}

std::optional<Integer> order_in_cokernel(const ZMatrix& a, const std::vector<Integer>& v) {
    if (v.size() != a.rows()) throw std::domain_error("order_in_cokernel: size mismatch");
    SnfResult s = smith_normal_form(a);
    // w = u * v in the diagonalized basis.
    std::vector<Integer> w(a.rows());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.rows(); ++j) w[i] += s.u.at(i, j) * v[j];
    // k*v lies in the image iff d_i | k*w_i for every i (d_i = 0 rows of the
    // diagonal extend with zero divisors past min(rows, cols)).
    Integer order = 1;
    for (size_t i = 0; i < a.rows(); ++i) {
        Integer d = i < s.divisors.size() ? s.divisors[i] : Integer(0);
        if (d == 0) {
            if (w[i] != 0) return std::nullopt;
            continue;
        }
        Integer g = gcd(d, w[i]);
        Integer need = d / g;
        order = order / gcd(order, need) * need;  // lcm
    }
    return order;
}

}  // namespace legsurg

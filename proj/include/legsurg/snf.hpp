#pragma once

#include "legsurg/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace legsurg {

// Dense integer matrix, used for homology presentations.
class ZMatrix {
public:
    ZMatrix() = default;
    ZMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static ZMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Integer& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Integer& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const ZMatrix& o) const = default;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Integer> a_;
};

ZMatrix mul(const ZMatrix& a, const ZMatrix& b);
Integer det(const ZMatrix& m);

// Smith normal form: u * a * v = diag(divisors), with u, v unimodular and
// divisors[i] >= 0 forming a divisibility chain (zeros trail for rank
// deficiency). divisors has min(rows, cols) entries.
struct SnfResult {
    std::vector<Integer> divisors;
    ZMatrix u;  // rows x rows
    ZMatrix v;  // cols x cols
};

SnfResult smith_normal_form(const ZMatrix& a);

// Order of the class of v in coker(a) = Z^rows / (a * Z^cols).
// nullopt means infinite order.
std::optional<Integer> order_in_cokernel(const ZMatrix& a, const std::vector<Integer>& v);

}  // namespace legsurg

#pragma once

#include "legsurg/diagram.hpp"
#include "legsurg/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace legsurg {

// Classical invariants of a traced front, all exact. Per-component values
// are indexed 1-based in trace order; lk is symmetric.
struct ClassicalData {
    std::vector<std::string> names;
    std::vector<Rational> tb;
    std::vector<Rational> rot;
    std::map<std::pair<int, int>, Rational> lk;  // keys (a, b) with a < b

    int size() const { return static_cast<int>(tb.size()); }
    const Rational& linking(int a, int b) const;
};

int writhe(const Diagram& d, int component);
std::pair<int, int> cusp_counts(const Diagram& d, int component);  // (up, down)
Rational thurston_bennequin(const Diagram& d, int component);
Rational rotation(const Diagram& d, int component);
Rational linking_number(const Diagram& d, int a, int b);
ClassicalData classical_data(const Diagram& d);

}  // namespace legsurg

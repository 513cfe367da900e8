#include "legsurg/invariants.hpp"

#include <stdexcept>

namespace legsurg {

const Rational& ClassicalData::linking(int a, int b) const {
    if (a == b) throw std::domain_error("linking number needs two distinct components");
    if (a > b) std::swap(a, b);
    return lk.at({a, b});
}

int writhe(const Diagram& d, int component) {
    d.component(component);  // validates index
    int w = 0;
    for (const Crossing& x : d.crossings())
        if (x.comp_upper == component && x.comp_lower == component) w += x.sign;
    return w;
}

std::pair<int, int> cusp_counts(const Diagram& d, int component) {
    const Component& c = d.component(component);
    return {c.up_cusps, c.down_cusps};
}

Rational thurston_bennequin(const Diagram& d, int component) {
    auto [up, down] = cusp_counts(d, component);
    return Rational(writhe(d, component)) - make_rational(up + down, 2);
}

Rational rotation(const Diagram& d, int component) {
    auto [up, down] = cusp_counts(d, component);
    return make_rational(down - up, 2);
}

Rational linking_number(const Diagram& d, int a, int b) {
    if (a == b) throw std::domain_error("linking number needs two distinct components");
    d.component(a);
    d.component(b);
    int s = 0;
    for (const Crossing& x : d.crossings()) {
        bool ab = x.comp_upper == a && x.comp_lower == b;
        bool ba = x.comp_upper == b && x.comp_lower == a;
        if (ab || ba) s += x.sign;
    }
    return make_rational(s, 2);
}

ClassicalData classical_data(const Diagram& d) {
    ClassicalData data;
    int n = d.component_count();
    for (int c = 1; c <= n; ++c) {
        data.names.push_back(d.component(c).name);
        data.tb.push_back(thurston_bennequin(d, c));
        data.rot.push_back(rotation(d, c));
    }
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) data.lk[{a, b}] = linking_number(d, a, b);
    return data;
}

}  // namespace legsurg

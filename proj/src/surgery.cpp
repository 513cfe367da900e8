#include "legsurg/surgery.hpp"

namespace legsurg {

LinkingMatrices build_matrices(const SurgeryPresentation& p) {
    if (!p.distinguished) throw SurgeryError("no distinguished knot in presentation");
    int l0_comp = *p.distinguished;
    if (p.signs.count(l0_comp))
        throw SurgeryError("distinguished knot must not carry a surgery sign");

    LinkingMatrices m;
    for (int c = 1; c <= p.data.size(); ++c) {
        if (c == l0_comp) continue;
        auto it = p.signs.find(c);
        if (it == p.signs.end())
            throw SurgeryError("component " + std::to_string(c) + " has no surgery sign");
        if (it->second != 1 && it->second != -1)
            throw SurgeryError("surgery signs must be +1 or -1");
        m.surgered.push_back(c);
    }

    size_t n = m.surgered.size();
    m.m = QMatrix(n, n);
    m.m0 = QMatrix(n + 1, n + 1);
    m.l0.resize(n);
    m.rotv.resize(n);
    for (size_t i = 0; i < n; ++i) {
        int ci = m.surgered[i];
        Rational a_i = p.data.tb[ci - 1] + Rational(p.signs.at(ci));
        m.m.at(i, i) = a_i;
        m.m0.at(i + 1, i + 1) = a_i;
        m.l0[i] = p.data.linking(l0_comp, ci);
        m.rotv[i] = p.data.rot[ci - 1];
        m.m0.at(0, i + 1) = m.l0[i];
        m.m0.at(i + 1, 0) = m.l0[i];
        for (size_t j = i + 1; j < n; ++j) {
            Rational l_ij = p.data.linking(ci, m.surgered[j]);
            m.m.at(i, j) = l_ij;
            m.m.at(j, i) = l_ij;
            m.m0.at(i + 1, j + 1) = l_ij;
            m.m0.at(j + 1, i + 1) = l_ij;
        }
    }
    return m;
}

std::pair<Rational, Rational> surgery_transform(const LinkingMatrices& m, const Rational& tb0,
                                                const Rational& rot0) {
    Rational det_m = det(m.m);
    if (det_m == 0) throw NotQHS3Error();
    Rational tb_new = tb0 + det(m.m0) / det_m;
    Rational rot_new = rot0;
    if (!m.l0.empty()) rot_new -= dot(m.rotv, solve(m.m, m.l0));
    return {tb_new, rot_new};
}

HomologyData homology(const LinkingMatrices& m, const Integer& q_scale) {
    if (q_scale < 1) throw SurgeryError("q_scale must be a positive integer");
    HomologyData h;
    h.det_m = det(m.m);
    h.is_qhs3 = h.det_m != 0;

    QMatrix scaled = m.m.scaled(Rational(q_scale));
    if (!scaled.is_integral())
        throw SurgeryError("linking matrix not integral after clearing denominators");
    size_t n = scaled.rows();
    ZMatrix a(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a.at(i, j) = rat_num(scaled.at(i, j));
    h.torsion = smith_normal_form(a).divisors;

    std::vector<Integer> v(n);
    for (size_t i = 0; i < n; ++i) {
        Rational li = m.l0[i] * Rational(q_scale);
        if (!is_integer(li)) throw SurgeryError("linking vector not integral after clearing");
        v[i] = rat_num(li);
    }
    h.order_of_class = order_in_cokernel(a, v);
    return h;
}

std::pair<Rational, Rational> dual_invariants(const Rational& tb, const Rational& rot) {
    if (tb == -1)
        throw DegenerateSurgeryError("dual invariants undefined at tb = -1");
    return {tb / (tb + 1), rot / (tb + 1)};
}

Integer dual_order(const Integer& q, const Rational& tb) {
    if (q < 1) throw SurgeryError("q must be a positive integer");
    Rational o = Rational(q) * abs(tb + 1);
    if (o == 0) throw DegenerateSurgeryError("dual order undefined at tb = -1");
    if (!is_integer(o))
        throw SurgeryError("inconsistent (q, tb): q|tb+1| = " + rat_str(o) + " is not integral");
    return rat_num(o);
}

std::pair<Rational, Rational> stabilize(const Rational& tb, const Rational& rot, int sign, int k) {
    if (sign != 1 && sign != -1) throw SurgeryError("stabilization sign must be +1 or -1");
    if (k < 0) throw SurgeryError("stabilization count must be nonnegative");
    return {tb - k, rot + Rational(sign) * k};
}

std::pair<Rational, Rational> connected_sum(const Rational& tb1, const Rational& rot1,
                                            const Rational& tb2, const Rational& rot2) {
    return {tb1 + tb2 + 1, rot1 + rot2};
}

Rational tau_star_sum(const Rational& t1, const Rational& t2) { return t1 + t2; }

Rational rational_seifert_euler(int g1, int g2, const Rational& tb2) {
    if (g1 < 0 || g2 < 0) throw SurgeryError("genus must be nonnegative");
    if (tb2 == 1) throw SurgeryError("rational_seifert_euler undefined at tb2 = 1");
    return Rational(1) - 2 * Rational(g2) - 2 * Rational(g1) * abs(Rational(1) - tb2);
}

Main2Witness main2_witness(const Rational& tb1, const Rational& tb2, const Rational& l, int c1,
                           int c2) {
    Main2Witness w;
    w.tb_lprime = tb1 + tb2 + 2 * (l + 1);
    w.cusp_lprime = c1 + c2 - 2;

    // Cross-check through writhe/cusp arithmetic: w' = w1 + w2 + 2(l+1) - 1
    // with w_i = tb_i + c_i/2, and the surface framing equals tb(L') by the
    // same count. The gap is returned so callers record a checked witness.
    Rational w1 = tb1 + make_rational(c1, 2);
    Rational w2 = tb2 + make_rational(c2, 2);
    Rational w_prime = w1 + w2 + 2 * (l + 1) - 1;
    Rational tb_from_front = w_prime - make_rational(w.cusp_lprime, 2);
    Rational surface_framing = w.tb_lprime;
    w.framing_gap = surface_framing - tb_from_front;
    if (w.framing_gap != 0)
        throw SurgeryError("overtwisted-disk witness failed: framing gap " +
                           rat_str(w.framing_gap));
    return w;
}

}  // namespace legsurg

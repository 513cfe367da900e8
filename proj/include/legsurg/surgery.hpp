#pragma once

#include "legsurg/invariants.hpp"
#include "legsurg/matrix.hpp"
#include "legsurg/rational.hpp"
#include "legsurg/snf.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace legsurg {

struct SurgeryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Thrown when a transform needs det M != 0 but the presented manifold is
// not a rational homology sphere.
struct NotQHS3Error : SurgeryError {
    NotQHS3Error() : SurgeryError("det M = 0: surgered manifold is not a QHS3") {}
};
// Contact (+1)-surgery dual formulas degenerate at tb = -1.
struct DegenerateSurgeryError : SurgeryError {
    using SurgeryError::SurgeryError;
};

// Declared per-component data that cannot be computed from the front:
// concordance invariants, genus, Euler characteristics of rational Seifert
// surfaces, and class orders. Everything optional; fixtures declare what a
// rule needs.
struct DeclaredData {
    std::optional<std::string> knot;  // knot-table record name
    std::optional<Rational> tau;
    std::optional<Rational> tau_star;
    std::optional<int> genus;
    std::optional<bool> l_space_knot;
    std::optional<Integer> order_q;  // class order where the component is surgered
    std::optional<Rational> chi;
    std::optional<Rational> tb_q;   // claimed post-surgery value, checked
    std::optional<Rational> rot_q;  // claimed post-surgery value, checked
};

struct IsolatedSummand {
    int host;  // component carrying the summand
    Rational tb, rot, tau;
};

struct Annotations {
    std::optional<std::pair<int, int>> fig2_configuration;
    std::optional<std::pair<int, int>> fig3_configuration;
    std::optional<IsolatedSummand> isolated_summand;
};

struct SurgeryPresentation {
    ClassicalData data;
    std::vector<int> cusp_totals;  // per component, from the front (witness input)
    // Count of front crossings shared by each component pair (a < b). A pair
    // with no shared crossings is split in the front, which is what lets a
    // Seifert surface survive the other surgeries untouched.
    std::map<std::pair<int, int>, int> shared_crossings;
    std::map<int, int> signs;  // component -> +1 / -1
    std::optional<int> distinguished;
    std::map<int, DeclaredData> declared;
    Annotations annotations;
    Integer q_scale = 1;

    int shared(int a, int b) const {
        if (a > b) std::swap(a, b);
        auto it = shared_crossings.find({a, b});
        return it == shared_crossings.end() ? 0 : it->second;
    }

    const DeclaredData* declared_for(int component) const {
        auto it = declared.find(component);
        return it == declared.end() ? nullptr : &it->second;
    }
};

// Linking matrix M (diagonal a_i = tb_i +- 1) and the extended matrix M0
// bordered by the linking vector of the distinguished knot.
struct LinkingMatrices {
    QMatrix m;              // n x n
    QMatrix m0;             // (n+1) x (n+1)
    QVector l0;             // lk(L0, L_i)
    QVector rotv;           // rot(L_i)
    std::vector<int> surgered;  // component ids in row order
};

struct HomologyData {
    Rational det_m;
    bool is_qhs3 = false;
    std::vector<Integer> torsion;  // elementary divisors of the scaled matrix
    std::optional<Integer> order_of_class;  // nullopt = infinite
};

LinkingMatrices build_matrices(const SurgeryPresentation& p);

// Image invariants of the distinguished knot after surgery on the rest.
std::pair<Rational, Rational> surgery_transform(const LinkingMatrices& m, const Rational& tb0,
                                                const Rational& rot0);

HomologyData homology(const LinkingMatrices& m, const Integer& q_scale);

// Surgery-dual knot of a contact (+1)-surgery: (tb/(tb+1), rot/(tb+1)).
std::pair<Rational, Rational> dual_invariants(const Rational& tb, const Rational& rot);

// Order of the dual knot's class: q * |tb + 1|; must come out integral.
Integer dual_order(const Integer& q, const Rational& tb);

// k-fold stabilization: (tb - k, rot +- k).
std::pair<Rational, Rational> stabilize(const Rational& tb, const Rational& rot, int sign, int k);

std::pair<Rational, Rational> connected_sum(const Rational& tb1, const Rational& rot1,
                                            const Rational& tb2, const Rational& rot2);

Rational tau_star_sum(const Rational& t1, const Rational& t2);

// Euler characteristic of the rational Seifert surface built from a genus-g1
// knot through a (-1)-surgered genus-g2 companion: 1 - 2 g2 - 2 g1 |1 - tb2|.
Rational rational_seifert_euler(int g1, int g2, const Rational& tb2);

// Machine-checked overtwisted-disk witness data for the two-component
// (+1)-surgery criterion.
struct Main2Witness {
    Rational tb_lprime;
    int cusp_lprime;
    Rational framing_gap;  // always 0; asserted internally
};

Main2Witness main2_witness(const Rational& tb1, const Rational& tb2, const Rational& l, int c1,
                           int c2);

}  // namespace legsurg

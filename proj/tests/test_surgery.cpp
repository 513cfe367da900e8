#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "legsurg/surgery.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace legsurg;
using namespace legsurg::testsupport;

namespace {

// Synthetic presentation over n surgered components plus the distinguished
// knot as component 1.
SurgeryPresentation synthetic(const std::vector<Rational>& tb, const std::vector<Rational>& rot,
                              const std::vector<int>& signs,
                              const std::map<std::pair<int, int>, Rational>& lk) {
    SurgeryPresentation p;
    int n = static_cast<int>(tb.size());
    for (int c = 1; c <= n; ++c) p.data.names.push_back("L" + std::to_string(c));
    p.data.tb = tb;
    p.data.rot = rot;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            auto it = lk.find({a, b});
            p.data.lk[{a, b}] = it == lk.end() ? Rational(0) : it->second;
        }
    p.distinguished = 1;
    for (int c = 2; c <= n; ++c) p.signs[c] = signs[c - 2];
    return p;
}

}  // namespace

TEST_CASE("build_matrices on the push-off presentation") {
    // distinguished (0, -1), one (-1)-surgered component with tb 0, lk 0
    auto p = synthetic({0, 0}, {-1, -1}, {-1}, {});
    LinkingMatrices m = build_matrices(p);
    REQUIRE(m.m.rows() == 1);
    CHECK(m.m.at(0, 0) == -1);
    CHECK(m.m0.at(0, 0) == 0);
    CHECK(m.m0.at(0, 1) == 0);
    CHECK(m.m0.at(1, 0) == 0);
    CHECK(m.m0.at(1, 1) == -1);
    CHECK(m.l0 == QVector{0});
    CHECK(m.rotv == QVector{-1});
}

TEST_CASE("build_matrices for a (+1)-companion at tb = 2g-1") {
    int g = 3;
    Rational l = 5;
    auto p = synthetic({1, Rational(2 * g - 1)}, {0, 0}, {1}, {{{1, 2}, l}});
    LinkingMatrices m = build_matrices(p);
    CHECK(m.m.at(0, 0) == 2 * g);
    CHECK(m.m0.at(0, 1) == l);
    CHECK(m.m0.at(1, 0) == l);
    CHECK(m.m0.at(1, 1) == 2 * g);
    CHECK(m.m0.at(0, 0) == 0);
}

TEST_CASE("build_matrices with nothing surgered") {
    auto p = synthetic({Rational(-7, 2)}, {Rational(1, 2)}, {}, {});
    LinkingMatrices m = build_matrices(p);
    CHECK(m.m.rows() == 0);
    CHECK(m.m0.rows() == 1);
    CHECK(m.m0.at(0, 0) == 0);
    CHECK(det(m.m) == 1);
}

TEST_CASE("build_matrices errors") {
    auto p = synthetic({0, 0}, {0, 0}, {-1}, {});
    p.distinguished.reset();
    CHECK_THROWS_AS(build_matrices(p), SurgeryError);

    auto q = synthetic({0, 0, 0}, {0, 0, 0}, {-1, -1}, {});
    q.signs.erase(3);
    CHECK_THROWS_AS(build_matrices(q), SurgeryError);

    auto r = synthetic({0, 0}, {0, 0}, {-1}, {});
    r.signs[1] = 1;  // distinguished must not be surgered
    CHECK_THROWS_AS(build_matrices(r), SurgeryError);
}

TEST_CASE("surgery transform reproduces the push-off computation") {
    auto p = synthetic({0, 0}, {-1, -1}, {-1}, {});
    auto [tb, rot] = surgery_transform(build_matrices(p), 0, -1);
    CHECK(tb == 0);
    CHECK(rot == -1);
}

TEST_CASE("surgery transform on the two-trefoil link") {
    auto p = synthetic({1, 1}, {0, 0}, {1}, {{{1, 2}, Rational(4)}});
    auto [tb, rot] = surgery_transform(build_matrices(p), 1, 0);
    CHECK(tb == -7);
    CHECK(rot == 0);
}

TEST_CASE("degenerate surgeries are rejected") {
    auto p = synthetic({0, -1}, {0, 0}, {1}, {});  // a_2 = -1 + 1 = 0
    CHECK_THROWS_AS(surgery_transform(build_matrices(p), 0, 0), NotQHS3Error);
}

TEST_CASE("closed-form equivalence for (-1)-surgery with lk = 1") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
        Rational tb1 = random_rational(rng), rot1 = random_rational(rng);
        Rational tb2 = random_rational(rng), rot2 = random_rational(rng);
        if (tb2 == 1) continue;
        auto p = synthetic({tb1, tb2}, {rot1, rot2}, {-1}, {{{1, 2}, Rational(1)}});
        auto [tb, rot] = surgery_transform(build_matrices(p), tb1, rot1);
        CHECK(tb == tb1 + 1 / (1 - tb2));
        CHECK(rot == rot1 + rot2 / (1 - tb2));
    }
}

TEST_CASE("closed-form equivalence for (+1)-surgery on a tb = 2g-1 companion") {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 1000; ++trial) {
        Rational tb1 = random_rational(rng), rot1 = random_rational(rng);
        Rational rot2 = random_rational(rng);
        int g = std::uniform_int_distribution<int>(1, 6)(rng);
        Rational l = random_rational(rng);
        auto p = synthetic({tb1, Rational(2 * g - 1)}, {rot1, rot2}, {1}, {{{1, 2}, l}});
        auto [tb, rot] = surgery_transform(build_matrices(p), tb1, rot1);
        CHECK(tb == tb1 - l * l / (2 * g));
        CHECK(rot == rot1 - rot2 * l / (2 * g));
    }
}

TEST_CASE("unlinked surgery leaves the distinguished knot unchanged") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        int n = std::uniform_int_distribution<int>(0, 4)(rng);
        std::vector<Rational> tb{random_rational(rng)}, rot{random_rational(rng)};
        std::vector<int> signs;
        std::map<std::pair<int, int>, Rational> lk;
        for (int c = 2; c <= n + 1; ++c) {
            tb.push_back(random_rational(rng));
            rot.push_back(random_rational(rng));
            signs.push_back(std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1);
            for (int b = 2; b < c; ++b) lk[{b, c}] = random_rational(rng);
            lk[{1, c}] = 0;  // distinguished unlinked from everything
        }
        LinkingMatrices m = build_matrices(synthetic(tb, rot, signs, lk));
        if (det(m.m) == 0) continue;
        auto [tbq, rotq] = surgery_transform(m, tb[0], rot[0]);
        CHECK(tbq == tb[0]);
        CHECK(rotq == rot[0]);
    }
}

TEST_CASE("extended matrix determinant agrees with the cofactor oracle") {
    std::mt19937 rng(14);
    for (int trial = 0; trial < 200; ++trial) {
        int n = std::uniform_int_distribution<int>(0, 5)(rng);
        std::vector<Rational> tb{0}, rot{0};
        std::vector<int> signs;
        std::map<std::pair<int, int>, Rational> lk;
        for (int c = 2; c <= n + 1; ++c) {
            tb.push_back(random_rational(rng));
            rot.push_back(random_rational(rng));
            signs.push_back(1);
            for (int b = 1; b < c; ++b) lk[{b, c}] = random_rational(rng);
        }
        LinkingMatrices m = build_matrices(synthetic(tb, rot, signs, lk));
        CHECK(det(m.m0) == cofactor_det(m.m0));
        CHECK(det(m.m) == cofactor_det(m.m));
        CHECK(m.m.is_symmetric());
    }
}

TEST_CASE("homology of small presentations") {
    {
        auto p = synthetic({0, 1}, {0, 0}, {1}, {{{1, 2}, Rational(4)}});
        HomologyData h = homology(build_matrices(p), 1);
        CHECK(h.is_qhs3);
        CHECK(h.det_m == 2);
        Integer prod = 1;
        for (const Integer& d : h.torsion) prod *= d;
        CHECK(prod == 2);
        CHECK(h.order_of_class == Integer(1));  // 4 is even, so the class dies in Z/2
    }
    {
        auto p = synthetic({0}, {0}, {}, {});
        HomologyData h = homology(build_matrices(p), 1);
        CHECK(h.is_qhs3);
        CHECK(h.torsion.empty());
        CHECK(h.order_of_class == Integer(1));
    }
    {
        auto p = synthetic({0, -1}, {0, 0}, {1}, {});  // a = 0
        HomologyData h = homology(build_matrices(p), 1);
        CHECK_FALSE(h.is_qhs3);
    }
    {
        auto p = synthetic({0, -1}, {0, 0}, {-1}, {{{1, 2}, Rational(1)}});  // a = -2
        HomologyData h = homology(build_matrices(p), 1);
        CHECK(h.is_qhs3);
        CHECK(h.order_of_class == Integer(2));
    }
}

TEST_CASE("rational matrices clear denominators through q_scale") {
    // half-integer data, cleared by q_scale = 2
    auto p = synthetic({0, make_rational(-3, 2)}, {0, 0}, {-1},
                       {{{1, 2}, make_rational(1, 2)}});
    LinkingMatrices m = build_matrices(p);
    CHECK(m.m.at(0, 0) == make_rational(-5, 2));
    CHECK_THROWS_AS(homology(m, 1), SurgeryError);  // not integral as-is
    HomologyData h = homology(m, 2);
    CHECK(h.is_qhs3);
    CHECK(h.det_m == make_rational(-5, 2));
    CHECK(h.torsion == std::vector<Integer>{5});
    CHECK(h.order_of_class == Integer(5));  // class of 2*(1/2) = 1 in Z/5
    CHECK_THROWS_AS(homology(m, 0), SurgeryError);
}

TEST_CASE("dual invariants") {
    CHECK(dual_invariants(-6, 1) == std::pair{make_rational(6, 5), make_rational(-1, 5)});
    CHECK(dual_invariants(-2, 0) == std::pair{Rational(2), Rational(0)});
    CHECK(dual_invariants(0, -1) == std::pair{Rational(0), Rational(-1)});
    CHECK_THROWS_AS(dual_invariants(-1, 0), DegenerateSurgeryError);
}

TEST_CASE("dual invariants cross-validated against the general transform") {
    std::mt19937 rng(15);
    for (int trial = 0; trial < 500; ++trial) {
        Rational tb = random_rational(rng), rot = random_rational(rng);
        if (tb == -1) continue;
        // (+1)-surgery along the knot; its push-off is the distinguished one.
        auto p = synthetic({tb, tb}, {rot, rot}, {1}, {{{1, 2}, tb}});
        auto [t1, r1] = surgery_transform(build_matrices(p), tb, rot);
        CHECK(std::pair{t1, r1} == dual_invariants(tb, rot));
    }
}

TEST_CASE("dual order") {
    CHECK(dual_order(1, -6) == 5);
    CHECK(dual_order(1, -2) == 1);
    CHECK(dual_order(3, make_rational(-5, 3)) == 2);
    CHECK_THROWS_AS(dual_order(1, make_rational(1, 2)), SurgeryError);    // 3/2 not integral
    CHECK_THROWS_AS(dual_order(1, -1), DegenerateSurgeryError);
    CHECK_THROWS_AS(dual_order(0, -6), SurgeryError);
}

TEST_CASE("dual order matches the peripheral-curve witness arithmetic") {
    // For integral data (p, c, r, t) with t, r coprime, 0 <= r < t, q = c t,
    // the identity pq - cr = q(tb + 1) defines tb; the dual class order
    // q|tb + 1| must reproduce |pq - cr|.
    std::mt19937 rng(16);
    int checked = 0;
    while (checked < 300) {
        int t = std::uniform_int_distribution<int>(1, 9)(rng);
        int r = std::uniform_int_distribution<int>(0, t - 1)(rng);
        if (gcd(Integer(t), Integer(r)) != 1 && r != 0) continue;
        if (r == 0 && t != 1) continue;  // coprimality forces t = 1 when r = 0
        int c = std::uniform_int_distribution<int>(1, 6)(rng);
        int pp = std::uniform_int_distribution<int>(-9, 9)(rng);
        Integer q = Integer(c) * t;
        Rational tb = (Rational(pp) * Rational(q) - Rational(c) * r) / Rational(q) - 1;
        Integer expected = abs(Integer(pp) * q - Integer(c) * r);
        if (expected == 0) continue;
        CHECK(dual_order(q, tb) == expected);
        ++checked;
    }
}

TEST_CASE("stabilization") {
    CHECK(stabilize(make_rational(6, 5), make_rational(-1, 5), 1, 1) ==
          std::pair{make_rational(1, 5), make_rational(4, 5)});
    CHECK(stabilize(-1, 0, -1, 2) == std::pair{Rational(-3), Rational(-2)});
    std::mt19937 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        Rational tb = random_rational(rng), rot = random_rational(rng);
        int sign = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
        CHECK(stabilize(tb, rot, sign, 0) == std::pair{tb, rot});
        int k1 = std::uniform_int_distribution<int>(0, 5)(rng);
        int k2 = std::uniform_int_distribution<int>(0, 5)(rng);
        auto once = stabilize(tb, rot, sign, k1);
        auto twice = stabilize(once.first, once.second, sign, k2);
        CHECK(twice == stabilize(tb, rot, sign, k1 + k2));
    }
}

TEST_CASE("connected sums") {
    CHECK(connected_sum(-1, 0, -1, 0) == std::pair{Rational(-1), Rational(0)});
    CHECK(connected_sum(-3, 0, -1, 0) == std::pair{Rational(-3), Rational(0)});
    std::mt19937 rng(18);
    for (int trial = 0; trial < 200; ++trial) {
        Rational a = random_rational(rng), ra = random_rational(rng);
        Rational b = random_rational(rng), rb = random_rational(rng);
        Rational c = random_rational(rng), rc = random_rational(rng);
        // unit
        CHECK(connected_sum(a, ra, -1, 0) == std::pair{a, ra});
        // commutativity and associativity
        CHECK(connected_sum(a, ra, b, rb) == connected_sum(b, rb, a, ra));
        auto ab = connected_sum(a, ra, b, rb);
        auto bc = connected_sum(b, rb, c, rc);
        CHECK(connected_sum(ab.first, ab.second, c, rc) ==
              connected_sum(a, ra, bc.first, bc.second));
    }
}

TEST_CASE("summand inequalities add across a connected sum") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 200; ++trial) {
        // host satisfies the non-strict bound, summand the strict one
        Rational tau1 = random_rational(rng, 6, 3), tau3 = random_rational(rng, 6, 3);
        Rational rot1 = random_rational(rng, 6, 3), rot3 = random_rational(rng, 6, 3);
        Rational slack = abs(random_rational(rng, 4, 2));
        Rational tb1 = 2 * tau1 - 1 - abs(rot1) - slack;                  // <= bound
        Rational tb3 = 2 * tau3 - 1 - abs(rot3) - abs(random_rational(rng, 4, 2)) - 1;
        REQUIRE(tb1 + abs(rot1) <= 2 * tau1 - 1);
        REQUIRE(tb3 + abs(rot3) < 2 * tau3 - 1);
        auto [tb, rot] = connected_sum(tb1, rot1, tb3, rot3);
        Rational tau = tau_star_sum(tau1, tau3);
        CHECK(tb + abs(rot) < 2 * tau - 1);
    }
}

TEST_CASE("tau star sums") {
    CHECK(tau_star_sum(0, 0) == 0);
    CHECK(tau_star_sum(1, -2) == -1);
    // a summand with tau = 0 (the figure eight) leaves the total unchanged
    std::mt19937 rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        Rational t = random_rational(rng);
        CHECK(tau_star_sum(t, 0) == t);
    }
}

TEST_CASE("rational Seifert surface Euler characteristic") {
    CHECK(rational_seifert_euler(0, 0, -1) == 1);
    CHECK(rational_seifert_euler(1, 0, -1) == -3);
    CHECK(rational_seifert_euler(1, 1, -1) == -5);
    CHECK_THROWS_AS(rational_seifert_euler(1, 0, 1), SurgeryError);
    CHECK_THROWS_AS(rational_seifert_euler(-1, 0, 0), SurgeryError);
}

TEST_CASE("overtwisted-disk witness") {
    Main2Witness w = main2_witness(-1, -1, 0, 2, 2);
    CHECK(w.tb_lprime == 0);
    CHECK(w.cusp_lprime == 2);
    CHECK(w.framing_gap == 0);

    std::mt19937 rng(20);
    for (int trial = 0; trial < 100; ++trial) {
        Rational tb1 = random_rational(rng), tb2 = random_rational(rng);
        Rational l = random_rational(rng);
        int c1 = 2 * std::uniform_int_distribution<int>(1, 5)(rng);
        int c2 = 2 * std::uniform_int_distribution<int>(1, 5)(rng);
        Main2Witness r = main2_witness(tb1, tb2, l, c1, c2);
        CHECK(r.framing_gap == 0);
        CHECK(r.tb_lprime == tb1 + tb2 + 2 * (l + 1));
        CHECK(r.cusp_lprime == c1 + c2 - 2);
    }
}

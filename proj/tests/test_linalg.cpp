#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "legsurg/matrix.hpp"
#include "legsurg/snf.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace legsurg;
using namespace legsurg::testsupport;

TEST_CASE("determinant of small fixed matrices") {
    CHECK(det(QMatrix()) == 1);

    QMatrix one(1, 1);
    one.at(0, 0) = make_rational(-7, 3);
    CHECK(det(one) == make_rational(-7, 3));

    QMatrix m(2, 2);
    m.at(0, 0) = 0;
    m.at(0, 1) = 4;
    m.at(1, 0) = 4;
    m.at(1, 1) = 2;
    CHECK(det(m) == -16);
}

TEST_CASE("elimination determinant matches the cofactor oracle on random matrices") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 300; ++trial) {
        size_t n = std::uniform_int_distribution<size_t>(1, 6)(rng);
        QMatrix m(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) m.at(i, j) = random_rational(rng, 9, 4);
        CHECK(det(m) == cofactor_det(m));
    }
}

TEST_CASE("exact solve") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        size_t n = std::uniform_int_distribution<size_t>(1, 5)(rng);
        QMatrix m(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) m.at(i, j) = random_rational(rng, 9, 4);
        if (det(m) == 0) continue;
        QVector b(n);
        for (size_t i = 0; i < n; ++i) b[i] = random_rational(rng, 9, 4);
        QVector x = solve(m, b);
        for (size_t i = 0; i < n; ++i) {
            Rational acc = 0;
            for (size_t j = 0; j < n; ++j) acc += m.at(i, j) * x[j];
            CHECK(acc == b[i]);
        }
    }

    QMatrix sing(2, 2);
    sing.at(0, 0) = 1;
    sing.at(0, 1) = 2;
    sing.at(1, 0) = 2;
    sing.at(1, 1) = 4;
    CHECK_THROWS_AS(solve(sing, QVector{Rational(1), Rational(1)}), std::domain_error);
}

TEST_CASE("smith normal form of small fixed matrices") {
    ZMatrix m1(1, 1);
    m1.at(0, 0) = -2;
    CHECK(smith_normal_form(m1).divisors == std::vector<Integer>{2});

    ZMatrix m2(2, 2);
    m2.at(1, 1) = -1;  // [[0,0],[0,-1]]
    auto r = smith_normal_form(m2);
    CHECK(r.divisors == std::vector<Integer>{1, 0});
}

TEST_CASE("smith normal form properties on random integer matrices") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        ZMatrix a = random_zmatrix(rng, 5, 9);
        SnfResult r = smith_normal_form(a);

        // unimodular transforms
        CHECK(abs(det(r.u)) == 1);
        CHECK(abs(det(r.v)) == 1);

        // u * a * v is the diagonal of divisors, which form a chain
        ZMatrix d = mul(mul(r.u, a), r.v);
        for (size_t i = 0; i < d.rows(); ++i)
            for (size_t j = 0; j < d.cols(); ++j)
                CHECK(d.at(i, j) == (i == j ? r.divisors[i] : Integer(0)));
        for (size_t i = 0; i + 1 < r.divisors.size(); ++i) {
            if (r.divisors[i] == 0) CHECK(r.divisors[i + 1] == 0);
            if (r.divisors[i] != 0 && r.divisors[i + 1] != 0)
                CHECK(r.divisors[i + 1] % r.divisors[i] == 0);
        }

        // product of divisors = |det| (cofactor oracle)
        Integer prod = 1;
        for (const Integer& x : r.divisors) prod *= x;
        CHECK(prod == abs(cofactor_det(a)));
    }
}

TEST_CASE("order of a class in the cokernel") {
    // coker((2)) = Z/2: the generator has order 2, twice it has order 1.
    ZMatrix two(1, 1);
    two.at(0, 0) = 2;
    CHECK(order_in_cokernel(two, {Integer(1)}) == Integer(2));
    CHECK(order_in_cokernel(two, {Integer(4)}) == Integer(1));

    // coker((0)) = Z: nonzero classes have infinite order.
    ZMatrix zero(1, 1);
    CHECK(order_in_cokernel(zero, {Integer(3)}) == std::nullopt);
    CHECK(order_in_cokernel(zero, {Integer(0)}) == Integer(1));

    // random sanity: order k really is minimal
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        ZMatrix a = random_zmatrix(rng, 3, 4);
        std::vector<Integer> v(a.rows());
        for (auto& x : v) x = std::uniform_int_distribution<int>(-4, 4)(rng);
        auto ord = order_in_cokernel(a, v);
        if (!ord) continue;
        // k*v must be in the image exactly when order | k (check 1..order)
        for (Integer k = 1; k <= *ord; ++k) {
            std::vector<Integer> kv(v.size());
            for (size_t i = 0; i < v.size(); ++i) kv[i] = k * v[i];
            bool in_image = order_in_cokernel(a, kv) == Integer(1);
            CHECK(in_image == (k == *ord));
        }
    }
}

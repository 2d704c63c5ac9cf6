#include "oracles.hpp"

#include "padelab/errors.hpp"
#include "padelab/pade.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace padelab;
using oracle::G;
using oracle::P;
using oracle::S;

namespace {

PowerSeries geometric(std::size_t len) { return PowerSeries(std::vector<GaussianRational>(len, 1)); }

PowerSeries exp_series(std::size_t len) {
    std::vector<GaussianRational> c;
    Rational f = 1;
    for (std::size_t k = 0; k < len; ++k) {
        if (k) f /= static_cast<long>(k);
        c.push_back(f);
    }
    return PowerSeries(c);
}

}  // namespace

TEST(Hankel, GeometricColumnOne) {
    for (std::size_t m = 0; m < 6; ++m) EXPECT_EQ(hankel_det(geometric(10), m, 1), GaussianRational(1));
}

TEST(Hankel, ExpOneOne) { EXPECT_EQ(hankel_det(exp_series(4), 1, 1), GaussianRational(1)); }

TEST(Hankel, ExpTwoByTwo) {
    // rows (a_0, a_1), (a_1, a_2): a_0 a_2 - a_1^2
    EXPECT_EQ(hankel_det(exp_series(5), 1, 2), G("-1/2"));
}

TEST(Hankel, MatchesCofactorExpansion) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 60; ++t) {
        PowerSeries s = oracle::random_series(rng, 10);
        std::size_t m = t % 5, n = t % 4;
        EXPECT_EQ(hankel_det(s, m, n), oracle::hankel(s, m, n));
    }
}

TEST(Hankel, NeedsEnoughTerms) { EXPECT_THROW(hankel_det(geometric(3), 2, 2), TruncationError); }

TEST(Pade, GeometricTwoOne) {
    PadeResult r = pade_via_system(geometric(6), 2, 1);
    EXPECT_EQ(r.status, PadeStatus::Normal);
    EXPECT_EQ(r.numerator, Polynomial::constant(1));
    EXPECT_EQ(r.denominator, P({"1", "-1"}));
    EXPECT_EQ(pade_via_jacobi(geometric(6), 2, 1), r);
}

TEST(Pade, ExpOneOne) {
    PadeResult r = pade_via_system(exp_series(6), 1, 1);
    EXPECT_EQ(r.status, PadeStatus::Normal);
    EXPECT_EQ(r.numerator, P({"1", "1/2"}));
    EXPECT_EQ(r.denominator, P({"1", "-1/2"}));
}

TEST(Pade, DegenerateOneOne) {
    // 1 + z^2: C_{1,1} = a_1 = 0; the approximant reduces to 1 but fails the order condition.
    PowerSeries s = S({"1", "0", "1", "0", "0"});
    PadeResult r = pade_via_system(s, 1, 1);
    EXPECT_TRUE(r.hankel_mn.is_zero());
    EXPECT_EQ(r.status, PadeStatus::NotExists);
    EXPECT_EQ(pade_via_jacobi(s, 1, 1).status, PadeStatus::NotExists);
}

TEST(Pade, DegenerateButExists) {
    // 1 + z^3: C_{1,1} = 0, yet [f; 1/1] = 1 matches through z^2.
    PowerSeries s = S({"1", "0", "0", "1", "0"});
    for (auto r : {pade_via_system(s, 1, 1), pade_via_jacobi(s, 1, 1)}) {
        EXPECT_EQ(r.status, PadeStatus::DegenerateExists);
        EXPECT_EQ(r.numerator, Polynomial::constant(1));
        EXPECT_EQ(r.denominator, Polynomial::constant(1));
        EXPECT_TRUE(satisfies_order_condition(s, r));
    }
    // T carries the common factor of the Jacobi pair.
    JacobiPair jp = jacobi_pair(s, 1, 1);
    PadeResult r = pade_via_jacobi(s, 1, 1);
    EXPECT_EQ(jp.numerator, r.degenerate_factor * r.numerator);
    EXPECT_EQ(jp.denominator, r.degenerate_factor * r.denominator);
}

TEST(Pade, ExistsNonNormal) {
    // Geometric series at (0, 2): C_{0,2} = -1 != 0 but C_{1,2} = 0.
    PadeResult r = pade_via_system(geometric(6), 0, 2);
    EXPECT_FALSE(r.hankel_mn.is_zero());
    EXPECT_TRUE(r.hankel_m1n.is_zero());
    EXPECT_EQ(r.status, PadeStatus::ExistsNonNormal);
    EXPECT_EQ(r.denominator, P({"1", "-1"}));
}

TEST(Pade, JacobiPairMatchesCofactorExpansion) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        PowerSeries s = oracle::random_series(rng, 10);
        std::size_t m = t % 4, n = 1 + t % 3;
        JacobiPair jp = jacobi_pair(s, m, n);
        oracle::Fraction f = oracle::jacobi(s, m, n);
        EXPECT_EQ(jp.numerator, f.num);
        EXPECT_EQ(jp.denominator, f.den);
    }
}

TEST(Pade, RandomAgainstBruteForce) {
    std::mt19937_64 rng(3);
    int checked = 0;
    for (int t = 0; t < 200; ++t) {
        PowerSeries s = oracle::random_series(rng, 10);
        std::size_t m = t % 5, n = (t / 5) % 4;
        auto brute = oracle::brute_pade(s, m, n);
        PadeResult r = pade_via_system(s, m, n);
        if (!brute) continue;
        ++checked;
        ASSERT_TRUE(r.exists());
        EXPECT_TRUE(oracle::same_function(r.numerator, r.denominator, brute->num, brute->den));
        EXPECT_EQ(r.denominator.coeff(0), GaussianRational(1));
        EXPECT_EQ(gcd(r.numerator.is_zero() ? r.denominator : r.numerator, r.denominator), Polynomial::constant(1));
        EXPECT_TRUE(oracle::order_ok(s, r.numerator, r.denominator, m + n));
        EXPECT_EQ(pade_via_jacobi(s, m, n), r);
    }
    EXPECT_GT(checked, 100);
}

TEST(Pade, ExistenceAgreesBetweenRoutes) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 200; ++t) {
        // Sparse draws hit C_{m,n} = 0 often.
        std::vector<GaussianRational> c;
        std::uniform_int_distribution<int> pick(0, 2);
        for (int k = 0; k < 10; ++k) c.push_back(pick(rng) == 0 ? GaussianRational(1) : GaussianRational());
        PowerSeries s(c);
        std::size_t m = t % 4, n = 1 + (t / 4) % 3;
        PadeResult a = pade_via_system(s, m, n);
        PadeResult b = pade_via_jacobi(s, m, n);
        EXPECT_EQ(a.status, b.status);
        if (a.exists()) {
            EXPECT_EQ(a.numerator, b.numerator);
            EXPECT_EQ(a.denominator, b.denominator);
            EXPECT_TRUE(satisfies_order_condition(s, a));
        }
    }
}

TEST(Duality, Examples) {
    EXPECT_TRUE(reciprocal_duality_check(geometric(6), 0, 1));
    EXPECT_TRUE(reciprocal_duality_check(exp_series(6), 1, 1));
    PowerSeries rec = series_reciprocal(exp_series(6));
    PadeResult r = pade_via_system(rec, 1, 1);
    EXPECT_EQ(r.numerator, P({"1", "-1/2"}));
    EXPECT_EQ(r.denominator, P({"1", "1/2"}));
}

TEST(Duality, NeedsNonzeroConstant) { EXPECT_THROW(reciprocal_duality_check(S({"0", "1", "1", "1"}), 1, 1), PreconditionError); }

TEST(Pade, StatusNames) {
    EXPECT_EQ(to_string(PadeStatus::Normal), "Normal");
    EXPECT_EQ(to_string(PadeStatus::NotExists), "NotExists");
}

#include "asph/error.hpp"
#include "asph/meyer.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace asph;
using namespace asph::meyer;
using sl2z::MatrixZ;

namespace {

const MatrixZ& B() { return sl2z::dehn_twist(); }

Rational q(long p, long d) {
    Rational r(p, d);
    r.canonicalize();
    return r;
}

}  // namespace

TEST(Dedekind, Examples) {
    EXPECT_EQ(dedekind_sum(1, 1), 0);
    EXPECT_EQ(dedekind_sum(1, 3), q(1, 18));
    EXPECT_EQ(dedekind_sum(2, 5), 0);
    EXPECT_EQ(oracle::dedekind_direct(1, 3), q(1, 18));
    EXPECT_EQ(oracle::dedekind_direct(2, 5), 0);
    EXPECT_THROW(dedekind_sum(1, 0), InvalidInput);
    EXPECT_THROW(dedekind_sum(1, -4), InvalidInput);
}

TEST(Dedekind, MatchesDirectSummation) {
    for (long k = 1; k <= 30; ++k) {
        for (long h = -60; h <= 60; ++h) {
            ASSERT_EQ(dedekind_sum(h, k), oracle::dedekind_direct(h, k)) << h << "/" << k;
            ASSERT_EQ(dedekind_sum(h + k, k), dedekind_sum(h, k));
            ASSERT_EQ(dedekind_sum(-h, k), -dedekind_sum(h, k));
        }
    }
}

TEST(Dedekind, LargeModulusUsesReciprocityCorrectly) {
    for (long k : {65537L, 70001L, 100003L}) {
        for (long h : {1L, 2L, 12345L, -777L}) {
            ASSERT_EQ(dedekind_sum(h, k), oracle::dedekind_direct(h, k)) << h << "/" << k;
        }
    }
}

TEST(Rademacher, Examples) {
    EXPECT_EQ(rademacher_phi(sl2z::identity()), 0);
    EXPECT_EQ(rademacher_phi(sl2z::gen_t()), 1);
    EXPECT_EQ(rademacher_phi(sl2z::gen_s()), 0);
    for (long k = -36; k <= 36; ++k) ASSERT_EQ(rademacher_phi(B().pow(k)), k);
    EXPECT_THROW(rademacher_phi(sl2z::tau()), InvalidInput);
}

TEST(Meyer, Examples) {
    EXPECT_EQ(meyer_function(B()), q(2, 3));
    EXPECT_EQ(meyer_function(sl2z::identity()), 0);
    EXPECT_EQ(meyer_function(B().pow(-4)), q(1, 3));
    EXPECT_EQ(format_rational(meyer_function(B())), "2/3");
    EXPECT_EQ(format_rational(meyer_function(B().pow(3))), "0");
}

TEST(Meyer, TwistPowers) {
    for (long k = -36; k <= 36; ++k) {
        Rational expected = -q(k, 3);
        if (k != 0) expected += k > 0 ? 1 : -1;
        ASSERT_EQ(meyer_function(B().pow(k)), expected) << k;
    }
}

TEST(Meyer, ConjugationInvarianceAndAntisymmetry) {
    oracle::Sampler s(21);
    for (int i = 0; i < 300; ++i) {
        MatrixZ phi = s.matrix(), g = s.matrix();
        Rational m = meyer_function(phi);
        ASSERT_EQ(meyer_function(g * phi * g.inverse()), m) << phi.to_string();
        ASSERT_EQ(meyer_function(phi.inverse()), -m);
        ASSERT_EQ(Rational(3 * m).get_den(), 1);
    }
}

TEST(Meyer, CocycleCoherence) {
    // Defect of M equals the signature of Meyer's form, computed with the
    // wall module's linear algebra.
    oracle::Sampler s(22);
    for (int i = 0; i < 300; ++i) {
        MatrixZ x = s.matrix(6), y = s.matrix(6);
        Rational defect = meyer_function(x * y) - meyer_function(x) - meyer_function(y);
        ASSERT_EQ(defect, oracle::meyer_cocycle(x, y)) << x.to_string() << " " << y.to_string();
    }
}

TEST(Meyer, AgreesWithCocycleRecursion) {
    EXPECT_EQ(oracle::meyer_by_recursion(B()), q(2, 3));
    oracle::Sampler s(23);
    for (int i = 0; i < 200; ++i) {
        MatrixZ m = s.matrix(6);
        ASSERT_EQ(meyer_function(m), oracle::meyer_by_recursion(m)) << m.to_string();
    }
}

TEST(FiberSum, Examples) {
    std::vector<MatrixZ> w{B(), B().pow(3), B().pow(-4)};
    EXPECT_EQ(fiber_sum_signature(w), 1);
    MatrixZ phi(5, 2, 2, 1);
    std::vector<MatrixZ> pair{phi, phi.inverse()};
    EXPECT_EQ(fiber_sum_signature(pair), 0);
    std::vector<MatrixZ> three;
    for (int i = 0; i < 3; ++i) {
        three.push_back(B());
        three.push_back(B().pow(3));
    }
    three.push_back(B().pow(-12));
    EXPECT_EQ(fiber_sum_signature(three), 5);
}

TEST(FiberSum, RejectsNonIdentityProduct) {
    std::vector<MatrixZ> bad{B(), B()};
    try {
        fiber_sum_signature(bad);
        FAIL();
    } catch (const InvalidInput& e) {
        EXPECT_NE(std::string(e.what()).find("= id"), std::string::npos);
    }
}

TEST(FiberSum, IntegralOnRandomTuples) {
    oracle::Sampler s(24);
    for (int i = 0; i < 500; ++i) {
        auto ms = s.product_id_tuple(6);
        Rational total = 0;
        for (const auto& m : ms) total += meyer_function(m);
        ASSERT_EQ(total.get_den(), 1);
        ASSERT_EQ(fiber_sum_signature(ms), total.get_num());
    }
}

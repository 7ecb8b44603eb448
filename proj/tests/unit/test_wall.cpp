#include "asph/error.hpp"
#include "asph/wall.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace asph;
using namespace asph::wall;
using sl2z::MatrixZ;

namespace {

const MatrixZ& B() { return sl2z::dehn_twist(); }

Vector4 v(long a, long b, long c, long d) { return {Rational(a), Rational(b), Rational(c), Rational(d)}; }

WallTriple twist_triple(long k) {
    Integer kk(k);
    WallTriple t;
    t.a_minus = QSubspace::span({v(1, 0, 1, 0), Vector4{kk, 1, 0, -1}});
    t.b_core = QSubspace::span({v(0, 1, 0, 0), v(0, 0, 0, 1)});
    t.c_plus = QSubspace::span({v(1, 0, 1, 0), Vector4{kk, -1, 0, 1}});
    return t;
}

RationalMatrix random_unimodular(oracle::Sampler& s, std::size_t n) {
    RationalMatrix m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    for (int step = 0; step < 12; ++step) {
        std::size_t i = s.uniform(0, n - 1), j = s.uniform(0, n - 1);
        if (i == j) continue;
        long c = s.uniform(-2, 2);
        for (std::size_t k = 0; k < n; ++k) m[i][k] += c * m[j][k];
    }
    return m;
}

RationalMatrix congruent(const RationalMatrix& g, const RationalMatrix& p) {
    std::size_t n = g.size();
    RationalMatrix out(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) out[i][j] += p[i][a] * g[a][b] * p[j][b];
    return out;
}

}  // namespace

TEST(Kernel, Examples) {
    auto a = kernel_subspace({{{-1, 0, 1, -1}, {0, 1, 0, 1}}});
    EXPECT_EQ(a, QSubspace::span({v(1, 0, 1, 0), v(1, 1, 0, -1)}));
    EXPECT_EQ(kernel_subspace({{{0, 0, 0, 0}, {0, 0, 0, 0}}}), QSubspace::whole());
    auto c = kernel_subspace({{{1, 2, -1, 0}, {0, 1, 0, 1}}});
    EXPECT_EQ(c, QSubspace::span({v(1, 0, 1, 0), v(2, -1, 0, 1)}));
}

TEST(Kernel, AnnihilatesRowsAndHasComplementaryDimension) {
    oracle::Sampler s(31);
    for (int i = 0; i < 200; ++i) {
        std::array<std::array<Integer, 4>, 2> rows;
        for (auto& r : rows)
            for (auto& x : r) x = s.uniform(-3, 3);
        auto k = kernel_subspace(rows);
        for (const auto& b : k.basis()) {
            for (const auto& r : rows) {
                Rational dot = 0;
                for (int c = 0; c < 4; ++c) dot += r[c] * b[c];
                ASSERT_EQ(dot, 0);
            }
        }
        std::vector<Vector4> rv;
        for (const auto& r : rows) rv.push_back({Rational(r[0]), Rational(r[1]), Rational(r[2]), Rational(r[3])});
        ASSERT_EQ(k.dimension() + QSubspace::span(rv).dimension(), 4u);
    }
}

TEST(Subspace, Operations) {
    auto x = QSubspace::span({v(1, 0, 0, 0), v(0, 1, 0, 0)});
    auto y = QSubspace::span({v(0, 1, 0, 0), v(0, 0, 1, 0)});
    EXPECT_EQ(x.intersect(y), QSubspace::span({v(0, 1, 0, 0)}));
    EXPECT_EQ((x + y).dimension(), 3u);
    EXPECT_TRUE(x.contains(v(3, -2, 0, 0)));
    EXPECT_FALSE(x.contains(v(0, 0, 1, 0)));
    EXPECT_EQ(QSubspace::span({v(2, 4, 0, 0)}), QSubspace::span({v(-1, -2, 0, 0)}));
    EXPECT_EQ(QSubspace().dimension(), 0u);
}

TEST(IntersectionForm, Convention) {
    EXPECT_EQ(intersection_form(v(1, 0, 0, 0), v(0, 1, 0, 0)), 1);
    EXPECT_EQ(intersection_form(v(0, 0, 1, 0), v(0, 0, 0, 1)), 1);
    EXPECT_EQ(intersection_form(v(0, 1, 0, 0), v(1, 0, 0, 0)), -1);
}

TEST(Signature, Examples) {
    EXPECT_EQ(symmetric_signature({{Rational(-6)}}), -1);
    EXPECT_EQ(symmetric_signature({{Rational(1), Rational(0)}, {Rational(0), Rational(-1)}}), 0);
    EXPECT_EQ(symmetric_signature({}), 0);
    EXPECT_EQ(symmetric_signature({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}), 0);
    EXPECT_EQ(symmetric_signature({{Rational(2), Rational(1)}, {Rational(1), Rational(2)}}), 2);
    EXPECT_THROW(symmetric_signature({{Rational(0), Rational(1)}, {Rational(2), Rational(0)}}),
                 InvalidInput);
}

TEST(Signature, CongruenceInvariance) {
    oracle::Sampler s(32);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = s.uniform(1, 4);
        RationalMatrix g(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) g[i][j] = g[j][i] = s.uniform(-3, 3);
        int sig = symmetric_signature(g);
        for (int k = 0; k < 20; ++k) {
            ASSERT_EQ(symmetric_signature(congruent(g, random_unimodular(s, n))), sig);
        }
    }
}

TEST(WallCorrection, TwistFamily) {
    for (long k = 1; k <= 20; ++k) {
        auto form = compute_wall_form(twist_triple(k));
        ASSERT_EQ(form.u_basis.size(), 1u);
        ASSERT_EQ(form.gram[0][0], -2 * k);
        ASSERT_EQ(wall_correction(twist_triple(k)), -1);
    }
}

TEST(WallCorrection, CoincidentSubspaces) {
    oracle::Sampler s(33);
    for (int i = 0; i < 100; ++i) {
        auto l = s.lagrangian(3);
        auto m = s.lagrangian(3);
        EXPECT_EQ(wall_correction({l, l, l}), 0);
        EXPECT_EQ(wall_correction({l, l, m}), 0);
        EXPECT_EQ(wall_correction({l, m, l}), 0);
        EXPECT_EQ(wall_correction({m, l, l}), 0);
    }
    auto arbitrary = QSubspace::span({v(1, 2, 3, 4), v(0, 1, 0, 0), v(0, 0, 1, 1)});
    EXPECT_EQ(wall_correction({arbitrary, arbitrary, arbitrary}), 0);
}

TEST(WallCorrection, BoundedByDimension) {
    oracle::Sampler s(34);
    for (int i = 0; i < 200; ++i) {
        WallTriple t{s.lagrangian(3), s.lagrangian(3), s.lagrangian(3)};
        auto form = compute_wall_form(t);
        ASSERT_LE(std::abs(form.signature), static_cast<int>(form.u_basis.size()));
        ASSERT_LE(form.u_basis.size(), t.a_minus.dimension());
    }
}

TEST(WallCorrection, IndependentOfRepresentatives) {
    oracle::Sampler s(35);
    int nontrivial = 0;
    for (int i = 0; i < 100; ++i) {
        WallTriple t = i % 2 ? WallTriple{s.lagrangian(3), s.lagrangian(3), s.lagrangian(3)}
                             : semibundle_wall_data(s.matrix());
        auto form = compute_wall_form(t);
        auto denominator = t.a_minus.intersect(t.b_core) + t.a_minus.intersect(t.c_plus);
        std::size_t n = form.u_basis.size();
        if (n) ++nontrivial;
        std::vector<Vector4> shifted = form.u_basis;
        for (auto& u : shifted) {
            for (const auto& d : denominator.basis()) {
                long c = s.uniform(-3, 3);
                for (int k = 0; k < 4; ++k) u[k] += c * d[k];
            }
        }
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                ASSERT_EQ(oracle::wall_psi(t, shifted[a], shifted[b]), form.gram[a][b]);
            }
        }
    }
    EXPECT_GT(nontrivial, 10);
}

TEST(SemibundleWallData, TwistRowsAndCore) {
    for (long k = -5; k <= 20; ++k) {
        auto t = semibundle_wall_data(B().pow(k));
        auto expected = twist_triple(k);
        EXPECT_EQ(t.a_minus, expected.a_minus) << k;
        EXPECT_EQ(t.a_minus, kernel_subspace({{{-1, 0, 1, Integer(-k)}, {0, 1, 0, 1}}}));
        EXPECT_EQ(t.c_plus, expected.c_plus) << k;
        EXPECT_EQ(t.b_core, QSubspace::span({v(0, 1, 0, 0), v(0, 0, 0, 1)}));
    }
}

TEST(SemibundleWallData, Identity) {
    auto t = semibundle_wall_data(sl2z::identity());
    EXPECT_EQ(t.a_minus, QSubspace::span({v(1, 0, 1, 0), v(0, 1, 0, -1)}));
    EXPECT_EQ(t.a_minus, t.c_plus);
    EXPECT_EQ(wall_correction(t), 0);
    // Independent computation: A = C, so U = A∩(B+C) / (A∩B + A) = 0.
    EXPECT_EQ(compute_wall_form(t).u_basis.size(), 0u);
}

TEST(SemibundleWallData, LagrangianAndSymmetricForAllPhi) {
    oracle::Sampler s(36);
    for (int i = 0; i < 300; ++i) {
        MatrixZ phi = s.matrix(10);
        auto t = semibundle_wall_data(phi);
        ASSERT_TRUE(is_isotropic(t.a_minus));
        ASSERT_TRUE(is_isotropic(t.c_plus));
        ASSERT_EQ(t.a_minus.dimension(), 2u);
        ASSERT_NO_THROW(compute_wall_form(t)) << phi.to_string();
    }
}

TEST(TrickSignature, Examples) {
    for (long k = 1; k <= 12; ++k) EXPECT_EQ(semibundle_trick_signature(B().pow(k)), 1);
    EXPECT_EQ(semibundle_trick_signature(sl2z::identity()), 0);
    oracle::Sampler s(37);
    for (int i = 0; i < 50; ++i) {
        MatrixZ phi = s.matrix();
        EXPECT_EQ(semibundle_trick_signature(phi), -wall_correction(semibundle_wall_data(phi)));
    }
    EXPECT_THROW(semibundle_trick_signature(sl2z::tau()), InvalidInput);
}

#include "oracles.hpp"

#include <xhdirac/polycore.hpp>

#include <gtest/gtest.h>

#include <random>
#include <vector>

using namespace xhdirac;

TEST(ExactPoly, CanonicalZero) {
    const ExactPoly z{0, 0, 0};
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.degree(), -1);
    EXPECT_TRUE(z.coeffs().empty());
    EXPECT_EQ(z, ExactPoly{});
    EXPECT_THROW(z.leading(), std::domain_error);
    const ExactPoly p{3, 0, 5, 0};
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p.leading(), 5);
    EXPECT_TRUE((p - p).is_zero());
}

TEST(ExactPoly, Arithmetic) {
    EXPECT_EQ(derivative(ExactPoly{4, 0, 8}), (ExactPoly{0, 16}));
    EXPECT_EQ((ExactPoly{1, 1} * ExactPoly{1, -1}), (ExactPoly{1, 0, -1}));
    EXPECT_DOUBLE_EQ((ExactPoly{-2, 0, 4})(1.0), 2.0);
    EXPECT_EQ(derivative(ExactPoly{7}), ExactPoly{});
    EXPECT_EQ(derivative(ExactPoly{1, 1, 1, 1}, 3), ExactPoly{6});
    EXPECT_EQ(to_string(ExactPoly{4, 0, 8}), "4 + 8x^2");
    EXPECT_EQ(to_string(ExactPoly{0, -1, 0, 3}), "-x + 3x^3");
    EXPECT_EQ(to_string(ExactPoly{}), "0");
}

TEST(Hermite, LowOrders) {
    EXPECT_EQ(hermite(0), ExactPoly{1});
    EXPECT_EQ(hermite(1), (ExactPoly{0, 2}));
    EXPECT_EQ(hermite(2), (ExactPoly{-2, 0, 4}));
    EXPECT_EQ(hermite(5), (ExactPoly{0, 120, 0, -160, 0, 32}));
}

TEST(Hermite, MatchesExplicitSum) {
    for (unsigned n = 0; n <= 40; ++n) EXPECT_EQ(hermite(n), oracle::hermite_explicit(n)) << "n=" << n;
}

TEST(Hermite, DerivativeIdentity) {
    for (unsigned n = 1; n <= 30; ++n) EXPECT_EQ(hermite(n).derivative(), BigInt(2 * n) * hermite(n - 1));
}

TEST(Wronskian, PaperValues) {
    EXPECT_EQ(wronskian({hermite(1), hermite(2)}), (ExactPoly{4, 0, 8}));
    EXPECT_TRUE(wronskian({hermite(1), hermite(2), hermite(2)}).is_zero());
    EXPECT_EQ(wronskian({hermite(1), hermite(2), hermite(0)}), ExactPoly{16});
    EXPECT_EQ(wronskian({hermite(3)}), hermite(3));
    EXPECT_THROW(wronskian(std::span<const ExactPoly>{}), std::invalid_argument);
}

TEST(Wronskian, MatchesLaplaceExpansion) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t t = 1 + trial % 5;
        std::vector<ExactPoly> fs;
        for (std::size_t j = 0; j < t; ++j) fs.push_back(oracle::random_poly(rng, 7, 9));
        EXPECT_EQ(wronskian(std::span<const ExactPoly>(fs)), oracle::wronskian_laplace(fs)) << "trial " << trial;
    }
}

TEST(Wronskian, BareissAgreesWithLaplaceOnHermiteColumns) {
    const std::vector<std::vector<unsigned>> sets{{1, 2, 4, 5}, {2, 3, 5, 7}, {1, 3, 4, 6, 8}, {0, 2, 3, 7, 9, 10}};
    for (const auto& s : sets) {
        std::vector<ExactPoly> fs;
        for (unsigned i : s) fs.push_back(hermite(i));
        EXPECT_EQ(wronskian(std::span<const ExactPoly>(fs)), oracle::wronskian_laplace(fs));
    }
}

TEST(Wronskian, PointValuesMatchFloatingLU) {
    const std::vector<ExactPoly> fs{hermite(2), hermite(3), hermite(5), hermite(6)};
    const ExactPoly w = wronskian(std::span<const ExactPoly>(fs));
    for (double x : {-1.3, -0.2, 0.0, 0.7, 1.9}) {
        const double ref = oracle::wronskian_lu(fs, x);
        EXPECT_NEAR(w(x), ref, 1e-9 * std::max(1.0, std::abs(ref))) << "x=" << x;
    }
}

TEST(Wronskian, AntisymmetricUnderColumnSwap) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<ExactPoly> fs;
        for (int j = 0; j < 4; ++j) fs.push_back(oracle::random_poly(rng, 6, 20));
        const ExactPoly w = wronskian(std::span<const ExactPoly>(fs));
        std::swap(fs[0], fs[3]);
        EXPECT_EQ(wronskian(std::span<const ExactPoly>(fs)), -w);
    }
}

TEST(Division, ExactQuotientRoundTrips) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const ExactPoly a = oracle::random_poly(rng, 6, 30);
        ExactPoly b = oracle::random_poly(rng, 4, 30);
        if (b.is_zero()) continue;
        EXPECT_EQ(divide_exact(a * b, b), a);
    }
    EXPECT_THROW(divide_exact(ExactPoly{1, 0, 1}, ExactPoly{1, 1}), std::domain_error);
    EXPECT_THROW(divide_exact(ExactPoly{1}, ExactPoly{}), std::domain_error);
}

TEST(Gcd, RecoversCommonFactor) {
    const ExactPoly f{-1, 0, 2};
    const ExactPoly a = f * ExactPoly{3, 1};
    const ExactPoly b = f * ExactPoly{-5, 0, 1};
    EXPECT_EQ(gcd(a, b), f);
    EXPECT_EQ(content(ExactPoly{6, -4, 10}), 2);
    EXPECT_EQ(primitive_part(ExactPoly{6, -4, 10}), (ExactPoly{3, -2, 5}));
}

TEST(Gcd, PseudoRemainderSignMatchesRationalRemainder) {
    // (x^2 + 1) mod (-2x + 1) over Q is 5/4; the scaled remainder keeps the sign.
    const ExactPoly r = positive_pseudo_remainder(ExactPoly{1, 0, 1}, ExactPoly{1, -2});
    ASSERT_EQ(r.degree(), 0);
    EXPECT_GT(r.leading(), 0);
}

TEST(Arithmetic, RingProperties) {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 100; ++trial) {
        const ExactPoly a = oracle::random_poly(rng, 8, 1000);
        const ExactPoly b = oracle::random_poly(rng, 8, 1000);
        const ExactPoly c = oracle::random_poly(rng, 8, 1000);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b).derivative(), a.derivative() * b + a * b.derivative());
        if (!a.is_zero() && !b.is_zero()) EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
        const double x = 0.37 * (trial % 7) - 1.1;
        const double ref = a(x) * b(x);
        EXPECT_NEAR((a * b)(x), ref, 1e-9 * std::max(1.0, std::abs(ref)));
    }
}

TEST(Arithmetic, LargeCoefficientsStayExact) {
    const ExactPoly h = hermite(60);
    EXPECT_EQ(h.leading(), BigInt(1) << 60);
    EXPECT_EQ(divide_exact(h * hermite(61), hermite(61)), h);
}

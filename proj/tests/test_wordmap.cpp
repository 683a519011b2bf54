#include <gtest/gtest.h>

#include "primwords/enumerate.hpp"
#include "primwords/wordmap.hpp"

using namespace primwords;

namespace {

Word W(std::string_view s, int rank = 3) { return parse_word(s, rank); }

}  // namespace

TEST(Permutation, RankRoundTrip) {
    for (int n = 1; n <= 5; ++n) {
        for (std::uint32_t i = 0; i < factorial(n); ++i) {
            const Permutation p = Permutation::unrank(n, i);
            EXPECT_EQ(p.rank(), i);
            EXPECT_EQ(p * p.inverse(), Permutation::identity(n));
        }
    }
    EXPECT_EQ(Permutation::unrank(3, 0), Permutation::identity(3));
    EXPECT_EQ(Permutation::unrank(3, 5), Permutation::from_images({2, 1, 0}));
}

TEST(Permutation, Basics) {
    const Permutation p = Permutation::from_images({1, 0, 3, 4, 2});
    EXPECT_EQ(p.to_string(), "(1 2)(3 4 5)");
    EXPECT_EQ(p.fixed_points(), 0);
    EXPECT_EQ(Permutation::identity(4).to_string(), "()");
    EXPECT_EQ(Permutation::identity(4).fixed_points(), 4);
    // right action: apply p then q
    const Permutation q = Permutation::from_images({0, 2, 1, 3, 4});
    EXPECT_EQ((p * q)(0), q(p(0)));
    EXPECT_THROW(Permutation::from_images({0, 0}), std::invalid_argument);
    EXPECT_THROW(Permutation::identity(9), std::invalid_argument);
}

TEST(ExactPushforward, IdentityWordIsUniform) {
    for (int n = 1; n <= 4; ++n) {
        const auto d = exact_pushforward(W("a"), n);
        for (std::uint32_t i = 0; i < factorial(n); ++i) {
            EXPECT_EQ(d.mass(Permutation::unrank(n, i)), Rational(1, static_cast<long>(factorial(n))));
        }
    }
}

TEST(ExactPushforward, CommutatorOnS2) {
    const auto d = exact_pushforward(W("abAB"), 2);
    EXPECT_EQ(d.mass(Permutation::identity(2)), 1);
    EXPECT_EQ(d.masses().size(), 1u);
}

TEST(ExactPushforward, SquareOnS3) {
    const auto d = exact_pushforward(W("aa"), 3);
    // the identity and the three transpositions square to the identity
    EXPECT_EQ(d.mass(Permutation::identity(3)), Rational(2, 3));
    EXPECT_EQ(d.mass(Permutation::from_images({1, 0, 2})), 0);
    EXPECT_EQ(d.mass(Permutation::from_images({1, 2, 0})), Rational(1, 6));
    EXPECT_EQ(d.mass(Permutation::from_images({2, 0, 1})), Rational(1, 6));
}

TEST(ExactPushforward, MassesSumToOneAndAreClassFunctions) {
    for (const char* w : {"aa", "abAB", "aab", "abbCBB", "aBaB"}) {
        for (int n = 2; n <= 4; ++n) {
            const auto d = exact_pushforward(W(w), n);
            EXPECT_EQ(d.total_mass(), 1) << w;
            for (std::uint32_t i = 0; i < factorial(n); ++i) {
                const Permutation p = Permutation::unrank(n, i);
                for (std::uint32_t j = 0; j < factorial(n); j += 3) {
                    EXPECT_EQ(d.mass(p), d.mass(p.conjugate_by(Permutation::unrank(n, j)))) << w;
                }
            }
        }
    }
}

TEST(ExactPushforward, WorkBound) {
    EXPECT_THROW(exact_pushforward(W("abc"), 6), WorkBoundExceeded);
    EXPECT_THROW(exact_pushforward(W("a"), 0), std::invalid_argument);
    EXPECT_NO_THROW(exact_pushforward(W("a"), 8));
}

TEST(ExpectedFixedPoints, Examples) {
    EXPECT_EQ(expected_fixed_points(exact_pushforward(W("a"), 4)), 1);
    EXPECT_EQ(expected_fixed_points(W("aa"), 3), 2);
    EXPECT_EQ(expected_fixed_points(W("aa"), 2), 2);
    EXPECT_EQ(expected_fixed_points(Word(2), 3), 3);
}

TEST(ExpectedFixedPoints, PrimitiveWordsGiveOne) {
    for (const auto& cw : orbit_primitives(2, 5)) {
        for (int n = 1; n <= 4; ++n) {
            EXPECT_EQ(expected_fixed_points(cw.as_word(), n), 1) << cw.to_string() << " n=" << n;
        }
    }
}

TEST(FixedPointProb, Examples) {
    EXPECT_EQ(fixed_point_prob(W("a"), 5), Rational(1, 5));
    EXPECT_EQ(fixed_point_prob(W("aa"), 3), Rational(2, 3));
}

TEST(FixedPointProb, ConsistentWithExpectation) {
    for (const char* w : {"a", "aa", "abAB", "aab", "aaa", "abbCBB"}) {
        for (int n = 1; n <= 4; ++n) {
            EXPECT_EQ(fixed_point_prob(W(w), n) * n, expected_fixed_points(W(w), n)) << w << " n=" << n;
        }
    }
}

TEST(ConvolutionIdentity, Examples) {
    const auto r1 = verify_convolution_identity(W("aa"), W("bbb"), 4);
    EXPECT_TRUE(r1.holds);
    const auto r2 = verify_convolution_identity(W("a"), W("b"), 3);
    EXPECT_TRUE(r2.holds);
    EXPECT_EQ(r2.lhs, Rational(1, 3));
    const auto r3 = verify_convolution_identity(W("aa"), W("bb"), 3);
    EXPECT_TRUE(r3.holds);
    EXPECT_EQ(r3.p1, Rational(2, 3));
    EXPECT_EQ(r3.lhs, Rational(1, 2));
    EXPECT_THROW(verify_convolution_identity(W("ab"), W("b"), 3), std::invalid_argument);
}

TEST(ConvolutionIdentity, HoldsForDisjointPairs) {
    for (auto [a, b] : {std::pair{"aab", "c"}, {"aBaB", "cc"}, {"aaa", "bCbC"}}) {
        for (int n = 2; n <= 4; ++n) {
            EXPECT_TRUE(verify_convolution_identity(W(a), W(b), n).holds) << a << " " << b << " n=" << n;
        }
    }
}

TEST(MonteCarlo, Estimates) {
    const auto one = mc_expected_fixed_points(W("a"), 50, 100000, 42, 2);
    EXPECT_NEAR(one.mean, 1.0, 3 * one.std_error);
    const auto two = mc_expected_fixed_points(W("aa"), 50, 100000, 42, 2);
    EXPECT_NEAR(two.mean, 2.0, 3 * two.std_error);
    EXPECT_GT(two.std_error, 0.0);
    EXPECT_THROW(mc_expected_fixed_points(W("a"), 5, 0, 1), std::invalid_argument);
}

TEST(MonteCarlo, SeedRepeatableAndThreadIndependent) {
    const auto a = mc_expected_fixed_points(W("abAB"), 20, 5000, 7, 1);
    const auto b = mc_expected_fixed_points(W("abAB"), 20, 5000, 7, 4);
    EXPECT_EQ(a.mean, b.mean);
    EXPECT_EQ(a.std_error, b.std_error);
    const auto c = mc_expected_fixed_points(W("abAB"), 20, 5000, 8, 1);
    EXPECT_NE(a.mean, c.mean);
}

TEST(ExactPushforward, ThreadIndependent) {
    const auto a = exact_pushforward(W("abAB"), 5, 1);
    const auto b = exact_pushforward(W("abAB"), 5, 4);
    EXPECT_EQ(a.masses(), b.masses());
}

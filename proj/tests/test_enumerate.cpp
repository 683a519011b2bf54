#include <set>

#include <gtest/gtest.h>

#include "primwords/enumerate.hpp"

using namespace primwords;

namespace {

std::set<CyclicWord> brute_force_necklaces(int rank, int n) {
    std::set<CyclicWord> out;
    for_each_reduced(rank, n, [&](std::span<const Letter> s) {
        if (is_cyclically_reduced(s)) {
            out.insert(CyclicWord::canonical(rank, {s.begin(), s.end()}));
        }
    });
    return out;
}

EnumerationOptions with_threads(int t) {
    EnumerationOptions o;
    o.threads = t;
    return o;
}

}  // namespace

TEST(GenReduced, Counts) {
    EXPECT_EQ(gen_reduced(2, 2).size(), 12u);
    EXPECT_EQ(gen_reduced(3, 3).size(), 150u);
    for (const Word& w : gen_reduced(3, 4)) {
        EXPECT_EQ(w.size(), 4u);
        EXPECT_EQ(reduce(3, w.letters()), w);
    }
}

TEST(GenCyclic, LengthTwoRankTwo) {
    std::set<std::string> got;
    for (const auto& cw : gen_cyclic(2, 2)) {
        got.insert(cw.to_string());
    }
    EXPECT_EQ(got, (std::set<std::string>{"aa", "AA", "bb", "BB", "ab", "aB", "Ab", "AB"}));
}

TEST(GenCyclic, MatchesBruteForceDedup) {
    for (auto [rank, max_n] : {std::pair{2, 9}, {3, 6}, {4, 4}}) {
        for (int n = 1; n <= max_n; ++n) {
            const auto fkm = gen_cyclic(rank, n);
            const std::set<CyclicWord> fkm_set(fkm.begin(), fkm.end());
            EXPECT_EQ(fkm_set.size(), fkm.size()) << "duplicates at rank " << rank << " n " << n;
            EXPECT_EQ(fkm_set, brute_force_necklaces(rank, n)) << "rank " << rank << " n " << n;
        }
    }
}

TEST(GenCyclic, ShardsCoverEverything) {
    std::size_t total = 0;
    for (const auto& shard : necklace_shards(3, 5)) {
        for_each_necklace_in_shard(3, 5, shard, [&](std::span<const Letter>) { ++total; });
    }
    EXPECT_EQ(total, gen_cyclic(3, 5).size());
}

TEST(OrbitPrimitives, SmallCases) {
    std::set<std::string> one;
    for (const auto& cw : orbit_primitives(2, 1)) {
        one.insert(cw.to_string());
    }
    EXPECT_EQ(one, (std::set<std::string>{"a", "A", "b", "B"}));
    const auto two = orbit_primitives(2, 2);
    EXPECT_EQ(std::count_if(two.begin(), two.end(), [](const CyclicWord& c) { return c.size() == 2; }), 4);
    EXPECT_THROW(orbit_primitives(1, 3), std::invalid_argument);
}

TEST(OrbitPrimitives, FourPhiRankTwo) {
    const long phi[] = {0, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4};
    std::map<std::size_t, long> by_len;
    for (const auto& cw : orbit_primitives(2, 12)) {
        ++by_len[cw.size()];
    }
    for (int n = 1; n <= 12; ++n) {
        EXPECT_EQ(by_len[static_cast<std::size_t>(n)], 4 * phi[n]) << n;
    }
}

TEST(OrbitPrimitives, AgreesWithGreedyOnNecklaces) {
    const auto orbit = orbit_primitives(3, 6);
    const std::set<CyclicWord> oracle(orbit.begin(), orbit.end());
    for (int n = 1; n <= 6; ++n) {
        for (const auto& cw : gen_cyclic(3, n)) {
            EXPECT_EQ(is_primitive(cw), oracle.count(cw) == 1) << cw.to_string();
        }
    }
}

TEST(OrbitPrimitives, SamplingIsDeterministicAndPrimitive) {
    const auto a = sample_orbit_primitives(3, 12, 50, 99);
    const auto b = sample_orbit_primitives(3, 12, 50, 99);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.size(), 50u);
    for (const auto& cw : a) {
        EXPECT_LE(cw.size(), 12u);
        EXPECT_TRUE(is_primitive(cw)) << cw.to_string();
    }
}

TEST(Classify, Examples) {
    const ClassSet worked = classify(parse_cyclic("abCB", 3));
    EXPECT_TRUE(worked.has(WordClass::C));
    EXPECT_TRUE(worked.has(WordClass::L));

    const ClassSet power = classify(parse_cyclic("aa", 2));
    EXPECT_EQ(power.names(), (std::vector<std::string>{"Sbar"}));

    EXPECT_TRUE(classify(parse_cyclic("abAB", 2)).empty());
    EXPECT_THROW(classify(CyclicWord()), std::invalid_argument);
    EXPECT_EQ(parse_class("Ltilde"), WordClass::Ltilde);
    EXPECT_THROW(parse_class("Q"), std::invalid_argument);
}

TEST(Classify, MembersOfMShortenByFour) {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& cw : gen_cyclic(3, n)) {
            const ClassSet s = classify(cw);
            if (s.has(WordClass::M)) {
                const auto list = reducing_triplets(cw);
                ASSERT_FALSE(list.empty());
                EXPECT_GE(list.front().reduction, 4) << cw.to_string();
                EXPECT_FALSE(s.has(WordClass::Mc));
                EXPECT_FALSE(s.has(WordClass::L));
            }
            if (s.has(WordClass::Ltilde)) {
                EXPECT_TRUE(s.has(WordClass::M));
            }
        }
    }
}

TEST(CountClasses, ClassicFourPhi) {
    const auto t = count_class(2, 8, WordClass::C);
    const long expected[] = {4, 4, 8, 8, 16, 8, 24, 16};
    for (int n = 1; n <= 8; ++n) {
        EXPECT_EQ(t.at(n), expected[n - 1]) << n;
    }
    EXPECT_THROW(t.at(9), std::out_of_range);
}

TEST(CountClasses, SmallValues) {
    EXPECT_EQ(count_class(3, 1, WordClass::C).at(1), 6);
    EXPECT_EQ(count_class(2, 2, WordClass::P).at(2), 8);
    EXPECT_EQ(count_class(3, 2, WordClass::AllReduced).at(2), 30);
}

TEST(CountClasses, PartitionAndSubsets) {
    const auto t = count_classes(3, 7,
                                 {WordClass::C, WordClass::L, WordClass::M, WordClass::Mc, WordClass::Ltilde,
                                  WordClass::P, WordClass::S});
    for (int n = 1; n <= 7; ++n) {
        EXPECT_EQ(t[0].at(n), t[1].at(n) + t[2].at(n) + t[3].at(n)) << n;
        EXPECT_LE(t[1].at(n), t[0].at(n));
        EXPECT_LE(t[4].at(n), t[2].at(n));
        EXPECT_LE(t[5].at(n), t[6].at(n));
    }
}

TEST(CountClasses, IndependentOfThreadCount) {
    const std::vector<WordClass> classes = {WordClass::C, WordClass::L, WordClass::M, WordClass::P};
    const auto serial = count_classes(3, 6, classes, with_threads(1));
    const auto parallel = count_classes(3, 6, classes, with_threads(5));
    for (std::size_t i = 0; i < classes.size(); ++i) {
        EXPECT_EQ(serial[i].counts, parallel[i].counts);
    }
}

TEST(CountClasses, Guards) {
    EXPECT_THROW(count_classes(3, 20, {WordClass::C}), WorkBoundExceeded);
    EXPECT_THROW(count_classes(3, 5, {}), std::invalid_argument);
    EXPECT_THROW(count_classes(3, 0, {WordClass::C}), std::invalid_argument);
    EXPECT_THROW(count_classes(1, 3, {WordClass::C}), std::invalid_argument);
}

TEST(Decomposition, Examples) {
    EXPECT_TRUE(verify_P_decomposition(3, 5).holds);
    EXPECT_TRUE(verify_P_decomposition(2, 3).holds);
    const auto one = verify_P_decomposition(3, 1);
    EXPECT_TRUE(one.holds);
    EXPECT_EQ(one.direct, 6);
    // the literal reading scales the l = 0 term by (2k-2)/(2k-1)
    EXPECT_EQ(one.literal, Rational(6 * 4, 5));
}

TEST(ExactLCount, SmallCases) {
    const auto three = exact_L_count(3, 3);
    EXPECT_EQ(three.approx, 72);
    long brute = 0;
    for (const auto& cw : gen_cyclic(3, 3)) {
        brute += has_single_letter(cw);
    }
    EXPECT_EQ(three.exact, brute);

    const auto two = exact_L_count(3, 2);
    EXPECT_EQ(two.approx, 24);
    EXPECT_EQ(two.exact, 12);
    EXPECT_THROW(exact_L_count(3, 1), std::invalid_argument);
}

TEST(ExactLCount, RatioApproachesOne) {
    const auto early = exact_L_count(3, 4);
    const auto late = exact_L_count(3, 9);
    auto gap = [](const LCount& c) { return std::abs(to_double(Rational(c.exact, c.approx)) - 1.0); };
    EXPECT_LT(gap(late), gap(early));
    EXPECT_LT(gap(late), 0.01);
}

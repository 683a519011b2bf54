#include <random>

#include <gtest/gtest.h>

#include "primwords/enumerate.hpp"
#include "primwords/whitehead.hpp"

using namespace primwords;

namespace {

Letter L(char c) { return Letter::from_char(c); }

LetterMask M(std::string_view s) {
    LetterMask m = 0;
    for (char c : s) {
        m |= letter_bit(L(c));
    }
    return m;
}

// The worked example x1 x2^2 x3^-1 x2^-2.
const CyclicWord& example() {
    static const CyclicWord cw = parse_cyclic("abbCBB", 3);
    return cw;
}

std::vector<CyclicWord> cyclic_up_to(int rank, int max_len) {
    std::vector<CyclicWord> out;
    for (int n = 1; n <= max_len; ++n) {
        auto layer = gen_cyclic(rank, n);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

}  // namespace

TEST(WhiteheadGraph, WorkedExample) {
    const auto g = build_graph(example());
    EXPECT_EQ(g.multiplicity(L('a'), L('B')), 1);
    EXPECT_EQ(g.multiplicity(L('b'), L('B')), 2);
    EXPECT_EQ(g.multiplicity(L('b'), L('c')), 1);
    EXPECT_EQ(g.multiplicity(L('b'), L('C')), 1);
    EXPECT_EQ(g.multiplicity(L('B'), L('A')), 1);
    EXPECT_EQ(g.total_multiplicity(), 6);
    EXPECT_EQ(g.edges().size(), 5u);
}

TEST(WhiteheadGraph, SmallWords) {
    const auto ab = build_graph(parse_cyclic("ab", 2));
    EXPECT_EQ(ab.multiplicity(L('a'), L('B')), 1);
    EXPECT_EQ(ab.multiplicity(L('b'), L('A')), 1);
    EXPECT_EQ(ab.total_multiplicity(), 2);

    const auto comm = build_graph(parse_cyclic("abAB", 2));
    for (auto [u, w] : {std::pair{'a', 'B'}, {'a', 'b'}, {'A', 'b'}, {'A', 'B'}}) {
        EXPECT_EQ(comm.multiplicity(L(u), L(w)), 1) << u << w;
    }
    EXPECT_EQ(comm.multiplicity(L('a'), L('A')), 0);
    EXPECT_TRUE(cut_vertices(comm).empty());
}

TEST(WhiteheadGraph, SymmetricLooplessAndSized) {
    for (const auto& cw : cyclic_up_to(3, 5)) {
        const auto g = build_graph(cw);
        EXPECT_EQ(g.total_multiplicity(), static_cast<int>(cw.size()));
        for (int u = 0; u < g.vertex_count(); ++u) {
            EXPECT_EQ(g.multiplicity(Letter::from_code(u), Letter::from_code(u)), 0);
            for (int w = 0; w < g.vertex_count(); ++w) {
                EXPECT_EQ(g.multiplicity(Letter::from_code(u), Letter::from_code(w)),
                          g.multiplicity(Letter::from_code(w), Letter::from_code(u)));
            }
        }
    }
}

TEST(Triplet, ConstructionRules) {
    EXPECT_NO_THROW(Triplet::make(3, M("cC"), M("aAB"), L('b')));
    EXPECT_THROW(Triplet::make(3, 0, L('b')), std::invalid_argument);
    EXPECT_THROW(Triplet::make(3, M("B"), L('b')), std::invalid_argument);
    EXPECT_THROW(Triplet::make(3, M("b"), L('b')), std::invalid_argument);
    EXPECT_THROW(Triplet::make(3, M("cC"), M("aA"), L('b')), std::invalid_argument);
    const Triplet t = Triplet::make(3, M("cC"), L('b'));
    EXPECT_EQ(t.serialize(), "ZZvZYY");
    EXPECT_EQ(t.describe(), "v=b Y={c,C} Z={a,A,B}");
    EXPECT_EQ(t.y_size(), 2);
    EXPECT_EQ(t.z_size(), 3);
}

TEST(Triplet, AllTripletsCount) {
    // 2k choices of v, then every nonempty subset of the 2k-2 free letters
    for (int k = 2; k <= 4; ++k) {
        const std::size_t expected = static_cast<std::size_t>(2 * k) * ((std::size_t{1} << (2 * k - 2)) - 1);
        EXPECT_EQ(all_triplets(k).size(), expected);
    }
}

TEST(IsValidTriplet, Examples) {
    const Triplet worked = Triplet::make(3, M("cC"), M("aAB"), L('b'));
    EXPECT_TRUE(is_valid_triplet(worked, example()));
    EXPECT_TRUE(is_valid_triplet(worked, build_graph(example())));

    const auto ab = parse_cyclic("ab", 2);
    for (const Triplet& t : all_triplets(2)) {
        if (t.in_y(L('a')) && t.in_z(L('B'))) {
            EXPECT_FALSE(is_valid_triplet(t, ab)) << t.describe();
        }
    }
    // c is an isolated pair of vertices
    const auto noc = parse_cyclic("abAB", 3);
    for (char v : std::string("aAbB")) {
        EXPECT_TRUE(is_valid_triplet(Triplet::make(3, M("cC"), L(v)), noc));
    }
}

TEST(EdgeCount, Examples) {
    const auto g = build_graph(example());
    EXPECT_EQ(edge_count_to(g, M("cC"), L('b')), 2);
    EXPECT_EQ(edge_count_to(g, 0, L('b')), 0);
    EXPECT_THROW(edge_count_to(g, M("b"), L('b')), std::invalid_argument);
    for (const auto& cw : cyclic_up_to(2, 6)) {
        const auto gg = build_graph(cw);
        for (const Triplet& t : all_triplets(2)) {
            EXPECT_LE(edge_count_to(gg, t.y_mask(), t.v()), gg.degree(t.v()));
        }
    }
}

TEST(ApplyWhitehead, WorkedExample) {
    const Triplet t = Triplet::make(3, M("cC"), M("aAB"), L('b'));
    EXPECT_EQ(apply_whitehead(t, example()).to_string(), "abCB");
}

TEST(ApplyWhitehead, FixesVAndIdentity) {
    for (const Triplet& t : all_triplets(3)) {
        const CyclicWord v = CyclicWord::canonical(3, {t.v()});
        EXPECT_EQ(apply_whitehead(t, v), v);
        EXPECT_TRUE(apply_whitehead(t, Word(3)).empty());
    }
}

TEST(ApplyWhitehead, ImageTable) {
    const Triplet t = Triplet::make(3, M("a"), L('b'));  // Z = {A, B, c, C}
    auto img = [&](char c) { return letters_to_string(whitehead_image(t, L(c))); };
    EXPECT_EQ(img('b'), "b");
    EXPECT_EQ(img('B'), "B");
    EXPECT_EQ(img('a'), "ba");   // a in Y, a^-1 in Z
    EXPECT_EQ(img('A'), "AB");   // inverse image
    EXPECT_EQ(img('c'), "bcB");  // both in Z
    const Triplet both_y = Triplet::make(3, M("aA"), L('b'));
    EXPECT_EQ(letters_to_string(whitehead_image(both_y, L('a'))), "a");
}

TEST(ApplyWhitehead, ImagesOfInversesAreInverseWords) {
    for (const Triplet& t : all_triplets(3)) {
        for (int c = 0; c < 6; ++c) {
            const Letter u = Letter::from_code(c);
            const Word img = reduce(3, whitehead_image(t, u));
            const Word inv = reduce(3, whitehead_image(t, u.inverse()));
            EXPECT_EQ(invert(img), inv);
        }
    }
}

TEST(ApplyWhitehead, Homomorphism) {
    std::mt19937_64 rng(5);
    const auto triplets = all_triplets(3);
    std::uniform_int_distribution<int> pick(0, 5);
    for (int trial = 0; trial < 300; ++trial) {
        auto rand_word = [&](int len) {
            std::vector<Letter> s;
            for (int i = 0; i < len; ++i) {
                s.push_back(Letter::from_code(pick(rng)));
            }
            return reduce(3, s);
        };
        const Word u = rand_word(trial % 9);
        const Word v = rand_word(trial % 7 + 1);
        const Triplet& t = triplets[static_cast<std::size_t>(trial) % triplets.size()];
        EXPECT_EQ(apply_whitehead(t, concat(u, v)), concat(apply_whitehead(t, u), apply_whitehead(t, v)));
    }
}

TEST(ApplyWhitehead, LengthFormulaExhaustiveRank2) {
    const auto triplets = all_triplets(2);
    for (const auto& cw : cyclic_up_to(2, 7)) {
        const auto g = build_graph(cw);
        for (const Triplet& t : triplets) {
            if (!is_valid_triplet(t, g)) {
                continue;
            }
            const int e = edge_count_to(g, t.y_mask(), t.v());
            EXPECT_EQ(static_cast<int>(apply_whitehead(t, cw).size()), static_cast<int>(cw.size()) - e)
                << cw.to_string() << " " << t.describe();
        }
    }
}

TEST(ReducingTriplets, WorkedExample) {
    const auto list = reducing_triplets(example());
    ASSERT_FALSE(list.empty());
    const Triplet worked = Triplet::make(3, M("cC"), L('b'));
    bool found = false;
    for (const auto& rt : list) {
        EXPECT_GT(rt.reduction, 0);
        EXPECT_TRUE(is_valid_triplet(rt.triplet, example()));
        found = found || (rt.triplet == worked && rt.reduction == 2);
    }
    EXPECT_TRUE(found);
    EXPECT_EQ(list.front().reduction, 2);
    EXPECT_EQ(list.front().triplet.describe(), "v=B Y={a,A} Z={b,c,C}");
    EXPECT_EQ(cut_vertices(build_graph(example())), (std::vector<Letter>{L('b'), L('B')}));
}

TEST(ReducingTriplets, EmptyCases) {
    EXPECT_TRUE(reducing_triplets(parse_cyclic("abAB", 2)).empty());
    EXPECT_TRUE(reducing_triplets(parse_cyclic("a", 2)).empty());
}

TEST(ReducingTriplets, BestMatchesFront) {
    for (const auto& cw : cyclic_up_to(3, 6)) {
        const auto list = reducing_triplets(cw);
        const auto best = best_reducing_triplet(build_graph(cw));
        ASSERT_EQ(list.empty(), !best.has_value()) << cw.to_string();
        if (best) {
            EXPECT_EQ(best->triplet, list.front().triplet) << cw.to_string();
            EXPECT_EQ(best->reduction, list.front().reduction);
        }
    }
}

TEST(ValidTriplets, AgreesWithBruteForce) {
    const auto triplets = all_triplets(3);
    for (const auto& cw : cyclic_up_to(3, 4)) {
        std::vector<Triplet> brute;
        for (const Triplet& t : triplets) {
            if (is_valid_triplet(t, cw)) {
                brute.push_back(t);
            }
        }
        std::sort(brute.begin(), brute.end());
        const auto listed = valid_triplets(cw);
        ASSERT_EQ(listed.size(), brute.size()) << cw.to_string();
        for (std::size_t i = 0; i < brute.size(); ++i) {
            EXPECT_EQ(listed[i].triplet, brute[i]);
        }
    }
}

TEST(Minimize, Examples) {
    const auto m = minimize(parse_word("abbCBB", 3));
    EXPECT_EQ(m.min_core.size(), 1u);
    EXPECT_EQ(m.trace.size(), 3u);

    const auto comm = minimize(parse_word("abAB", 2));
    EXPECT_EQ(comm.min_core.to_string(), "abAB");
    EXPECT_TRUE(comm.trace.empty());

    const auto single = minimize(parse_word("c", 3));
    EXPECT_EQ(single.min_core.to_string(), "c");
    EXPECT_TRUE(single.trace.empty());
    EXPECT_THROW(minimize(Word(2)), std::invalid_argument);
}

TEST(Minimize, TraceReplaysToCore) {
    for (const auto& cw : cyclic_up_to(3, 5)) {
        const auto m = minimize(cw);
        CyclicWord cur = cw;
        for (const Triplet& t : m.trace) {
            const auto next = apply_whitehead(t, cur);
            EXPECT_LT(next.size(), cur.size());
            cur = next;
        }
        EXPECT_EQ(cur, m.min_core);
    }
}

TEST(IsPrimitive, Examples) {
    EXPECT_TRUE(is_primitive(parse_word("a", 2)));
    EXPECT_TRUE(is_primitive(parse_word("abbCBB", 3)));
    EXPECT_FALSE(is_primitive(parse_word("aa", 2)));
    EXPECT_FALSE(is_primitive(parse_word("abAB", 2)));
    EXPECT_THROW(is_primitive(Word(2)), std::invalid_argument);
}

TEST(IsInProperFreeFactor, Examples) {
    EXPECT_TRUE(is_in_proper_free_factor(parse_word("ab", 3)));
    EXPECT_FALSE(is_in_proper_free_factor(parse_word("abAB", 2)));
    EXPECT_TRUE(is_in_proper_free_factor(parse_word("aa", 2)));
}

TEST(IsPrimitive, NecessaryConditionsAndImplications) {
    for (const auto& cw : cyclic_up_to(3, 6)) {
        if (!is_primitive(cw)) {
            continue;
        }
        EXPECT_EQ(abelian_gcd(abelianization(cw.as_word())), 1) << cw.to_string();
        EXPECT_EQ(period(cw), cw.size());
        EXPECT_TRUE(is_in_proper_free_factor(cw));
    }
}

TEST(IsPrimitive, InvariantUnderValidTriplets) {
    const auto triplets = all_triplets(3);
    for (const auto& cw : cyclic_up_to(3, 5)) {
        const bool p = is_primitive(cw);
        const bool f = is_in_proper_free_factor(cw);
        const auto g = build_graph(cw);
        for (const Triplet& t : triplets) {
            if (!is_valid_triplet(t, g)) {
                continue;
            }
            const auto image = apply_whitehead(t, cw);
            if (image.empty()) {
                continue;
            }
            EXPECT_EQ(is_primitive(image), p) << cw.to_string() << " " << t.describe();
            EXPECT_EQ(is_in_proper_free_factor(image), f) << cw.to_string() << " " << t.describe();
        }
    }
}

#include <gtest/gtest.h>

#include "primwords/acceptance.hpp"
#include "primwords/report.hpp"

using namespace primwords;
using acceptance::detail::last_v_triplet;
using acceptance::detail::non_v_letters;

TEST(ReportJson, TripletAndGraph) {
    const Triplet t = last_v_triplet(3, "aA");
    EXPECT_EQ(to_json(t).dump(), R"({"v":"c","Y":"aA","Z":"bBC"})");

    const Json g = to_json(build_graph(parse_cyclic("ab", 2)));
    EXPECT_EQ(g["rank"], 2);
    int total = 0;
    for (const auto& e : g["edges"]) {
        total += e["mult"].get<int>();
    }
    EXPECT_EQ(total, 2);
}

TEST(ReportJson, CountTablesAndCsv) {
    const auto tables = count_classes(2, 3, {WordClass::C, WordClass::P});
    const Json j = to_json(tables[0]);
    EXPECT_EQ(j.dump(), R"({"rank":2,"class":"C","counts":{"1":"4","2":"4","3":"8"}})");
    const std::string csv = count_tables_csv(tables);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "rank,class,N,count");
    EXPECT_NE(csv.find("2,C,3,8\n"), std::string::npos);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 7);
}

TEST(ReportJson, Decomposition) {
    const Json j = to_json(verify_P_decomposition(3, 1));
    EXPECT_EQ(j["direct"], "6");
    EXPECT_EQ(j["literal_reading"], "24/5");
    EXPECT_TRUE(j["holds"].get<bool>());
}

TEST(GrowthReport, SingletonZHitsTheBound) {
    const Json j = growth_report(last_v_triplet(4, non_v_letters(4)));
    EXPECT_EQ(j["shape"], "Z={v^-1}");
    EXPECT_DOUBLE_EQ(j["spectral_radius"].get<double>(), 5.0);
    EXPECT_EQ(j["versus_2k_minus_3"], "= 2k-3");
    EXPECT_FALSE(j.contains("polynomial"));
    EXPECT_TRUE(j["tuple_counts"].empty());
}

TEST(GrowthReport, SingleLetterShapeCarriesPolynomial) {
    const Triplet t = last_v_triplet(3, "a");
    const Json j = growth_report(t, {count_follow_tuples(t, Letter::from_char('b'), 2)});
    EXPECT_EQ(j["shape"], "Y={x}");
    EXPECT_EQ(j["versus_2k_minus_3"], "> 2k-3");
    EXPECT_NEAR(j["polynomial_root"].get<double>(), j["spectral_radius"].get<double>(), 1e-9);
    ASSERT_EQ(j["tuple_counts"].size(), 1u);
    EXPECT_EQ(j["tuple_counts"][0]["start"], "b");
    EXPECT_EQ(j["tuple_counts"][0]["r"], 2);
}

TEST(WordmapReport, ExactAndSampled) {
    const Json exact = exact_wordmap_report(parse_word("aa", 2), 3);
    EXPECT_EQ(exact.dump(), R"({"word":"aa","n":3,"expected_fix":"2","exact":true})");
    const Json mc = mc_wordmap_report(parse_word("a", 2), 10, 1000, 5, 1);
    EXPECT_FALSE(mc["exact"].get<bool>());
    EXPECT_EQ(mc["samples"], 1000);
    EXPECT_EQ(mc["seed"], 5);
    EXPECT_EQ(mc.dump(), mc_wordmap_report(parse_word("a", 2), 10, 1000, 5, 3).dump());
}

TEST(Acceptance, SuiteResolution) {
    EXPECT_EQ(acceptance::resolve_suite("all").size(), 11u);
    EXPECT_EQ(acceptance::resolve_suite("constants"), (std::vector<int>{5, 6}));
    EXPECT_EQ(acceptance::resolve_suite("identities"), (std::vector<int>{2, 4, 10}));
    EXPECT_EQ(acceptance::resolve_suite("7"), (std::vector<int>{7}));
    EXPECT_EQ(acceptance::resolve_suite("polynomials"), (std::vector<int>{8}));
    EXPECT_THROW(acceptance::resolve_suite("12"), std::invalid_argument);
    EXPECT_THROW(acceptance::run_criterion(0, 1), std::out_of_range);
    // "constants" names both criterion 5 and the group, and the group wins
    for (int id = 1; id <= acceptance::kCriterionCount; ++id) {
        if (id == 5) {
            continue;
        }
        EXPECT_EQ(acceptance::resolve_suite(acceptance::criterion_name(id)), (std::vector<int>{id}));
    }
}

TEST(Acceptance, CheapCriteriaAreReproducible) {
    for (int id : {1, 6, 7, 8}) {
        const auto a = acceptance::run_criterion(id, 1);
        const auto b = acceptance::run_criterion(id, 2);
        EXPECT_TRUE(a.passed) << a.name;
        EXPECT_EQ(acceptance::to_json(a).dump(), acceptance::to_json(b).dump());
    }
}

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "primwords/enumerate.hpp"
#include "primwords/growth.hpp"
#include "primwords/report.hpp"
#include "primwords/whitehead.hpp"
#include "primwords/wordmap.hpp"

namespace primwords::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    Json details;
};

inline constexpr int kCriterionCount = 11;

inline std::string criterion_name(int id) {
    static const char* const names[] = {"classic-count", "length-reduction", "oracle-equivalence",
                                        "decomposition", "constants",        "formulas",
                                        "spectrum",      "polynomials",      "trend",
                                        "wordmap",       "determinism"};
    if (id < 1 || id > kCriterionCount) {
        throw std::out_of_range("no criterion " + std::to_string(id));
    }
    return names[id - 1];
}

namespace detail {

inline long totient(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) {
                n /= p;
            }
            result -= result / p;
        }
    }
    if (n > 1) {
        result -= result / n;
    }
    return result;
}

inline Letter L(char c) { return Letter::from_char(c); }

inline LetterMask letters_mask(std::string_view s) {
    LetterMask m = 0;
    for (char c : s) {
        m |= letter_bit(L(c));
    }
    return m;
}

/// Triplet with the last generator as v and Y given as a letter string.
inline Triplet last_v_triplet(int k, std::string_view y) {
    return Triplet::make(k, letters_mask(y), Letter::make(k, +1));
}

/// Non-v letters of rank k (v = last generator) in letter order.
inline std::string non_v_letters(int k) {
    std::string out;
    for (int g = 1; g < k; ++g) {
        out += Letter::make(g, +1).to_char();
        out += Letter::make(g, -1).to_char();
    }
    return out;
}

inline std::string without(const std::string& all, std::string_view drop) {
    std::string out;
    for (char c : all) {
        if (drop.find(c) == std::string_view::npos) {
            out += c;
        }
    }
    return out;
}

inline BigInt follow(const Triplet& t, Letter start, int r) { return count_follow_tuples(t, start, r).count; }

}  // namespace detail

// 1 ---------------------------------------------------------------------------

inline CriterionResult criterion_classic_count(int threads) {
    constexpr int kMaxN = 12;
    EnumerationOptions opts;
    opts.threads = threads;
    const CountTable exhaustive = count_class(2, kMaxN, WordClass::C, opts);
    std::map<int, long> orbit;
    for (const CyclicWord& cw : orbit_primitives(2, kMaxN)) {
        ++orbit[static_cast<int>(cw.size())];
    }
    bool ok = true;
    Json rows = Json::array();
    for (int n = 1; n <= kMaxN; ++n) {
        const long expected = 4 * detail::totient(n);
        const bool row_ok = exhaustive.at(n) == expected && orbit[n] == expected;
        ok = ok && row_ok;
        rows.push_back({{"N", n},
                        {"expected", std::to_string(expected)},
                        {"exhaustive", to_decimal(exhaustive.at(n))},
                        {"orbit", std::to_string(orbit[n])},
                        {"ok", row_ok}});
    }
    return {1, criterion_name(1), ok, Json{{"rank", 2}, {"rows", rows}}};
}

// 2 ---------------------------------------------------------------------------

inline CriterionResult criterion_length_reduction(int threads) {
    constexpr int kRank = 3;
    constexpr int kExhaustiveLen = 7;
    constexpr int kSampleLen = 12;
    constexpr std::size_t kSamples = 1000;
    const auto triplets = all_triplets(kRank);

    auto check = [&](const CyclicWord& cw, long& pairs, long& failures, std::string& first_failure) {
        const WhiteheadGraph g = build_graph(cw);
        for (const Triplet& t : triplets) {
            if (!is_valid_triplet(t, g)) {
                continue;
            }
            ++pairs;
            const int e = edge_count_to(g, t.y_mask(), t.v());
            const auto image = apply_whitehead(t, cw);
            if (static_cast<long>(image.size()) != static_cast<long>(cw.size()) - e) {
                if (failures++ == 0) {
                    first_failure = cw.to_string() + " " + t.describe();
                }
            }
        }
    };

    std::vector<CyclicWord> words;
    for (int n = 1; n <= kExhaustiveLen; ++n) {
        auto layer = gen_cyclic(kRank, n);
        words.insert(words.end(), layer.begin(), layer.end());
    }
    const std::size_t exhaustive_words = words.size();
    const auto samples = sample_orbit_primitives(kRank, kSampleLen, kSamples, 20240601);
    words.insert(words.end(), samples.begin(), samples.end());

    constexpr std::size_t kShards = 64;
    std::vector<long> pairs(kShards, 0);
    std::vector<long> failures(kShards, 0);
    std::vector<std::string> first(kShards);
    parallel_for(kShards, threads, [&](std::size_t s) {
        for (std::size_t i = s; i < words.size(); i += kShards) {
            check(words[i], pairs[s], failures[s], first[s]);
        }
    });
    const long total_pairs = std::accumulate(pairs.begin(), pairs.end(), 0L);
    const long total_failures = std::accumulate(failures.begin(), failures.end(), 0L);
    std::string first_failure;
    for (const auto& f : first) {
        if (!f.empty() && (first_failure.empty() || f < first_failure)) {
            first_failure = f;
        }
    }
    const bool ok = total_failures == 0 && samples.size() == kSamples;
    Json details{{"exhaustive_words", exhaustive_words},
                 {"sampled_primitives", samples.size()},
                 {"word_triplet_pairs", total_pairs},
                 {"failures", total_failures}};
    if (!first_failure.empty()) {
        details["first_failure"] = first_failure;
    }
    return {2, criterion_name(2), ok, details};
}

// 3 ---------------------------------------------------------------------------

inline CriterionResult criterion_oracle_equivalence(int threads) {
    const std::vector<std::pair<int, int>> configs = {{3, 7}, {2, 10}};
    bool ok = true;
    Json rows = Json::array();
    for (const auto& [rank, max_len] : configs) {
        const auto orbit_list = orbit_primitives(rank, max_len);
        const std::set<CyclicWord> orbit(orbit_list.begin(), orbit_list.end());
        long words = 0;
        long primitive = 0;
        long mismatches = 0;
        std::string first_mismatch;
        for (int n = 1; n <= max_len; ++n) {
            const auto shards = reduced_shards(rank, n);
            std::vector<long> w(shards.size(), 0), p(shards.size(), 0), m(shards.size(), 0);
            std::vector<std::string> first(shards.size());
            parallel_for(shards.size(), threads, [&](std::size_t s) {
                for_each_reduced_in_shard(rank, n, shards[s], [&](std::span<const Letter> seq) {
                    ++w[s];
                    const CyclicWord cw = cyclic_word_of(rank, seq);
                    const bool greedy = is_primitive(cw);
                    const bool oracle = orbit.count(cw) > 0;
                    p[s] += greedy;
                    if (greedy != oracle && m[s]++ == 0) {
                        first[s] = letters_to_string(seq);
                    }
                });
            });
            for (std::size_t s = 0; s < shards.size(); ++s) {
                words += w[s];
                primitive += p[s];
                mismatches += m[s];
                if (first_mismatch.empty() && !first[s].empty()) {
                    first_mismatch = first[s];
                }
            }
        }
        const bool row_ok = mismatches == 0;
        ok = ok && row_ok;
        Json row{{"rank", rank},
                 {"max_len", max_len},
                 {"reduced_words", words},
                 {"primitive", primitive},
                 {"orbit_size", orbit_list.size()},
                 {"mismatches", mismatches}};
        if (!first_mismatch.empty()) {
            row["first_mismatch"] = first_mismatch;
        }
        rows.push_back(row);
    }
    return {3, criterion_name(3), ok, Json{{"rows", rows}}};
}

// 4 ---------------------------------------------------------------------------

inline CriterionResult criterion_decomposition(int threads) {
    const std::vector<std::pair<int, int>> configs = {{2, 10}, {3, 8}};
    EnumerationOptions opts;
    opts.threads = threads;
    bool ok = true;
    Json rows = Json::array();
    for (const auto& [rank, max_n] : configs) {
        const auto tables = count_classes(rank, max_n, {WordClass::C, WordClass::P}, opts);
        for (int n = 1; n <= max_n; ++n) {
            const auto r = verify_P_decomposition(rank, n, tables[0], tables[1]);
            ok = ok && r.holds;
            rows.push_back(to_json(r));
        }
    }
    return {4, criterion_name(4), ok, Json{{"rows", rows}}};
}

// 5 ---------------------------------------------------------------------------

inline CriterionResult criterion_constants(int /*threads*/) {
    using detail::follow;
    using detail::L;
    using detail::last_v_triplet;
    bool ok = true;
    Json rows = Json::array();
    auto exact = [&](const std::string& label, const Triplet& t, char start, int r, long expected) {
        const BigInt got = follow(t, L(start), r);
        const bool row_ok = got == expected;
        ok = ok && row_ok;
        rows.push_back({{"label", label},
                        {"triplet", to_json(t)},
                        {"start", std::string(1, start)},
                        {"r", r},
                        {"expected", std::to_string(expected)},
                        {"computed", to_decimal(got)},
                        {"ok", row_ok}});
    };
    auto at_most = [&](const std::string& label, const Triplet& t, std::string_view starts, int r, long bound) {
        Json got = Json::object();
        bool row_ok = true;
        for (char s : starts) {
            const BigInt c = follow(t, L(s), r);
            got[std::string(1, s)] = to_decimal(c);
            row_ok = row_ok && c <= bound;
        }
        ok = ok && row_ok;
        rows.push_back({{"label", label},
                        {"triplet", to_json(t)},
                        {"r", r},
                        {"bound", std::to_string(bound)},
                        {"computed", got},
                        {"ok", row_ok}});
    };

    exact("case2 k=4 triples after v", last_v_triplet(4, "abc"), 'd', 3, 115);
    exact("case2 k=4 quadruples after v", last_v_triplet(4, "aAb"), 'd', 4, 617);
    const Triplet c2k3 = last_v_triplet(3, "aAb");
    at_most("case2 k=3 pairs after non-v letters", c2k3, "aAbBC", 2, 8);
    {
        const BigInt nine = follow(c2k3, L('c'), 9);
        const bool below = nine < 19683;
        ok = ok && below;
        std::string matches = "neither";
        if (nine == 17833) {
            matches = "17,833";
        } else if (nine == 17883) {
            matches = "17,883";
        }
        rows.push_back({{"label", "case2 k=3 9-tuples after v"},
                        {"triplet", to_json(c2k3)},
                        {"start", "c"},
                        {"r", 9},
                        {"bound", "19683"},
                        {"computed", to_decimal(nine)},
                        {"matches_printed_figure", matches},
                        {"ok", below}});
    }
    const Triplet c3k3 = last_v_triplet(3, "AB");
    exact("case3 k=3 5-tuples after a", c3k3, 'a', 5, 237);
    exact("case3 k=3 5-tuples after b", c3k3, 'b', 5, 237);
    exact("case3 k=3 16-tuples after v", c3k3, 'c', 16, 41372449);
    at_most("case3 k=3 pairs after v^-1", c3k3, "C", 2, 7);
    at_most("case3 k=3 letters after a^-1, b^-1", c3k3, "AB", 1, 2);
    exact("case4 k=4 quadruples after v", last_v_triplet(4, "ab"), 'd', 4, 613);
    exact("case5 k=5 quadruples after v", last_v_triplet(5, "AbBcCdD"), 'e', 4, 1951);
    exact("case5 k=4 quadruples after v", last_v_triplet(4, "AbBcC"), 'd', 4, 557);
    return {5, criterion_name(5), ok, Json{{"rows", rows}}};
}

// 6 ---------------------------------------------------------------------------

inline CriterionResult criterion_formulas(int /*threads*/) {
    using detail::follow;
    using detail::last_v_triplet;
    bool ok = true;
    Json rows = Json::array();
    for (int k = 4; k <= 8; ++k) {
        const std::string xs = detail::non_v_letters(k);
        const char v = Letter::make(k, +1).to_char();
        const char vinv = Letter::make(k, -1).to_char();
        Json checks = Json::array();
        auto check = [&](const std::string& label, CaseFormula f, const std::string& y, char start, int r,
                         FormulaParams params = {}) {
            const Triplet t = last_v_triplet(k, y);
            const BigInt got = follow(t, Letter::from_char(start), r);
            const long long expected = case_formula(f, k, params);
            const bool c_ok = got == expected;
            ok = ok && c_ok;
            checks.push_back({{"label", label},
                              {"Y", y},
                              {"start", std::string(1, start)},
                              {"r", r},
                              {"formula", std::to_string(expected)},
                              {"computed", to_decimal(got)},
                              {"ok", c_ok}});
        };
        const std::string y3a = detail::without(xs, "aA");
        check("case3 Z={v^-1,a,A} triples after v", CaseFormula::Case3VTriplesLetterPair, y3a, v, 3);
        check("case3 Z={v^-1,a,A} pairs after b", CaseFormula::Case3YPairs, y3a, 'b', 2);
        check("case3 Z={v^-1,a,A} pairs after a", CaseFormula::Case3APairs, y3a, 'a', 2);
        check("case3 Z={v^-1,a,A} pairs after A", CaseFormula::Case3APairs, y3a, 'A', 2);
        check("case3 Z={v^-1,a,A} pairs after v", CaseFormula::Case3VPairs, y3a, v, 2);
        check("case3 Z={v^-1,a,b} triples after v", CaseFormula::Case3VTriplesDistinct, detail::without(xs, "ab"), v,
              3);
        check("case4 Y={a,b} pairs after A", CaseFormula::Case4InversePairs, "ab", 'A', 2);
        check("case4 Y={a,b} pairs after c", CaseFormula::Case4ZPairPairs, "ab", 'c', 2);
        check("case4 Y={a,b} pairs after v^-1", CaseFormula::Case4VInversePairs, "ab", vinv, 2);
        check("case4 Y={a,b} triples after v", CaseFormula::Case4VTriples, "ab", v, 3);
        const std::string y5 = detail::without(xs, "a");
        check("case5 Z={v^-1,a} pairs after A", CaseFormula::Case5InversePairs, y5, 'A', 2);
        check("case5 Z={v^-1,a} pairs after b", CaseFormula::Case5YPairPairs, y5, 'b', 2);
        check("case5 Z={v^-1,a} triples after v", CaseFormula::Case5VTriples, y5, v, 3);
        check("case2 Y={a,A,b} pairs after v", CaseFormula::Case2PairsAfterV, "aAb", v, 2);
        for (int y = 1; y <= 2 * k - 2; ++y) {
            const int z = 2 * k - 1 - y;
            const std::string head = xs.substr(0, static_cast<std::size_t>(y));
            const std::string tail = xs.substr(xs.size() - static_cast<std::size_t>(y));
            check("case1 pairs after v, leading Y", CaseFormula::Case1PairsAfterV, head, v, 2, {y, z});
            check("case1 pairs after v, trailing Y", CaseFormula::Case1PairsAfterV, tail, v, 2, {y, z});
        }
        rows.push_back({{"k", k}, {"checks", checks}});
    }
    return {6, criterion_name(6), ok, Json{{"rows", rows}}};
}

// 7 ---------------------------------------------------------------------------

inline CriterionResult criterion_spectrum(int threads) {
    constexpr double kMargin = 1e-6;
    constexpr double kExactTol = 1e-9;
    bool ok = true;
    Json rows = Json::array();
    for (int k = 3; k <= 5; ++k) {
        const auto triplets = shape_triplets(k);
        std::vector<double> rho(triplets.size());
        parallel_for(triplets.size(), threads, [&](std::size_t i) { rho[i] = spectral_radius(triplets[i]); });
        const double base = 2.0 * k - 3;
        struct Range {
            int count = 0;
            double lo = INFINITY;
            double hi = -INFINITY;
        };
        std::map<ShapeKind, Range> ranges;
        long violations = 0;
        std::string first_violation;
        for (std::size_t i = 0; i < triplets.size(); ++i) {
            const ShapeKind s = shape_kind(triplets[i]);
            auto& r = ranges[s];
            ++r.count;
            r.lo = std::min(r.lo, rho[i]);
            r.hi = std::max(r.hi, rho[i]);
            bool good = rho[i] < 2.0 * k - 1 - kMargin;
            switch (s) {
                case ShapeKind::Negligible: good = good && rho[i] <= base - kMargin; break;
                case ShapeKind::SingleLetterY:
                case ShapeKind::LetterPairY: good = good && rho[i] > base; break;
                case ShapeKind::SingletonZ: good = good && std::abs(rho[i] - base) <= kExactTol; break;
            }
            if (!good && violations++ == 0) {
                first_violation = triplets[i].describe();
            }
        }
        ok = ok && violations == 0;
        Json shapes = Json::object();
        for (const auto& [s, r] : ranges) {
            shapes[shape_kind_name(s)] = {{"count", r.count}, {"min", round12(r.lo)}, {"max", round12(r.hi)}};
        }
        Json row{{"k", k}, {"triplets", triplets.size()}, {"shapes", shapes}, {"violations", violations}};
        if (!first_violation.empty()) {
            row["first_violation"] = first_violation;
        }
        rows.push_back(row);
    }
    return {7, criterion_name(7), ok, Json{{"rows", rows}}};
}

// 8 ---------------------------------------------------------------------------

inline CriterionResult criterion_polynomials(int /*threads*/) {
    constexpr double kAgreement = 1e-6;
    constexpr double kFootnote = 0.01;
    bool ok = true;
    Json rows = Json::array();
    for (int k = 3; k <= 6; ++k) {
        const std::pair<std::string, PolynomialCase> families[] = {{"a", PolynomialCase::SingleLetterY},
                                                                   {"aA", PolynomialCase::LetterPairY}};
        for (const auto& [y, pc] : families) {
            const double rho = spectral_radius(detail::last_v_triplet(k, y));
            const double root = largest_real_root(characteristic_polynomial(pc, k), 2.0 * k);
            const bool row_ok = std::abs(rho - root) <= kAgreement;
            ok = ok && row_ok;
            rows.push_back({{"k", k},
                            {"family", case_name(pc)},
                            {"spectral_radius", round12(rho)},
                            {"root", round12(root)},
                            {"ok", row_ok}});
        }
    }
    const std::tuple<std::string, PolynomialCase, double> footnotes[] = {
        {"aAb", PolynomialCase::YThreeRankThree, 2.68}, {"AB", PolynomialCase::ZThreeRankThree, 2.85}};
    for (const auto& [y, pc, stated] : footnotes) {
        const double root = largest_real_root(characteristic_polynomial(pc, 3), 6.0);
        const double rho = spectral_radius(detail::last_v_triplet(3, y));
        const bool row_ok = std::abs(root - stated) <= kFootnote && std::abs(rho - stated) <= kFootnote;
        ok = ok && row_ok;
        rows.push_back({{"k", 3},
                        {"family", case_name(pc)},
                        {"Y", y},
                        {"stated", stated},
                        {"root", round12(root)},
                        {"spectral_radius", round12(rho)},
                        {"ok", row_ok}});
    }
    return {8, criterion_name(8), ok, Json{{"rows", rows}}};
}

// 9 ---------------------------------------------------------------------------

inline CriterionResult criterion_trend(int threads) {
    constexpr int kRank = 3;
    constexpr int kEarly = 7;
    constexpr int kLate = 11;
    constexpr double kBand = 0.15;
    const double limit = 24.0 / 9.0;
    EnumerationOptions opts;
    opts.threads = threads;
    opts.force = true;
    const auto tables = count_classes(kRank, kLate, {WordClass::C, WordClass::L}, opts);
    auto ratio = [&](int n) { return to_double(Rational(tables[0].at(n), big_pow(3, static_cast<unsigned>(n)))); };
    auto deviation = [&](int n) { return std::abs(ratio(n) - limit) / limit; };
    auto share = [&](int n) {
        return to_double(Rational(tables[0].at(n) - tables[1].at(n), tables[0].at(n)));
    };
    const bool in_band = deviation(kLate) <= kBand;
    const bool deviation_shrinks = deviation(kLate) < deviation(kEarly);
    const bool share_shrinks = share(kLate) < share(kEarly);
    Json rows = Json::array();
    for (int n = 1; n <= kLate; ++n) {
        rows.push_back({{"N", n},
                        {"C", to_decimal(tables[0].at(n))},
                        {"L", to_decimal(tables[1].at(n))},
                        {"C_over_3N", round12(ratio(n))},
                        {"relative_deviation", round12(deviation(n))},
                        {"C_minus_L_share", round12(share(n))}});
    }
    return {9,
            criterion_name(9),
            in_band && deviation_shrinks && share_shrinks,
            Json{{"limit", round12(limit)},
                 {"within_band_at_11", in_band},
                 {"deviation_shrinks", deviation_shrinks},
                 {"share_shrinks", share_shrinks},
                 {"rows", rows}}};
}

// 10 --------------------------------------------------------------------------

inline CriterionResult criterion_wordmap(int threads) {
    bool ok = true;
    Json rows = Json::array();
    const Word x1 = parse_word("a", 2);
    const Word x1sq = parse_word("aa", 2);
    for (int n = 1; n <= 4; ++n) {
        const Rational e = expected_fixed_points(x1, n, threads);
        ok = ok && e == 1;
        rows.push_back({{"word", "a"}, {"n", n}, {"expected_fix", to_decimal(e)}, {"target", "1"}});
    }
    for (int n = 2; n <= 4; ++n) {
        const Rational e = expected_fixed_points(x1sq, n, threads);
        ok = ok && e == 2;
        rows.push_back({{"word", "aa"}, {"n", n}, {"expected_fix", to_decimal(e)}, {"target", "2"}});
    }
    Json identities = Json::array();
    for (const char* w2 : {"bbb", "bb"}) {
        for (int n = 3; n <= 4; ++n) {
            const auto r = verify_convolution_identity(x1sq, parse_word(w2, 2), n, threads);
            ok = ok && r.holds;
            identities.push_back({{"w1", "aa"},
                                  {"w2", w2},
                                  {"n", n},
                                  {"p1", to_decimal(r.p1)},
                                  {"p2", to_decimal(r.p2)},
                                  {"lhs", to_decimal(r.lhs)},
                                  {"rhs", to_decimal(r.rhs)},
                                  {"holds", r.holds}});
        }
    }
    return {10, criterion_name(10), ok, Json{{"expectations", rows}, {"convolution", identities}}};
}

// dispatch --------------------------------------------------------------------

inline CriterionResult run_criterion(int id, int threads);

inline int parallel_thread_count() { return std::max(default_threads(), 4); }

// 11 --------------------------------------------------------------------------

inline CriterionResult criterion_determinism(int /*threads*/) {
    const int wide = parallel_thread_count();
    bool ok = true;
    Json rows = Json::array();
    for (int id = 1; id <= 10; ++id) {
        const auto serial = run_criterion(id, 1);
        const auto parallel = run_criterion(id, wide);
        const bool same = serial.details.dump() == parallel.details.dump() && serial.passed == parallel.passed;
        ok = ok && same;
        rows.push_back({{"criterion", id}, {"identical", same}});
    }
    return {11, criterion_name(11), ok, Json{{"threads", Json::array({1, wide})}, {"rows", rows}}};
}

inline CriterionResult run_criterion(int id, int threads) {
    switch (id) {
        case 1: return criterion_classic_count(threads);
        case 2: return criterion_length_reduction(threads);
        case 3: return criterion_oracle_equivalence(threads);
        case 4: return criterion_decomposition(threads);
        case 5: return criterion_constants(threads);
        case 6: return criterion_formulas(threads);
        case 7: return criterion_spectrum(threads);
        case 8: return criterion_polynomials(threads);
        case 9: return criterion_trend(threads);
        case 10: return criterion_wordmap(threads);
        case 11: return criterion_determinism(threads);
        default: throw std::out_of_range("no criterion " + std::to_string(id));
    }
}

/// Criterion ids selected by a suite name: "all", a number, a criterion name,
/// or one of the groups "constants", "identities", "trends".
inline std::vector<int> resolve_suite(std::string_view name) {
    if (name == "all") {
        std::vector<int> all(kCriterionCount);
        std::iota(all.begin(), all.end(), 1);
        return all;
    }
    if (name == "constants") {
        return {5, 6};
    }
    if (name == "identities") {
        return {2, 4, 10};
    }
    if (name == "trends") {
        return {9};
    }
    for (int id = 1; id <= kCriterionCount; ++id) {
        if (name == std::to_string(id) || name == criterion_name(id)) {
            return {id};
        }
    }
    throw std::invalid_argument("unknown suite: " + std::string(name));
}

inline Json to_json(const CriterionResult& r) {
    return Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"details", r.details}};
}

}  // namespace primwords::acceptance

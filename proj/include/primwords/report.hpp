#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "primwords/enumerate.hpp"
#include "primwords/growth.hpp"
#include "primwords/numeric.hpp"
#include "primwords/whitehead.hpp"
#include "primwords/wordmap.hpp"

namespace primwords {

/// Insertion-ordered JSON so that reports serialize byte-identically.
using Json = nlohmann::ordered_json;

inline std::string mask_string(LetterMask m) {
    std::string out;
    for (Letter l : mask_letters(m)) {
        out += l.to_char();
    }
    return out;
}

inline Json to_json(const Triplet& t) {
    return Json{{"v", std::string(1, t.v().to_char())}, {"Y", mask_string(t.y_mask())}, {"Z", mask_string(t.z_mask())}};
}

inline Json to_json(const WhiteheadGraph& g) {
    Json edges = Json::array();
    for (const auto& e : g.edges()) {
        edges.push_back({{"u", std::string(1, e.u.to_char())}, {"w", std::string(1, e.w.to_char())}, {"mult", e.mult}});
    }
    return Json{{"rank", g.rank()}, {"edges", edges}};
}

inline Json to_json(const CountTable& t) {
    Json counts = Json::object();
    for (const auto& [n, c] : t.counts) {
        counts[std::to_string(n)] = to_decimal(c);
    }
    return Json{{"rank", t.rank}, {"class", class_name(t.cls)}, {"counts", counts}};
}

inline std::string count_tables_csv(const std::vector<CountTable>& tables) {
    std::ostringstream os;
    os << "rank,class,N,count\n";
    for (const auto& t : tables) {
        for (const auto& [n, c] : t.counts) {
            os << t.rank << ',' << class_name(t.cls) << ',' << n << ',' << to_decimal(c) << '\n';
        }
    }
    return os.str();
}

inline Json to_json(const DecompositionReport& r) {
    return Json{{"rank", r.rank},
                {"N", r.length},
                {"direct", to_decimal(r.direct)},
                {"predicted", to_decimal(r.predicted)},
                {"literal_reading", to_decimal(r.literal)},
                {"holds", r.holds}};
}

inline Json to_json(const TupleCount& t) {
    return Json{{"start", std::string(1, t.start.to_char())}, {"r", t.r}, {"count", to_decimal(t.count)}};
}

/// Growth summary of one triplet; tuple counts are included when requested.
inline Json growth_report(const Triplet& t, const std::vector<TupleCount>& tuples = {}, double tol = 1e-12) {
    const TransferMatrix m(t);
    const double rho = spectral_radius(m, tol);
    const int k = t.rank();
    Json out{{"triplet", to_json(t)},
             {"shape", shape_kind_name(shape_kind(t))},
             {"spectral_radius", round12(rho)},
             {"row_sums", m.row_sums()}};
    const double base = 2.0 * k - 3;
    std::string cmp = "= 2k-3";
    if (rho > base + 1e-9) {
        cmp = "> 2k-3";
    } else if (rho < base - 1e-9) {
        cmp = "< 2k-3";
    }
    out["versus_2k_minus_3"] = cmp;
    const ShapeKind s = shape_kind(t);
    if (s == ShapeKind::SingleLetterY || s == ShapeKind::LetterPairY) {
        const auto poly =
            characteristic_polynomial(s == ShapeKind::SingleLetterY ? PolynomialCase::SingleLetterY : PolynomialCase::LetterPairY, k);
        const double root = largest_real_root(poly, 2.0 * k);
        out["polynomial"] = poly.to_string();
        out["polynomial_root"] = round12(root);
    }
    Json counts = Json::array();
    for (const auto& tc : tuples) {
        counts.push_back(to_json(tc));
    }
    out["tuple_counts"] = counts;
    return out;
}

inline Json exact_wordmap_report(const Word& w, int n, int threads = default_threads()) {
    return Json{{"word", w.to_string()},
                {"n", n},
                {"expected_fix", to_decimal(expected_fixed_points(w, n, threads))},
                {"exact", true}};
}

inline Json mc_wordmap_report(const Word& w, int n, std::uint64_t samples, std::uint64_t seed,
                              int threads = default_threads()) {
    const auto est = mc_expected_fixed_points(w, n, samples, seed, threads);
    return Json{{"word", w.to_string()},
                {"n", n},
                {"exact", false},
                {"estimate", round12(est.mean)},
                {"stderr", round12(est.std_error)},
                {"samples", est.samples},
                {"seed", est.seed}};
}

}  // namespace primwords

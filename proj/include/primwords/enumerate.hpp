#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "primwords/numeric.hpp"
#include "primwords/parallel.hpp"
#include "primwords/whitehead.hpp"
#include "primwords/word.hpp"

namespace primwords {

// ---------------------------------------------------------------------------
// Exhaustive generation
// ---------------------------------------------------------------------------

namespace detail {

template <class Fn>
void extend_reduced(int rank, std::size_t n, std::vector<Letter>& buf, Fn& fn) {
    if (buf.size() == n) {
        fn(std::span<const Letter>(buf));
        return;
    }
    for (int c = 0; c < alphabet_size(rank); ++c) {
        const Letter l = Letter::from_code(c);
        if (!buf.empty() && l == buf.back().inverse()) {
            continue;
        }
        buf.push_back(l);
        extend_reduced(rank, n, buf, fn);
        buf.pop_back();
    }
}

// Constrained FKM: `buf` is a reduced prenecklace with smallest period `p`.
template <class Fn>
void extend_necklace(int rank, std::size_t n, std::vector<Letter>& buf, std::size_t p, Fn& fn) {
    const std::size_t t = buf.size();
    if (t == n) {
        if (n % p == 0 && buf.back() != buf.front().inverse()) {
            fn(std::span<const Letter>(buf));
        }
        return;
    }
    const int lo = buf[t - p].code();
    for (int c = lo; c < alphabet_size(rank); ++c) {
        const Letter l = Letter::from_code(c);
        if (l == buf.back().inverse()) {
            continue;
        }
        buf.push_back(l);
        extend_necklace(rank, n, buf, c == lo ? p : t + 1, fn);
        buf.pop_back();
    }
}

}  // namespace detail

/// Shard prefixes for reduced words of length n: every reduced prefix of
/// length min(n, 2), in letter order.
inline std::vector<std::vector<Letter>> reduced_shards(int rank, int n) {
    std::vector<std::vector<Letter>> out;
    const std::size_t depth = static_cast<std::size_t>(std::min(n, 2));
    auto collect = [&](std::span<const Letter> s) { out.emplace_back(s.begin(), s.end()); };
    std::vector<Letter> buf;
    detail::extend_reduced(rank, depth, buf, collect);
    return out;
}

template <class Fn>
void for_each_reduced_in_shard(int rank, int n, const std::vector<Letter>& prefix, Fn&& fn) {
    std::vector<Letter> buf = prefix;
    buf.reserve(static_cast<std::size_t>(n));
    detail::extend_reduced(rank, static_cast<std::size_t>(n), buf, fn);
}

/// Visits every freely reduced word of length n exactly once, in letter order.
template <class Fn>
void for_each_reduced(int rank, int n, Fn&& fn) {
    check_rank(rank);
    for (const auto& prefix : reduced_shards(rank, n)) {
        for_each_reduced_in_shard(rank, n, prefix, fn);
    }
}

inline std::vector<Word> gen_reduced(int rank, int n) {
    std::vector<Word> out;
    for_each_reduced(rank, n, [&](std::span<const Letter> s) {
        out.push_back(Word::from_reduced(rank, {s.begin(), s.end()}));
    });
    return out;
}

struct NecklaceShard {
    std::vector<Letter> prefix;
    std::size_t period;
};

/// Reduced prenecklace prefixes of length min(n, 2) with their periods.
inline std::vector<NecklaceShard> necklace_shards(int rank, int n) {
    std::vector<NecklaceShard> out;
    for (int a = 0; a < alphabet_size(rank); ++a) {
        const Letter first = Letter::from_code(a);
        if (n == 1) {
            out.push_back({{first}, 1});
            continue;
        }
        for (int b = a; b < alphabet_size(rank); ++b) {
            const Letter second = Letter::from_code(b);
            if (second == first.inverse()) {
                continue;
            }
            out.push_back({{first, second}, b == a ? std::size_t{1} : std::size_t{2}});
        }
    }
    return out;
}

template <class Fn>
void for_each_necklace_in_shard(int rank, int n, const NecklaceShard& shard, Fn&& fn) {
    std::vector<Letter> buf = shard.prefix;
    buf.reserve(static_cast<std::size_t>(n));
    detail::extend_necklace(rank, static_cast<std::size_t>(n), buf, shard.period, fn);
}

/// Visits the canonical (minimal-rotation) representative of every cyclically
/// reduced necklace of length n exactly once, in lexicographic order.
template <class Fn>
void for_each_necklace(int rank, int n, Fn&& fn) {
    check_rank(rank);
    for (const auto& shard : necklace_shards(rank, n)) {
        for_each_necklace_in_shard(rank, n, shard, fn);
    }
}

inline std::vector<CyclicWord> gen_cyclic(int rank, int n) {
    std::vector<CyclicWord> out;
    for_each_necklace(rank, n, [&](std::span<const Letter> s) {
        out.push_back(CyclicWord::from_canonical(rank, {s.begin(), s.end()}));
    });
    return out;
}

// ---------------------------------------------------------------------------
// Orbit oracle
// ---------------------------------------------------------------------------

/// Letter-image tables of every generator permutation combined with every
/// choice of generator inversions (k! * 2^k maps).
inline std::vector<std::vector<Letter>> permutation_maps(int rank) {
    std::vector<int> perm(static_cast<std::size_t>(rank));
    for (int i = 0; i < rank; ++i) {
        perm[static_cast<std::size_t>(i)] = i + 1;
    }
    std::vector<std::vector<Letter>> out;
    do {
        for (std::uint32_t signs = 0; signs < (1u << rank); ++signs) {
            std::vector<Letter> image(static_cast<std::size_t>(alphabet_size(rank)));
            for (int g = 1; g <= rank; ++g) {
                const int s = (signs >> (g - 1)) & 1u ? -1 : +1;
                const Letter img = Letter::make(perm[static_cast<std::size_t>(g - 1)], s);
                image[static_cast<std::size_t>(Letter::make(g, +1).code())] = img;
                image[static_cast<std::size_t>(Letter::make(g, -1).code())] = img.inverse();
            }
            out.push_back(std::move(image));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

inline CyclicWord apply_letter_map(const std::vector<Letter>& image, const CyclicWord& cw) {
    std::vector<Letter> out;
    out.reserve(cw.size());
    for (Letter l : cw.letters()) {
        out.push_back(image[static_cast<std::size_t>(l.code())]);
    }
    return CyclicWord::canonical(cw.rank(), std::move(out));
}

/// Closure of the single-letter cyclic words under every Whitehead
/// automorphism and every permutation/inversion of generators, restricted to
/// cyclic length <= max_len. Sorted by (length, letters).
inline std::vector<CyclicWord> orbit_primitives(int rank, int max_len) {
    check_rank(rank);
    if (rank < 2 || max_len < 1) {
        throw std::invalid_argument("orbit_primitives: need rank >= 2 and max_len >= 1");
    }
    std::vector<WhiteheadMap> moves;
    for (const Triplet& t : all_triplets(rank)) {
        moves.emplace_back(t);
    }
    const auto perms = permutation_maps(rank);

    std::unordered_set<CyclicWord> seen;
    std::vector<CyclicWord> frontier;
    for (int g = 1; g <= rank; ++g) {
        CyclicWord cw = CyclicWord::from_canonical(rank, {Letter::make(g, +1)});
        if (seen.insert(cw).second) {
            frontier.push_back(cw);
        }
    }
    while (!frontier.empty()) {
        std::vector<CyclicWord> next;
        for (const CyclicWord& cw : frontier) {
            auto visit = [&](CyclicWord image) {
                if (static_cast<int>(image.size()) <= max_len && seen.insert(image).second) {
                    next.push_back(std::move(image));
                }
            };
            for (const auto& m : moves) {
                visit(apply_whitehead(m, cw));
            }
            for (const auto& p : perms) {
                visit(apply_letter_map(p, cw));
            }
        }
        frontier = std::move(next);
    }
    std::vector<CyclicWord> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const CyclicWord& a, const CyclicWord& b) {
        if (a.size() != b.size()) {
            return a.size() < b.size();
        }
        return a < b;
    });
    return out;
}

/// Distinct primitive cyclic words of length <= max_len reached by seeded
/// random walks of Whitehead moves from single letters. Deterministic in seed.
inline std::vector<CyclicWord> sample_orbit_primitives(int rank, int max_len, std::size_t count,
                                                       std::uint64_t seed) {
    std::vector<WhiteheadMap> moves;
    for (const Triplet& t : all_triplets(rank)) {
        moves.emplace_back(t);
    }
    const auto perms = permutation_maps(rank);
    std::mt19937_64 rng(seed);
    std::set<CyclicWord> found;
    std::vector<CyclicWord> ordered;
    const std::size_t max_walks = count * 1000;
    for (std::size_t walk = 0; walk < max_walks && ordered.size() < count; ++walk) {
        const auto g = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(rank))) + 1;
        CyclicWord cw = CyclicWord::from_canonical(rank, {Letter::make(g, +1)});
        const std::uint64_t steps = 1 + uniform_below(rng, static_cast<std::uint64_t>(4 * max_len));
        for (std::uint64_t s = 0; s < steps; ++s) {
            CyclicWord image = uniform_below(rng, 8) == 0
                                   ? apply_letter_map(perms[uniform_below(rng, perms.size())], cw)
                                   : apply_whitehead(moves[uniform_below(rng, moves.size())], cw);
            if (static_cast<int>(image.size()) <= max_len) {
                cw = std::move(image);
            }
        }
        if (found.insert(cw).second) {
            ordered.push_back(cw);
        }
    }
    return ordered;
}

// ---------------------------------------------------------------------------
// Classes
// ---------------------------------------------------------------------------

enum class WordClass { P, C, L, S, Sbar, M, Mc, Ltilde, AllReduced, AllCyclic };

inline constexpr std::array<WordClass, 10> kAllClasses = {
    WordClass::P,  WordClass::C,      WordClass::L,          WordClass::S,        WordClass::Sbar,
    WordClass::M,  WordClass::Mc,     WordClass::Ltilde,     WordClass::AllReduced, WordClass::AllCyclic};

inline std::string class_name(WordClass c) {
    switch (c) {
        case WordClass::P: return "P";
        case WordClass::C: return "C";
        case WordClass::L: return "L";
        case WordClass::S: return "S";
        case WordClass::Sbar: return "Sbar";
        case WordClass::M: return "M";
        case WordClass::Mc: return "Mc";
        case WordClass::Ltilde: return "Ltilde";
        case WordClass::AllReduced: return "AllReduced";
        case WordClass::AllCyclic: return "AllCyclic";
    }
    return "?";
}

inline WordClass parse_class(std::string_view name) {
    for (WordClass c : kAllClasses) {
        if (class_name(c) == name) {
            return c;
        }
    }
    throw std::invalid_argument("unknown class: " + std::string(name));
}

/// P, S and AllReduced are counted over reduced words; the rest over necklaces.
constexpr bool counts_reduced_words(WordClass c) {
    return c == WordClass::P || c == WordClass::S || c == WordClass::AllReduced;
}

class ClassSet {
public:
    void add(WordClass c) { bits_ |= 1u << static_cast<unsigned>(c); }
    bool has(WordClass c) const { return (bits_ >> static_cast<unsigned>(c)) & 1u; }
    bool empty() const { return bits_ == 0; }

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        for (WordClass c : kAllClasses) {
            if (has(c)) {
                out.push_back(class_name(c));
            }
        }
        return out;
    }

    friend bool operator==(ClassSet, ClassSet) = default;

private:
    std::uint32_t bits_ = 0;
};

/// Some generator occurs (with either sign) exactly once.
inline bool has_single_letter(const CyclicWord& cw) {
    const auto counts = generator_counts(cw.rank(), cw.letters());
    return std::find(counts.begin(), counts.end(), 1) != counts.end();
}

/// Maximal cyclic runs of x^{+-1} that sit as v x^m v^{-1}.
inline int conjugated_blocks(const CyclicWord& cw, int generator, Letter v) {
    const auto s = cw.letters();
    const std::size_t n = s.size();
    auto in_block = [&](std::size_t i) { return s[i % n].generator() == generator; };
    int blocks = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!in_block(i) || in_block(i + n - 1)) {
            continue;
        }
        std::size_t j = i;
        while (in_block(j + 1)) {
            ++j;
        }
        if (s[(i + n - 1) % n] == v && s[(j + 1) % n] == v.inverse()) {
            ++blocks;
        }
    }
    return blocks;
}

/// Triplets witnessing membership of cw in M: Y = {x} with x^{+-1} occurring
/// at least 4 times, or Y = {x, x^{-1}} with at least 2 blocks v x^m v^{-1}.
/// Only meaningful for primitive cw outside L.
inline std::vector<Triplet> m_witnesses(const CyclicWord& cw) {
    const int rank = cw.rank();
    const auto counts = generator_counts(rank, cw.letters());
    std::vector<Triplet> out;
    for (int xc = 0; xc < alphabet_size(rank); ++xc) {
        const Letter x = Letter::from_code(xc);
        if (counts[static_cast<std::size_t>(x.generator() - 1)] < 4) {
            continue;
        }
        for (int vc = 0; vc < alphabet_size(rank); ++vc) {
            const Letter v = Letter::from_code(vc);
            if (v.generator() == x.generator()) {
                continue;
            }
            const Triplet t = Triplet::make(rank, letter_bit(x), v);
            if (is_valid_triplet(t, cw)) {
                out.push_back(t);
            }
        }
    }
    for (int g = 1; g <= rank; ++g) {
        const LetterMask y = letter_bit(Letter::make(g, +1)) | letter_bit(Letter::make(g, -1));
        for (int vc = 0; vc < alphabet_size(rank); ++vc) {
            const Letter v = Letter::from_code(vc);
            if (v.generator() == g) {
                continue;
            }
            const Triplet t = Triplet::make(rank, y, v);
            if (is_valid_triplet(t, cw) && conjugated_blocks(cw, g, v) >= 2) {
                out.push_back(t);
            }
        }
    }
    return out;
}

/// Labels among {C, L, M, Mc, Ltilde, Sbar} that cw belongs to.
inline ClassSet classify(const CyclicWord& cw) {
    if (cw.empty()) {
        throw std::invalid_argument("classify: empty cyclic word");
    }
    ClassSet out;
    const Minimization m = minimize(cw);
    const bool primitive = m.min_core.size() == 1;
    const bool free_factor = m.min_core.size() <= 1 ||
                             static_cast<int>(letters_used(m.min_core).size()) < cw.rank();
    if (free_factor && cw.rank() >= 2) {
        out.add(WordClass::Sbar);
    }
    const bool single = has_single_letter(cw);
    if (single) {
        out.add(WordClass::L);
    }
    if (!primitive) {
        return out;
    }
    out.add(WordClass::C);
    if (single) {
        return out;
    }
    const auto witnesses = m_witnesses(cw);
    if (witnesses.empty()) {
        out.add(WordClass::Mc);
        return out;
    }
    out.add(WordClass::M);
    for (const Triplet& t : witnesses) {
        if (has_single_letter(apply_whitehead(t, cw))) {
            out.add(WordClass::Ltilde);
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Count tables
// ---------------------------------------------------------------------------

struct CountTable {
    int rank = 0;
    WordClass cls = WordClass::C;
    std::map<int, BigInt> counts;

    const BigInt& at(int n) const {
        const auto it = counts.find(n);
        if (it == counts.end()) {
            throw std::out_of_range("count table " + class_name(cls) + " has no length " +
                                    std::to_string(n));
        }
        return it->second;
    }
};

class WorkBoundExceeded : public std::runtime_error {
public:
    explicit WorkBoundExceeded(double estimate, double bound, const std::string& unit = "word visits")
        : std::runtime_error("estimated " + std::to_string(static_cast<long long>(estimate)) + " " + unit +
                             " exceeds bound " +
                             std::to_string(static_cast<long long>(bound))),
          estimate_(estimate) {}
    double estimate() const { return estimate_; }

private:
    double estimate_;
};

struct EnumerationOptions {
    int threads = default_threads();
    bool force = false;
    double work_bound = 1e8;
};

/// Estimated visits: 2k(2k-1)^{N-1} per length for each universe touched.
inline double estimate_work(int rank, int max_len, const std::vector<WordClass>& classes) {
    const bool reduced = std::any_of(classes.begin(), classes.end(), counts_reduced_words);
    const bool cyclic = std::any_of(classes.begin(), classes.end(),
                                    [](WordClass c) { return !counts_reduced_words(c); });
    double per_universe = 0;
    for (int n = 1; n <= max_len; ++n) {
        per_universe += 2.0 * rank * std::pow(2.0 * rank - 1, n - 1);
    }
    return per_universe * ((reduced ? 1 : 0) + (cyclic ? 1 : 0));
}

inline std::vector<CountTable> count_classes(int rank, int max_len, const std::vector<WordClass>& classes,
                                             const EnumerationOptions& opts = {}) {
    check_rank(rank);
    if (rank < 2) {
        throw std::invalid_argument("count_classes: rank must be at least 2");
    }
    if (max_len < 1) {
        throw std::invalid_argument("count_classes: max_len must be at least 1");
    }
    if (classes.empty()) {
        throw std::invalid_argument("count_classes: no classes requested");
    }
    const double work = estimate_work(rank, max_len, classes);
    if (!opts.force && work > opts.work_bound) {
        throw WorkBoundExceeded(work, opts.work_bound);
    }

    constexpr std::size_t kClasses = kAllClasses.size();
    using Tally = std::array<std::uint64_t, kClasses>;
    auto want = [&](WordClass c) { return std::find(classes.begin(), classes.end(), c) != classes.end(); };
    const bool need_reduced = std::any_of(classes.begin(), classes.end(), counts_reduced_words);
    const bool need_cyclic = std::any_of(classes.begin(), classes.end(),
                                         [](WordClass c) { return !counts_reduced_words(c); });
    const bool need_classify = want(WordClass::C) || want(WordClass::L) || want(WordClass::Sbar) ||
                               want(WordClass::M) || want(WordClass::Mc) || want(WordClass::Ltilde);
    const bool need_reduced_minimize = want(WordClass::P) || want(WordClass::S);

    std::vector<CountTable> tables;
    for (WordClass c : classes) {
        tables.push_back({rank, c, {}});
    }
    auto bump = [](Tally& t, WordClass c) { ++t[static_cast<std::size_t>(c)]; };

    for (int n = 1; n <= max_len; ++n) {
        Tally total{};
        if (need_cyclic) {
            const auto shards = necklace_shards(rank, n);
            std::vector<Tally> partial(shards.size(), Tally{});
            parallel_for(shards.size(), opts.threads, [&](std::size_t i) {
                Tally& t = partial[i];
                for_each_necklace_in_shard(rank, n, shards[i], [&](std::span<const Letter> s) {
                    bump(t, WordClass::AllCyclic);
                    if (!need_classify) {
                        return;
                    }
                    const CyclicWord cw = CyclicWord::from_canonical(rank, {s.begin(), s.end()});
                    const ClassSet labels = classify(cw);
                    for (WordClass c : {WordClass::C, WordClass::L, WordClass::Sbar, WordClass::M,
                                        WordClass::Mc, WordClass::Ltilde}) {
                        if (labels.has(c)) {
                            bump(t, c);
                        }
                    }
                });
            });
            for (const Tally& t : partial) {
                for (std::size_t c = 0; c < kClasses; ++c) {
                    total[c] += t[c];
                }
            }
        }
        if (need_reduced) {
            const auto shards = reduced_shards(rank, n);
            std::vector<Tally> partial(shards.size(), Tally{});
            parallel_for(shards.size(), opts.threads, [&](std::size_t i) {
                Tally& t = partial[i];
                for_each_reduced_in_shard(rank, n, shards[i], [&](std::span<const Letter> s) {
                    bump(t, WordClass::AllReduced);
                    if (!need_reduced_minimize) {
                        return;
                    }
                    const Minimization m = minimize(cyclic_word_of(rank, s));
                    if (m.min_core.size() == 1) {
                        bump(t, WordClass::P);
                    }
                    if (m.min_core.size() <= 1 ||
                        static_cast<int>(letters_used(m.min_core).size()) < rank) {
                        bump(t, WordClass::S);
                    }
                });
            });
            for (const Tally& t : partial) {
                for (std::size_t c = 0; c < kClasses; ++c) {
                    total[c] += t[c];
                }
            }
        }
        for (CountTable& table : tables) {
            table.counts[n] = total[static_cast<std::size_t>(table.cls)];
        }
    }
    return tables;
}

inline CountTable count_class(int rank, int max_len, WordClass cls, const EnumerationOptions& opts = {}) {
    return count_classes(rank, max_len, {cls}, opts).front();
}

// ---------------------------------------------------------------------------
// Counting identities
// ---------------------------------------------------------------------------

struct DecompositionReport {
    int rank = 0;
    int length = 0;
    BigInt direct;     // enumerated |P_{k,N}|
    BigInt predicted;  // sum with one empty conjugator at l = 0
    Rational literal;  // same sum with the l = 0 factor (2k-2)(2k-1)^{-1}
    bool holds = false;
};

/// |P_{k,N}| = N|C_{k,N}| + sum_{l>=1} (N-2l)|C_{k,N-2l}|(2k-2)(2k-1)^{l-1}.
inline DecompositionReport verify_P_decomposition(int rank, int n, const CountTable& c_table,
                                                  const CountTable& p_table) {
    if (c_table.cls != WordClass::C || p_table.cls != WordClass::P) {
        throw std::invalid_argument("verify_P_decomposition: expected C and P tables");
    }
    DecompositionReport r;
    r.rank = rank;
    r.length = n;
    r.direct = p_table.at(n);
    const long k2 = 2L * rank;
    r.predicted = BigInt(n) * c_table.at(n);
    r.literal = Rational(BigInt(n) * c_table.at(n) * (k2 - 2), BigInt(k2 - 1));
    for (int l = 1; n - 2 * l >= 1; ++l) {
        const BigInt term = BigInt(n - 2 * l) * c_table.at(n - 2 * l) * (k2 - 2) *
                            big_pow(k2 - 1, static_cast<unsigned>(l - 1));
        r.predicted += term;
        r.literal += Rational(term);
    }
    r.holds = r.predicted == r.direct;
    return r;
}

inline DecompositionReport verify_P_decomposition(int rank, int n, const EnumerationOptions& opts = {}) {
    const auto tables = count_classes(rank, n, {WordClass::C, WordClass::P}, opts);
    return verify_P_decomposition(rank, n, tables[0], tables[1]);
}

struct LCount {
    BigInt exact;
    BigInt approx;  // 2k(2k-2)(2k-3)^{N-2}
};

inline LCount exact_L_count(int rank, int n) {
    if (n < 2) {
        throw std::invalid_argument("exact_L_count: N must be at least 2");
    }
    LCount out;
    for_each_necklace(rank, n, [&](std::span<const Letter> s) {
        const auto counts = generator_counts(rank, s);
        if (std::find(counts.begin(), counts.end(), 1) != counts.end()) {
            ++out.exact;
        }
    });
    out.approx = BigInt(2 * rank) * (2 * rank - 2) * big_pow(2 * rank - 3, static_cast<unsigned>(n - 2));
    return out;
}

}  // namespace primwords

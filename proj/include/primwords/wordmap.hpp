#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "primwords/enumerate.hpp"
#include "primwords/numeric.hpp"
#include "primwords/parallel.hpp"
#include "primwords/word.hpp"

namespace primwords {

inline constexpr int kMaxExactDegree = 8;

/// Permutation of {0, ..., n-1} for n <= 8, acting on the right:
/// (p * q)(i) = q(p(i)), so a word is evaluated letter by letter from the left.
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(int n) {
        check_degree(n);
        Permutation p;
        p.n_ = n;
        for (int i = 0; i < std::min(n, kMaxExactDegree); ++i) {
            p.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
        }
        return p;
    }

    static Permutation from_images(const std::vector<int>& images) {
        const int n = static_cast<int>(images.size());
        check_degree(n);
        Permutation p;
        p.n_ = n;
        std::uint32_t seen = 0;
        for (int i = 0; i < n; ++i) {
            const int x = images[static_cast<std::size_t>(i)];
            if (x < 0 || x >= n || (seen >> x & 1u)) {
                throw std::invalid_argument("not a permutation");
            }
            seen |= 1u << x;
            p.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(x);
        }
        return p;
    }

    /// Inverse of rank(): the index-th permutation in lexicographic order.
    static Permutation unrank(int n, std::uint32_t index) {
        check_degree(n);
        std::vector<int> pool(static_cast<std::size_t>(n));
        std::iota(pool.begin(), pool.end(), 0);
        std::uint32_t f = 1;
        for (int i = 2; i < n; ++i) {
            f *= static_cast<std::uint32_t>(i);
        }
        Permutation p;
        p.n_ = n;
        for (int i = 0; i < n; ++i) {
            const std::uint32_t digit = f == 0 ? 0 : index / f;
            index -= digit * f;
            p.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(pool[digit]);
            pool.erase(pool.begin() + digit);
            if (n - 1 - i > 0) {
                f /= static_cast<std::uint32_t>(n - 1 - i);
            }
        }
        return p;
    }

    int degree() const { return n_; }
    int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }

    /// Lexicographic index among all permutations of the same degree.
    std::uint32_t rank() const {
        std::uint32_t r = 0;
        for (int i = 0; i < n_; ++i) {
            int smaller = 0;
            for (int j = i + 1; j < n_; ++j) {
                smaller += img_[static_cast<std::size_t>(j)] < img_[static_cast<std::size_t>(i)];
            }
            r = r * static_cast<std::uint32_t>(n_ - i) + static_cast<std::uint32_t>(smaller);
        }
        return r;
    }

    Permutation inverse() const {
        Permutation p;
        p.n_ = n_;
        for (int i = 0; i < n_; ++i) {
            p.img_[img_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
        }
        return p;
    }

    friend Permutation operator*(const Permutation& p, const Permutation& q) {
        Permutation r;
        r.n_ = p.n_;
        for (int i = 0; i < p.n_; ++i) {
            r.img_[static_cast<std::size_t>(i)] = q.img_[p.img_[static_cast<std::size_t>(i)]];
        }
        return r;
    }

    /// g^{-1} p g
    Permutation conjugate_by(const Permutation& g) const { return g.inverse() * *this * g; }

    int fixed_points() const {
        int f = 0;
        for (int i = 0; i < n_; ++i) {
            f += img_[static_cast<std::size_t>(i)] == i;
        }
        return f;
    }

    /// Cycle notation over 1-based points, e.g. "(1 2)(3 4 5)"; identity is "()".
    std::string to_string() const {
        std::string out;
        std::uint32_t seen = 0;
        for (int i = 0; i < n_; ++i) {
            if ((seen >> i & 1u) || img_[static_cast<std::size_t>(i)] == i) {
                continue;
            }
            out += '(';
            for (int j = i; !(seen >> j & 1u); j = img_[static_cast<std::size_t>(j)]) {
                seen |= 1u << j;
                if (out.back() != '(') {
                    out += ' ';
                }
                out += std::to_string(j + 1);
            }
            out += ')';
        }
        return out.empty() ? "()" : out;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    static void check_degree(int n) {
        if (n < 1 || n > kMaxExactDegree) {
            throw std::invalid_argument("permutation degree must lie in 1.." + std::to_string(kMaxExactDegree));
        }
    }

    int n_ = 0;
    std::array<std::uint8_t, kMaxExactDegree> img_{};
};

inline std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= static_cast<std::uint64_t>(i);
    }
    return f;
}

/// Distribution of w(s_1, ..., s_k) for independent uniform s_i in S_n, stored
/// as exact tuple counts per permutation over a common denominator.
class PushforwardDistribution {
public:
    PushforwardDistribution(int n, std::vector<std::uint64_t> counts, BigInt total)
        : n_(n), counts_(std::move(counts)), total_(std::move(total)) {}

    int degree() const { return n_; }
    const BigInt& denominator() const { return total_; }
    std::uint64_t count(const Permutation& p) const { return counts_[p.rank()]; }
    Rational mass(const Permutation& p) const { return Rational(BigInt(count(p)), total_); }

    /// Nonzero masses keyed by lexicographic permutation index.
    std::map<std::uint32_t, Rational> masses() const {
        std::map<std::uint32_t, Rational> out;
        for (std::size_t i = 0; i < counts_.size(); ++i) {
            if (counts_[i] != 0) {
                out.emplace(static_cast<std::uint32_t>(i), Rational(BigInt(counts_[i]), total_));
            }
        }
        return out;
    }

    Rational total_mass() const {
        BigInt sum = 0;
        for (std::uint64_t c : counts_) {
            sum += c;
        }
        return Rational(sum, total_);
    }

    Rational expected_fixed_points() const {
        BigInt sum = 0;
        for (std::size_t i = 0; i < counts_.size(); ++i) {
            if (counts_[i] != 0) {
                const int f = Permutation::unrank(n_, static_cast<std::uint32_t>(i)).fixed_points();
                sum += BigInt(counts_[i]) * f;
            }
        }
        return Rational(sum, total_);
    }

private:
    int n_;
    std::vector<std::uint64_t> counts_;
    BigInt total_;
};

inline constexpr double kWordMapWorkBound = 1e7;

namespace detail {

/// Word letters rewritten over the generators that actually occur, numbered
/// 0..g-1; returns g.
inline int compress_generators(const Word& w, std::vector<std::pair<int, bool>>& out) {
    const std::vector<int> used = letters_used(w);
    out.clear();
    for (Letter l : w.letters()) {
        const auto it = std::lower_bound(used.begin(), used.end(), l.generator());
        out.emplace_back(static_cast<int>(it - used.begin()), l.sign() < 0);
    }
    return static_cast<int>(used.size());
}

inline double exact_work(int n, int g) { return std::pow(static_cast<double>(factorial(n)), g); }

/// Visits every tuple of g permutations whose first entry has index in
/// {shard, shard + stride, ...} and calls fn(word value).
template <class Fn>
void for_each_tuple_value(int n, const std::vector<std::pair<int, bool>>& letters, int g, std::size_t shard,
                          std::size_t stride, const std::vector<Permutation>& perms,
                          const std::vector<Permutation>& inverses, Fn&& fn) {
    const std::size_t m = perms.size();
    std::vector<std::size_t> idx(static_cast<std::size_t>(std::max(g, 1)), 0);
    for (std::size_t first = shard; first < m; first += stride) {
        idx[0] = first;
        std::fill(idx.begin() + 1, idx.end(), 0);
        while (true) {
            Permutation value = Permutation::identity(n);
            for (const auto& [gen, inv] : letters) {
                const std::size_t i = idx[static_cast<std::size_t>(gen)];
                value = value * (inv ? inverses[i] : perms[i]);
            }
            fn(value);
            int pos = g - 1;
            while (pos >= 1 && ++idx[static_cast<std::size_t>(pos)] == m) {
                idx[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 1) {
                break;
            }
        }
    }
}

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    for (std::uint32_t i = 0; i < factorial(n); ++i) {
        out.push_back(Permutation::unrank(n, i));
    }
    return out;
}

inline constexpr std::size_t kExactShards = 64;

}  // namespace detail

inline PushforwardDistribution exact_pushforward(const Word& w, int n, int threads = default_threads()) {
    if (n < 1 || n > kMaxExactDegree) {
        throw std::invalid_argument("exact_pushforward: n must lie in 1.." + std::to_string(kMaxExactDegree));
    }
    std::vector<std::pair<int, bool>> letters;
    const int g = detail::compress_generators(w, letters);
    const double work = detail::exact_work(n, g);
    if (work > kWordMapWorkBound) {
        throw WorkBoundExceeded(work, kWordMapWorkBound, "permutation tuples");
    }
    const std::uint64_t nfact = factorial(n);
    if (g == 0) {
        std::vector<std::uint64_t> counts(nfact, 0);
        counts[0] = 1;
        return PushforwardDistribution(n, std::move(counts), 1);
    }
    const auto perms = detail::all_permutations(n);
    std::vector<Permutation> inverses;
    for (const auto& p : perms) {
        inverses.push_back(p.inverse());
    }
    const std::size_t shards = std::min<std::size_t>(detail::kExactShards, perms.size());
    std::vector<std::vector<std::uint64_t>> partial(shards, std::vector<std::uint64_t>(nfact, 0));
    parallel_for(shards, threads, [&](std::size_t s) {
        auto& tally = partial[s];
        detail::for_each_tuple_value(n, letters, g, s, shards, perms, inverses,
                                     [&](const Permutation& p) { ++tally[p.rank()]; });
    });
    std::vector<std::uint64_t> counts(nfact, 0);
    for (const auto& tally : partial) {
        for (std::size_t i = 0; i < nfact; ++i) {
            counts[i] += tally[i];
        }
    }
    return PushforwardDistribution(n, std::move(counts), big_pow(static_cast<long>(nfact), static_cast<unsigned>(g)));
}

inline Rational expected_fixed_points(const PushforwardDistribution& d) { return d.expected_fixed_points(); }

inline Rational expected_fixed_points(const Word& w, int n, int threads = default_threads()) {
    return exact_pushforward(w, n, threads).expected_fixed_points();
}

/// Pr(w(s)(1) = 1), counted directly over all tuples.
inline Rational fixed_point_prob(const Word& w, int n, int threads = default_threads()) {
    if (n < 1 || n > kMaxExactDegree) {
        throw std::invalid_argument("fixed_point_prob: n must lie in 1.." + std::to_string(kMaxExactDegree));
    }
    std::vector<std::pair<int, bool>> letters;
    const int g = detail::compress_generators(w, letters);
    const double work = detail::exact_work(n, g);
    if (work > kWordMapWorkBound) {
        throw WorkBoundExceeded(work, kWordMapWorkBound, "permutation tuples");
    }
    if (g == 0) {
        return Rational(1);
    }
    const auto perms = detail::all_permutations(n);
    std::vector<Permutation> inverses;
    for (const auto& p : perms) {
        inverses.push_back(p.inverse());
    }
    const std::size_t shards = std::min<std::size_t>(detail::kExactShards, perms.size());
    std::vector<std::uint64_t> hits(shards, 0);
    parallel_for(shards, threads, [&](std::size_t s) {
        detail::for_each_tuple_value(n, letters, g, s, shards, perms, inverses,
                                     [&](const Permutation& p) { hits[s] += p(0) == 0; });
    });
    const std::uint64_t total_hits = std::accumulate(hits.begin(), hits.end(), std::uint64_t{0});
    return Rational(BigInt(total_hits), big_pow(static_cast<long>(factorial(n)), static_cast<unsigned>(g)));
}

struct ConvolutionReport {
    int n = 0;
    Rational p1, p2;
    Rational lhs;  // p(w1 w2, n), by enumeration
    Rational rhs;  // 1/n + n/(n-1) (p1 - 1/n)(p2 - 1/n)
    bool holds = false;
};

/// Checks p(w1 w2) = 1/n + n/(n-1) (p(w1) - 1/n)(p(w2) - 1/n) exactly.
inline ConvolutionReport verify_convolution_identity(const Word& w1, const Word& w2, int n,
                                                     int threads = default_threads()) {
    check_same_rank(w1.rank(), w2.rank());
    if (n < 2) {
        throw std::invalid_argument("verify_convolution_identity: n must be at least 2");
    }
    const auto u1 = letters_used(w1);
    const auto u2 = letters_used(w2);
    std::vector<int> common;
    std::set_intersection(u1.begin(), u1.end(), u2.begin(), u2.end(), std::back_inserter(common));
    if (!common.empty()) {
        throw std::invalid_argument("verify_convolution_identity: words share a generator");
    }
    ConvolutionReport r;
    r.n = n;
    r.p1 = fixed_point_prob(w1, n, threads);
    r.p2 = fixed_point_prob(w2, n, threads);
    r.lhs = fixed_point_prob(concat(w1, w2), n, threads);
    const Rational inv_n(1, n);
    r.rhs = inv_n + Rational(n, n - 1) * (r.p1 - inv_n) * (r.p2 - inv_n);
    r.holds = r.lhs == r.rhs;
    return r;
}

struct MonteCarloEstimate {
    double mean = 0;
    double std_error = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

inline constexpr std::size_t kMonteCarloShards = 64;

/// Sample mean of |Fix(w(s))| for uniform s in S_n^k. Samples are split over
/// 64 fixed shards with seeds derived from `seed`, so the estimate does not
/// depend on the thread count.
inline MonteCarloEstimate mc_expected_fixed_points(const Word& w, int n, std::uint64_t samples, std::uint64_t seed,
                                                   int threads = default_threads()) {
    if (samples < 1) {
        throw std::invalid_argument("mc_expected_fixed_points: samples must be at least 1");
    }
    if (n < 1) {
        throw std::invalid_argument("mc_expected_fixed_points: n must be at least 1");
    }
    std::vector<std::pair<int, bool>> letters;
    const int g = detail::compress_generators(w, letters);
    struct Tally {
        std::uint64_t sum = 0;
        std::uint64_t sum_sq = 0;
    };
    std::vector<Tally> tallies(kMonteCarloShards);
    parallel_for(kMonteCarloShards, threads, [&](std::size_t s) {
        const std::uint64_t quota = samples / kMonteCarloShards + (s < samples % kMonteCarloShards ? 1 : 0);
        std::mt19937_64 rng(splitmix64(seed ^ splitmix64(s + 1)));
        const auto un = static_cast<std::size_t>(n);
        std::vector<std::vector<int>> fwd(static_cast<std::size_t>(g), std::vector<int>(un));
        std::vector<std::vector<int>> bwd(static_cast<std::size_t>(g), std::vector<int>(un));
        for (std::uint64_t t = 0; t < quota; ++t) {
            for (int j = 0; j < g; ++j) {
                auto& p = fwd[static_cast<std::size_t>(j)];
                std::iota(p.begin(), p.end(), 0);
                for (std::size_t i = un; i > 1; --i) {
                    std::swap(p[i - 1], p[uniform_below(rng, i)]);
                }
                for (std::size_t i = 0; i < un; ++i) {
                    bwd[static_cast<std::size_t>(j)][static_cast<std::size_t>(p[i])] = static_cast<int>(i);
                }
            }
            std::uint64_t fixed = 0;
            for (int i = 0; i < n; ++i) {
                int x = i;
                for (const auto& [gen, inv] : letters) {
                    x = (inv ? bwd : fwd)[static_cast<std::size_t>(gen)][static_cast<std::size_t>(x)];
                }
                fixed += x == i;
            }
            tallies[s].sum += fixed;
            tallies[s].sum_sq += fixed * fixed;
        }
    });
    std::uint64_t sum = 0;
    std::uint64_t sum_sq = 0;
    for (const Tally& t : tallies) {
        sum += t.sum;
        sum_sq += t.sum_sq;
    }
    const double count = static_cast<double>(samples);
    MonteCarloEstimate out;
    out.samples = samples;
    out.seed = seed;
    out.mean = static_cast<double>(sum) / count;
    if (samples > 1) {
        const double var =
            (static_cast<double>(sum_sq) - static_cast<double>(sum) * out.mean) / (count - 1);
        out.std_error = std::sqrt(std::max(var, 0.0) / count);
    }
    return out;
}

}  // namespace primwords

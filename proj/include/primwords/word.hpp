#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace primwords {

inline constexpr int kMaxRank = 26;

/// A signed generator x_i^{+1} or x_i^{-1}.
///
/// Letters are stored as a single code `2*(i-1) + (sign < 0)`, so the natural
/// ordering of codes is a < A < b < B < ... and inversion flips the low bit.
class Letter {
public:
    constexpr Letter() = default;

    static constexpr Letter from_code(int code) {
        Letter l;
        l.code_ = static_cast<std::uint8_t>(code);
        return l;
    }

    /// generator is 1-based; sign is +1 or -1
    static constexpr Letter make(int generator, int sign) {
        return from_code(2 * (generator - 1) + (sign < 0 ? 1 : 0));
    }

    static Letter from_char(char c) {
        if (c >= 'a' && c <= 'z') {
            return make(c - 'a' + 1, +1);
        }
        if (c >= 'A' && c <= 'Z') {
            return make(c - 'A' + 1, -1);
        }
        throw std::invalid_argument(std::string("not a letter: '") + c + "'");
    }

    constexpr int code() const { return code_; }
    constexpr int generator() const { return code_ / 2 + 1; }
    constexpr int sign() const { return (code_ & 1) ? -1 : +1; }
    constexpr Letter inverse() const { return from_code(code_ ^ 1); }

    char to_char() const {
        const char base = sign() > 0 ? 'a' : 'A';
        return static_cast<char>(base + generator() - 1);
    }

    friend constexpr bool operator==(Letter, Letter) = default;
    friend constexpr auto operator<=>(Letter, Letter) = default;

private:
    std::uint8_t code_ = 0;
};

inline void check_rank(int rank) {
    if (rank < 1 || rank > kMaxRank) {
        throw std::invalid_argument("rank must lie in 1.." + std::to_string(kMaxRank) + ", got " +
                                    std::to_string(rank));
    }
}

/// Number of signed letters 2k.
constexpr int alphabet_size(int rank) { return 2 * rank; }

inline std::string letters_to_string(std::span<const Letter> letters) {
    if (letters.empty()) {
        return "1";
    }
    std::string out;
    out.reserve(letters.size());
    for (Letter l : letters) {
        out.push_back(l.to_char());
    }
    return out;
}

/// Appends `l` to a freely reduced buffer, cancelling against the tail.
inline void push_reduced(std::vector<Letter>& buffer, Letter l) {
    if (!buffer.empty() && buffer.back() == l.inverse()) {
        buffer.pop_back();
    } else {
        buffer.push_back(l);
    }
}

/// A freely reduced word in the free group of the given rank.
class Word {
public:
    Word() = default;
    explicit Word(int rank) : rank_(rank) { check_rank(rank); }

    /// Free reduction of an arbitrary letter sequence.
    static Word reduce(int rank, std::span<const Letter> seq) {
        Word w(rank);
        w.letters_.reserve(seq.size());
        for (Letter l : seq) {
            w.check_letter(l);
            push_reduced(w.letters_, l);
        }
        return w;
    }

    /// Wraps a sequence the caller guarantees is already reduced.
    static Word from_reduced(int rank, std::vector<Letter> letters) {
        Word w(rank);
        w.letters_ = std::move(letters);
        return w;
    }

    int rank() const { return rank_; }
    std::span<const Letter> letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    std::string to_string() const { return letters_to_string(letters_); }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    void check_letter(Letter l) const {
        if (l.generator() > rank_) {
            throw std::invalid_argument(std::string("generator '") + l.to_char() +
                                        "' exceeds rank " + std::to_string(rank_));
        }
    }

    int rank_ = 2;
    std::vector<Letter> letters_;
};

inline Word reduce(int rank, std::span<const Letter> seq) { return Word::reduce(rank, seq); }

/// Parses the ASCII format: lowercase = generator, uppercase = inverse,
/// "1" or "" = identity. The result is freely reduced.
inline Word parse_word(std::string_view text, int rank) {
    check_rank(rank);
    if (text == "1") {
        return Word(rank);
    }
    std::vector<Letter> seq;
    seq.reserve(text.size());
    for (char c : text) {
        const Letter l = Letter::from_char(c);
        if (l.generator() > rank) {
            throw std::invalid_argument(std::string("generator '") + c + "' exceeds rank " +
                                        std::to_string(rank));
        }
        seq.push_back(l);
    }
    return Word::reduce(rank, seq);
}

inline void check_same_rank(int a, int b) {
    if (a != b) {
        throw std::invalid_argument("rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

inline Word invert(const Word& w) {
    std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
    for (Letter& l : out) {
        l = l.inverse();
    }
    return Word::from_reduced(w.rank(), std::move(out));
}

inline Word concat(const Word& u, const Word& v) {
    check_same_rank(u.rank(), v.rank());
    std::vector<Letter> buffer(u.letters().begin(), u.letters().end());
    for (Letter l : v.letters()) {
        push_reduced(buffer, l);
    }
    return Word::from_reduced(u.rank(), std::move(buffer));
}

/// Start index of the lexicographically minimal rotation (two-pointer
/// minimum-expression algorithm, linear time).
inline std::size_t least_rotation(std::span<const Letter> s) {
    const std::size_t n = s.size();
    std::size_t i = 0;
    std::size_t j = 1;
    std::size_t k = 0;
    while (i < n && j < n && k < n) {
        const Letter a = s[(i + k) % n];
        const Letter b = s[(j + k) % n];
        if (a == b) {
            ++k;
            continue;
        }
        if (a > b) {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if (i == j) {
            ++j;
        }
        k = 0;
    }
    return n == 0 ? 0 : std::min(i, j);
}

inline bool is_cyclically_reduced(std::span<const Letter> s) {
    const std::size_t n = s.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (s[(i + 1) % n] == s[i].inverse()) {
            return false;
        }
    }
    return true;
}

/// A conjugacy class, stored as the minimal rotation of a cyclically reduced
/// word. The empty cyclic word is allowed and represents the identity class.
class CyclicWord {
public:
    CyclicWord() = default;

    /// Canonicalizes `letters`, which must be cyclically reduced.
    static CyclicWord canonical(int rank, std::vector<Letter> letters) {
        check_rank(rank);
        for (Letter l : letters) {
            if (l.generator() > rank) {
                throw std::invalid_argument("generator exceeds rank");
            }
        }
        if (!is_cyclically_reduced(letters)) {
            throw std::invalid_argument("sequence is not cyclically reduced: " +
                                        letters_to_string(letters));
        }
        const std::size_t start = least_rotation(letters);
        std::rotate(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(start),
                    letters.end());
        return from_canonical(rank, std::move(letters));
    }

    /// Wraps letters already known to be canonical.
    static CyclicWord from_canonical(int rank, std::vector<Letter> letters) {
        CyclicWord cw;
        cw.rank_ = rank;
        cw.letters_ = std::move(letters);
        return cw;
    }

    int rank() const { return rank_; }
    std::span<const Letter> letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    std::string to_string() const { return letters_to_string(letters_); }

    /// Viewed as a (cyclically reduced) linear word.
    Word as_word() const { return Word::from_reduced(rank_, letters_); }

    friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
    friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;

private:
    int rank_ = 2;
    std::vector<Letter> letters_;
};

inline CyclicWord canonical_rotation(int rank, std::vector<Letter> letters) {
    return CyclicWord::canonical(rank, std::move(letters));
}

inline CyclicWord parse_cyclic(std::string_view text, int rank);

struct CyclicReduction {
    CyclicWord core;
    Word conjugator;
};

/// Strips matching inverse ends off a reduced sequence in place; returns the
/// number of stripped pairs.
inline std::size_t strip_conjugator(std::vector<Letter>& letters) {
    std::size_t lo = 0;
    std::size_t hi = letters.size();
    while (hi - lo >= 2 && letters[lo] == letters[hi - 1].inverse()) {
        ++lo;
        --hi;
    }
    if (lo > 0) {
        letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(hi), letters.end());
        letters.erase(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(lo));
    }
    return lo;
}

/// w = conjugator * r * conjugator^{-1} with r cyclically reduced; core is the
/// canonical rotation of r.
inline CyclicReduction cyclic_reduce(const Word& w) {
    if (w.empty()) {
        throw std::invalid_argument("cyclic_reduce: empty word");
    }
    std::vector<Letter> middle(w.letters().begin(), w.letters().end());
    const std::size_t depth = strip_conjugator(middle);
    std::vector<Letter> conj(w.letters().begin(), w.letters().begin() + static_cast<std::ptrdiff_t>(depth));
    return {CyclicWord::canonical(w.rank(), std::move(middle)), Word::from_reduced(w.rank(), std::move(conj))};
}

/// Cyclic word of an arbitrary (possibly unreduced, possibly trivial) sequence.
inline CyclicWord cyclic_word_of(int rank, std::span<const Letter> seq) {
    std::vector<Letter> buffer;
    buffer.reserve(seq.size());
    for (Letter l : seq) {
        push_reduced(buffer, l);
    }
    strip_conjugator(buffer);
    return CyclicWord::canonical(rank, std::move(buffer));
}

inline CyclicWord parse_cyclic(std::string_view text, int rank) {
    const Word w = parse_word(text, rank);
    return cyclic_word_of(rank, w.letters());
}

/// 1-based generator indices occurring with either sign, ascending.
inline std::vector<int> letters_used(std::span<const Letter> letters) {
    std::uint64_t mask = 0;
    for (Letter l : letters) {
        mask |= std::uint64_t{1} << (l.generator() - 1);
    }
    std::vector<int> out;
    for (int g = 0; g < 64; ++g) {
        if (mask & (std::uint64_t{1} << g)) {
            out.push_back(g + 1);
        }
    }
    return out;
}
inline std::vector<int> letters_used(const Word& w) { return letters_used(w.letters()); }
inline std::vector<int> letters_used(const CyclicWord& w) { return letters_used(w.letters()); }

/// Occurrences of each generator, counting both signs; index g-1.
inline std::vector<int> generator_counts(int rank, std::span<const Letter> letters) {
    std::vector<int> counts(static_cast<std::size_t>(rank), 0);
    for (Letter l : letters) {
        ++counts[static_cast<std::size_t>(l.generator() - 1)];
    }
    return counts;
}

/// Exponent-sum vector.
inline std::vector<long> abelianization(const Word& w) {
    std::vector<long> v(static_cast<std::size_t>(w.rank()), 0);
    for (Letter l : w.letters()) {
        v[static_cast<std::size_t>(l.generator() - 1)] += l.sign();
    }
    return v;
}

inline long abelian_gcd(const std::vector<long>& v) {
    long g = 0;
    for (long x : v) {
        g = std::gcd(g, x);
    }
    return g;
}

/// Smallest p dividing |cw| with the rotation by p equal to cw.
inline std::size_t period(const CyclicWord& cw) {
    const auto s = cw.letters();
    const std::size_t n = s.size();
    if (n == 0) {
        throw std::invalid_argument("period: empty cyclic word");
    }
    // prefix function; the smallest period of s is n - pi[n-1]
    std::vector<std::size_t> pi(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t j = pi[i - 1];
        while (j > 0 && s[i] != s[j]) {
            j = pi[j - 1];
        }
        if (s[i] == s[j]) {
            ++j;
        }
        pi[i] = j;
    }
    const std::size_t p = n - pi[n - 1];
    return n % p == 0 ? p : n;
}

}  // namespace primwords

template <>
struct std::hash<primwords::CyclicWord> {
    std::size_t operator()(const primwords::CyclicWord& cw) const noexcept {
        std::size_t h = static_cast<std::size_t>(cw.rank()) * 0x9e3779b97f4a7c15ULL;
        for (auto l : cw.letters()) {
            h = (h ^ static_cast<std::size_t>(l.code())) * 0x100000001b3ULL;
        }
        return h;
    }
};

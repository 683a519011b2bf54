#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "primwords/word.hpp"

namespace primwords {

/// Set of signed letters as a bitmask over letter codes (2k <= 52 bits).
using LetterMask = std::uint64_t;

constexpr LetterMask letter_bit(Letter l) { return LetterMask{1} << l.code(); }

constexpr LetterMask full_mask(int rank) {
    return rank >= 32 ? ~LetterMask{0} : (LetterMask{1} << (2 * rank)) - 1;
}

inline LetterMask mask_of(std::initializer_list<Letter> letters) {
    LetterMask m = 0;
    for (Letter l : letters) {
        m |= letter_bit(l);
    }
    return m;
}

inline std::vector<Letter> mask_letters(LetterMask m) {
    std::vector<Letter> out;
    while (m) {
        const int code = std::countr_zero(m);
        out.push_back(Letter::from_code(code));
        m &= m - 1;
    }
    return out;
}

/// Whitehead graph: one edge {a, b^{-1}} for every cyclically adjacent pair (a, b).
class WhiteheadGraph {
public:
    explicit WhiteheadGraph(int rank)
        : rank_(rank), n_(alphabet_size(rank)), mult_(static_cast<std::size_t>(n_ * n_), 0) {}

    int rank() const { return rank_; }
    int vertex_count() const { return n_; }

    int multiplicity(Letter u, Letter w) const { return mult_[index(u.code(), w.code())]; }

    void add_edge(Letter u, Letter w) {
        ++mult_[index(u.code(), w.code())];
        ++mult_[index(w.code(), u.code())];
    }

    int degree(Letter u) const {
        int d = 0;
        for (int w = 0; w < n_; ++w) {
            d += mult_[index(u.code(), w)];
        }
        return d;
    }

    /// Sum over unordered vertex pairs.
    int total_multiplicity() const {
        int total = 0;
        for (int u = 0; u < n_; ++u) {
            for (int w = u + 1; w < n_; ++w) {
                total += mult_[index(u, w)];
            }
        }
        return total;
    }

    /// Bitmask of neighbours of u.
    LetterMask neighbours(Letter u) const {
        LetterMask m = 0;
        for (int w = 0; w < n_; ++w) {
            if (mult_[index(u.code(), w)] > 0) {
                m |= LetterMask{1} << w;
            }
        }
        return m;
    }

    /// Connected components of the graph with `removed` deleted, as masks.
    /// Every remaining vertex, isolated or not, lies in exactly one component.
    std::vector<LetterMask> components_without(Letter removed) const {
        return components_excluding(letter_bit(removed));
    }

    std::vector<LetterMask> components_excluding(LetterMask dropped) const {
        std::array<LetterMask, 64> adj{};
        for (int u = 0; u < n_; ++u) {
            for (int w = 0; w < n_; ++w) {
                if (mult_[index(u, w)] > 0) {
                    adj[static_cast<std::size_t>(u)] |= LetterMask{1} << w;
                }
            }
        }
        LetterMask unvisited = full_mask(rank_) & ~dropped;
        std::vector<LetterMask> comps;
        while (unvisited) {
            LetterMask comp = unvisited & (~unvisited + 1);
            LetterMask frontier = comp;
            while (frontier) {
                const int u = std::countr_zero(frontier);
                frontier &= frontier - 1;
                const LetterMask fresh = adj[static_cast<std::size_t>(u)] & ~dropped & ~comp;
                comp |= fresh;
                frontier |= fresh;
            }
            comps.push_back(comp);
            unvisited &= ~comp;
        }
        return comps;
    }

    struct Edge {
        Letter u;
        Letter w;
        int mult;
    };

    /// Edges with u < w in letter order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < n_; ++u) {
            for (int w = u + 1; w < n_; ++w) {
                if (const int m = mult_[index(u, w)]; m > 0) {
                    out.push_back({Letter::from_code(u), Letter::from_code(w), m});
                }
            }
        }
        return out;
    }

    friend bool operator==(const WhiteheadGraph&, const WhiteheadGraph&) = default;

private:
    std::size_t index(int u, int w) const { return static_cast<std::size_t>(u * n_ + w); }

    int rank_;
    int n_;
    std::vector<int> mult_;
};

inline WhiteheadGraph build_graph(const CyclicWord& cw) {
    if (cw.empty()) {
        throw std::invalid_argument("build_graph: empty cyclic word");
    }
    WhiteheadGraph g(cw.rank());
    const auto s = cw.letters();
    const std::size_t n = s.size();
    for (std::size_t i = 0; i < n; ++i) {
        g.add_edge(s[i], s[(i + 1) % n].inverse());
    }
    return g;
}

/// A partition X^{+-1} = Y | Z | {v} with Y, Z nonempty and v^{-1} in Z.
class Triplet {
public:
    static Triplet make(int rank, LetterMask y, Letter v) {
        check_rank(rank);
        const LetterMask all = full_mask(rank);
        if (v.generator() > rank) {
            throw std::invalid_argument("triplet: v exceeds rank");
        }
        if (y & ~all) {
            throw std::invalid_argument("triplet: Y contains letters beyond rank");
        }
        if (y == 0) {
            throw std::invalid_argument("triplet: Y is empty");
        }
        if (y & letter_bit(v)) {
            throw std::invalid_argument("triplet: v lies in Y");
        }
        if (y & letter_bit(v.inverse())) {
            throw std::invalid_argument("triplet: v^-1 must lie in Z");
        }
        Triplet t;
        t.rank_ = rank;
        t.y_ = y;
        t.v_ = v;
        return t;
    }

    /// Builds from explicit Y and Z; checks that Y, Z, {v} partition the alphabet.
    static Triplet make(int rank, LetterMask y, LetterMask z, Letter v) {
        Triplet t = make(rank, y, v);
        if (z != t.z_mask()) {
            throw std::invalid_argument("triplet: Y, Z, {v} do not partition the alphabet");
        }
        return t;
    }

    int rank() const { return rank_; }
    Letter v() const { return v_; }
    LetterMask y_mask() const { return y_; }
    LetterMask z_mask() const { return full_mask(rank_) & ~y_ & ~letter_bit(v_); }
    bool in_y(Letter l) const { return (y_ & letter_bit(l)) != 0; }
    bool in_z(Letter l) const { return (z_mask() & letter_bit(l)) != 0; }
    int y_size() const { return std::popcount(y_); }
    int z_size() const { return std::popcount(z_mask()); }

    /// One character per signed letter in letter order: 'Y', 'Z' or 'v'.
    /// Comparing these strings is the canonical triplet order.
    std::string serialize() const {
        std::string s(static_cast<std::size_t>(alphabet_size(rank_)), 'Z');
        for (int c = 0; c < alphabet_size(rank_); ++c) {
            const Letter l = Letter::from_code(c);
            if (l == v_) {
                s[static_cast<std::size_t>(c)] = 'v';
            } else if (in_y(l)) {
                s[static_cast<std::size_t>(c)] = 'Y';
            }
        }
        return s;
    }

    /// e.g. "v=b Y={c,C} Z={a,A,B}"
    std::string describe() const {
        auto list = [](LetterMask m) {
            std::string out = "{";
            bool first = true;
            for (Letter l : mask_letters(m)) {
                if (!first) {
                    out += ',';
                }
                out += l.to_char();
                first = false;
            }
            return out + "}";
        };
        return std::string("v=") + v_.to_char() + " Y=" + list(y_) + " Z=" + list(z_mask());
    }

    friend bool operator==(const Triplet&, const Triplet&) = default;
    friend bool operator<(const Triplet& a, const Triplet& b) { return a.serialize() < b.serialize(); }

private:
    int rank_ = 2;
    LetterMask y_ = 0;
    Letter v_;
};

/// Every triplet of the given rank, ordered by v then by Y mask.
inline std::vector<Triplet> all_triplets(int rank) {
    check_rank(rank);
    std::vector<Triplet> out;
    const LetterMask all = full_mask(rank);
    for (int c = 0; c < alphabet_size(rank); ++c) {
        const Letter v = Letter::from_code(c);
        const LetterMask free = all & ~letter_bit(v) & ~letter_bit(v.inverse());
        // enumerate nonempty submasks of `free`
        for (LetterMask y = free; y; y = (y - 1) & free) {
            out.push_back(Triplet::make(rank, y, v));
        }
    }
    return out;
}

/// Image of a single letter under the Whitehead automorphism of t.
inline std::vector<Letter> whitehead_image(const Triplet& t, Letter u) {
    const Letter v = t.v();
    if (u == v || u == v.inverse()) {
        return {u};
    }
    const bool u_in_y = t.in_y(u);
    const bool inv_in_y = t.in_y(u.inverse());
    if (u_in_y && inv_in_y) {
        return {u};
    }
    if (!u_in_y && !inv_in_y) {
        return {v, u, v.inverse()};
    }
    // A letter in Z gains a trailing v^{-1}; one whose inverse is in Z gains a
    // leading v. Only this orientation gives |phi(w)|_c = |w|_c - E(Y, v).
    if (!u_in_y) {
        // u in Z, u^{-1} in Y
        return {u, v.inverse()};
    }
    // u in Y, u^{-1} in Z
    return {v, u};
}

/// The letter-image table of a Whitehead automorphism.
struct WhiteheadMap {
    Triplet triplet;
    std::vector<std::vector<Letter>> image;  // indexed by letter code

    explicit WhiteheadMap(const Triplet& t) : triplet(t) {
        for (int c = 0; c < alphabet_size(t.rank()); ++c) {
            image.push_back(whitehead_image(t, Letter::from_code(c)));
        }
    }

    template <class Out>
    void substitute(std::span<const Letter> letters, Out& buffer) const {
        for (Letter l : letters) {
            for (Letter x : image[static_cast<std::size_t>(l.code())]) {
                push_reduced(buffer, x);
            }
        }
    }
};

inline bool is_valid_triplet(const Triplet& t, const WhiteheadGraph& g) {
    check_same_rank(t.rank(), g.rank());
    const LetterMask z = t.z_mask();
    for (Letter y : mask_letters(t.y_mask())) {
        if (g.neighbours(y) & z) {
            return false;
        }
    }
    return true;
}

/// Successor characterization: no cyclically adjacent (a, b) with a in Y and
/// b^{-1} in Z, or a in Z and b^{-1} in Y.
inline bool is_valid_triplet(const Triplet& t, const CyclicWord& cw) {
    check_same_rank(t.rank(), cw.rank());
    const auto s = cw.letters();
    const std::size_t n = s.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Letter a = s[i];
        const Letter binv = s[(i + 1) % n].inverse();
        if ((t.in_y(a) && t.in_z(binv)) || (t.in_z(a) && t.in_y(binv))) {
            return false;
        }
    }
    return true;
}

/// Number of edges joining v to members of `set`.
inline int edge_count_to(const WhiteheadGraph& g, LetterMask set, Letter v) {
    if (set & letter_bit(v)) {
        throw std::invalid_argument("edge_count_to: v lies in the set");
    }
    int e = 0;
    for (Letter u : mask_letters(set)) {
        e += g.multiplicity(v, u);
    }
    return e;
}

inline Word apply_whitehead(const Triplet& t, const Word& w) {
    check_same_rank(t.rank(), w.rank());
    const WhiteheadMap map(t);
    std::vector<Letter> buffer;
    buffer.reserve(w.size() * 2);
    map.substitute(w.letters(), buffer);
    return Word::from_reduced(w.rank(), std::move(buffer));
}

inline CyclicWord apply_whitehead(const WhiteheadMap& map, const CyclicWord& cw) {
    std::vector<Letter> buffer;
    buffer.reserve(cw.size() * 2);
    map.substitute(cw.letters(), buffer);
    strip_conjugator(buffer);
    return CyclicWord::canonical(cw.rank(), std::move(buffer));
}

inline CyclicWord apply_whitehead(const Triplet& t, const CyclicWord& cw) {
    check_same_rank(t.rank(), cw.rank());
    return apply_whitehead(WhiteheadMap(t), cw);
}

struct ReducingTriplet {
    Triplet triplet;
    int reduction;
};

inline constexpr int kMaxEnumeratedComponents = 24;

/// All valid triplets with E(Y, v) > 0, built from the components of the
/// graph minus each candidate v. Sorted by reduction (descending), then by
/// serialized triplet.
inline std::vector<ReducingTriplet> reducing_triplets(const CyclicWord& cw) {
    const WhiteheadGraph g = build_graph(cw);
    std::vector<ReducingTriplet> out;
    for (int c = 0; c < g.vertex_count(); ++c) {
        const Letter v = Letter::from_code(c);
        if (g.degree(v) == 0) {
            continue;
        }
        const auto comps = g.components_without(v);
        std::vector<LetterMask> movable;
        for (LetterMask comp : comps) {
            if (!(comp & letter_bit(v.inverse()))) {
                movable.push_back(comp);
            }
        }
        if (movable.size() > kMaxEnumeratedComponents) {
            throw std::length_error("reducing_triplets: too many components to enumerate");
        }
        const std::uint64_t subsets = std::uint64_t{1} << movable.size();
        for (std::uint64_t s = 1; s < subsets; ++s) {
            LetterMask y = 0;
            for (std::size_t i = 0; i < movable.size(); ++i) {
                if (s & (std::uint64_t{1} << i)) {
                    y |= movable[i];
                }
            }
            const int e = edge_count_to(g, y, v);
            if (e > 0) {
                out.push_back({Triplet::make(g.rank(), y, v), e});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const ReducingTriplet& a, const ReducingTriplet& b) {
        if (a.reduction != b.reduction) {
            return a.reduction > b.reduction;
        }
        return a.triplet < b.triplet;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const ReducingTriplet& a, const ReducingTriplet& b) {
                              return a.triplet == b.triplet;
                          }),
              out.end());
    return out;
}

/// Every valid triplet of cw with its reduction E(Y, v), which may be zero.
/// Sorted by serialized triplet.
inline std::vector<ReducingTriplet> valid_triplets(const CyclicWord& cw) {
    const WhiteheadGraph g = build_graph(cw);
    std::vector<ReducingTriplet> out;
    for (int c = 0; c < g.vertex_count(); ++c) {
        const Letter v = Letter::from_code(c);
        std::vector<LetterMask> movable;
        for (LetterMask comp : g.components_without(v)) {
            if (!(comp & letter_bit(v.inverse()))) {
                movable.push_back(comp);
            }
        }
        if (movable.size() > kMaxEnumeratedComponents) {
            throw std::length_error("valid_triplets: too many components to enumerate");
        }
        const std::uint64_t subsets = std::uint64_t{1} << movable.size();
        for (std::uint64_t s = 1; s < subsets; ++s) {
            LetterMask y = 0;
            for (std::size_t i = 0; i < movable.size(); ++i) {
                if (s & (std::uint64_t{1} << i)) {
                    y |= movable[i];
                }
            }
            out.push_back({Triplet::make(g.rank(), y, v), edge_count_to(g, y, v)});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const ReducingTriplet& a, const ReducingTriplet& b) { return a.triplet < b.triplet; });
    return out;
}

/// The first entry of reducing_triplets(cw), computed without enumerating
/// bipartitions: for fixed v the maximal reduction puts every component
/// except that of v^{-1} into Y, and that choice is also the least one in
/// serialized order.
inline std::optional<ReducingTriplet> best_reducing_triplet(const WhiteheadGraph& g) {
    std::optional<ReducingTriplet> best;
    std::string best_key;
    for (int c = 0; c < g.vertex_count(); ++c) {
        const Letter v = Letter::from_code(c);
        const int deg = g.degree(v);
        if (deg == 0) {
            continue;
        }
        const auto comps = g.components_without(v);
        if (comps.size() < 2) {
            continue;
        }
        LetterMask z = 0;
        for (LetterMask comp : comps) {
            if (comp & letter_bit(v.inverse())) {
                z = comp;
            }
        }
        const LetterMask y = full_mask(g.rank()) & ~z & ~letter_bit(v);
        const int e = edge_count_to(g, y, v);
        if (e <= 0) {
            continue;
        }
        const Triplet t = Triplet::make(g.rank(), y, v);
        if (!best || e > best->reduction || (e == best->reduction && t.serialize() < best_key)) {
            best = ReducingTriplet{t, e};
            best_key = t.serialize();
        }
    }
    return best;
}

struct Minimization {
    CyclicWord min_core;
    std::vector<Triplet> trace;
};

/// Greedy Whitehead reduction of the cyclic core of w.
inline Minimization minimize(const CyclicWord& start) {
    if (start.empty()) {
        throw std::invalid_argument("minimize: empty word");
    }
    Minimization m{start, {}};
    while (true) {
        const auto step = best_reducing_triplet(build_graph(m.min_core));
        if (!step) {
            break;
        }
        m.min_core = apply_whitehead(step->triplet, m.min_core);
        m.trace.push_back(step->triplet);
    }
    return m;
}

inline Minimization minimize(const Word& w) {
    if (w.empty()) {
        throw std::invalid_argument("minimize: empty word");
    }
    return minimize(cyclic_reduce(w).core);
}

inline bool is_primitive(const CyclicWord& cw) { return minimize(cw).min_core.size() == 1; }

inline bool is_primitive(const Word& w) {
    if (w.empty()) {
        throw std::invalid_argument("is_primitive: the identity is not classified");
    }
    return is_primitive(cyclic_reduce(w).core);
}

inline bool is_in_proper_free_factor(const CyclicWord& cw) {
    if (cw.rank() < 2) {
        throw std::invalid_argument("is_in_proper_free_factor: rank must be at least 2");
    }
    const CyclicWord terminal = minimize(cw).min_core;
    return terminal.size() <= 1 ||
           static_cast<int>(letters_used(terminal).size()) < terminal.rank();
}

inline bool is_in_proper_free_factor(const Word& w) {
    if (w.empty()) {
        throw std::invalid_argument("is_in_proper_free_factor: the identity is not classified");
    }
    return is_in_proper_free_factor(cyclic_reduce(w).core);
}

/// Vertices whose removal increases the number of components among
/// vertices of positive degree.
inline std::vector<Letter> cut_vertices(const WhiteheadGraph& g) {
    LetterMask active = 0;
    for (int c = 0; c < g.vertex_count(); ++c) {
        if (g.degree(Letter::from_code(c)) > 0) {
            active |= LetterMask{1} << c;
        }
    }
    auto count_active_components = [&](LetterMask dropped) {
        int count = 0;
        for (LetterMask comp : g.components_excluding(dropped)) {
            if (comp & active) {
                ++count;
            }
        }
        return count;
    };
    const int base = count_active_components(0);
    std::vector<Letter> out;
    for (Letter v : mask_letters(active)) {
        if (count_active_components(letter_bit(v)) > base) {
            out.push_back(v);
        }
    }
    return out;
}

}  // namespace primwords

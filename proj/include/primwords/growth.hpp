#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "primwords/numeric.hpp"
#include "primwords/whitehead.hpp"

namespace primwords {

/// Successor admissibility for the cyclic words on which a triplet is valid:
/// b may follow a iff b != a^{-1}, not (a in Y and b^{-1} in Z) and not
/// (a in Z and b^{-1} in Y).
class TransferMatrix {
public:
    explicit TransferMatrix(const Triplet& t)
        : rank_(t.rank()), n_(alphabet_size(t.rank())), allow_(static_cast<std::size_t>(n_ * n_), 0) {
        for (int a = 0; a < n_; ++a) {
            const Letter la = Letter::from_code(a);
            for (int b = 0; b < n_; ++b) {
                const Letter lb = Letter::from_code(b);
                const Letter binv = lb.inverse();
                const bool ok = lb != la.inverse() && !(t.in_y(la) && t.in_z(binv)) &&
                                !(t.in_z(la) && t.in_y(binv));
                allow_[idx(a, b)] = ok ? 1 : 0;
            }
        }
    }

    int rank() const { return rank_; }
    int size() const { return n_; }
    bool allows(Letter a, Letter b) const { return allow_[idx(a.code(), b.code())] != 0; }
    int at(int a, int b) const { return allow_[idx(a, b)]; }

    int row_sum(Letter a) const {
        int s = 0;
        for (int b = 0; b < n_; ++b) {
            s += allow_[idx(a.code(), b)];
        }
        return s;
    }

    std::vector<int> row_sums() const {
        std::vector<int> out;
        for (int a = 0; a < n_; ++a) {
            out.push_back(row_sum(Letter::from_code(a)));
        }
        return out;
    }

private:
    std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a * n_ + b); }

    int rank_;
    int n_;
    std::vector<std::uint8_t> allow_;
};

inline TransferMatrix transfer_matrix(const Triplet& t) { return TransferMatrix(t); }

// ---------------------------------------------------------------------------
// Exact tuple counts
// ---------------------------------------------------------------------------

/// Dense square matrix over T, row-major.
template <class T>
struct SquareMatrix {
    int n = 0;
    std::vector<T> a;

    explicit SquareMatrix(int size) : n(size), a(static_cast<std::size_t>(size * size), T(0)) {}

    static SquareMatrix identity(int size) {
        SquareMatrix m(size);
        for (int i = 0; i < size; ++i) {
            m(i, i) = T(1);
        }
        return m;
    }

    T& operator()(int i, int j) { return a[static_cast<std::size_t>(i * n + j)]; }
    const T& operator()(int i, int j) const { return a[static_cast<std::size_t>(i * n + j)]; }

    friend SquareMatrix operator*(const SquareMatrix& x, const SquareMatrix& y) {
        SquareMatrix z(x.n);
        for (int i = 0; i < x.n; ++i) {
            for (int k = 0; k < x.n; ++k) {
                if (x(i, k) == 0) {
                    continue;
                }
                for (int j = 0; j < x.n; ++j) {
                    z(i, j) += x(i, k) * y(k, j);
                }
            }
        }
        return z;
    }
};

/// m^e by repeated squaring.
template <class T>
SquareMatrix<T> matrix_power(SquareMatrix<T> m, unsigned e) {
    SquareMatrix<T> result = SquareMatrix<T>::identity(m.n);
    while (e) {
        if (e & 1u) {
            result = result * m;
        }
        e >>= 1u;
        if (e) {
            m = m * m;
        }
    }
    return result;
}

inline SquareMatrix<BigInt> to_big(const TransferMatrix& m) {
    SquareMatrix<BigInt> out(m.size());
    for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j) {
            out(i, j) = m.at(i, j);
        }
    }
    return out;
}

struct TupleCount {
    Letter start;
    int r = 1;
    BigInt count;
};

/// Number of admissible r-tuples of letters that can follow `start`.
inline TupleCount count_follow_tuples(const TransferMatrix& m, Letter start, int r) {
    if (r < 1) {
        throw std::invalid_argument("count_follow_tuples: r must be at least 1");
    }
    const auto power = matrix_power(to_big(m), static_cast<unsigned>(r));
    TupleCount out{start, r, 0};
    for (int b = 0; b < m.size(); ++b) {
        out.count += power(start.code(), b);
    }
    return out;
}

inline TupleCount count_follow_tuples(const Triplet& t, Letter start, int r) {
    return count_follow_tuples(TransferMatrix(t), start, r);
}

// ---------------------------------------------------------------------------
// Spectral radius
// ---------------------------------------------------------------------------

class NoConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kPowerIterationCap = 100000;

/// Strongly connected components of the successor graph, as index lists.
inline std::vector<std::vector<int>> strong_components(const TransferMatrix& m) {
    const int n = m.size();
    std::vector<std::uint64_t> reach(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (m.at(i, j)) {
                reach[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
            }
        }
    }
    // transitive closure (Warshall on bitsets)
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            if (reach[static_cast<std::size_t>(i)] & (std::uint64_t{1} << k)) {
                reach[static_cast<std::size_t>(i)] |= reach[static_cast<std::size_t>(k)];
            }
        }
    }
    std::vector<std::vector<int>> comps;
    std::uint64_t assigned = 0;
    for (int i = 0; i < n; ++i) {
        if (assigned & (std::uint64_t{1} << i)) {
            continue;
        }
        std::vector<int> comp{i};
        assigned |= std::uint64_t{1} << i;
        for (int j = i + 1; j < n; ++j) {
            const bool both = (reach[static_cast<std::size_t>(i)] >> j & 1u) &&
                              (reach[static_cast<std::size_t>(j)] >> i & 1u);
            if (both) {
                comp.push_back(j);
                assigned |= std::uint64_t{1} << j;
            }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

/// Perron root of an irreducible block via power iteration on (B + I) from
/// the all-ones vector; stops when the Collatz-Wielandt bounds
/// min (By)_i / y_i <= rho <= max (By)_i / y_i are within tol.
inline double block_perron_root(const TransferMatrix& m, const std::vector<int>& block, double tol) {
    const std::size_t n = block.size();
    std::vector<double> x(n, 1.0);
    std::vector<double> y(n, 0.0);
    for (int iter = 0; iter < kPowerIterationCap; ++iter) {
        double lo = INFINITY;
        double hi = 0;
        double norm = 0;
        for (std::size_t i = 0; i < n; ++i) {
            double s = x[i];
            for (std::size_t j = 0; j < n; ++j) {
                if (m.at(block[i], block[j])) {
                    s += x[j];
                }
            }
            y[i] = s;
            lo = std::min(lo, s / x[i]);
            hi = std::max(hi, s / x[i]);
            norm = std::max(norm, s);
        }
        if (hi - lo <= tol) {
            return 0.5 * (hi + lo) - 1.0;
        }
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = y[i] / norm;
        }
    }
    throw NoConvergence("spectral_radius: power iteration did not converge");
}

/// Perron root of the nonnegative matrix: the exponential growth rate of
/// total path counts. Reducible matrices are handled blockwise.
inline double spectral_radius(const TransferMatrix& m, double tol = 1e-12) {
    if (!(tol > 0)) {
        throw std::invalid_argument("spectral_radius: tol must be positive");
    }
    double rho = 0;
    for (const auto& block : strong_components(m)) {
        bool has_edge = false;
        for (int i : block) {
            for (int j : block) {
                has_edge = has_edge || m.at(i, j);
            }
        }
        if (has_edge) {
            rho = std::max(rho, block_perron_root(m, block, tol));
        }
    }
    return rho;
}

inline double spectral_radius(const Triplet& t, double tol = 1e-12) {
    return spectral_radius(TransferMatrix(t), tol);
}

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

/// Integer polynomial with coefficients in ascending powers.
class Polynomial {
public:
    explicit Polynomial(std::vector<long long> ascending) : c_(std::move(ascending)) {
        while (!c_.empty() && c_.back() == 0) {
            c_.pop_back();
        }
        if (c_.size() < 2) {
            throw std::invalid_argument("polynomial must have degree at least 1");
        }
    }

    /// From coefficients listed highest power first.
    static Polynomial from_descending(std::vector<long long> desc) {
        std::reverse(desc.begin(), desc.end());
        return Polynomial(std::move(desc));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<long long>& ascending() const { return c_; }

    std::vector<long long> descending() const { return {c_.rbegin(), c_.rend()}; }

    long double operator()(long double x) const {
        long double acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * x + static_cast<long double>(*it);
        }
        return acc;
    }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (int p = degree(); p >= 0; --p) {
            const long long c = c_[static_cast<std::size_t>(p)];
            if (c == 0) {
                continue;
            }
            const long long mag = c < 0 ? -c : c;
            if (first) {
                os << (c < 0 ? "-" : "");
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (mag != 1 || p == 0) {
                os << mag;
            }
            if (p >= 1) {
                os << "x";
            }
            if (p >= 2) {
                os << "^" << p;
            }
            first = false;
        }
        return os.str();
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<long long> c_;
};

inline constexpr double kRootScanStep = 1.0 / 64.0;

/// Largest real root in (0, upper]: scan downward from `upper` in steps of
/// 1/64 for the first sign change, then bisect to tol. Roots of even
/// multiplicity without a sign change are not detected.
inline double largest_real_root(const Polynomial& p, double upper, double tol = 1e-13) {
    if (!(tol > 0) || !(upper > 0)) {
        throw std::invalid_argument("largest_real_root: need tol > 0 and upper > 0");
    }
    double hi = upper;
    long double f_hi = p(hi);
    if (f_hi == 0) {
        return hi;
    }
    const int steps = static_cast<int>(std::ceil(upper / kRootScanStep));
    for (int s = 1; s <= steps; ++s) {
        const double lo = std::max(upper - s * kRootScanStep, 0.0);
        const long double f_lo = p(lo);
        if (f_lo == 0 && lo > 0) {
            return lo;
        }
        if ((f_lo < 0) != (f_hi < 0)) {
            double a = lo;
            double b = hi;
            long double fa = f_lo;
            while (b - a > tol) {
                const double mid = 0.5 * (a + b);
                const long double fm = p(mid);
                if (fm == 0) {
                    return mid;
                }
                if ((fm < 0) == (fa < 0)) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            return 0.5 * (a + b);
        }
        hi = lo;
        f_hi = f_lo;
        if (lo <= 0) {
            break;
        }
    }
    throw std::domain_error("largest_real_root: no sign change in (0, " + std::to_string(upper) + "]");
}

enum class PolynomialCase {
    SingleLetterY,      // Y = {x}
    LetterPairY,        // Y = {x, x^{-1}}
    BlockQuadratic,     // building-block language
    Shpilrain,          // reference bound
    YThreeRankThree,    // Y = {a, a^{-1}, b}, k = 3
    ZThreeRankThree,    // Y = {a^{-1}, b^{-1}}, k = 3
};

inline std::string case_name(PolynomialCase c) {
    switch (c) {
        case PolynomialCase::SingleLetterY: return "quintic";
        case PolynomialCase::LetterPairY: return "quartic";
        case PolynomialCase::BlockQuadratic: return "quadratic";
        case PolynomialCase::Shpilrain: return "shpilrain";
        case PolynomialCase::YThreeRankThree: return "y3k3";
        case PolynomialCase::ZThreeRankThree: return "z3k3";
    }
    return "?";
}

inline PolynomialCase parse_polynomial_case(std::string_view name) {
    for (auto c : {PolynomialCase::SingleLetterY, PolynomialCase::LetterPairY,
                   PolynomialCase::BlockQuadratic, PolynomialCase::Shpilrain,
                   PolynomialCase::YThreeRankThree, PolynomialCase::ZThreeRankThree}) {
        if (case_name(c) == name) {
            return c;
        }
    }
    throw std::invalid_argument("unknown polynomial case: " + std::string(name));
}

inline Polynomial characteristic_polynomial(PolynomialCase c, int k) {
    if (k < 2) {
        throw std::invalid_argument("characteristic_polynomial: k must be at least 2");
    }
    const long long a = 2LL * k - 3;
    switch (c) {
        case PolynomialCase::SingleLetterY:
            return Polynomial::from_descending({1, -a, -3, a, 3, a});
        case PolynomialCase::LetterPairY:
            return Polynomial::from_descending({1, -(2LL * k - 2), 2LL * k - 4, 2LL * k - 2, -6LL * k + 11});
        case PolynomialCase::BlockQuadratic:
            return Polynomial::from_descending({1, -(2LL * k - 4), -2});
        case PolynomialCase::Shpilrain:
            // x(x^2 - 1)(x - (2k-2)) + 1
            return Polynomial::from_descending({1, -(2LL * k - 2), -1, 2LL * k - 2, 1});
        case PolynomialCase::YThreeRankThree:
        case PolynomialCase::ZThreeRankThree:
            if (k != 3) {
                throw std::invalid_argument("characteristic_polynomial: " + case_name(c) + " is defined for k = 3 only");
            }
            return c == PolynomialCase::YThreeRankThree ? Polynomial::from_descending({1, -3, 1, -1, -1, 7})
                                                        : Polynomial::from_descending({1, -2, -4, 2, 7});
    }
    throw std::invalid_argument("characteristic_polynomial: unknown case");
}

// ---------------------------------------------------------------------------
// Closed-form tuple counts
// ---------------------------------------------------------------------------

enum class CaseFormula {
    Case1PairsAfterV,          // y^2 + z(z-1) + (2k-1)
    Case2PairsAfterV,          // 9 + (2k-5)(2k-4) + (2k-1)
    Case3YPairs,               // 4k^2 - 18k + 23
    Case3APairs,               // 2k + 5
    Case3VPairs,               // 4k^2 - 14k + 21
    Case3VTriplesLetterPair,   // 8k^3 - 48k^2 + 108k - 61
    Case3VTriplesDistinct,     // 8k^3 - 56k^2 + 160k - 145
    Case4InversePairs,         // 4k^2 - 14k + 16
    Case4ZPairPairs,           // 4k^2 - 16k + 21
    Case4VInversePairs,        // 4k^2 - 16k + 19
    Case4VTriples,             // 8k^3 - 44k^2 + 106k - 91
    Case5InversePairs,         // 4k^2 - 14k + 14
    Case5YPairPairs,           // 4k^2 - 16k + 19
    Case5VTriples,             // 8k^3 - 40k^2 + 80k - 51
};

struct FormulaParams {
    int y = 0;
    int z = 0;
};

inline long long case_formula(CaseFormula f, int k, FormulaParams params = {}) {
    const long long K = k;
    auto need_k = [&](int min_k) {
        if (k < min_k) {
            throw std::out_of_range("case_formula: k = " + std::to_string(k) + " below " +
                                    std::to_string(min_k));
        }
    };
    switch (f) {
        case CaseFormula::Case1PairsAfterV: {
            need_k(2);
            const long long y = params.y;
            const long long z = params.z;
            if (y < 1 || z < 1 || y + z != 2 * K - 1) {
                throw std::out_of_range("case_formula: need y, z >= 1 and y + z = 2k - 1");
            }
            return y * y + z * (z - 1) + (2 * K - 1);
        }
        case CaseFormula::Case2PairsAfterV:
            need_k(3);
            return 9 + (2 * K - 5) * (2 * K - 4) + (2 * K - 1);
        case CaseFormula::Case3YPairs: need_k(4); return 4 * K * K - 18 * K + 23;
        case CaseFormula::Case3APairs: need_k(4); return 2 * K + 5;
        case CaseFormula::Case3VPairs: need_k(4); return 4 * K * K - 14 * K + 21;
        case CaseFormula::Case3VTriplesLetterPair: need_k(4); return 8 * K * K * K - 48 * K * K + 108 * K - 61;
        case CaseFormula::Case3VTriplesDistinct: need_k(4); return 8 * K * K * K - 56 * K * K + 160 * K - 145;
        case CaseFormula::Case4InversePairs: need_k(4); return 4 * K * K - 14 * K + 16;
        case CaseFormula::Case4ZPairPairs: need_k(4); return 4 * K * K - 16 * K + 21;
        case CaseFormula::Case4VInversePairs: need_k(4); return 4 * K * K - 16 * K + 19;
        case CaseFormula::Case4VTriples: need_k(4); return 8 * K * K * K - 44 * K * K + 106 * K - 91;
        case CaseFormula::Case5InversePairs: need_k(4); return 4 * K * K - 14 * K + 14;
        case CaseFormula::Case5YPairPairs: need_k(4); return 4 * K * K - 16 * K + 19;
        case CaseFormula::Case5VTriples: need_k(4); return 8 * K * K * K - 40 * K * K + 80 * K - 51;
    }
    throw std::invalid_argument("case_formula: unknown formula");
}

/// 2k(2k-2)/(2k-3)^2 * (2k-3)^N.
inline double asymptotic_C(int k, int n) {
    if (k < 3) {
        throw std::invalid_argument("asymptotic_C: k must be at least 3");
    }
    const double a = 2.0 * k - 3;
    return 2.0 * k * (2.0 * k - 2) / (a * a) * std::pow(a, n);
}

/// Counts of block sequences of total length n built from 2k-4 blocks of
/// length 1 and 2 blocks of length 2: a_n = (2k-4) a_{n-1} + 2 a_{n-2}.
inline std::vector<BigInt> block_sequence_counts(int k, int max_n) {
    std::vector<BigInt> a(static_cast<std::size_t>(std::max(max_n, 1)) + 1);
    a[0] = 1;
    if (max_n >= 1) {
        a[1] = 2 * k - 4;
    }
    for (int n = 2; n <= max_n; ++n) {
        a[static_cast<std::size_t>(n)] =
            BigInt(2 * k - 4) * a[static_cast<std::size_t>(n - 1)] + 2 * a[static_cast<std::size_t>(n - 2)];
    }
    return a;
}

/// Growth rate of the block language: the larger root of x^2 - (2k-4)x - 2.
inline double block_language_growth(int k) {
    const double b = 2.0 * k - 4;
    return 0.5 * (b + std::sqrt(b * b + 8));
}

// ---------------------------------------------------------------------------
// Triplet shapes
// ---------------------------------------------------------------------------

enum class ShapeKind { SingleLetterY, LetterPairY, SingletonZ, Negligible };

inline std::string shape_kind_name(ShapeKind s) {
    switch (s) {
        case ShapeKind::SingleLetterY: return "Y={x}";
        case ShapeKind::LetterPairY: return "Y={x,x^-1}";
        case ShapeKind::SingletonZ: return "Z={v^-1}";
        case ShapeKind::Negligible: return "negligible";
    }
    return "?";
}

inline ShapeKind shape_kind(const Triplet& t) {
    if (t.y_size() == 1) {
        return ShapeKind::SingleLetterY;
    }
    if (t.z_size() == 1) {
        return ShapeKind::SingletonZ;
    }
    if (t.y_size() == 2) {
        const auto ys = mask_letters(t.y_mask());
        if (ys[0].inverse() == ys[1]) {
            return ShapeKind::LetterPairY;
        }
    }
    return ShapeKind::Negligible;
}

/// Every triplet with v = the last generator (shapes are invariant under
/// renaming, so this fixes v without losing a shape).
inline std::vector<Triplet> shape_triplets(int rank) {
    std::vector<Triplet> out;
    const Letter v = Letter::make(rank, +1);
    for (const Triplet& t : all_triplets(rank)) {
        if (t.v() == v) {
            out.push_back(t);
        }
    }
    return out;
}

}  // namespace primwords

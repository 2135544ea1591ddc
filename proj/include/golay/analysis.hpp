#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "golay/construction.hpp"
#include "golay/cyclotomic.hpp"

namespace golay {

struct NotComplementaryError : std::runtime_error {
    NotComplementaryError(std::size_t shift_, std::string what) : std::runtime_error(std::move(what)), shift(shift_) {}
    std::size_t shift;
};

/// A q-ary sequence of unit-modulus entries, stored as root exponents:
/// position i carries zeta_q^{exps[i]}, the coefficient of z^i.
struct QarySequence {
    QarySequence(int q_, std::vector<int> exps_) : q(q_), exps(std::move(exps_)) {
        if (q < 2) throw std::invalid_argument("sequence alphabet must satisfy q >= 2");
        if (exps.empty()) throw std::invalid_argument("sequence must be nonempty");
        for (int e : exps)
            if (e < 0 || e >= q) throw ExponentRangeError("sequence exponent out of [0, q)");
    }

    std::size_t length() const { return exps.size(); }

    bool operator==(const QarySequence& rhs) const { return q == rhs.q && exps == rhs.exps; }

    int q;
    std::vector<int> exps;
};

inline QarySequence reversed(const QarySequence& a) {
    return QarySequence(a.q, std::vector<int>(a.exps.rbegin(), a.exps.rend()));
}

/// Aperiodic autocorrelation at nonnegative shift u, exact:
/// C(u) = sum_{i=0}^{L-1-u} a_{i+u} * conj(a_i).
inline CyclotomicInt autocorrelation(const QarySequence& a, std::size_t shift) {
    const std::size_t len = a.length();
    if (shift >= len) throw std::out_of_range("autocorrelation shift must lie in [0, L)");
    CyclotomicInt acc = CyclotomicInt::zero(a.q);
    for (std::size_t i = 0; i + shift < len; ++i)
        acc += CyclotomicInt::from_root(a.q, ((a.exps[i + shift] - a.exps[i]) % a.q + a.q) % a.q);
    return acc;
}

namespace detail {

/// Laurent polynomial over Z[zeta_q]: coefficient k is at power low + k.
struct LaurentPoly {
    std::int64_t low = 0;
    std::vector<CyclotomicInt> coeffs;

    static LaurentPoly from_sequence(const QarySequence& a) {
        LaurentPoly p;
        p.low = 0;
        p.coeffs.reserve(a.length());
        for (int e : a.exps) p.coeffs.push_back(CyclotomicInt::from_root(a.q, e));
        return p;
    }

    /// conj(A)(z^-1): conjugate coefficients at negated powers.
    LaurentPoly conj_reciprocal() const {
        LaurentPoly p;
        p.low = -(low + static_cast<std::int64_t>(coeffs.size()) - 1);
        p.coeffs.reserve(coeffs.size());
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) p.coeffs.push_back(it->conjugate());
        return p;
    }

    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
        const int q = lhs.coeffs.front().q();
        LaurentPoly p;
        p.low = lhs.low + rhs.low;
        p.coeffs.assign(lhs.coeffs.size() + rhs.coeffs.size() - 1, CyclotomicInt::zero(q));
        for (std::size_t i = 0; i < lhs.coeffs.size(); ++i) {
            if (lhs.coeffs[i].is_zero()) continue;
            for (std::size_t j = 0; j < rhs.coeffs.size(); ++j) p.coeffs[i + j] += lhs.coeffs[i] * rhs.coeffs[j];
        }
        return p;
    }

    LaurentPoly& operator+=(const LaurentPoly& rhs) {
        if (low != rhs.low || coeffs.size() != rhs.coeffs.size())
            throw std::invalid_argument("laurent sum requires matching supports");
        for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] += rhs.coeffs[k];
        return *this;
    }
};

}  // namespace detail

struct GolayCheckResult {
    bool complementary = false;
    std::size_t shift = 0;                   // first offending shift when not complementary
    std::optional<CyclotomicInt> residual;   // its nonzero value

    explicit operator bool() const { return complementary; }
};

/// Exact complementarity test via the polynomial product: computes
/// sum_i A_i(z) * conj(A_i)(z^-1) in Z[zeta_q] and demands the constant L*N with
/// every other Laurent coefficient identically zero. (The shift-sum route through
/// autocorrelation() is the independent cross-check; see the test suite.)
inline GolayCheckResult golay_check(std::span<const QarySequence> seqs) {
    if (seqs.empty()) throw std::invalid_argument("golay_check: empty family");
    const int q = seqs.front().q;
    const std::size_t len = seqs.front().length();
    for (const auto& s : seqs)
        if (s.q != q || s.length() != len) throw std::invalid_argument("golay_check: mixed alphabets or lengths");

    detail::LaurentPoly total;
    total.low = -static_cast<std::int64_t>(len) + 1;
    total.coeffs.assign(2 * len - 1, CyclotomicInt::zero(q));
    for (const auto& s : seqs) {
        const auto a = detail::LaurentPoly::from_sequence(s);
        total += a * a.conj_reciprocal();
    }

    // Coefficient of z^u is the shift-u sum; the coefficient of z^-u is its
    // conjugate, so scanning u = 0..L-1 covers the whole Laurent support and the
    // first failure reported is the smallest offending shift.
    const auto at = [&](std::int64_t power) -> const CyclotomicInt& {
        return total.coeffs[static_cast<std::size_t>(power - total.low)];
    };
    const auto target = CyclotomicInt::from_int(
        q, checked_mul(static_cast<std::int64_t>(len), static_cast<std::int64_t>(seqs.size())));
    if (!(at(0) == target)) {
        GolayCheckResult r;
        r.complementary = false;
        r.shift = 0;
        r.residual = at(0) - target;
        return r;
    }
    for (std::size_t u = 1; u < len; ++u) {
        const CyclotomicInt& pos = at(static_cast<std::int64_t>(u));
        const CyclotomicInt& neg = at(-static_cast<std::int64_t>(u));
        if (pos.is_zero() && neg.is_zero()) continue;
        GolayCheckResult r;
        r.complementary = false;
        r.shift = u;
        r.residual = pos.is_zero() ? neg : pos;
        return r;
    }
    GolayCheckResult r;
    r.complementary = true;
    return r;
}

/// N sequences of common length L whose autocorrelations cancel exactly;
/// the defining identity is verified on construction.
class GolaySet {
  public:
    static GolaySet checked(std::vector<QarySequence> seqs) {
        const auto result = golay_check(seqs);
        if (!result)
            throw NotComplementaryError(result.shift,
                                        "family is not complementary: nonzero autocorrelation sum at shift " +
                                            std::to_string(result.shift));
        return GolaySet(std::move(seqs));
    }

    int q() const { return seqs_.front().q; }
    std::size_t size() const { return seqs_.size(); }            // N
    std::size_t length() const { return seqs_.front().length(); }  // L
    std::span<const QarySequence> sequences() const { return seqs_; }

  private:
    explicit GolaySet(std::vector<QarySequence> seqs) : seqs_(std::move(seqs)) {}
    std::vector<QarySequence> seqs_;
};

struct SetFamilies {
    std::vector<GolaySet> rows;
    std::vector<GolaySet> columns;
};

/// Every row and every column of a constructed matrix is one Golay set of size N;
/// returns all 2N of them, each re-verified.
inline SetFamilies extract_sets(const UnitCoeffPolyMatrix& m) {
    SetFamilies out;
    for (int i = 0; i < m.size(); ++i) {
        std::vector<QarySequence> row;
        row.reserve(static_cast<std::size_t>(m.size()));
        for (int j = 0; j < m.size(); ++j) row.emplace_back(m.q(), m.entry(i, j));
        out.rows.push_back(GolaySet::checked(std::move(row)));
    }
    for (int j = 0; j < m.size(); ++j) {
        std::vector<QarySequence> col;
        col.reserve(static_cast<std::size_t>(m.size()));
        for (int i = 0; i < m.size(); ++i) col.emplace_back(m.q(), m.entry(i, j));
        out.columns.push_back(GolaySet::checked(std::move(col)));
    }
    return out;
}

struct PmeprEstimate {
    double value = 0.0;
    std::size_t peak_index = 0;  // smallest grid index attaining the maximum
    std::size_t grid_size = 0;
};

/// |A(z)|^2 / L maximized over the K*L-point grid z = exp(2 pi i j / (K*L)).
/// A grid maximum lower-bounds the true supremum; the gap shrinks as K grows.
inline PmeprEstimate pmepr(const QarySequence& a, int oversample) {
    if (oversample < 4) throw std::invalid_argument("pmepr: oversampling factor must be >= 4");
    const std::size_t len = a.length();
    const std::size_t grid = static_cast<std::size_t>(oversample) * len;
    std::vector<std::complex<double>> unit(grid);
    for (std::size_t k = 0; k < grid; ++k) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(grid);
        unit[k] = {std::cos(angle), std::sin(angle)};
    }
    std::vector<std::complex<double>> entry(len);
    for (std::size_t i = 0; i < len; ++i) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(a.exps[i]) / static_cast<double>(a.q);
        entry[i] = {std::cos(angle), std::sin(angle)};
    }

    PmeprEstimate best;
    best.grid_size = grid;
    for (std::size_t j = 0; j < grid; ++j) {
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t i = 0; i < len; ++i) acc += entry[i] * unit[j * i % grid];
        const double power = std::norm(acc) / static_cast<double>(len);
        if (power > best.value) {
            best.value = power;
            best.peak_index = j;
        }
    }
    return best;
}

/// Z_q-valued multilinear polynomial in binary variables; monomial bitmask
/// assigns bit i to variable x_i, coefficients are nonzero residues mod q.
class GeneralizedBooleanFunction {
  public:
    GeneralizedBooleanFunction(int q, int vars, std::map<unsigned, int> terms)
        : q_(q), vars_(vars), terms_(std::move(terms)) {
        if (q_ < 2) throw std::invalid_argument("boolean function alphabet must satisfy q >= 2");
        if (vars_ < 0 || vars_ > 31) throw std::invalid_argument("unsupported variable count");
        for (const auto& [mask, c] : terms_) {
            if (mask >> vars_) throw std::invalid_argument("monomial uses a variable out of range");
            if (c <= 0 || c >= q_) throw std::invalid_argument("coefficients must be nonzero residues mod q");
        }
    }

    int q() const { return q_; }
    int vars() const { return vars_; }
    const std::map<unsigned, int>& terms() const { return terms_; }

    /// Value at point m, with x_0 the most significant bit of m.
    int evaluate(std::uint64_t m) const {
        unsigned active = 0;  // mask of variables equal to 1 at this point
        for (int i = 0; i < vars_; ++i)
            if (m >> (vars_ - 1 - i) & 1) active |= 1u << i;
        std::int64_t acc = 0;
        for (const auto& [mask, c] : terms_)
            if ((mask & active) == mask) acc += c;
        return static_cast<int>(acc % q_);
    }

    int degree() const {
        int deg = 0;
        for (const auto& [mask, c] : terms_)
            if (mask != 0) deg = std::max(deg, std::popcount(mask));
        return deg;
    }

    /// Rendering convention: terms grouped by degree, lexicographic variable
    /// tuples within a degree, unit coefficients elided, constant last.
    std::string to_string() const {
        std::vector<unsigned> masks;
        for (const auto& [mask, c] : terms_)
            if (mask != 0) masks.push_back(mask);
        auto vars_of = [](unsigned mask) {
            std::vector<int> v;
            for (int i = 0; mask >> i; ++i)
                if (mask >> i & 1) v.push_back(i);
            return v;
        };
        std::sort(masks.begin(), masks.end(), [&](unsigned a, unsigned b) {
            const int da = std::popcount(a), db = std::popcount(b);
            if (da != db) return da < db;
            return vars_of(a) < vars_of(b);
        });
        std::string out;
        for (unsigned mask : masks) {
            if (!out.empty()) out += " + ";
            const int c = terms_.at(mask);
            if (c != 1) out += std::to_string(c);
            for (int i : vars_of(mask)) out += "x_" + std::to_string(i);
        }
        if (auto it = terms_.find(0); it != terms_.end()) {
            if (!out.empty()) out += " + ";
            out += std::to_string(it->second);
        }
        return out.empty() ? "0" : out;
    }

    bool operator==(const GeneralizedBooleanFunction& rhs) const {
        return q_ == rhs.q_ && vars_ == rhs.vars_ && terms_ == rhs.terms_;
    }

  private:
    int q_;
    int vars_;
    std::map<unsigned, int> terms_;
};

/// Algebraic normal form of the exponent function m -> exps[m], computed by the
/// Moebius transform over Z_q. Requires L = 2^v; x_0 is the most significant bit.
inline GeneralizedBooleanFunction anf(const QarySequence& a) {
    const std::size_t len = a.length();
    if (!std::has_single_bit(len)) throw std::invalid_argument("anf requires a length that is a power of 2");
    const int vars = std::countr_zero(len);

    // g[mask] = f(point(mask)) where variable x_i in the mask sets bit (v-1-i) of m
    std::vector<int> g(len);
    for (std::size_t mask = 0; mask < len; ++mask) {
        std::size_t point = 0;
        for (int i = 0; i < vars; ++i)
            if (mask >> i & 1) point |= std::size_t{1} << (vars - 1 - i);
        g[mask] = a.exps[point];
    }
    for (int b = 0; b < vars; ++b)
        for (std::size_t mask = 0; mask < len; ++mask)
            if (mask >> b & 1) g[mask] = ((g[mask] - g[mask ^ (std::size_t{1} << b)]) % a.q + a.q) % a.q;

    std::map<unsigned, int> terms;
    for (std::size_t mask = 0; mask < len; ++mask)
        if (g[mask] != 0) terms.emplace(static_cast<unsigned>(mask), g[mask]);
    return GeneralizedBooleanFunction(a.q, vars, std::move(terms));
}

/// Exact paraunitarity: M(z) M^dagger(z^-1) must equal the constant N*L times the
/// identity, coefficient by coefficient in Z[zeta_q].
inline bool paraunitary_check(const UnitCoeffPolyMatrix& m) {
    const int n = m.size();
    const std::int64_t constant = checked_mul(static_cast<std::int64_t>(n), static_cast<std::int64_t>(m.length()));
    const auto target = CyclotomicInt::from_int(m.q(), constant);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            detail::LaurentPoly acc;
            acc.low = -static_cast<std::int64_t>(m.length()) + 1;
            acc.coeffs.assign(2 * m.length() - 1, CyclotomicInt::zero(m.q()));
            for (int k = 0; k < n; ++k) {
                const auto a = detail::LaurentPoly::from_sequence(QarySequence(m.q(), m.entry(i, k)));
                const auto b = detail::LaurentPoly::from_sequence(QarySequence(m.q(), m.entry(j, k)));
                acc += a * b.conj_reciprocal();
            }
            for (std::size_t c = 0; c < acc.coeffs.size(); ++c) {
                const std::int64_t power = acc.low + static_cast<std::int64_t>(c);
                if (power == 0 && i == j) {
                    if (!(acc.coeffs[c] == target)) return false;
                } else if (!acc.coeffs[c].is_zero()) {
                    return false;
                }
            }
        }
    return true;
}

}  // namespace golay

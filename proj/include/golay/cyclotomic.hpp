#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace golay {

// Coefficients are checked 64-bit integers: overflow throws instead of wrapping,
// so an exact zero test is never silently corrupted.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer coefficient overflow in add");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer coefficient overflow in sub");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer coefficient overflow in mul");
    return r;
}

inline int euler_phi(int q) {
    if (q < 1) throw std::invalid_argument("euler_phi: q must be positive");
    int result = q;
    int m = q;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

/// The q-th cyclotomic polynomial, monic with integer coefficients, degree phi(q).
class CyclotomicPoly {
  public:
    int q() const { return q_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const std::int64_t> coeffs() const { return coeffs_; }  // ascending powers

    /// Cached lookup; computed once per q via the exact-division recurrence
    /// Phi_q(x) = (x^q - 1) / prod_{d|q, d<q} Phi_d(x).
    static const CyclotomicPoly& of(int q);

  private:
    CyclotomicPoly(int q, std::vector<std::int64_t> coeffs) : q_(q), coeffs_(std::move(coeffs)) {}

    int q_;
    std::vector<std::int64_t> coeffs_;

    friend CyclotomicPoly compute_cyclotomic(int q);
};

namespace detail {

// Exact division of integer polynomials, divisor monic; throws if the remainder is nonzero.
inline std::vector<std::int64_t> exact_div(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
    const std::size_t dn = den.size() - 1;
    if (num.size() < den.size()) throw std::logic_error("exact_div: degree underflow");
    std::vector<std::int64_t> quot(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        const std::int64_t c = num[i];
        if (c == 0) continue;
        quot[i - dn] = c;
        for (std::size_t k = 0; k <= dn; ++k) num[i - dn + k] = checked_sub(num[i - dn + k], checked_mul(c, den[k]));
    }
    for (std::size_t i = 0; i < dn; ++i)
        if (num[i] != 0) throw std::logic_error("exact_div: nonzero remainder");
    return quot;
}

}  // namespace detail

inline CyclotomicPoly compute_cyclotomic(int q) {
    if (q < 1) throw std::invalid_argument("cyclotomic polynomial: q must be >= 1");
    // Phi_d for every divisor d of q, in increasing order.
    std::map<int, std::vector<std::int64_t>> phi_of;
    for (int d = 1; d <= q; ++d) {
        if (q % d != 0) continue;
        std::vector<std::int64_t> num(static_cast<std::size_t>(d) + 1, 0);  // x^d - 1
        num[0] = -1;
        num.back() = 1;
        for (const auto& [e, pe] : phi_of)
            if (d % e == 0) num = detail::exact_div(std::move(num), pe);
        phi_of.emplace(d, std::move(num));
    }
    return CyclotomicPoly(q, std::move(phi_of.at(q)));
}

inline const CyclotomicPoly& CyclotomicPoly::of(int q) {
    static std::mutex mutex;
    static std::map<int, CyclotomicPoly> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, compute_cyclotomic(q)).first;
    return it->second;  // node references are stable under later insertions
}

inline CyclotomicPoly cyclotomic_polynomial(int q) { return compute_cyclotomic(q); }

/// An element of Z[zeta_q] in canonical form: the residue mod Phi_q, a vector of
/// phi(q) integer coefficients. Canonical form is unique, so equality and the
/// zero test are exact coefficient comparisons for every q, prime power or not.
/// Values are immutable and freely shareable across threads.
class CyclotomicInt {
  public:
    static CyclotomicInt zero(int q) {
        check_q(q);
        return CyclotomicInt(q, std::vector<std::int64_t>(static_cast<std::size_t>(CyclotomicPoly::of(q).degree()), 0));
    }

    static CyclotomicInt from_int(int q, std::int64_t value) {
        CyclotomicInt r = zero(q);
        r.coeffs_[0] = value;
        return r;
    }

    /// The root zeta_q^e, reduced mod Phi_q. Requires 0 <= e < q.
    static CyclotomicInt from_root(int q, int e) {
        check_q(q);
        if (e < 0 || e >= q) throw std::out_of_range("from_root: exponent must lie in [0, q)");
        return CyclotomicInt(q, root_residue(q, e));
    }

    int q() const { return q_; }
    std::span<const std::int64_t> coeffs() const { return coeffs_; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
    }

    /// If this value equals a single q-th root zeta_q^e, returns e.
    std::optional<int> as_root() const {
        for (int e = 0; e < q_; ++e)
            if (coeffs_ == root_residue(q_, e)) return e;
        return std::nullopt;
    }

    CyclotomicInt conjugate() const {
        // Complex conjugation is the ring map x -> x^(q-1); since x^q = 1 mod Phi_q,
        // coefficient of x^i moves to exponent (q - i) mod q before reduction.
        std::vector<std::int64_t> raw(static_cast<std::size_t>(q_), 0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            raw[(q_ - i) % q_] = checked_add(raw[(q_ - i) % q_], coeffs_[i]);
        return CyclotomicInt(q_, reduce(q_, std::move(raw)));
    }

    std::complex<double> to_complex() const {
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(q_);
            acc += static_cast<double>(coeffs_[i]) * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        return acc;
    }

    CyclotomicInt operator-() const {
        std::vector<std::int64_t> c(coeffs_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_sub(0, coeffs_[i]);
        return CyclotomicInt(q_, std::move(c));
    }

    CyclotomicInt& operator+=(const CyclotomicInt& rhs) {
        require_same_q(rhs);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], rhs.coeffs_[i]);
        return *this;
    }

    CyclotomicInt& operator-=(const CyclotomicInt& rhs) {
        require_same_q(rhs);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked_sub(coeffs_[i], rhs.coeffs_[i]);
        return *this;
    }

    friend CyclotomicInt operator+(CyclotomicInt lhs, const CyclotomicInt& rhs) { return lhs += rhs; }
    friend CyclotomicInt operator-(CyclotomicInt lhs, const CyclotomicInt& rhs) { return lhs -= rhs; }

    friend CyclotomicInt operator*(const CyclotomicInt& lhs, const CyclotomicInt& rhs) {
        lhs.require_same_q(rhs);
        std::vector<std::int64_t> raw(static_cast<std::size_t>(lhs.q_), 0);
        for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
            if (lhs.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
                if (rhs.coeffs_[j] == 0) continue;
                const std::size_t k = (i + j) % static_cast<std::size_t>(lhs.q_);
                raw[k] = checked_add(raw[k], checked_mul(lhs.coeffs_[i], rhs.coeffs_[j]));
            }
        }
        return CyclotomicInt(lhs.q_, reduce(lhs.q_, std::move(raw)));
    }

    /// Multiplication by the single root zeta_q^e.
    CyclotomicInt times_root(int e) const {
        if (e < 0 || e >= q_) throw std::out_of_range("times_root: exponent must lie in [0, q)");
        std::vector<std::int64_t> raw(static_cast<std::size_t>(q_), 0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            raw[(i + static_cast<std::size_t>(e)) % q_] = checked_add(raw[(i + static_cast<std::size_t>(e)) % q_], coeffs_[i]);
        return CyclotomicInt(q_, reduce(q_, std::move(raw)));
    }

    bool operator==(const CyclotomicInt& rhs) const { return q_ == rhs.q_ && coeffs_ == rhs.coeffs_; }
    bool operator!=(const CyclotomicInt& rhs) const { return !(*this == rhs); }

    /// Construct directly from a canonical coefficient vector of length phi(q).
    static CyclotomicInt from_coeffs(int q, std::vector<std::int64_t> coeffs) {
        check_q(q);
        if (coeffs.size() != static_cast<std::size_t>(CyclotomicPoly::of(q).degree()))
            throw std::invalid_argument("from_coeffs: expected phi(q) coefficients");
        return CyclotomicInt(q, std::move(coeffs));
    }

  private:
    CyclotomicInt(int q, std::vector<std::int64_t> coeffs) : q_(q), coeffs_(std::move(coeffs)) {}

    static void check_q(int q) {
        if (q < 2) throw std::invalid_argument("cyclotomic arithmetic requires q >= 2");
    }

    void require_same_q(const CyclotomicInt& rhs) const {
        if (q_ != rhs.q_) throw std::invalid_argument("cyclotomic arithmetic on mismatched alphabets");
    }

    // Polynomial remainder mod Phi_q of a raw exponent-indexed vector of length q.
    static std::vector<std::int64_t> reduce(int q, std::vector<std::int64_t> raw) {
        const CyclotomicPoly& phi = CyclotomicPoly::of(q);
        const auto d = static_cast<std::size_t>(phi.degree());
        const auto pc = phi.coeffs();
        for (std::size_t i = raw.size(); i-- > d;) {
            const std::int64_t c = raw[i];
            if (c == 0) continue;
            raw[i] = 0;
            for (std::size_t k = 0; k < d; ++k) raw[i - d + k] = checked_sub(raw[i - d + k], checked_mul(c, pc[k]));
        }
        raw.resize(d);
        return raw;
    }

    // Residues of x^e for e in [0, q), cached per q.
    static const std::vector<std::int64_t>& root_residue(int q, int e) {
        static std::mutex mutex;
        static std::map<int, std::vector<std::vector<std::int64_t>>> cache;
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(q);
        if (it == cache.end()) {
            std::vector<std::vector<std::int64_t>> table;
            table.reserve(static_cast<std::size_t>(q));
            for (int k = 0; k < q; ++k) {
                std::vector<std::int64_t> raw(static_cast<std::size_t>(q), 0);
                raw[static_cast<std::size_t>(k)] = 1;
                table.push_back(reduce(q, std::move(raw)));
            }
            it = cache.emplace(q, std::move(table)).first;
        }
        return it->second[static_cast<std::size_t>(e)];
    }

    int q_;
    std::vector<std::int64_t> coeffs_;
};

/// Dense square matrix over Z[zeta_q]; just enough linear algebra for the
/// product-expansion identity and for test oracles.
class CycMatrix {
  public:
    CycMatrix(int q, std::size_t dim) : q_(q), dim_(dim), a_(dim * dim, CyclotomicInt::zero(q)) {}

    int q() const { return q_; }
    std::size_t dim() const { return dim_; }

    CyclotomicInt& at(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
    const CyclotomicInt& at(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

    friend CycMatrix operator+(const CycMatrix& lhs, const CycMatrix& rhs) {
        lhs.require_compatible(rhs);
        CycMatrix r = lhs;
        for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += rhs.a_[k];
        return r;
    }

    friend CycMatrix operator*(const CycMatrix& lhs, const CycMatrix& rhs) {
        lhs.require_compatible(rhs);
        CycMatrix r(lhs.q_, lhs.dim_);
        for (std::size_t i = 0; i < lhs.dim_; ++i)
            for (std::size_t k = 0; k < lhs.dim_; ++k) {
                const CyclotomicInt& lik = lhs.at(i, k);
                if (lik.is_zero()) continue;
                for (std::size_t j = 0; j < lhs.dim_; ++j) r.at(i, j) += lik * rhs.at(k, j);
            }
        return r;
    }

    bool operator==(const CycMatrix& rhs) const { return q_ == rhs.q_ && dim_ == rhs.dim_ && a_ == rhs.a_; }

  private:
    void require_compatible(const CycMatrix& rhs) const {
        if (q_ != rhs.q_ || dim_ != rhs.dim_) throw std::invalid_argument("matrix dimension or alphabet mismatch");
    }

    int q_;
    std::size_t dim_;
    std::vector<CyclotomicInt> a_;
};

}  // namespace golay

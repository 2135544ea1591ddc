#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "golay/cyclotomic.hpp"
#include "golay/hadamard.hpp"

namespace golay {

struct NonUnitCoefficientError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedAlphabetError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Full input to the product construction: n + 1 Butson (q, N) matrices, a
/// permutation of the n delay positions, and the shared alphabet q. The t-th
/// delay factor (t = 1..n) is D(z)^(N^perm[t-1]) with D(z) = diag{1, z, ..., z^(N-1)}.
class ConstructionSpec {
  public:
    ConstructionSpec(std::vector<int> perm, std::vector<ButsonMatrix> hadamards)
        : perm_(std::move(perm)), hadamards_(std::move(hadamards)) {
        if (hadamards_.empty()) throw std::invalid_argument("construction needs at least one matrix");
        if (hadamards_.size() != perm_.size() + 1)
            throw std::invalid_argument("construction needs exactly n + 1 matrices for n delay factors");
        q_ = hadamards_.front().q();
        n_side_ = hadamards_.front().size();
        for (const auto& h : hadamards_)
            if (h.q() != q_ || h.size() != n_side_)
                throw std::invalid_argument("all construction matrices must share (q, N)");
        std::vector<bool> seen(perm_.size(), false);
        for (int v : perm_) {
            if (v < 0 || v >= static_cast<int>(perm_.size()) || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("delay permutation must be a bijection on {0..n-1}");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    int q() const { return q_; }
    int size() const { return n_side_; }                               // N
    int delay_count() const { return static_cast<int>(perm_.size()); }  // n
    std::span<const int> perm() const { return perm_; }
    std::span<const ButsonMatrix> hadamards() const { return hadamards_; }

    std::uint64_t length() const {  // L = N^n
        std::uint64_t l = 1;
        for (int t = 0; t < delay_count(); ++t)
            if (__builtin_mul_overflow(l, static_cast<std::uint64_t>(n_side_), &l))
                throw std::length_error("N^n exceeds 64 bits");
        return l;
    }

    std::vector<std::string> warnings() const {
        std::vector<std::string> out;
        if ((n_side_ & (n_side_ - 1)) != 0)
            out.push_back("N = " + std::to_string(n_side_) + " is not a power of 2; the construction still applies "
                          "but this regime is untabulated");
        return out;
    }

  private:
    int q_ = 0;
    int n_side_ = 0;
    std::vector<int> perm_;
    std::vector<ButsonMatrix> hadamards_;
};

/// Output of the construction: an N x N matrix of q-ary sequences of common
/// length L, stored as the exponent of the coefficient of z^m in entry (i, j).
/// Every coefficient is a single root and every entry has degree exactly L - 1,
/// so the exponent array is total.
class UnitCoeffPolyMatrix {
  public:
    UnitCoeffPolyMatrix(int q, int n, std::uint64_t length, std::vector<int> exps)
        : q_(q), n_side_(n), length_(length), exps_(std::move(exps)) {
        if (q_ < 2 || n_side_ < 1 || length_ < 1) throw std::invalid_argument("degenerate matrix parameters");
        if (exps_.size() != static_cast<std::size_t>(n_side_) * n_side_ * length_)
            throw std::invalid_argument("exponent array size mismatch");
        for (int e : exps_)
            if (e < 0 || e >= q_) throw ExponentRangeError("coefficient exponent out of [0, q)");
    }

    int q() const { return q_; }
    int size() const { return n_side_; }
    std::uint64_t length() const { return length_; }

    int exp(int i, int j, std::uint64_t m) const { return exps_[index(i, j, m)]; }
    void set_exp(int i, int j, std::uint64_t m, int e) {
        if (e < 0 || e >= q_) throw ExponentRangeError("coefficient exponent out of [0, q)");
        exps_[index(i, j, m)] = e;
    }

    std::vector<int> entry(int i, int j) const {
        std::vector<int> out(static_cast<std::size_t>(length_));
        for (std::uint64_t m = 0; m < length_; ++m) out[static_cast<std::size_t>(m)] = exp(i, j, m);
        return out;
    }

    /// Coefficient matrix of z^m, row-major N x N.
    std::vector<int> slice(std::uint64_t m) const {
        std::vector<int> out(static_cast<std::size_t>(n_side_) * n_side_);
        for (int i = 0; i < n_side_; ++i)
            for (int j = 0; j < n_side_; ++j) out[static_cast<std::size_t>(i) * n_side_ + j] = exp(i, j, m);
        return out;
    }

    std::span<const int> raw() const { return exps_; }

  private:
    std::size_t index(int i, int j, std::uint64_t m) const {
        return (static_cast<std::size_t>(i) * n_side_ + static_cast<std::size_t>(j)) * static_cast<std::size_t>(length_) +
               static_cast<std::size_t>(m);
    }

    int q_;
    int n_side_;
    std::uint64_t length_;
    std::vector<int> exps_;
};

/// m written in base N, least significant digit first: m = sum_k digits[k] * N^k.
struct DigitDecomposition {
    std::uint64_t m;
    std::vector<int> digits;
};

inline DigitDecomposition digit_decomposition(std::uint64_t m, int base, int count) {
    if (base < 2) throw std::invalid_argument("digit_decomposition: base must be >= 2");
    DigitDecomposition d{m, std::vector<int>(static_cast<std::size_t>(count))};
    std::uint64_t rest = m;
    for (int k = 0; k < count; ++k) {
        d.digits[static_cast<std::size_t>(k)] = static_cast<int>(rest % static_cast<std::uint64_t>(base));
        rest /= static_cast<std::uint64_t>(base);
    }
    if (rest != 0) throw std::out_of_range("digit_decomposition: m does not fit in the given digit count");
    return d;
}

/// The iterated product H0 * prod_t (D(z)^(N^perm[t-1]) * Ht), carried out with
/// exact coefficient arithmetic in Z[zeta_q]; the result is validated to have
/// unit coefficients everywhere before collapsing to exponents.
inline UnitCoeffPolyMatrix construct(const ConstructionSpec& spec) {
    const int n_side = spec.size();
    const int q = spec.q();
    const std::uint64_t final_len = spec.length();
    if (static_cast<std::uint64_t>(n_side) * n_side * final_len > (1ull << 24))
        throw std::length_error("construction exceeds the supported in-memory scale");

    // entries[i][j] is the dense coefficient vector of the (i, j) polynomial
    const CyclotomicInt z = CyclotomicInt::zero(q);
    std::vector<std::vector<CyclotomicInt>> entries(static_cast<std::size_t>(n_side) * n_side,
                                                    std::vector<CyclotomicInt>(1, z));
    const auto& hs = spec.hadamards();
    for (int i = 0; i < n_side; ++i)
        for (int j = 0; j < n_side; ++j)
            entries[static_cast<std::size_t>(i) * n_side + j][0] = CyclotomicInt::from_root(q, hs[0].exp(i, j));

    std::uint64_t len = 1;
    for (int t = 1; t <= spec.delay_count(); ++t) {
        std::uint64_t shift = 1;
        for (int k = 0; k < spec.perm()[static_cast<std::size_t>(t - 1)]; ++k) shift *= static_cast<std::uint64_t>(n_side);
        const std::uint64_t new_len = len + static_cast<std::uint64_t>(n_side - 1) * shift;
        std::vector<std::vector<CyclotomicInt>> next(entries.size(),
                                                     std::vector<CyclotomicInt>(static_cast<std::size_t>(new_len), z));
        for (int i = 0; i < n_side; ++i)
            for (int j = 0; j < n_side; ++j) {
                auto& out = next[static_cast<std::size_t>(i) * n_side + j];
                for (int k = 0; k < n_side; ++k) {
                    const int he = hs[static_cast<std::size_t>(t)].exp(k, j);
                    const auto& in = entries[static_cast<std::size_t>(i) * n_side + k];
                    const std::uint64_t off = static_cast<std::uint64_t>(k) * shift;
                    for (std::uint64_t m = 0; m < len; ++m) {
                        const CyclotomicInt& c = in[static_cast<std::size_t>(m)];
                        if (c.is_zero()) continue;
                        out[static_cast<std::size_t>(m + off)] += c.times_root(he);
                    }
                }
            }
        entries = std::move(next);
        len = new_len;
    }

    if (len != final_len) throw std::logic_error("construction length bookkeeping failed");

    std::vector<int> exps(static_cast<std::size_t>(n_side) * n_side * final_len);
    for (int i = 0; i < n_side; ++i)
        for (int j = 0; j < n_side; ++j)
            for (std::uint64_t m = 0; m < final_len; ++m) {
                const auto e = entries[static_cast<std::size_t>(i) * n_side + j][static_cast<std::size_t>(m)].as_root();
                if (!e)
                    throw NonUnitCoefficientError("coefficient of z^" + std::to_string(m) + " in entry (" +
                                                  std::to_string(i) + ", " + std::to_string(j) +
                                                  ") is not a single root; input matrix corrupt");
                exps[(static_cast<std::size_t>(i) * n_side + j) * final_len + m] = *e;
            }
    return UnitCoeffPolyMatrix(q, n_side, final_len, std::move(exps));
}

/// Coefficient matrix of z^m without materializing the product: digit j_t of the
/// path is base-N digit perm[t-1] of m, and entry (r, s) is the exponent sum
/// H0(r, j_1) + H1(j_1, j_2) + ... + Hn(j_n, s) mod q.
inline std::vector<int> coefficient_direct(const ConstructionSpec& spec, std::uint64_t m) {
    if (m >= spec.length()) throw std::out_of_range("coefficient index exceeds N^n - 1");
    const int n_side = spec.size();
    const int q = spec.q();
    const int n = spec.delay_count();
    const auto digits = digit_decomposition(m, n_side, n).digits;
    const auto& hs = spec.hadamards();

    std::vector<int> path(static_cast<std::size_t>(n));
    for (int t = 1; t <= n; ++t) path[static_cast<std::size_t>(t - 1)] = digits[static_cast<std::size_t>(spec.perm()[static_cast<std::size_t>(t - 1)])];

    // exponent accumulated along the inner factors H1(j_1, j_2) ... H(n-1)(j_{n-1}, j_n)
    int inner = 0;
    for (int t = 1; t < n; ++t)
        inner = (inner + hs[static_cast<std::size_t>(t)].exp(path[static_cast<std::size_t>(t - 1)], path[static_cast<std::size_t>(t)])) % q;

    std::vector<int> out(static_cast<std::size_t>(n_side) * n_side);
    for (int r = 0; r < n_side; ++r)
        for (int s = 0; s < n_side; ++s) {
            int e;
            if (n == 0) {
                e = hs[0].exp(r, s);
            } else {
                e = (hs[0].exp(r, path[0]) + inner + hs[static_cast<std::size_t>(n)].exp(path[static_cast<std::size_t>(n - 1)], s)) % q;
            }
            out[static_cast<std::size_t>(r) * n_side + s] = e;
        }
    return out;
}

/// One factor of the binary-expansion identity: the four values of a matrix
/// function of two bits, listed as (F(0,0), F(1,0), F(0,1), F(1,1)).
using SelectorQuadruple = std::array<CycMatrix, 4>;

/// Checks, exactly, that the ordered product of the four-term sums equals the sum
/// over all m < 4^n of the ordered product of the factors selected by m's bit
/// pairs. Both sides multiply in the same left-to-right order t = 0..n-1 with
/// factor index ordering[t].
inline bool expansion_identity_holds(std::span<const SelectorQuadruple> factors, std::span<const int> ordering) {
    const auto n = factors.size();
    if (n == 0) throw std::invalid_argument("expansion identity needs at least one factor");
    if (ordering.size() != n) throw std::invalid_argument("ordering length must match factor count");
    const int q = factors[0][0].q();
    const std::size_t dim = factors[0][0].dim();
    for (const auto& quad : factors)
        for (const auto& mat : quad)
            if (mat.q() != q || mat.dim() != dim) throw std::invalid_argument("factor matrices must share q and dimension");

    auto sum_of = [](const SelectorQuadruple& quad) { return quad[0] + quad[1] + quad[2] + quad[3]; };

    CycMatrix lhs = sum_of(factors[static_cast<std::size_t>(ordering[0])]);
    for (std::size_t t = 1; t < n; ++t) lhs = lhs * sum_of(factors[static_cast<std::size_t>(ordering[t])]);

    const std::uint64_t total = 1ull << (2 * n);
    CycMatrix rhs(q, dim);
    for (std::uint64_t m = 0; m < total; ++m) {
        auto select = [&](std::size_t t) -> const CycMatrix& {
            const int k = ordering[t];
            const int idx = static_cast<int>((m >> (2 * k)) & 3);  // bit 2k + 2 * bit (2k+1)
            return factors[static_cast<std::size_t>(k)][static_cast<std::size_t>(idx)];
        };
        CycMatrix term = select(0);
        for (std::size_t t = 1; t < n; ++t) term = term * select(t);
        rhs = rhs + term;
    }
    return lhs == rhs;
}

/// N = 2 spec whose t-th factor is the unitary form [[0, c_t], [(q/2 - c_t) mod q, 0]];
/// one phase per matrix, so phases.size() = n + 1. Only even q admits these factors.
inline ConstructionSpec pair_spec(int q, std::span<const int> phases, std::vector<int> perm) {
    if (q < 2 || q % 2 != 0)
        throw UnsupportedAlphabetError("pair construction needs even q (otherwise -1 is not a q-th root)");
    if (phases.empty()) throw std::invalid_argument("pair construction needs at least one phase");
    std::vector<ButsonMatrix> hs;
    hs.reserve(phases.size());
    for (int c : phases) {
        if (c < 0 || c >= q) throw ExponentRangeError("phase out of [0, q)");
        hs.push_back(ButsonMatrix::verified(q, 2, {0, c, ((q / 2 - c) % q + q) % q, 0}));
    }
    return ConstructionSpec(std::move(perm), std::move(hs));
}

}  // namespace golay

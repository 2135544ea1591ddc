#pragma once

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "golay/cyclotomic.hpp"

namespace golay {

struct BadShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ExponentRangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct NotUnitaryError : std::runtime_error {
    NotUnitaryError(int row_a_, int row_b_)
        : std::runtime_error("rows " + std::to_string(row_a_) + " and " + std::to_string(row_b_) +
                             " have nonzero inner product"),
          row_a(row_a_),
          row_b(row_b_) {}
    int row_a;
    int row_b;
};

struct UnsupportedParametersError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SearchSpaceTooLargeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A Butson-type H(q, N) Hadamard matrix stored as root exponents: entry (i, j)
/// stands for zeta_q^{exp(i, j)}. Construction verifies H H^dagger = N I exactly
/// in Z[zeta_q] unless the unchecked factory is used.
class ButsonMatrix {
  public:
    /// Validating factory. Throws BadShapeError, ExponentRangeError, or
    /// NotUnitaryError (naming the first offending row pair).
    static ButsonMatrix verified(int q, const std::vector<std::vector<int>>& exps) {
        ButsonMatrix m = shaped(q, exps);
        m.verify();
        return m;
    }

    static ButsonMatrix verified(int q, int n, std::vector<int> flat) {
        ButsonMatrix m = shaped(q, n, std::move(flat));
        m.verify();
        return m;
    }

    /// Shape and range checks only; orthogonality is the caller's burden.
    /// Exists so tests can build deliberately invalid inputs.
    static ButsonMatrix unchecked(int q, int n, std::vector<int> flat) { return shaped(q, n, std::move(flat)); }

    int q() const { return q_; }
    int size() const { return n_; }

    int exp(int i, int j) const { return exps_[static_cast<std::size_t>(i) * n_ + j]; }

    std::vector<std::vector<int>> rows() const {
        std::vector<std::vector<int>> out(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i)
            out[static_cast<std::size_t>(i)].assign(exps_.begin() + static_cast<std::ptrdiff_t>(i) * n_,
                                                    exps_.begin() + static_cast<std::ptrdiff_t>(i + 1) * n_);
        return out;
    }

    /// Inner product of rows a and b under the Hermitian form, exact.
    CyclotomicInt row_inner_product(int a, int b) const {
        CyclotomicInt acc = CyclotomicInt::zero(q_);
        for (int k = 0; k < n_; ++k) acc += CyclotomicInt::from_root(q_, ((exp(a, k) - exp(b, k)) % q_ + q_) % q_);
        return acc;
    }

    ButsonMatrix transposed() const {
        std::vector<int> t(exps_.size());
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) t[static_cast<std::size_t>(j) * n_ + i] = exp(i, j);
        return verified(q_, n_, std::move(t));
    }

    bool operator==(const ButsonMatrix& rhs) const { return q_ == rhs.q_ && n_ == rhs.n_ && exps_ == rhs.exps_; }

  private:
    ButsonMatrix(int q, int n, std::vector<int> flat) : q_(q), n_(n), exps_(std::move(flat)) {}

    static ButsonMatrix shaped(int q, const std::vector<std::vector<int>>& exps) {
        const auto n = exps.size();
        std::vector<int> flat;
        flat.reserve(n * n);
        for (const auto& row : exps) {
            if (row.size() != n) throw BadShapeError("matrix is not square");
            flat.insert(flat.end(), row.begin(), row.end());
        }
        return shaped(q, static_cast<int>(n), std::move(flat));
    }

    static ButsonMatrix shaped(int q, int n, std::vector<int> flat) {
        if (q < 2) throw std::invalid_argument("Butson matrix requires q >= 2");
        if (n < 1) throw BadShapeError("matrix dimension must be positive");
        if (flat.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
            throw BadShapeError("exponent array does not match the declared dimension");
        for (int e : flat)
            if (e < 0 || e >= q) throw ExponentRangeError("exponent out of [0, q)");
        return ButsonMatrix(q, n, std::move(flat));
    }

    void verify() const {
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b)
                if (!row_inner_product(a, b).is_zero()) throw NotUnitaryError(a, b);
    }

    int q_;
    int n_;
    std::vector<int> exps_;
};

inline ButsonMatrix verify_butson(int q, const std::vector<std::vector<int>>& exps) {
    return ButsonMatrix::verified(q, exps);
}

/// Fourier matrix H(q, q): exp(i, j) = i*j mod q.
inline ButsonMatrix fourier_matrix(int q) {
    std::vector<int> flat(static_cast<std::size_t>(q) * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) flat[static_cast<std::size_t>(i) * q + j] = i * j % q;
    return ButsonMatrix::verified(q, q, std::move(flat));
}

/// Sylvester matrix H(2, 2^k), the k-fold Kronecker power of [[0,0],[0,1]].
inline ButsonMatrix sylvester_matrix(int k) {
    if (k < 1) throw std::invalid_argument("sylvester_matrix: k must be >= 1");
    const int n = 1 << k;
    std::vector<int> flat(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            flat[static_cast<std::size_t>(i) * n + j] = std::popcount(static_cast<unsigned>(i & j)) & 1;
    return ButsonMatrix::verified(2, n, std::move(flat));
}

/// Re-encode over a finer alphabet: requires q | new_q; exponents scale by new_q/q.
inline ButsonMatrix rescaled(const ButsonMatrix& h, int new_q) {
    if (new_q % h.q() != 0) throw std::invalid_argument("rescaled: alphabet must be a multiple of the source's");
    const int f = new_q / h.q();
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(h.size()) * h.size());
    for (int i = 0; i < h.size(); ++i)
        for (int j = 0; j < h.size(); ++j) flat.push_back(h.exp(i, j) * f);
    return ButsonMatrix::verified(new_q, h.size(), std::move(flat));
}

/// Built-in dephased representatives per supported (q, N):
///   (2, 2^k) -> the Sylvester power;
///   (4, 4)   -> the binary matrix re-encoded with doubled exponents, then the Fourier matrix;
///   (q, q)   -> the Fourier matrix.
inline std::vector<ButsonMatrix> representatives(int q, int N) {
    if (q == 2 && N >= 2 && (N & (N - 1)) == 0) return {sylvester_matrix(std::countr_zero(static_cast<unsigned>(N)))};
    if (q == 4 && N == 4) return {rescaled(sylvester_matrix(2), 4), fourier_matrix(4)};
    if (q >= 2 && N == q) return {fourier_matrix(q)};
    throw UnsupportedParametersError("no built-in representatives for H(" + std::to_string(q) + ", " +
                                     std::to_string(N) + ")");
}

/// Witness for the equivalence H1 = D1 P1 H2 P2 D2. Conventions:
/// result(i, j) = row_phase[i] + H(row_perm[i], col_perm[j]) + col_phase[j]  (mod q),
/// i.e. row i of the result is sourced from row row_perm[i] of the input.
struct EquivalenceWitness {
    std::vector<int> row_phases;  // D1 diagonal exponents
    std::vector<int> col_phases;  // D2 diagonal exponents
    std::vector<int> row_perm;    // P1
    std::vector<int> col_perm;    // P2

    static EquivalenceWitness identity(int q, int n) {
        (void)q;
        EquivalenceWitness w;
        w.row_phases.assign(static_cast<std::size_t>(n), 0);
        w.col_phases.assign(static_cast<std::size_t>(n), 0);
        w.row_perm.resize(static_cast<std::size_t>(n));
        w.col_perm.resize(static_cast<std::size_t>(n));
        std::iota(w.row_perm.begin(), w.row_perm.end(), 0);
        std::iota(w.col_perm.begin(), w.col_perm.end(), 0);
        return w;
    }

    void validate(int q, int n) const {
        auto is_perm = [n](const std::vector<int>& p) {
            if (p.size() != static_cast<std::size_t>(n)) return false;
            std::vector<bool> seen(static_cast<std::size_t>(n), false);
            for (int v : p) {
                if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
                seen[static_cast<std::size_t>(v)] = true;
            }
            return true;
        };
        if (!is_perm(row_perm) || !is_perm(col_perm)) throw std::invalid_argument("witness permutations must be bijections");
        auto phases_ok = [q, n](const std::vector<int>& d) {
            return d.size() == static_cast<std::size_t>(n) &&
                   std::all_of(d.begin(), d.end(), [q](int v) { return v >= 0 && v < q; });
        };
        if (!phases_ok(row_phases) || !phases_ok(col_phases))
            throw std::invalid_argument("witness phases must lie in [0, q)");
    }
};

inline ButsonMatrix apply_equivalence(const ButsonMatrix& h, const EquivalenceWitness& w) {
    w.validate(h.q(), h.size());
    const int n = h.size();
    const int q = h.q();
    std::vector<int> flat(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            flat[static_cast<std::size_t>(i) * n + j] =
                (w.row_phases[static_cast<std::size_t>(i)] + h.exp(w.row_perm[static_cast<std::size_t>(i)],
                                                                   w.col_perm[static_cast<std::size_t>(j)]) +
                 w.col_phases[static_cast<std::size_t>(j)]) %
                q;
    return ButsonMatrix::verified(q, n, std::move(flat));
}

struct DephaseResult {
    ButsonMatrix matrix;
    EquivalenceWitness witness;
};

/// Equivalent matrix with all-zero first row and first column: column phases
/// cancel the first row, then row phases cancel the first column.
inline DephaseResult dephase(const ButsonMatrix& h) {
    const int n = h.size();
    const int q = h.q();
    EquivalenceWitness w = EquivalenceWitness::identity(q, n);
    for (int j = 0; j < n; ++j) w.col_phases[static_cast<std::size_t>(j)] = (q - h.exp(0, j)) % q;
    for (int i = 0; i < n; ++i)
        w.row_phases[static_cast<std::size_t>(i)] = (q - (h.exp(i, 0) + w.col_phases[0]) % q) % q;
    return DephaseResult{apply_equivalence(h, w), std::move(w)};
}

/// Exhaustive equivalence decision within the guard N <= 5, q <= 8. Enumerates
/// (P1, P2, D2) in lexicographic order and solves each row of D1 by consistency,
/// so the first witness found is the lexicographically smallest and the result is
/// deterministic. Returns nullopt once the N! * N! * q^N space is exhausted.
inline std::optional<EquivalenceWitness> are_equivalent(const ButsonMatrix& h1, const ButsonMatrix& h2) {
    if (h1.q() != h2.q() || h1.size() != h2.size())
        throw std::invalid_argument("are_equivalent: matrices must share (q, N)");
    const int n = h1.size();
    const int q = h1.q();
    if (n > 5 || q > 8) throw SearchSpaceTooLargeError("equivalence search supports N <= 5 and q <= 8");

    std::vector<int> p1(static_cast<std::size_t>(n)), p2(static_cast<std::size_t>(n));
    // residual row phase forced by a candidate (P1, P2, D2) at position (i, j)
    const auto phase_at = [&](const std::vector<int>& d2, int i, int j) {
        const int diff = h1.exp(i, j) - h2.exp(p1[static_cast<std::size_t>(i)], p2[static_cast<std::size_t>(j)]) -
                         d2[static_cast<std::size_t>(j)];
        return (diff % q + q) % q;
    };
    std::iota(p1.begin(), p1.end(), 0);
    do {
        std::iota(p2.begin(), p2.end(), 0);
        do {
            std::vector<int> d2(static_cast<std::size_t>(n), 0);
            for (;;) {
                std::vector<int> d1(static_cast<std::size_t>(n));
                bool ok = true;
                for (int i = 0; i < n && ok; ++i) {
                    const int want = phase_at(d2, i, 0);
                    for (int j = 1; j < n && ok; ++j) ok = phase_at(d2, i, j) == want;
                    d1[static_cast<std::size_t>(i)] = want;
                }
                if (ok) {
                    EquivalenceWitness w{std::move(d1), d2, p1, p2};
                    if (!(apply_equivalence(h2, w) == h1)) throw std::logic_error("equivalence witness failed re-check");
                    return w;
                }
                // advance D2 as a base-q odometer, rightmost digit fastest
                int pos = n - 1;
                while (pos >= 0 && ++d2[static_cast<std::size_t>(pos)] == q) d2[static_cast<std::size_t>(pos--)] = 0;
                if (pos < 0) break;
            }
        } while (std::next_permutation(p2.begin(), p2.end()));
    } while (std::next_permutation(p1.begin(), p1.end()));
    return std::nullopt;
}

}  // namespace golay

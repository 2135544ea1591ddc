#include <catch_amalgamated.hpp>

#include <complex>
#include <limits>
#include <random>

#include "golay/cyclotomic.hpp"

using golay::CyclotomicInt;
using golay::CyclotomicPoly;

namespace {

// Test-local polynomial helpers, independent of the library's reduction path.
std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    std::vector<std::int64_t> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Long division by a monic divisor; returns {quotient, remainder}.
std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> poly_divmod(std::vector<std::int64_t> num,
                                                                            const std::vector<std::int64_t>& den) {
    const std::size_t d = den.size() - 1;
    std::vector<std::int64_t> quot(num.size() > d ? num.size() - d : 0, 0);
    for (std::size_t i = num.size(); i-- > d;) {
        const std::int64_t c = num[i];
        if (c == 0) continue;
        quot[i - d] = c;
        for (std::size_t k = 0; k <= d; ++k) num[i - d + k] -= c * den[k];
    }
    num.resize(d);
    return {quot, num};
}

std::vector<std::int64_t> coeff_vec(const CyclotomicInt& a) { return {a.coeffs().begin(), a.coeffs().end()}; }

std::vector<std::int64_t> coeff_vec(const CyclotomicPoly& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

std::mt19937_64 rng(20260810u);

int rand_int(int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }

CyclotomicInt random_element(int q, int bound) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(golay::euler_phi(q)));
    for (auto& v : c) v = rand_int(-bound, bound);
    return CyclotomicInt::from_coeffs(q, std::move(c));
}

}  // namespace

TEST_CASE("cyclotomic polynomials for small q") {
    CHECK(coeff_vec(golay::cyclotomic_polynomial(1)) == std::vector<std::int64_t>{-1, 1});
    CHECK(coeff_vec(golay::cyclotomic_polynomial(2)) == std::vector<std::int64_t>{1, 1});
    CHECK(coeff_vec(golay::cyclotomic_polynomial(4)) == std::vector<std::int64_t>{1, 0, 1});

    // Oracle for q = 6: exact division (x^6 - 1) / ((x - 1)(x + 1)(x^2 + x + 1)).
    std::vector<std::int64_t> divisor = poly_mul(poly_mul({-1, 1}, {1, 1}), {1, 1, 1});
    std::vector<std::int64_t> num(7, 0);
    num[0] = -1;
    num[6] = 1;
    auto [quot, rem] = poly_divmod(num, divisor);
    REQUIRE(rem == std::vector<std::int64_t>(divisor.size() - 1, 0));
    CHECK(quot == std::vector<std::int64_t>{1, -1, 1});
    CHECK(coeff_vec(golay::cyclotomic_polynomial(6)) == std::vector<std::int64_t>(quot.begin(), quot.end()));

    CHECK_THROWS_AS(golay::cyclotomic_polynomial(0), std::invalid_argument);
}

TEST_CASE("cyclotomic polynomial divides x^q - 1 exactly") {
    for (int q = 1; q <= 16; ++q) {
        const auto phi = golay::cyclotomic_polynomial(q);
        REQUIRE(phi.degree() == golay::euler_phi(q));
        REQUIRE(phi.coeffs().back() == 1);  // monic
        std::vector<std::int64_t> num(static_cast<std::size_t>(q) + 1, 0);
        num[0] = -1;
        num.back() = 1;
        auto [quot, rem] = poly_divmod(num, {phi.coeffs().begin(), phi.coeffs().end()});
        CHECK(rem == std::vector<std::int64_t>(static_cast<std::size_t>(phi.degree()), 0));
    }
}

TEST_CASE("from_root canonical residues") {
    CHECK(coeff_vec(CyclotomicInt::from_root(4, 0)) == std::vector<std::int64_t>{1, 0});
    CHECK(coeff_vec(CyclotomicInt::from_root(4, 2)) == std::vector<std::int64_t>{-1, 0});

    // Oracle for q = 8, e = 5: remainder of x^5 mod x^4 + 1 is -x.
    std::vector<std::int64_t> x5(6, 0);
    x5[5] = 1;
    auto [quot, rem] = poly_divmod(x5, {1, 0, 0, 0, 1});
    CHECK(rem == std::vector<std::int64_t>{0, -1, 0, 0});
    CHECK(coeff_vec(CyclotomicInt::from_root(8, 5)) == std::vector<std::int64_t>(rem.begin(), rem.end()));

    CHECK_THROWS_AS(CyclotomicInt::from_root(4, 4), std::out_of_range);
    CHECK_THROWS_AS(CyclotomicInt::from_root(4, -1), std::out_of_range);
    CHECK_THROWS_AS(CyclotomicInt::from_root(1, 0), std::invalid_argument);
}

TEST_CASE("ring operations in canonical form") {
    CHECK((CyclotomicInt::from_root(4, 1) + CyclotomicInt::from_root(4, 3)).is_zero());
    CHECK(CyclotomicInt::from_root(2, 0) * CyclotomicInt::from_root(2, 1) == CyclotomicInt::from_root(2, 1));
    CHECK(CyclotomicInt::from_root(4, 1).conjugate() == CyclotomicInt::from_root(4, 3));

    CHECK_THROWS_AS(CyclotomicInt::from_root(4, 1) + CyclotomicInt::from_root(8, 1), std::invalid_argument);
    CHECK_THROWS_AS(CyclotomicInt::from_root(4, 1) * CyclotomicInt::from_root(6, 1), std::invalid_argument);
}

TEST_CASE("is_zero is exact") {
    auto sum = CyclotomicInt::zero(4);
    for (int e = 0; e < 4; ++e) sum += CyclotomicInt::from_root(4, e);
    CHECK(sum.is_zero());

    CHECK_FALSE(CyclotomicInt::from_root(2, 0).is_zero());
    CHECK((CyclotomicInt::from_root(8, 0) + CyclotomicInt::from_root(8, 4)).is_zero());
}

TEST_CASE("to_complex embedding") {
    const auto i = CyclotomicInt::from_root(4, 1).to_complex();
    CHECK(std::abs(i - std::complex<double>(0.0, 1.0)) <= 1e-12);
    CHECK(CyclotomicInt::zero(4).to_complex() == std::complex<double>(0.0, 0.0));

    const auto w = CyclotomicInt::from_root(3, 1).to_complex();
    CHECK(std::abs(w - std::complex<double>(-0.5, 0.8660254037844386)) <= 1e-9);
}

TEST_CASE("root multiplication adds exponents mod q") {
    for (int q = 2; q <= 12; ++q)
        for (int e1 = 0; e1 < q; ++e1)
            for (int e2 = 0; e2 < q; ++e2)
                CHECK(CyclotomicInt::from_root(q, e1) * CyclotomicInt::from_root(q, e2) ==
                      CyclotomicInt::from_root(q, (e1 + e2) % q));
}

TEST_CASE("roots of unity sum to zero for every q") {
    for (int q = 2; q <= 12; ++q) {
        auto sum = CyclotomicInt::zero(q);
        for (int e = 0; e < q; ++e) sum += CyclotomicInt::from_root(q, e);
        CHECK(sum.is_zero());
    }
}

TEST_CASE("norm is a nonnegative real and negation cancels") {
    for (int trial = 0; trial < 200; ++trial) {
        const int q = rand_int(2, 12);
        const auto a = random_element(q, 20);
        const auto norm = (a * a.conjugate()).to_complex();
        CHECK(std::abs(norm.imag()) <= 1e-9);
        CHECK(norm.real() >= -1e-9);
        CHECK((a + (-a)).is_zero());
    }
}

TEST_CASE("exact arithmetic agrees with the complex embedding") {
    for (int trial = 0; trial < 200; ++trial) {
        const int q = rand_int(2, 12);
        const auto a = random_element(q, 100);
        const auto b = random_element(q, 100);
        const auto exact = (a * b).to_complex();
        const auto approx = a.to_complex() * b.to_complex();
        CHECK(std::abs(exact - approx) <= 1e-9 * std::max(1.0, std::abs(approx)));
    }
}

TEST_CASE("as_root recognizes exactly the unit roots") {
    for (int q = 2; q <= 10; ++q) {
        for (int e = 0; e < q; ++e) {
            auto r = CyclotomicInt::from_root(q, e).as_root();
            REQUIRE(r.has_value());
            CHECK(*r == e);
        }
        CHECK_FALSE(CyclotomicInt::from_int(q, 2).as_root().has_value());
        CHECK_FALSE(CyclotomicInt::zero(q).as_root().has_value());
    }
}

TEST_CASE("coefficient overflow fails loudly") {
    const auto big = CyclotomicInt::from_int(4, std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(big + big, std::overflow_error);
    CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("matrix algebra over the ring") {
    golay::CycMatrix a(4, 2), b(4, 2);
    a.at(0, 0) = CyclotomicInt::from_root(4, 1);
    a.at(1, 1) = CyclotomicInt::from_int(4, 2);
    b.at(0, 1) = CyclotomicInt::from_root(4, 3);
    b.at(1, 0) = CyclotomicInt::from_int(4, 1);

    const auto prod = a * b;
    CHECK(prod.at(0, 1) == CyclotomicInt::from_root(4, 0));  // i * (-i) = 1
    CHECK(prod.at(1, 0) == CyclotomicInt::from_int(4, 2));
    CHECK(prod.at(0, 0).is_zero());

    const auto sum = a + b;
    CHECK(sum.at(0, 0) == CyclotomicInt::from_root(4, 1));
    CHECK(sum.at(0, 1) == CyclotomicInt::from_root(4, 3));

    golay::CycMatrix wrong(4, 3);
    CHECK_THROWS_AS(a * wrong, std::invalid_argument);
}

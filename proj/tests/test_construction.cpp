#include <catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

#include "golay/construction.hpp"
#include "golay/hadamard.hpp"

using golay::ButsonMatrix;
using golay::ConstructionSpec;
using golay::construct;
using golay::CycMatrix;
using golay::CyclotomicInt;
using golay::SelectorQuadruple;

namespace {

std::mt19937_64 rng(424243u);

int rand_int(int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }

std::vector<int> random_perm(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(rand_int(0, i))]);
    return p;
}

golay::EquivalenceWitness random_witness(int q, int n) {
    golay::EquivalenceWitness w;
    w.row_perm = random_perm(n);
    w.col_perm = random_perm(n);
    for (int i = 0; i < n; ++i) {
        w.row_phases.push_back(rand_int(0, q - 1));
        w.col_phases.push_back(rand_int(0, q - 1));
    }
    return w;
}

// Random Butson (q, N) input: an equivalence transform of a representative,
// re-encoded from a coarser alphabet when no representative exists directly.
ButsonMatrix random_butson(int q, int n) {
    ButsonMatrix base = [&] {
        if (q == 2 || (q == 4 && n == 4) || q == n) {
            const auto reps = golay::representatives(q, n);
            return reps[static_cast<std::size_t>(rand_int(0, static_cast<int>(reps.size()) - 1))];
        }
        if (n == 4 && q % 4 == 0 && rand_int(0, 1) == 1) return golay::rescaled(golay::representatives(4, 4)[1], q);
        return golay::rescaled(golay::sylvester_matrix(std::countr_zero(static_cast<unsigned>(n))), q);
    }();
    return golay::apply_equivalence(base, random_witness(q, n));
}

ConstructionSpec random_spec(int q, int n_side, int delays) {
    std::vector<ButsonMatrix> hs;
    for (int t = 0; t <= delays; ++t) hs.push_back(random_butson(q, n_side));
    return ConstructionSpec(random_perm(delays), std::move(hs));
}

const std::vector<std::vector<int>> kExample7H0{{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 3, 2, 1}, {0, 2, 0, 2}};
const std::vector<std::vector<int>> kExample7H1{{0, 1, 2, 3}, {0, 0, 0, 0}, {0, 2, 0, 2}, {0, 3, 2, 1}};
const std::vector<std::vector<int>> kExample7H2{{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 0, 2}, {0, 3, 2, 1}};

ConstructionSpec example7_spec() {
    return ConstructionSpec({1, 0}, {golay::verify_butson(4, kExample7H0), golay::verify_butson(4, kExample7H1),
                                     golay::verify_butson(4, kExample7H2)});
}

CycMatrix random_matrix(int q, std::size_t dim, int bound) {
    CycMatrix m(q, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = CyclotomicInt::from_int(q, rand_int(-bound, bound));
    return m;
}

SelectorQuadruple random_quadruple(int q, std::size_t dim, int bound) {
    return SelectorQuadruple{random_matrix(q, dim, bound), random_matrix(q, dim, bound), random_matrix(q, dim, bound),
                             random_matrix(q, dim, bound)};
}

}  // namespace

TEST_CASE("construct with no delay factor returns the matrix itself") {
    const auto h = golay::representatives(2, 4)[0];
    const auto m = construct(ConstructionSpec({}, {h}));
    CHECK(m.length() == 1);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(m.exp(i, j, 0) == h.exp(i, j));
}

TEST_CASE("single delay factor over the Sylvester pair") {
    // By hand: [[1,1],[1,-1]] * diag(1, z) * [[1,1],[1,-1]] = [[1+z, 1-z], [1-z, 1+z]].
    const auto h = golay::sylvester_matrix(1);
    const auto m = construct(ConstructionSpec({0}, {h, h}));
    REQUIRE(m.length() == 2);
    CHECK(m.entry(0, 0) == std::vector<int>{0, 0});
    CHECK(m.entry(0, 1) == std::vector<int>{0, 1});
    CHECK(m.entry(1, 0) == std::vector<int>{0, 1});
    CHECK(m.entry(1, 1) == std::vector<int>{0, 0});
}

TEST_CASE("two delay factors over the Sylvester triple") {
    // Continuing by hand with identity ordering: first row reads (1,1,1,-1), (1,1,-1,1).
    const auto h = golay::sylvester_matrix(1);
    const auto m = construct(ConstructionSpec({0, 1}, {h, h, h}));
    REQUIRE(m.length() == 4);
    CHECK(m.entry(0, 0) == std::vector<int>{0, 0, 0, 1});
    CHECK(m.entry(0, 1) == std::vector<int>{0, 0, 1, 0});
}

TEST_CASE("constructed coefficients are exponents in range with full degree") {
    for (int trial = 0; trial < 20; ++trial) {
        const int q = std::array{2, 4, 8}[static_cast<std::size_t>(rand_int(0, 2))];
        const int n_side = std::array{2, 4}[static_cast<std::size_t>(rand_int(0, 1))];
        const int delays = rand_int(0, 3);
        const auto spec = random_spec(q, n_side, delays);
        const auto m = construct(spec);
        CHECK(m.length() == spec.length());
        CHECK(m.raw().size() == static_cast<std::size_t>(n_side) * n_side * spec.length());
        for (int e : m.raw()) {
            CHECK(e >= 0);
            CHECK(e < q);
        }
    }
}

TEST_CASE("direct coefficient path equals the full product") {
    SECTION("n = 0") {
        const auto h = golay::representatives(4, 4)[1];
        const ConstructionSpec spec({}, {h});
        CHECK(golay::coefficient_direct(spec, 0) == construct(spec).slice(0));
    }
    SECTION("randomized specs") {
        for (int trial = 0; trial < 10; ++trial) {
            const int q = std::array{2, 4, 8}[static_cast<std::size_t>(rand_int(0, 2))];
            const int n_side = std::array{2, 4}[static_cast<std::size_t>(rand_int(0, 1))];
            const auto spec = random_spec(q, n_side, rand_int(1, 3));
            const auto m = construct(spec);
            for (std::uint64_t idx = 0; idx < spec.length(); ++idx)
                REQUIRE(golay::coefficient_direct(spec, idx) == m.slice(idx));
        }
    }
    SECTION("m out of range") {
        const auto spec = example7_spec();
        CHECK_THROWS_AS(golay::coefficient_direct(spec, spec.length()), std::out_of_range);
    }
}

TEST_CASE("coefficient of z^0 follows the all-zeros digit path") {
    const auto spec = example7_spec();
    const auto slice = golay::coefficient_direct(spec, 0);
    const auto& hs = spec.hadamards();
    for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s)
            CHECK(slice[static_cast<std::size_t>(r) * 4 + s] ==
                  (hs[0].exp(r, 0) + hs[1].exp(0, 0) + hs[2].exp(0, s)) % 4);
}

TEST_CASE("digit decomposition") {
    const auto d = golay::digit_decomposition(27, 4, 3);
    CHECK(d.digits == std::vector<int>{3, 2, 1});  // 27 = 3 + 2*4 + 1*16

    // base-4 digit k combines bits 2k and 2k+1
    for (std::uint64_t m = 0; m < 64; ++m) {
        const auto dd = golay::digit_decomposition(m, 4, 3);
        for (int k = 0; k < 3; ++k)
            CHECK(dd.digits[static_cast<std::size_t>(k)] ==
                  static_cast<int>((m >> (2 * k) & 1) + 2 * (m >> (2 * k + 1) & 1)));
        std::uint64_t back = 0, pw = 1;
        for (int digit : dd.digits) {
            back += static_cast<std::uint64_t>(digit) * pw;
            pw *= 4;
        }
        CHECK(back == m);
    }

    CHECK_THROWS_AS(golay::digit_decomposition(64, 4, 3), std::out_of_range);
}

TEST_CASE("distinct orderings permute the coefficient slices") {
    const int q = 4;
    std::vector<ButsonMatrix> hs;
    for (int t = 0; t <= 2; ++t) hs.push_back(random_butson(q, 4));
    const std::vector<int> p1{0, 1}, p2{1, 0};
    const auto m1 = construct(ConstructionSpec(p1, hs));
    const auto m2 = construct(ConstructionSpec(p2, hs));
    for (std::uint64_t m = 0; m < m1.length(); ++m) {
        const auto digits = golay::digit_decomposition(m, 4, 2).digits;
        // the path taken for index m under p1 equals the path for index m' under p2
        std::uint64_t mprime = 0;
        std::uint64_t pw[2] = {1, 4};
        for (int t = 0; t < 2; ++t)
            mprime += static_cast<std::uint64_t>(digits[static_cast<std::size_t>(p1[static_cast<std::size_t>(t)])]) *
                      pw[p2[static_cast<std::size_t>(t)]];
        CHECK(m1.slice(m) == m2.slice(mprime));
    }
}

TEST_CASE("construct validates its input combination") {
    CHECK_THROWS_AS(ConstructionSpec({0, 1}, {golay::sylvester_matrix(1)}), std::invalid_argument);
    CHECK_THROWS_AS(ConstructionSpec({0, 0}, {golay::sylvester_matrix(1), golay::sylvester_matrix(1),
                                              golay::sylvester_matrix(1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(ConstructionSpec({0}, {golay::sylvester_matrix(1), golay::fourier_matrix(4)}),
                    std::invalid_argument);

    // unit coefficients come from path uniqueness alone: even a non-orthogonal
    // unit-entry matrix packs cleanly (it just fails complementarity later)
    const auto bad = ButsonMatrix::unchecked(2, 2, {0, 0, 0, 0});
    const auto m = construct(ConstructionSpec({0}, {bad, bad}));
    CHECK(m.entry(0, 0) == std::vector<int>{0, 0});
}

TEST_CASE("warnings flag non-power-of-two N") {
    const ConstructionSpec f3({0}, {golay::fourier_matrix(3), golay::fourier_matrix(3)});
    CHECK(f3.warnings().size() == 1);
    CHECK(example7_spec().warnings().empty());
    // the construction itself still goes through
    const auto m = construct(f3);
    CHECK(m.length() == 3);
}

TEST_CASE("expansion identity with a single factor") {
    const auto quad = random_quadruple(4, 2, 3);
    const std::vector<SelectorQuadruple> fs{quad};
    const std::vector<int> order{0};
    CHECK(golay::expansion_identity_holds(fs, order));
}

TEST_CASE("expansion identity on random instances") {
    for (int trial = 0; trial < 100; ++trial) {
        const int n = rand_int(1, 3);
        const int q = rand_int(2, 8);
        const std::size_t dim = static_cast<std::size_t>(rand_int(1, 3));
        std::vector<SelectorQuadruple> fs;
        for (int k = 0; k < n; ++k) fs.push_back(random_quadruple(q, dim, 5));
        CHECK(golay::expansion_identity_holds(fs, random_perm(n)));
    }
}

TEST_CASE("expansion identity with scalar factors and n = 3") {
    std::vector<SelectorQuadruple> fs;
    for (int k = 0; k < 3; ++k) fs.push_back(random_quadruple(6, 1, 5));
    CHECK(golay::expansion_identity_holds(fs, std::vector<int>{0, 1, 2}));
}

TEST_CASE("expansion identity input validation") {
    std::vector<SelectorQuadruple> fs{random_quadruple(4, 2, 2)};
    CHECK_THROWS_AS(golay::expansion_identity_holds(fs, std::vector<int>{0, 1}), std::invalid_argument);
    std::vector<SelectorQuadruple> mixed{random_quadruple(4, 2, 2), random_quadruple(4, 3, 2)};
    CHECK_THROWS_AS(golay::expansion_identity_holds(mixed, std::vector<int>{0, 1}), std::invalid_argument);
}

TEST_CASE("pair generator builds the unitary two-by-two factors") {
    const auto s1 = golay::pair_spec(2, std::vector<int>{0, 0}, {0});
    CHECK(s1.hadamards()[0].rows() == std::vector<std::vector<int>>{{0, 0}, {1, 0}});

    const auto s2 = golay::pair_spec(4, std::vector<int>{1}, {});
    CHECK(s2.hadamards()[0].rows() == std::vector<std::vector<int>>{{0, 1}, {1, 0}});

    CHECK_THROWS_AS(golay::pair_spec(3, std::vector<int>{0}, {}), golay::UnsupportedAlphabetError);
    CHECK_THROWS_AS(golay::pair_spec(4, std::vector<int>{4}, {}), golay::ExponentRangeError);
}

TEST_CASE("construction scale guard") {
    std::vector<ButsonMatrix> hs(14, golay::sylvester_matrix(2));
    CHECK_THROWS_AS(construct(ConstructionSpec(random_perm(13), std::move(hs))), std::length_error);
}

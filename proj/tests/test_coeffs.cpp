#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>

#include "equicones/f2matrix.hpp"
#include "equicones/graded_module.hpp"
#include "equicones/m2.hpp"

using namespace equicones;

namespace {

M2Monomial random_monomial(std::mt19937& rng)
{
    std::uniform_int_distribution<int> coin(0, 1), exp(0, 5);
    return {coin(rng) == 1, exp(rng), exp(rng)};
}

}  // namespace

TEST_CASE("m2_mul on the pinned examples")
{
    /* a * u = au at (-1,-2) */
    auto au = m2_mul(M2Element::a(), M2Element::u());
    REQUIRE(au.terms().size() == 1);
    CHECK(au.terms().begin()->degree() == BiDegree{-1, -2});

    /* u * theta = 0: no class at (0,1) */
    CHECK(m2_mul(M2Element::u(), M2Element::theta_over(0, 0)).is_zero());

    /* u * (theta/u) = theta */
    CHECK(m2_mul(M2Element::u(), M2Element::theta_over(0, 1)) == M2Element::theta_over(0, 0));

    /* (theta/a) * (theta/u) = 0 */
    CHECK(m2_mul(M2Element::theta_over(1, 0), M2Element::theta_over(0, 1)).is_zero());
}

TEST_CASE("m2_mul is commutative, associative, unital on samples")
{
    std::mt19937 rng(20260810);
    for (int trial = 0; trial < 100; ++trial) {
        M2Element x = M2Element::monomial(random_monomial(rng).negative, random_monomial(rng).i,
                                          random_monomial(rng).j);
        M2Element y = M2Element::monomial(random_monomial(rng).negative, random_monomial(rng).i,
                                          random_monomial(rng).j);
        M2Element z = M2Element::monomial(random_monomial(rng).negative, random_monomial(rng).i,
                                          random_monomial(rng).j);
        CHECK(m2_mul(x, y) == m2_mul(y, x));
        CHECK(m2_mul(m2_mul(x, y), z) == m2_mul(x, m2_mul(y, z)));
        CHECK(m2_mul(x, M2Element::one()) == x);
    }
}

TEST_CASE("product terms add bidegrees")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        M2Monomial x = random_monomial(rng), y = random_monomial(rng);
        if (auto m = m2_mul(x, y)) CHECK(m->degree() == x.degree() + y.degree());
    }
}

TEST_CASE("m2_dim against brute-force cone enumeration, |p|,|q| <= 20")
{
    std::map<std::pair<int, int>, int> table;
    for (int i = 0; i <= 60; ++i)
        for (int j = 0; j <= 60; ++j) {
            table[{-i, -i - j}] += 1;
            table[{i, i + j + 2}] += 1;
        }
    for (int p = -20; p <= 20; ++p)
        for (int q = -20; q <= 20; ++q) {
            auto it = table.find({p, q});
            int expect = it == table.end() ? 0 : it->second;
            REQUIRE(expect <= 1);  /* the cones do not overlap */
            CHECK(m2_dim({p, q}) == expect);
        }

    /* pinned chart values */
    CHECK(m2_dim({0, 0}) == 1);
    CHECK(m2_dim({0, 2}) == 1);
    CHECK(m2_dim({0, 1}) == 0);
}

TEST_CASE("m2_basis_at matches m2_dim and inverts degree()")
{
    for (int p = -12; p <= 12; ++p)
        for (int q = -12; q <= 12; ++q) {
            auto b = m2_basis_at({p, q});
            CHECK((b ? 1 : 0) == m2_dim({p, q}));
            if (b) CHECK(b->degree() == BiDegree{p, q});
        }
}

TEST_CASE("module_dim on the pinned summand examples")
{
    GradedModule m;
    m.add(Summand::cone({0, 0}));
    CHECK(module_dim(m, {0, 0}) == 1);

    GradedModule t;
    t.add(Summand::tower(5));
    CHECK(module_dim(t, {5, 100}) == 1);
    CHECK(module_dim(t, {4, 0}) == 0);

    GradedModule s;
    s.add(Summand::cone(kSigma));
    CHECK(module_dim(s, {1, 0}) == 0);  /* (0,-1) lies in neither cone */
}

TEST_CASE("module_dim is additive under summand concatenation")
{
    GradedModule a, b, ab;
    a.add(Summand::cone({2, 1}));
    a.add(Summand::tower(3));
    b.add(Summand::cone({0, -2}));
    b.add(Summand::cone({-1, 4}));
    ab.summands = a.summands;
    ab.summands.insert(ab.summands.end(), b.summands.begin(), b.summands.end());
    for (int p = -6; p <= 6; ++p)
        for (int q = -6; q <= 6; ++q)
            CHECK(module_dim(ab, {p, q}) == module_dim(a, {p, q}) + module_dim(b, {p, q}));
}

TEST_CASE("summand reach agrees with a window scan")
{
    Region r{-3, 6, -4, 7};
    std::vector<Summand> cases = {
        Summand::cone({0, 0}),  Summand::cone({10, 3}), Summand::cone({8, 9}),
        Summand::cone({20, 2}), Summand::cone({-8, 1}), Summand::tower(2),
        Summand::tower(9),
    };
    for (const auto& s : cases) {
        bool any = false;
        r.for_each([&](BiDegree d) { any = any || s.dim_at(d) > 0; });
        CHECK(s.reaches(r) == any);
    }
}

TEST_CASE("matrix_rank_f2 on the pinned examples")
{
    CHECK(matrix_rank_f2({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 3);
    CHECK(matrix_rank_f2({{0, 0, 0, 0}, {0, 0, 0, 0}}) == 0);
    CHECK(matrix_rank_f2({{1, 1}, {1, 1}}) == 1);
}

TEST_CASE("rank and row-space membership on random matrices vs row reduction")
{
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t rows = 1 + static_cast<std::size_t>(rng() % 8);
        std::size_t cols = 1 + static_cast<std::size_t>(rng() % 8);
        F2Matrix m(rows, cols);
        std::vector<std::vector<int>> dense(rows, std::vector<int>(cols, 0));
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (bit(rng)) {
                    m.set(r, c);
                    dense[r][c] = 1;
                }
        CHECK(static_cast<int>(m.rank()) == matrix_rank_f2(dense));
        /* every row is in the row space; a random vector may or may not be */
        for (std::size_t r = 0; r < rows; ++r) CHECK(m.row_space_contains(m.row_copy(r)));
    }
}

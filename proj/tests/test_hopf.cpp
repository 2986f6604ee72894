#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "equicones/hopf_calculus.hpp"
#include "equicones/presentation.hpp"

using namespace equicones;

namespace {

Monomial abar_member(int n)
{
    std::vector<CircleMonomial> letters;
    for (int bit = 0; (1 << bit) <= n; ++bit)
        if (n & (1 << bit)) letters.emplace_back(sym_abar(bit));
    return Monomial(std::move(letters));
}

/* the closed coproduct display for abar_n, straight from the formula */
TensorElement abar_closed(int n)
{
    TensorElement t;
    for (int k = 0; k <= n; ++k) add_term(t, abar_member(n - k), abar_member(k), M2Element::one());
    Monomial es{CircleMonomial{sym_esigma()}};
    for (int k = 0; k <= n - 1; ++k) {
        auto l = star_product(es, abar_member(n - 1 - k));
        auto r = star_product(es, abar_member(k));
        if (l && r) add_term(t, *l, *r, M2Element::u());
    }
    return t;
}

}  // namespace

TEST_CASE("generator bidegrees carry the stated representation degrees")
{
    CHECK(sym_esigma().degree() == kSigma);
    CHECK(sym_abar(0).degree() == kRho);
    CHECK(sym_abar(2).degree() == 4 * kRho);
    CHECK(sym_bbar(1).degree() == 2 * kRho);
    CHECK(sym_e1().degree() == BiDegree{1, 0});
    CHECK(sym_alpha(1).degree() == BiDegree{4, 0});
    CHECK(sym_beta(0).degree() == BiDegree{2, 0});
    CHECK(sym_e2sigma().degree() == BiDegree{2, 2});
    CHECK(sym_xbar(0).degree() == 2 * kRho);
    CHECK(sym_e0().degree() == BiDegree{0, 0});
    CHECK(sym_afix(3).degree() == BiDegree{8, 0});
}

TEST_CASE("make_presentation: K_sigma generator list and coproducts")
{
    HopfPresentation A = make_presentation("K_sigma", 2);
    REQUIRE(A.generators.size() == 4);  /* e_sigma, abar_(0..2) */
    CHECK(A.generators.front().token() == "es");

    /* psi(e_sigma) = 1(x)e + e(x)1 + a(e(x)e) */
    Monomial es{CircleMonomial{sym_esigma()}};
    TensorElement expect;
    add_term(expect, Monomial{}, es, M2Element::one());
    add_term(expect, es, Monomial{}, M2Element::one());
    add_term(expect, es, es, M2Element::a());
    CHECK(A.generator_coproduct(CircleMonomial{sym_esigma()}) == expect);

    /* psi(abar_1) = abar_1(x)1 + 1(x)abar_1 + u(e(x)e) */
    TensorElement a1;
    Monomial ab0{CircleMonomial{sym_abar(0)}};
    add_term(a1, ab0, Monomial{}, M2Element::one());
    add_term(a1, Monomial{}, ab0, M2Element::one());
    add_term(a1, es, es, M2Element::u());
    CHECK(A.generator_coproduct(CircleMonomial{sym_abar(0)}) == a1);

    CHECK_THROWS_AS(make_presentation("K_tau", 1), NameError);
}

TEST_CASE("make_presentation: F2 is one exterior class at the origin")
{
    HopfPresentation A = make_presentation("F2", 0);
    REQUIRE(A.generators.size() == 1);
    CHECK(A.generators[0].degree() == BiDegree{0, 0});
    CHECK(A.basis().size() == 2);
}

TEST_CASE("star product is exterior")
{
    Monomial es{CircleMonomial{sym_esigma()}};
    Monomial ab0{CircleMonomial{sym_abar(0)}};
    auto prod = star_product(es, ab0);
    REQUIRE(prod.has_value());
    CHECK(prod->letters().size() == 2);
    CHECK(!star_product(es, es).has_value());
    CHECK(*star_product(Monomial{}, ab0) == ab0);
}

TEST_CASE("coproducts of monomials extend multiplicatively and preserve degree")
{
    HopfPresentation A = make_presentation("K_sigma", 2);
    HopfCalculus calc(A);
    for (const auto& m : A.basis()) {
        for (const auto& [lr, c] : calc.psi(m)) {
            auto cd = c.degree();
            REQUIRE(cd.has_value());
            CHECK(*cd + lr.first.degree() + lr.second.degree() == m.degree());
        }
    }
    /* psi(1) = 1 (x) 1 */
    TensorElement unit = calc.psi(Monomial{});
    REQUIRE(unit.size() == 1);
    CHECK(unit.begin()->first.first.is_unit());
    CHECK(unit.begin()->first.second.is_unit());
}

TEST_CASE("bbar_1 is primitive; the beta-bar coproduct matches the display")
{
    HopfPresentation A = make_presentation("K_Z_rho", 1);
    Monomial bb0{CircleMonomial{sym_bbar(0)}};
    TensorElement expect;
    add_term(expect, bb0, Monomial{}, M2Element::one());
    add_term(expect, Monomial{}, bb0, M2Element::one());
    CHECK(A.generator_coproduct(CircleMonomial{sym_bbar(0)}) == expect);

    /* psi(bbar_(1)) = sum bbar_{2-i} (x) bbar_i */
    Monomial bb1{CircleMonomial{sym_bbar(1)}};
    TensorElement e2;
    add_term(e2, bb1, Monomial{}, M2Element::one());
    add_term(e2, bb0, bb0, M2Element::one());
    add_term(e2, Monomial{}, bb1, M2Element::one());
    CHECK(A.generator_coproduct(CircleMonomial{sym_bbar(1)}) == e2);
}

TEST_CASE("divided-power encoding cross-check: closed abar_n formula vs multiplicative extension")
{
    HopfPresentation A = make_presentation("K_sigma", 2);
    HopfCalculus calc(A);
    for (int n = 1; n <= 4; ++n) CHECK(calc.psi(abar_member(n)) == abar_closed(n));
}

TEST_CASE("circle_product on letters: unit law, e0 rules, bidegree addition")
{
    CircleMonomial unit;
    CircleMonomial es{sym_esigma()};
    CircleMonomial ab0{sym_abar(0)};
    CHECK(circle_product(unit, es) == es);
    CHECK(circle_product(es, ab0).degree() == BiDegree{3, 2});
    CircleMonomial e0{sym_e0()};
    CHECK(circle_product(e0, e0) == e0);
    CircleMonomial e0cubed({sym_e0(), sym_e0(), sym_e0()});
    CHECK(e0cubed == e0);
    /* e0 stays as an explicit factor next to others */
    CHECK(circle_product(e0, ab0).syms().size() == 2);
}

TEST_CASE("element-level circle: basepoint classes collapse by the counit")
{
    HopfCalculus calc;
    Monomial es{CircleMonomial{sym_esigma()}};
    CHECK(calc.circle(Monomial{}, es).empty());
    Element unit_unit = calc.circle(Monomial{}, Monomial{});
    REQUIRE(unit_unit.size() == 1);
    CHECK(unit_unit.begin()->first.is_unit());
}

TEST_CASE("circle of star monomials distributes: e_sigma o (e_sigma * abar)")
{
    HopfCalculus calc;
    Monomial es{CircleMonomial{sym_esigma()}};
    Monomial ab0{CircleMonomial{sym_abar(0)}};
    Monomial prod = *star_product(es, ab0);
    Element got = calc.circle(es, prod);
    /* the 1-(x)-e and e-(x)-1 terms die on the counit; only a(e(x)e) acts */
    Element expect;
    auto l = Monomial{circle_product(CircleMonomial{sym_esigma()}, CircleMonomial{sym_esigma()})};
    auto r = Monomial{circle_product(CircleMonomial{sym_esigma()}, CircleMonomial{sym_abar(0)})};
    add_term(expect, *star_product(l, r), M2Element::a());
    CHECK(got == expect);
}

TEST_CASE("circle_distribute: unit collapse, primitive case, square vanishing")
{
    HopfCalculus calc;
    Monomial es{CircleMonomial{sym_esigma()}};
    CircleMonomial unit;
    /* x distributed against two units returns x (counit collapse) */
    Element back = calc.distribute(es, unit, unit);
    REQUIRE(back.size() == 1);
    CHECK(back.begin()->first == es);

    /* primitive x: x o (y*z) = (x o y) eps(z) + eps(y) (x o z) = 0 for
     * positive-degree y, z -- suspension kills star decomposables */
    Monomial e1{CircleMonomial{sym_e1()}};
    CircleMonomial ab0{sym_abar(0)};
    CHECK(calc.distribute(e1, ab0, ab0).empty());
    /* one unit slot collapses to a plain circle product */
    Element one_sided = calc.distribute(e1, ab0, unit);
    REQUIRE(one_sided.size() == 1);
    CHECK(one_sided.begin()->first == Monomial{circle_product(CircleMonomial{sym_e1()}, ab0)});

    /* distributing any generator over m*m vanishes */
    HopfPresentation A = make_presentation("K_sigma", 1);
    for (const auto& g : A.generators)
        for (const auto& m : A.basis()) {
            if (m.is_unit()) continue;
            CHECK(calc.distribute(Monomial{g}, m, m).empty());
        }
}

TEST_CASE("verify_hopf_axioms passes on every built-in presentation")
{
    for (const char* name : {"K_sigma", "K_Z_rho", "classical_K1", "classical_CP", "S1",
                             "S_sigma", "F2"}) {
        HopfPresentation A = make_presentation(name, 2);
        AxiomReport rep = verify_hopf_axioms(A, 12);
        INFO(name, ": ", rep.failure);
        CHECK(rep.pass);
    }
    HopfPresentation fixed = make_presentation("fixed_points(2sigma)", 2);
    AxiomReport rep = verify_hopf_axioms(fixed, 10);
    INFO(rep.failure);
    CHECK(rep.pass);
}

TEST_CASE("verify_hopf_axioms flags an injected corruption at abar_(0)")
{
    HopfPresentation A = make_presentation("K_sigma", 1);
    /* drop the u-term from psi(abar_1) */
    CircleMonomial ab0{sym_abar(0)};
    TensorElement broken;
    Monomial m{ab0};
    add_term(broken, m, Monomial{}, M2Element::one());
    add_term(broken, Monomial{}, m, M2Element::one());
    A.coproduct_table[ab0] = broken;
    AxiomReport rep = verify_hopf_axioms(A, 8);
    CHECK(!rep.pass);
    CHECK(rep.failure.find("ab0") != std::string::npos);
}

TEST_CASE("derived K_2sigma presentation satisfies the axiom suite")
{
    HopfPresentation A = make_signed_presentation(2, 2, 12);
    REQUIRE(A.generators.size() >= 6);
    /* the Theorem 5.3 n=2 families are all present */
    bool ee = false, eab = false, abab = false;
    for (const auto& g : A.generators) {
        if (g.token() == "es.es") ee = true;
        if (g.token() == "ab0.es") eab = true;
        if (g.token() == "ab0.ab0") abab = true;
    }
    CHECK(ee);
    CHECK(eab);
    CHECK(abab);
    AxiomReport rep = verify_hopf_axioms(A, 10);
    INFO(rep.failure);
    CHECK(rep.pass);
}

TEST_CASE("coassociativity holds through p <= 12 on the larger truncations")
{
    for (const char* name : {"K_sigma", "classical_K1"}) {
        HopfPresentation A = make_presentation(name, 3);
        AxiomReport rep = verify_hopf_axioms(A, 12);
        INFO(name, ": ", rep.failure);
        CHECK(rep.pass);
    }
}

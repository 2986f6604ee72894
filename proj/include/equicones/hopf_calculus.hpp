#ifndef EQUICONES_HOPF_CALCULUS_HPP
#define EQUICONES_HOPF_CALCULUS_HPP

#include <map>
#include <string>
#include <vector>

#include "equicones/presentation.hpp"

namespace equicones {

/* Coproducts of the single symbols of the global alphabet, and derived
 * (cached) coproducts of composite circle letters. Every circle-product
 * computation that has to distribute over star products routes through
 * here. */
class HopfCalculus {
public:
    HopfCalculus();
    /* seeded with a presentation's tables, so its letters coproduct as the
     * presentation says rather than by the global defaults */
    explicit HopfCalculus(const HopfPresentation& A);

    /* psi of a single circle letter; composite letters are derived from the
     * symbol tables through the distributive law and cached. */
    const TensorElement& psi_letter(const CircleMonomial& letter);

    /* psi extended multiplicatively to star monomials. */
    TensorElement psi(const Monomial& m);

    /* x o y for star monomials, via the distributive law
     * x o (y * z) = sum (x' o y) * (x'' o z). Coproduct-side units collapse
     * by the counit. */
    Element circle(const Monomial& x, const Monomial& y);
    Element circle(const Element& x, const Element& y);

    /* sum over psi(x) of c (x' o y) * (x'' o z). Unit arguments collapse by
     * the counit axiom, so distributing against two units returns x. */
    Element distribute(const Monomial& x, const Monomial& y, const Monomial& z);
    Element distribute(const Monomial& x, const CircleMonomial& y, const CircleMonomial& z)
    {
        return distribute(x, Monomial(y), Monomial(z));
    }

    /* Iterated coproduct of m into t slots. */
    struct SlotTerm {
        M2Element coeff;
        std::vector<Monomial> slots;
    };
    std::vector<SlotTerm> iterated_psi(const Monomial& m, int t);

private:
    std::map<Sym, TensorElement> symbol_table_;
    std::map<CircleMonomial, TensorElement> letter_cache_;
    int depth_ = 0;
};

/* Axiom report for verify_hopf_axioms. */
struct AxiomReport {
    bool pass = true;
    std::vector<std::string> checks;   /* one line per axiom family */
    std::string failure;               /* first failing generator, both sides expanded */
};

/* Coassociativity, counit, degree preservation, star-square vanishing and
 * distributive-law vanishing of g o (m*m), for generators and basis
 * monomials with p <= p_max. */
AxiomReport verify_hopf_axioms(const HopfPresentation& A, int p_max);

}  // namespace equicones

#endif

#ifndef EQUICONES_BASES_HPP
#define EQUICONES_BASES_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "equicones/bidegree.hpp"
#include "equicones/presentation.hpp"

namespace equicones {

struct NotFixedPointFree : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Theorem 5.3 generators (e_sigma abar)^J with ||J|| = n, bidegree in the
 * window. */
std::vector<CircleMonomial> gen_signed_basis(int n, Region region);

/* Theorem 5.6 generators for H_star K_{sigma+i}: the abar and bbar families
 * with the index constraints; i = 0 falls back to the K_sigma generators.
 * Sequences with an empty beta part leave the "m >= l" constraint vacuous
 * and are flagged rather than guessed. */
struct SigmaPlusBasis {
    std::vector<CircleMonomial> generators;
    std::vector<std::string> flags;
};
SigmaPlusBasis gen_sigma_plus_basis(int i, Region region);

/* Monomial basis of H_* K_n in the Ravenel-Wilson p=2 presentation, through
 * total degree deg_max. */
std::vector<Monomial> gen_rw_basis(int n, int deg_max);

/* K(F2,.)-factors of the fixed points of K_V for V = m + (q sigma), q > 0. */
std::vector<int> caruso_factors(BiDegree V);

/* Monomial basis of H_*(K_V^{C2}) in the e0 / a_(i) alphabet, through total
 * degree deg_max. */
std::vector<Monomial> gen_fixed_basis(BiDegree V, int deg_max);

/* Underlying and fixed-point comparison maps: barred generators unbar. */
CircleMonomial phi_e(const CircleMonomial& m);
Monomial phi_e(const Monomial& m);
CircleMonomial phi_fixed(const CircleMonomial& m);
Monomial phi_fixed(const Monomial& m);

/* All square-free monomials on the candidate generators whose image degree
 * under deg (a per-letter degree functional) stays within cap. */
std::vector<Monomial> exterior_monomials(const std::vector<CircleMonomial>& gens, int cap,
                                         int (*deg)(const CircleMonomial&));

int underlying_letter_degree(const CircleMonomial& l);
int fixed_letter_degree(const CircleMonomial& l);

/* monomials over gens whose free cone meets the window */
std::vector<Monomial> reachable_monomials(const std::vector<CircleMonomial>& gens, Region region);

/* Behrens-Wilson verification: degreewise multiset bijection of the phi_e
 * images onto gen_rw_basis(|V|) and of the phi_fixed images onto
 * gen_fixed_basis(V), plus injectivity, both through deg_max. */
struct BwLine {
    int degree = 0;
    int expected = 0;
    int got = 0;
    bool ok = true;
    std::string side;  /* "underlying" | "fixed" */
};
struct BwReport {
    bool pass = true;
    std::vector<BwLine> lines;
    std::string first_failure;
};
BwReport verify_bw(const std::vector<CircleMonomial>& candidates, BiDegree V, int deg_max);

/* Candidate generators for V = n sigma sized so that both Behrens-Wilson
 * comparisons through deg_max are complete. */
std::vector<CircleMonomial> signed_candidates_for_bw(int n, int deg_max);

/* Circle-monomial catalog for the bar spectral sequence of K_{2 sigma}:
 * e1 o (generators), bbar_(k) o abar_(m) with 1 <= k <= m, and
 * alpha_(i1) o abar_(i2) o abar_(i3) with i1 < i2 <= i3. */
std::vector<CircleMonomial> signed_bar_catalog(Region region);

}  // namespace equicones

#endif

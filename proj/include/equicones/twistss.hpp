#ifndef EQUICONES_TWISTSS_HPP
#define EQUICONES_TWISTSS_HPP

#include <optional>
#include <string>
#include <vector>

#include "equicones/barss.hpp"

namespace equicones {

/* Orbit of a length-t word under gamma.[z_1|...|z_t] = [g(z_t)|...|g(z_1)].
 * Fixed words are palindromic up to conjugation; the rest pair up. */
struct TwistedOrbit {
    BarWord rep;  /* lexicographically least member */
    bool fixed = false;
};

std::vector<TwistedOrbit> twisted_words(const HopfPresentation& A,
                                        const std::vector<Monomial>& basis, int t);

/* Summand carried by an orbit at filtration t: fixed words support a free
 * cone at sphere(t) + rho * (mirror-pair underlying degrees) + middle entry
 * bidegree; free orbits an induced tower at p0 = t + total underlying
 * degree. */
Summand orbit_summand(const HopfPresentation& A, const TwistedOrbit& orbit);

BiDegree twisted_sphere(int t);

Page twisted_e1(const HopfPresentation& A, int t_max, Region region);

/* Template-lifted d1: underlying bar differential classified by source and
 * target orbit types. Throws TemplateError on a component no template
 * covers. cone->tower components are zeroed and flagged. */
void twisted_d1(Page& page, const HopfPresentation& A);

/* exact ranks plus hidden-extension annotations */
DimTable twisted_e2_dims(const Page& page, Region region);

struct LedgerEntry {
    std::string label;
    BiDegree position{};
    int t = 0;
    std::string reason;
};

/* Summands of E2 whose underlying classes die in the underlying classical
 * bar homology, hence require differentials of length >= 2. */
std::vector<LedgerEntry> must_die_ledger(const Page& page, const HopfPresentation& A,
                                         const GradedModule& answer);

struct NormCandidate {
    BarWord candidate;
    int r = 0;                    /* filtration drop */
    BiDegree required_shift{};    /* extension shift making the d_r degree-correct */
    bool degree_compatible = false;
};

struct NormCandidateResult {
    std::vector<NormCandidate> candidates;  /* empty = NoCandidate */
    std::string note;
};

/* Unfold the factorizations of a fixed word into palindromic doubled words
 * and check degree compatibility of a d_r onto the (shifted) summand. */
NormCandidateResult norm_candidate(const HopfPresentation& A, const BarWord& fixed_word,
                                   const Page& page);

}  // namespace equicones

#endif

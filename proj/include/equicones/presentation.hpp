#ifndef EQUICONES_PRESENTATION_HPP
#define EQUICONES_PRESENTATION_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "equicones/bidegree.hpp"
#include "equicones/m2.hpp"

namespace equicones {

/* Families of the global Hopf-ring generator alphabet. */
enum class Family : int {
    E0,       /* reduced class of K_0, degree (0,0), circle-idempotent */
    E1,       /* H_1 K_1 */
    E2,       /* H_2 CP^inf, divided-power bottom */
    ESigma,   /* H_sigma K_sigma */
    E2Sigma,  /* H_{2sigma} K(Z,2sigma) */
    Alpha,    /* alpha_(i) in H_* K_1, degree 2^{i+1} */
    Beta,     /* beta_(i) in H_* CP^inf, degree 2^{i+1} */
    AlphaBar, /* abar_(i) in H_star K_sigma, degree 2^i rho */
    BetaBar,  /* bbar_(i) in H_star K(Z,rho), degree 2^i rho */
    XBar,     /* xbar_(i) in H_star K(Z,2sigma), degree 2^{i+1} rho */
    AFix,     /* a_(i) in the fixed-point alphabet, degree 2^i */
    Gen,      /* synthetic exterior class x_d of degree (d, 0) */
};

struct Sym {
    Family family = Family::E0;
    int index = 0;

    BiDegree degree() const;
    int underlying_degree() const { return degree().p; }
    std::string token() const;
    auto operator<=>(const Sym&) const = default;
};

inline Sym sym_e0() { return {Family::E0, 0}; }
inline Sym sym_e1() { return {Family::E1, 0}; }
inline Sym sym_e2() { return {Family::E2, 0}; }
inline Sym sym_esigma() { return {Family::ESigma, 0}; }
inline Sym sym_e2sigma() { return {Family::E2Sigma, 0}; }
inline Sym sym_alpha(int i) { return {Family::Alpha, i}; }
inline Sym sym_beta(int i) { return {Family::Beta, i}; }
inline Sym sym_abar(int i) { return {Family::AlphaBar, i}; }
inline Sym sym_bbar(int i) { return {Family::BetaBar, i}; }
inline Sym sym_xbar(int i = 0) { return {Family::XBar, i}; }
inline Sym sym_afix(int i) { return {Family::AFix, i}; }

/* Circle monomial: multiset of generator symbols under the circle product.
 * Kept sorted; e0 is idempotent (e0 ok = e0 for k > 0). The empty monomial
 * is the circle unit [1] of K_0. */
class CircleMonomial {
public:
    CircleMonomial() = default;
    explicit CircleMonomial(Sym s) : syms_{s} {}
    explicit CircleMonomial(std::vector<Sym> syms);

    bool is_unit() const { return syms_.empty(); }
    const std::vector<Sym>& syms() const { return syms_; }
    BiDegree degree() const;
    int underlying_degree() const { return degree().p; }
    std::string token() const;
    auto operator<=>(const CircleMonomial&) const = default;

private:
    std::vector<Sym> syms_;
};

/* g1 o g2: sorted concatenation with the e0 rules applied. */
CircleMonomial circle_product(const CircleMonomial& a, const CircleMonomial& b);

/* Star monomial: square-free sorted product of circle-monomial letters.
 * All built-in presentations are exterior. */
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(CircleMonomial letter) : letters_{std::move(letter)} {}
    explicit Monomial(std::vector<CircleMonomial> letters);

    bool is_unit() const { return letters_.empty(); }
    const std::vector<CircleMonomial>& letters() const { return letters_; }
    BiDegree degree() const;
    int underlying_degree() const { return degree().p; }
    std::string token() const;
    auto operator<=>(const Monomial&) const = default;

private:
    std::vector<CircleMonomial> letters_;
};

/* Exterior product: zero (nullopt) on any letter collision. */
std::optional<Monomial> star_product(const Monomial& a, const Monomial& b);

/* F2-combination of monomials with M2 coefficients. */
using Element = std::map<Monomial, M2Element>;

void add_term(Element& e, const Monomial& m, const M2Element& c);
Element scale(const Element& e, const M2Element& c);
Element add(const Element& x, const Element& y);
std::string to_string(const Element& e);

/* Two-sided tensor element; coproduct values live here. */
using TensorElement = std::map<std::pair<Monomial, Monomial>, M2Element>;

void add_term(TensorElement& e, const Monomial& l, const Monomial& r, const M2Element& c);
std::string to_string(const TensorElement& e);

struct NameError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* A Hopf-algebra presentation over M2: exterior on the listed generator
 * letters, coproduct stored per generator, conjugation defaulting to the
 * identity. */
struct HopfPresentation {
    std::string name;
    std::vector<CircleMonomial> generators;
    std::map<CircleMonomial, TensorElement> coproduct_table;
    std::map<CircleMonomial, CircleMonomial> conjugation;  /* sparse; identity when absent */

    CircleMonomial conjugate_letter(const CircleMonomial& l) const
    {
        auto it = conjugation.find(l);
        return it == conjugation.end() ? l : it->second;
    }
    Monomial conjugate(const Monomial& m) const;

    /* All 2^n square-free monomials, sorted. */
    std::vector<Monomial> basis() const;
    /* Basis monomials except the unit. */
    std::vector<Monomial> reduced_basis() const;

    const TensorElement& generator_coproduct(const CircleMonomial& g) const;
};

/* Built-in presentations. Names: K_sigma, K_Z_rho, classical_K1,
 * classical_CP, S1, S_sigma, F2, fixed_points(<space>). */
HopfPresentation make_presentation(const std::string& name, int max_index);

/* H_star K_{n sigma} presented on the Theorem 5.3 circle generators, with
 * coproducts derived through the Hopf ring structure from K_sigma. Letters
 * are kept only when their bidegree satisfies p <= p_cap. */
HopfPresentation make_signed_presentation(int n, int max_index, int p_cap);

/* E[x] with |x| = (deg, 0); the Tor oracle inputs. */
HopfPresentation make_exterior_presentation(int deg);

/* Parse "sigma", "rho", "<n>sigma", "sigma+<i>" or a plain integer. */
BiDegree parse_space(const std::string& s);

}  // namespace equicones

#endif

#ifndef EQUICONES_M2_HPP
#define EQUICONES_M2_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>

#include "equicones/bidegree.hpp"

namespace equicones {

/* One monomial of the coefficient ring M2 = F2[a,u] (+) F2[a,u]/(a^inf,u^inf){theta}:
 * positive cone a^i u^j at (-i, -i-j), or negative cone theta/(a^i u^j) at (i, i+j+2). */
struct M2Monomial {
    bool negative = false;
    int i = 0;
    int j = 0;

    BiDegree degree() const
    {
        return negative ? BiDegree{i, i + j + 2} : BiDegree{-i, -i - j};
    }
    auto operator<=>(const M2Monomial&) const = default;
};

/* F2-linear combination of M2Monomials. Terms appear at most once. */
class M2Element {
public:
    M2Element() = default;
    static M2Element zero() { return {}; }
    static M2Element one() { return monomial(false, 0, 0); }
    static M2Element monomial(bool negative, int i, int j)
    {
        M2Element e;
        e.terms_.insert({negative, i, j});
        return e;
    }
    static M2Element a(int i = 1) { return monomial(false, i, 0); }
    static M2Element u(int j = 1) { return monomial(false, 0, j); }
    static M2Element theta_over(int i, int j) { return monomial(true, i, j); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && *terms_.begin() == M2Monomial{}; }
    const std::set<M2Monomial>& terms() const { return terms_; }

    /* Homogeneous degree, when the element has one. */
    std::optional<BiDegree> degree() const
    {
        if (terms_.empty()) return std::nullopt;
        BiDegree d = terms_.begin()->degree();
        for (const auto& t : terms_)
            if (t.degree() != d) return std::nullopt;
        return d;
    }

    void toggle(M2Monomial m)
    {
        auto it = terms_.find(m);
        if (it != terms_.end())
            terms_.erase(it);
        else
            terms_.insert(m);
    }

    friend M2Element operator+(const M2Element& x, const M2Element& y)
    {
        M2Element r = x;
        for (const auto& t : y.terms_) r.toggle(t);
        return r;
    }
    friend bool operator==(const M2Element&, const M2Element&) = default;
    friend bool operator<(const M2Element& x, const M2Element& y) { return x.terms_ < y.terms_; }

private:
    std::set<M2Monomial> terms_;
};

/* Product of two M2 monomials; empty result encodes zero. */
std::optional<M2Monomial> m2_mul(M2Monomial x, M2Monomial y);
M2Element m2_mul(const M2Element& x, const M2Element& y);

/* F2-dimension of M2 at a bidegree: 1 on the two cones, else 0. */
int m2_dim(BiDegree d);

/* The basis monomial at d, if m2_dim(d) = 1. */
std::optional<M2Monomial> m2_basis_at(BiDegree d);

std::string to_string(M2Monomial m);
std::string to_string(const M2Element& e);

}  // namespace equicones

#endif

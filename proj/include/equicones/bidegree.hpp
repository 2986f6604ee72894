#ifndef EQUICONES_BIDEGREE_HPP
#define EQUICONES_BIDEGREE_HPP

#include <compare>
#include <cstdint>
#include <string>

namespace equicones {

/* RO(C2) degree of a virtual representation V = (p-q) + q*sigma,
 * stored as (topological dimension p, weight q). */
struct BiDegree {
    int p = 0;
    int q = 0;

    friend BiDegree operator+(BiDegree a, BiDegree b) { return {a.p + b.p, a.q + b.q}; }
    friend BiDegree operator-(BiDegree a, BiDegree b) { return {a.p - b.p, a.q - b.q}; }
    BiDegree& operator+=(BiDegree o) { p += o.p; q += o.q; return *this; }
    friend BiDegree operator*(int n, BiDegree d) { return {n * d.p, n * d.q}; }
    auto operator<=>(const BiDegree&) const = default;
};

inline constexpr BiDegree kTrivial{1, 0};
inline constexpr BiDegree kSigma{1, 1};
inline constexpr BiDegree kRho{2, 1};

inline std::string to_string(BiDegree d)
{
    return "(" + std::to_string(d.p) + "," + std::to_string(d.q) + ")";
}

/* Rectangular truncation window; infinite cones are only ever queried here. */
struct Region {
    int p_min = 0;
    int p_max = 0;
    int q_min = 0;
    int q_max = 0;

    bool contains(BiDegree d) const
    {
        return d.p >= p_min && d.p <= p_max && d.q >= q_min && d.q <= q_max;
    }
    Region grown(int dp) const { return {p_min - dp, p_max + dp, q_min, q_max}; }

    template <typename F>
    void for_each(F&& f) const
    {
        for (int p = p_min; p <= p_max; ++p)
            for (int q = q_min; q <= q_max; ++q)
                f(BiDegree{p, q});
    }
};

}  // namespace equicones

#endif

#ifndef EQUICONES_GRADED_MODULE_HPP
#define EQUICONES_GRADED_MODULE_HPP

#include <string>
#include <vector>

#include "equicones/bidegree.hpp"
#include "equicones/m2.hpp"

namespace equicones {

/* One building block of a bigraded module: a degree-shifted copy of M2
 * (FreeCone) or a copy of H(C2+) = F2[u^pm]{iota_1}, a full vertical line
 * at one topological degree (InducedTower). */
struct Summand {
    enum Kind { FreeCone, InducedTower };

    Kind kind = FreeCone;
    BiDegree shift{};  /* cone apex, for FreeCone */
    int p0 = 0;        /* column, for InducedTower */
    std::string label;

    static Summand cone(BiDegree shift, std::string label = {})
    {
        return {FreeCone, shift, 0, std::move(label)};
    }
    static Summand tower(int p0, std::string label = {})
    {
        return {InducedTower, {}, p0, std::move(label)};
    }

    int dim_at(BiDegree d) const
    {
        if (kind == FreeCone) return m2_dim(d - shift);
        return d.p == p0 ? 1 : 0;
    }

    /* Whether the summand has any nonzero bidegree inside the window. */
    bool reaches(const Region& r) const
    {
        if (kind == InducedTower) return p0 >= r.p_min && p0 <= r.p_max;
        /* cheap rejections first: the positive cone lives on q <= p + (shift.q - shift.p),
         * p <= shift.p; the negative cone on p >= shift.p, q >= shift.q + 2 */
        bool pos_possible = r.p_min <= shift.p && r.q_min <= shift.q &&
                            shift.p - shift.q <= r.p_max - r.q_min;
        bool neg_possible = shift.p <= r.p_max && shift.q + 2 <= r.q_max;
        if (!pos_possible && !neg_possible) return false;
        for (int p = r.p_min; p <= r.p_max; ++p)
            for (int q = r.q_min; q <= r.q_max; ++q)
                if (m2_dim(BiDegree{p, q} - shift)) return true;
        return false;
    }
};

struct GradedModule {
    std::vector<Summand> summands;

    void add(Summand s) { summands.push_back(std::move(s)); }
};

inline int module_dim(const GradedModule& m, BiDegree d)
{
    int n = 0;
    for (const auto& s : m.summands) n += s.dim_at(d);
    return n;
}

}  // namespace equicones

#endif

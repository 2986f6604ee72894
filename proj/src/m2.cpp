#include "equicones/m2.hpp"

namespace equicones {

std::optional<M2Monomial> m2_mul(M2Monomial x, M2Monomial y)
{
    if (x.negative && y.negative) return std::nullopt;
    if (!x.negative && !y.negative) return M2Monomial{false, x.i + y.i, x.j + y.j};
    if (x.negative) std::swap(x, y);
    /* a^i u^j * theta/(a^k u^l) divides when it can, else vanishes. */
    if (y.i >= x.i && y.j >= x.j) return M2Monomial{true, y.i - x.i, y.j - x.j};
    return std::nullopt;
}

M2Element m2_mul(const M2Element& x, const M2Element& y)
{
    M2Element r;
    for (const auto& tx : x.terms())
        for (const auto& ty : y.terms())
            if (auto m = m2_mul(tx, ty)) r.toggle(*m);
    return r;
}

int m2_dim(BiDegree d)
{
    if (d.p <= 0 && d.q <= d.p) return 1;      /* a^{-p} u^{p-q} */
    if (d.p >= 0 && d.q >= d.p + 2) return 1;  /* theta/(a^p u^{q-p-2}) */
    return 0;
}

std::optional<M2Monomial> m2_basis_at(BiDegree d)
{
    if (d.p <= 0 && d.q <= d.p) return M2Monomial{false, -d.p, d.p - d.q};
    if (d.p >= 0 && d.q >= d.p + 2) return M2Monomial{true, d.p, d.q - d.p - 2};
    return std::nullopt;
}

std::string to_string(M2Monomial m)
{
    std::string s;
    if (!m.negative) {
        if (m.i == 0 && m.j == 0) return "1";
        if (m.i > 0) s += "a" + (m.i > 1 ? "^" + std::to_string(m.i) : "");
        if (m.j > 0) s += "u" + (m.j > 1 ? "^" + std::to_string(m.j) : "");
        return s;
    }
    s = "th";
    if (m.i > 0 || m.j > 0) {
        s += "/(";
        if (m.i > 0) s += "a" + (m.i > 1 ? "^" + std::to_string(m.i) : "");
        if (m.j > 0) s += "u" + (m.j > 1 ? "^" + std::to_string(m.j) : "");
        s += ")";
    }
    return s;
}

std::string to_string(const M2Element& e)
{
    if (e.is_zero()) return "0";
    std::string s;
    for (const auto& t : e.terms()) {
        if (!s.empty()) s += "+";
        s += to_string(t);
    }
    return s;
}

}  // namespace equicones

#include "equicones/bases.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace equicones {

namespace {

int index_cap_for(int p_max)
{
    int i = 0;
    while ((2 << (i + 1)) <= p_max) ++i;
    return i;
}

}  // namespace

std::vector<CircleMonomial> gen_signed_basis(int n, Region region)
{
    std::vector<CircleMonomial> out;
    if (n == 0) {
        if (region.contains({0, 0})) out.emplace_back();
        return out;
    }
    int imax = std::max(0, index_cap_for(region.p_max) + 1);
    std::vector<Sym> cur;
    /* weakly increasing words of length n over e_sigma < abar_(0) < ... */
    auto rec = [&](auto&& self, int depth, int lo, BiDegree deg) -> void {
        if (depth == n) {
            if (region.contains(deg)) out.emplace_back(cur);
            return;
        }
        for (int k = lo; k <= imax + 1; ++k) {
            Sym s = k == 0 ? sym_esigma() : sym_abar(k - 1);
            BiDegree d2 = deg + s.degree();
            if (d2.p > region.p_max) continue;
            cur.push_back(s);
            self(self, depth + 1, k, d2);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0, {0, 0});
    std::sort(out.begin(), out.end());
    return out;
}

SigmaPlusBasis gen_sigma_plus_basis(int i, Region region)
{
    SigmaPlusBasis out;
    if (i == 0) {
        out.generators = gen_signed_basis(1, region);
        out.flags.push_back("i=0 falls back to the K_sigma generator list");
        return out;
    }
    int imax = index_cap_for(region.p_max) + 1;

    /* enumerate (eps, I, J) with eps + |I| + 2||J|| = budget, then the final
     * barred generator with the index constraints */
    struct Prefix {
        int eps = 0;
        std::vector<int> I;      /* strictly increasing alpha indices */
        std::vector<int> J;      /* beta exponents by index */
        int degree_p = 0;
    };
    auto enumerate_prefixes = [&](int budget) {
        std::vector<Prefix> prefixes;
        for (int eps = 0; eps <= std::min(1, budget); ++eps) {
            /* alpha subsets */
            std::vector<int> I;
            auto rec_alpha = [&](auto&& self, int lo, int remaining, int deg_p) -> void {
                if (remaining % 2 == 0) {
                    /* distribute remaining/2 over beta exponents */
                    std::vector<int> J(static_cast<std::size_t>(imax + 1), 0);
                    auto rec_beta = [&](auto&& self2, int idx, int left, int dp) -> void {
                        if (left == 0) {
                            prefixes.push_back({eps, I, J, dp});
                            return;
                        }
                        if (idx > imax) return;
                        for (int c = 0; c <= left; ++c) {
                            int dp2 = dp + c * (2 << idx);
                            if (dp2 > region.p_max) break;
                            J[static_cast<std::size_t>(idx)] = c;
                            self2(self2, idx + 1, left - c, dp2);
                        }
                        J[static_cast<std::size_t>(idx)] = 0;
                    };
                    rec_beta(rec_beta, 0, remaining / 2, deg_p);
                }
                for (int k = lo; k <= imax && remaining > 0; ++k) {
                    int dp = deg_p + (2 << k);
                    if (dp > region.p_max) break;
                    I.push_back(k);
                    self(self, k + 1, remaining - 1, dp);
                    I.pop_back();
                }
            };
            rec_alpha(rec_alpha, 0, budget - eps, eps);
        }
        return prefixes;
    };

    auto build = [&](const Prefix& pre, Sym last) {
        std::vector<Sym> syms;
        if (pre.eps) syms.push_back(sym_e1());
        for (int k : pre.I) syms.push_back(sym_alpha(k));
        for (std::size_t idx = 0; idx < pre.J.size(); ++idx)
            for (int c = 0; c < pre.J[idx]; ++c) syms.push_back(sym_beta(static_cast<int>(idx)));
        syms.push_back(last);
        return CircleMonomial(std::move(syms));
    };

    auto beta_top = [](const Prefix& pre) {
        int top = -1;
        for (std::size_t idx = 0; idx < pre.J.size(); ++idx)
            if (pre.J[idx] > 0) top = static_cast<int>(idx);
        return top;
    };

    /* abar family: eps + |I| + 2||J|| = i, m > max I, m >= top beta index */
    for (const auto& pre : enumerate_prefixes(i)) {
        int top = beta_top(pre);
        int lo = 0;
        if (!pre.I.empty()) lo = std::max(lo, pre.I.back() + 1);
        if (top >= 0) lo = std::max(lo, top);
        if (top < 0 && out.flags.empty())
            out.flags.push_back("empty beta part leaves the m >= l constraint vacuous; "
                                "m runs over all indices above the alpha bound");
        for (int m = lo; m <= imax + 1; ++m) {
            CircleMonomial g = build(pre, sym_abar(m));
            if (region.contains(g.degree())) out.generators.push_back(g);
        }
    }
    /* bbar family: eps + |W| + 2||Y|| = i - 1, t > max W, t >= top beta index */
    for (const auto& pre : enumerate_prefixes(i - 1)) {
        int top = beta_top(pre);
        int lo = 0;
        if (!pre.I.empty()) lo = std::max(lo, pre.I.back() + 1);
        if (top >= 0) lo = std::max(lo, top);
        for (int m = lo; m <= imax + 1; ++m) {
            CircleMonomial g = build(pre, sym_bbar(m));
            if (region.contains(g.degree())) out.generators.push_back(g);
        }
    }
    std::sort(out.generators.begin(), out.generators.end());
    out.generators.erase(std::unique(out.generators.begin(), out.generators.end()),
                         out.generators.end());
    return out;
}

std::vector<Monomial> gen_rw_basis(int n, int deg_max)
{
    std::vector<Monomial> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    /* letters: multisets of size n over e1 (degree 1) and alpha_(k) */
    std::vector<CircleMonomial> letters;
    std::vector<Sym> cur;
    auto rec = [&](auto&& self, int depth, int lo, int deg) -> void {
        if (depth == n) {
            letters.emplace_back(cur);
            return;
        }
        for (int k = lo;; ++k) {
            Sym s = k == 0 ? sym_e1() : sym_alpha(k - 1);
            int d2 = deg + s.degree().p;
            if (d2 > deg_max) {
                if (k == lo) return;
                break;
            }
            cur.push_back(s);
            self(self, depth + 1, k, d2);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0, 0);
    return exterior_monomials(letters, deg_max, underlying_letter_degree);
}

std::vector<int> caruso_factors(BiDegree V)
{
    if (V.q <= 0)
        throw NotFixedPointFree("caruso_factors: " + to_string(V) +
                                " has no fixed-point-free part");
    int m = V.p - V.q;
    if (m < 0) throw NotFixedPointFree("caruso_factors: negative trivial part in " + to_string(V));
    std::vector<int> out;
    for (int k = 0; k <= V.q; ++k) out.push_back(m + k);
    return out;
}

std::vector<Monomial> gen_fixed_basis(BiDegree V, int deg_max)
{
    std::vector<CircleMonomial> letters;
    for (int f : caruso_factors(V)) {
        if (f == 0) {
            letters.emplace_back(sym_e0());
            continue;
        }
        /* weakly increasing a-words of length f */
        std::vector<Sym> cur;
        auto rec = [&](auto&& self, int depth, int lo, int deg) -> void {
            if (depth == f) {
                letters.emplace_back(cur);
                return;
            }
            for (int k = lo;; ++k) {
                int d2 = deg + (1 << k);
                if (d2 > deg_max) {
                    if (k == lo) return;
                    break;
                }
                cur.push_back(sym_afix(k));
                self(self, depth + 1, k, d2);
                cur.pop_back();
            }
        };
        rec(rec, 0, 0, 0);
    }
    std::sort(letters.begin(), letters.end());
    return exterior_monomials(letters, deg_max, underlying_letter_degree);
}

namespace {

Sym map_phi_e(Sym s)
{
    switch (s.family) {
        case Family::ESigma: return sym_e1();
        case Family::AlphaBar: return sym_alpha(s.index);
        case Family::BetaBar: return sym_beta(s.index);
        default: return s;
    }
}

Sym map_phi_fixed(Sym s)
{
    switch (s.family) {
        case Family::ESigma: return sym_e0();
        case Family::AlphaBar: return sym_afix(s.index);
        case Family::BetaBar: return sym_afix(s.index);
        default: return s;
    }
}

}  // namespace

CircleMonomial phi_e(const CircleMonomial& m)
{
    std::vector<Sym> syms;
    syms.reserve(m.syms().size());
    for (const auto& s : m.syms()) syms.push_back(map_phi_e(s));
    return CircleMonomial(std::move(syms));
}

Monomial phi_e(const Monomial& m)
{
    std::vector<CircleMonomial> letters;
    letters.reserve(m.letters().size());
    for (const auto& l : m.letters()) letters.push_back(phi_e(l));
    return Monomial(std::move(letters));
}

CircleMonomial phi_fixed(const CircleMonomial& m)
{
    std::vector<Sym> syms;
    syms.reserve(m.syms().size());
    for (const auto& s : m.syms()) syms.push_back(map_phi_fixed(s));
    return CircleMonomial(std::move(syms));  /* e0 idempotency applies here */
}

Monomial phi_fixed(const Monomial& m)
{
    std::vector<CircleMonomial> letters;
    letters.reserve(m.letters().size());
    for (const auto& l : m.letters()) letters.push_back(phi_fixed(l));
    return Monomial(std::move(letters));
}

int underlying_letter_degree(const CircleMonomial& l) { return l.underlying_degree(); }
int fixed_letter_degree(const CircleMonomial& l) { return phi_fixed(l).underlying_degree(); }

std::vector<Monomial> reachable_monomials(const std::vector<CircleMonomial>& gens, Region region)
{
    std::vector<Monomial> out;
    std::vector<CircleMonomial> cur;
    /* letters have p >= q >= 0, so exclusion from the window is monotone */
    auto excluded = [&](BiDegree d) {
        bool pos = d.p - d.q <= region.p_max - region.q_min;
        bool neg = d.p <= region.p_max && d.q + 2 <= region.q_max;
        return !pos && !neg;
    };
    auto rec = [&](auto&& self, std::size_t lo, BiDegree d) -> void {
        Monomial m(cur);
        if (Summand::cone(d).reaches(region)) out.push_back(m);
        for (std::size_t k = lo; k < gens.size(); ++k) {
            BiDegree d2 = d + gens[k].degree();
            if (excluded(d2)) continue;
            cur.push_back(gens[k]);
            self(self, k + 1, d2);
            cur.pop_back();
        }
    };
    rec(rec, 0, {0, 0});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Monomial> exterior_monomials(const std::vector<CircleMonomial>& gens, int cap,
                                         int (*deg)(const CircleMonomial&))
{
    std::vector<Monomial> out;
    std::vector<CircleMonomial> cur;
    auto rec = [&](auto&& self, std::size_t lo, int d) -> void {
        out.emplace_back(cur);
        for (std::size_t k = lo; k < gens.size(); ++k) {
            int d2 = d + deg(gens[k]);
            if (d2 > cap) continue;
            cur.push_back(gens[k]);
            self(self, k + 1, d2);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

BwReport verify_bw(const std::vector<CircleMonomial>& candidates, BiDegree V, int deg_max)
{
    BwReport rep;
    int n_underlying = V.p;

    auto compare = [&](const std::vector<Monomial>& images, const std::vector<Monomial>& target,
                       const std::string& side) {
        std::map<int, int> got, expect;
        std::set<Monomial> distinct;
        for (const auto& m : images) {
            ++got[m.underlying_degree()];
            distinct.insert(m);
        }
        if (distinct.size() != images.size()) {
            rep.pass = false;
            if (rep.first_failure.empty())
                rep.first_failure = side + ": images are not pairwise distinct";
        }
        for (const auto& m : target) ++expect[m.underlying_degree()];
        for (int d = 0; d <= deg_max; ++d) {
            BwLine line{d, expect.count(d) ? expect[d] : 0, got.count(d) ? got[d] : 0, true, side};
            line.ok = line.expected == line.got;
            if (!line.ok) {
                rep.pass = false;
                if (rep.first_failure.empty())
                    rep.first_failure = side + " count mismatch at degree " + std::to_string(d) +
                                        ": expected " + std::to_string(line.expected) + ", got " +
                                        std::to_string(line.got);
            }
            rep.lines.push_back(line);
        }
    };

    std::vector<Monomial> cand_e;
    for (const auto& m : exterior_monomials(candidates, deg_max, underlying_letter_degree))
        cand_e.push_back(phi_e(m));
    compare(cand_e, gen_rw_basis(n_underlying, deg_max), "underlying");

    std::vector<Monomial> cand_fix;
    for (const auto& m : exterior_monomials(candidates, deg_max, fixed_letter_degree))
        cand_fix.push_back(phi_fixed(m));
    compare(cand_fix, gen_fixed_basis(V, deg_max), "fixed");
    return rep;
}

std::vector<CircleMonomial> signed_candidates_for_bw(int n, int deg_max)
{
    Region region{0, n + 2 * deg_max, 0, n + deg_max};
    return gen_signed_basis(n, region);
}

std::vector<CircleMonomial> signed_bar_catalog(Region region)
{
    std::vector<CircleMonomial> out;
    auto keep = [&](const CircleMonomial& c) {
        if (Summand::cone(c.degree()).reaches(region)) out.push_back(c);
    };
    Region inner{0, 2 * region.p_max + 4, 0, region.p_max + 2};
    for (const auto& g : gen_signed_basis(2, inner)) {
        std::vector<Sym> syms = g.syms();
        syms.push_back(sym_e1());
        keep(CircleMonomial(std::move(syms)));
    }
    int bound = index_cap_for(2 * region.p_max + 4) + 2;
    for (int k = 1; k <= bound; ++k)
        for (int m = k; m <= bound; ++m) keep(CircleMonomial({sym_bbar(k), sym_abar(m)}));
    for (int i1 = 0; i1 <= bound; ++i1)
        for (int i2 = i1 + 1; i2 <= bound; ++i2)
            for (int i3 = i2; i3 <= bound; ++i3)
                keep(CircleMonomial({sym_alpha(i1), sym_abar(i2), sym_abar(i3)}));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace equicones

#include "equicones/presentation.hpp"

#include <algorithm>

#include "equicones/hopf_calculus.hpp"

namespace equicones {

BiDegree Sym::degree() const
{
    switch (family) {
        case Family::E0: return {0, 0};
        case Family::E1: return {1, 0};
        case Family::E2: return {2, 0};
        case Family::ESigma: return kSigma;
        case Family::E2Sigma: return {2, 2};
        case Family::Alpha: return {2 << index, 0};
        case Family::Beta: return {2 << index, 0};
        case Family::AlphaBar: return (1 << index) * kRho;
        case Family::BetaBar: return (1 << index) * kRho;
        case Family::XBar: return (2 << index) * kRho;
        case Family::AFix: return {1 << index, 0};
        case Family::Gen: return {index, 0};
    }
    return {};
}

std::string Sym::token() const
{
    switch (family) {
        case Family::E0: return "e0";
        case Family::E1: return "e1";
        case Family::E2: return "e2";
        case Family::ESigma: return "es";
        case Family::E2Sigma: return "e2s";
        case Family::Alpha: return "a" + std::to_string(index);
        case Family::Beta: return "b" + std::to_string(index);
        case Family::AlphaBar: return "ab" + std::to_string(index);
        case Family::BetaBar: return "bb" + std::to_string(index);
        case Family::XBar: return "xb" + std::to_string(index);
        case Family::AFix: return "af" + std::to_string(index);
        case Family::Gen: return "x" + std::to_string(index);
    }
    return "?";
}

CircleMonomial::CircleMonomial(std::vector<Sym> syms) : syms_(std::move(syms))
{
    std::sort(syms_.begin(), syms_.end());
    /* e0 is circle-idempotent: keep a single copy */
    auto first_e0 = std::find_if(syms_.begin(), syms_.end(),
                                 [](const Sym& s) { return s.family == Family::E0; });
    if (first_e0 != syms_.end()) {
        auto past = first_e0 + 1;
        while (past != syms_.end() && past->family == Family::E0) ++past;
        syms_.erase(first_e0 + 1, past);
    }
}

BiDegree CircleMonomial::degree() const
{
    BiDegree d{0, 0};
    for (const auto& s : syms_) d += s.degree();
    return d;
}

std::string CircleMonomial::token() const
{
    if (syms_.empty()) return "1";
    std::string s;
    for (const auto& g : syms_) {
        if (!s.empty()) s += ".";
        s += g.token();
    }
    return s;
}

CircleMonomial circle_product(const CircleMonomial& a, const CircleMonomial& b)
{
    std::vector<Sym> syms = a.syms();
    syms.insert(syms.end(), b.syms().begin(), b.syms().end());
    return CircleMonomial(std::move(syms));
}

Monomial::Monomial(std::vector<CircleMonomial> letters) : letters_(std::move(letters))
{
    std::sort(letters_.begin(), letters_.end());
}

BiDegree Monomial::degree() const
{
    BiDegree d{0, 0};
    for (const auto& l : letters_) d += l.degree();
    return d;
}

std::string Monomial::token() const
{
    if (letters_.empty()) return "1";
    std::string s;
    for (const auto& l : letters_) {
        if (!s.empty()) s += "*";
        s += l.token();
    }
    return s;
}

std::optional<Monomial> star_product(const Monomial& a, const Monomial& b)
{
    std::vector<CircleMonomial> merged;
    merged.reserve(a.letters().size() + b.letters().size());
    auto i = a.letters().begin(), j = b.letters().begin();
    while (i != a.letters().end() && j != b.letters().end()) {
        if (*i == *j) return std::nullopt;
        if (*i < *j)
            merged.push_back(*i++);
        else
            merged.push_back(*j++);
    }
    merged.insert(merged.end(), i, a.letters().end());
    merged.insert(merged.end(), j, b.letters().end());
    return Monomial(std::move(merged));
}

void add_term(Element& e, const Monomial& m, const M2Element& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = e.emplace(m, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) e.erase(it);
    }
}

Element scale(const Element& e, const M2Element& c)
{
    Element r;
    for (const auto& [m, k] : e) add_term(r, m, m2_mul(c, k));
    return r;
}

Element add(const Element& x, const Element& y)
{
    Element r = x;
    for (const auto& [m, c] : y) add_term(r, m, c);
    return r;
}

std::string to_string(const Element& e)
{
    if (e.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : e) {
        if (!s.empty()) s += " + ";
        if (!c.is_one()) s += "(" + to_string(c) + ")";
        s += m.token();
    }
    return s;
}

void add_term(TensorElement& e, const Monomial& l, const Monomial& r, const M2Element& c)
{
    if (c.is_zero()) return;
    auto key = std::make_pair(l, r);
    auto [it, inserted] = e.emplace(key, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) e.erase(it);
    }
}

std::string to_string(const TensorElement& e)
{
    if (e.empty()) return "0";
    std::string s;
    for (const auto& [lr, c] : e) {
        if (!s.empty()) s += " + ";
        if (!c.is_one()) s += "(" + to_string(c) + ")";
        s += lr.first.token() + "(x)" + lr.second.token();
    }
    return s;
}

Monomial HopfPresentation::conjugate(const Monomial& m) const
{
    std::vector<CircleMonomial> letters;
    letters.reserve(m.letters().size());
    for (const auto& l : m.letters()) letters.push_back(conjugate_letter(l));
    return Monomial(std::move(letters));
}

std::vector<Monomial> HopfPresentation::basis() const
{
    std::vector<Monomial> out{Monomial{}};
    for (const auto& g : generators) {
        std::size_t n = out.size();
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<CircleMonomial> letters = out[k].letters();
            letters.push_back(g);
            out.push_back(Monomial(std::move(letters)));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Monomial> HopfPresentation::reduced_basis() const
{
    std::vector<Monomial> out = basis();
    std::erase_if(out, [](const Monomial& m) { return m.is_unit(); });
    return out;
}

const TensorElement& HopfPresentation::generator_coproduct(const CircleMonomial& g) const
{
    auto it = coproduct_table.find(g);
    if (it == coproduct_table.end())
        throw NameError("no coproduct stored for generator " + g.token() + " in " + name);
    return it->second;
}

namespace {

/* Divided-power member: the product of the 2-power family letters selected
 * by the binary expansion of n. Unit at n = 0. */
Monomial divided_member(Family fam, int n)
{
    std::vector<CircleMonomial> letters;
    for (int bit = 0; (1 << bit) <= n; ++bit)
        if (n & (1 << bit)) letters.emplace_back(Sym{fam, bit});
    return Monomial(std::move(letters));
}

/* psi(x_n) = sum x_{n-k} (x) x_k for a divided-power family. */
TensorElement divided_coproduct(Family fam, int n)
{
    TensorElement t;
    for (int k = 0; k <= n; ++k)
        add_term(t, divided_member(fam, n - k), divided_member(fam, k), M2Element::one());
    return t;
}

TensorElement primitive_coproduct(const CircleMonomial& g)
{
    TensorElement t;
    add_term(t, Monomial{}, Monomial(g), M2Element::one());
    add_term(t, Monomial(g), Monomial{}, M2Element::one());
    return t;
}

/* psi(e_sigma) = 1 (x) e + e (x) 1 + a (e (x) e). */
TensorElement esigma_coproduct()
{
    CircleMonomial e{sym_esigma()};
    TensorElement t = primitive_coproduct(e);
    add_term(t, Monomial(e), Monomial(e), M2Element::a());
    return t;
}

/* The closed K_sigma formula:
 * psi(abar_n) = sum_{k<=n} abar_{n-k} (x) abar_k
 *             + sum_{k<n} u (e_sigma abar_{n-1-k} (x) e_sigma abar_k). */
TensorElement abar_closed_coproduct(int n)
{
    TensorElement t = divided_coproduct(Family::AlphaBar, n);
    Monomial es{CircleMonomial{sym_esigma()}};
    for (int k = 0; k <= n - 1; ++k) {
        auto left = star_product(es, divided_member(Family::AlphaBar, n - 1 - k));
        auto right = star_product(es, divided_member(Family::AlphaBar, k));
        if (left && right) add_term(t, *left, *right, M2Element::u());
    }
    return t;
}

/* psi(e0) in the exterior coordinate e0 = [0]+[1] of the group algebra. */
TensorElement e0_coproduct()
{
    CircleMonomial e{sym_e0()};
    TensorElement t = primitive_coproduct(e);
    add_term(t, Monomial(e), Monomial(e), M2Element::one());
    return t;
}

void add_generator(HopfPresentation& P, CircleMonomial g, TensorElement psi)
{
    P.coproduct_table.emplace(g, std::move(psi));
    P.generators.push_back(std::move(g));
}

HopfPresentation build_k_sigma(int max_index)
{
    HopfPresentation P;
    P.name = "K_sigma";
    add_generator(P, CircleMonomial{sym_esigma()}, esigma_coproduct());
    for (int i = 0; i <= max_index; ++i)
        add_generator(P, CircleMonomial{sym_abar(i)}, abar_closed_coproduct(1 << i));
    return P;
}

HopfPresentation build_divided(const std::string& name, Family fam, int max_index)
{
    HopfPresentation P;
    P.name = name;
    for (int i = 0; i <= max_index; ++i)
        add_generator(P, CircleMonomial{Sym{fam, i}}, divided_coproduct(fam, 1 << i));
    return P;
}

HopfPresentation build_classical_k1(int max_index)
{
    HopfPresentation P;
    P.name = "classical_K1";
    CircleMonomial e1{sym_e1()};
    add_generator(P, e1, primitive_coproduct(e1));
    for (int i = 0; i <= max_index; ++i)
        add_generator(P, CircleMonomial{sym_alpha(i)}, divided_coproduct(Family::Alpha, 1 << i));
    return P;
}

HopfPresentation build_sphere(const std::string& name, Sym cls)
{
    HopfPresentation P;
    P.name = name;
    CircleMonomial g{cls};
    add_generator(P, g, primitive_coproduct(g));
    return P;
}

HopfPresentation build_f2()
{
    HopfPresentation P;
    P.name = "F2";
    add_generator(P, CircleMonomial{sym_e0()}, e0_coproduct());
    return P;
}

/* Caruso factors for a fixed-point-free-plus-trivial V = m + (q sigma). */
std::vector<int> caruso_factor_list(BiDegree V)
{
    std::vector<int> out;
    int m = V.p - V.q;
    for (int k = 0; k <= V.q; ++k) out.push_back(m + k);
    return out;
}

HopfPresentation build_fixed_points(BiDegree V, int max_index)
{
    if (V.q <= 0) throw NameError("fixed_points requires a fixed-point-free part");
    HopfPresentation P;
    P.name = "fixed_points(" + std::to_string(V.p) + "," + std::to_string(V.q) + ")";
    for (int f : caruso_factor_list(V)) {
        if (f < 0) throw NameError("fixed_points: negative factor");
        if (f == 0) {
            add_generator(P, CircleMonomial{sym_e0()}, e0_coproduct());
            continue;
        }
        /* weakly increasing a-words of length f, indices <= max_index */
        std::vector<std::vector<int>> words;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int depth, int lo) -> void {
            if (depth == f) {
                words.push_back(cur);
                return;
            }
            for (int i = lo; i <= max_index; ++i) {
                cur.push_back(i);
                self(self, depth + 1, i);
                cur.pop_back();
            }
        };
        rec(rec, 0, 0);
        HopfCalculus calc;
        for (const auto& w : words) {
            std::vector<Sym> syms;
            for (int i : w) syms.push_back(sym_afix(i));
            CircleMonomial g(std::move(syms));
            add_generator(P, g, calc.psi_letter(g));
        }
    }
    return P;
}

}  // namespace

BiDegree parse_space(const std::string& s)
{
    /* grammar: "sigma", "rho", "<n>sigma", "sigma+<i>", "<n>" */
    if (s == "sigma") return kSigma;
    if (s == "rho") return kRho;
    auto pos = s.find("sigma");
    if (pos == std::string::npos) {
        /* plain integer: trivial representation */
        return {std::stoi(s), 0};
    }
    if (pos > 0 && s.substr(pos) == "sigma") {
        int n = std::stoi(s.substr(0, pos));
        return n * kSigma;
    }
    if (pos == 0 && s.size() > 6 && s[5] == '+') {
        int i = std::stoi(s.substr(6));
        return kSigma + BiDegree{i, 0};
    }
    throw NameError("cannot parse representation token: " + s);
}

HopfPresentation make_presentation(const std::string& name, int max_index)
{
    if (name == "K_sigma") return build_k_sigma(max_index);
    if (name == "K_Z_rho") return build_divided("K_Z_rho", Family::BetaBar, max_index);
    if (name == "classical_K1") return build_classical_k1(max_index);
    if (name == "classical_CP") return build_divided("classical_CP", Family::Beta, max_index);
    if (name == "S1") return build_sphere("S1", sym_e1());
    if (name == "S_sigma") return build_sphere("S_sigma", sym_esigma());
    if (name == "F2") return build_f2();
    if (name.rfind("fixed_points(", 0) == 0 && name.back() == ')')
        return build_fixed_points(parse_space(name.substr(13, name.size() - 14)), max_index);
    throw NameError("unknown presentation: " + name);
}

HopfPresentation make_signed_presentation(int n, int max_index, int p_cap)
{
    HopfPresentation P;
    P.name = "K_" + std::to_string(n) + "sigma";
    if (n == 0) {
        P = build_f2();
        P.name = "K_0sigma";
        return P;
    }
    if (n == 1) {
        P = build_k_sigma(max_index);
        return P;
    }
    /* circle words of length n in e_sigma and abar_(i), weakly increasing */
    std::vector<Sym> alphabet{sym_esigma()};
    for (int i = 0; i <= max_index; ++i) alphabet.push_back(sym_abar(i));
    std::vector<CircleMonomial> gens;
    std::vector<Sym> cur;
    auto rec = [&](auto&& self, int depth, std::size_t lo, int p) -> void {
        if (depth == n) {
            gens.emplace_back(cur);
            return;
        }
        for (std::size_t k = lo; k < alphabet.size(); ++k) {
            int p2 = p + alphabet[k].degree().p;
            if (p2 > p_cap) continue;
            cur.push_back(alphabet[k]);
            self(self, depth + 1, k, p2);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0, 0);
    std::sort(gens.begin(), gens.end());
    HopfCalculus calc;
    for (const auto& g : gens) add_generator(P, g, calc.psi_letter(g));
    return P;
}

HopfPresentation make_exterior_presentation(int deg)
{
    HopfPresentation P;
    P.name = "E[x" + std::to_string(deg) + "]";
    CircleMonomial g{Sym{Family::Gen, deg}};
    add_generator(P, g, primitive_coproduct(g));
    return P;
}

}  // namespace equicones

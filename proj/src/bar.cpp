#include "equicones/bar.hpp"

#include <algorithm>

namespace equicones {

std::string BarWord::label() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) s += "|";
        s += entries[i].token();
    }
    return s + "]";
}

void add_word(WordVector& v, const BarWord& w, int c)
{
    if (c % 2 == 0) return;
    auto it = v.find(w);
    if (it != v.end())
        v.erase(it);
    else
        v.emplace(w, 1);
}

WordVector bar_differential(const BarWord& w)
{
    WordVector out;
    for (std::size_t i = 0; i + 1 < w.entries.size(); ++i) {
        auto prod = star_product(w.entries[i], w.entries[i + 1]);
        if (!prod) continue;
        if (prod->is_unit()) continue;  /* degenerate */
        BarWord merged;
        merged.entries.reserve(w.entries.size() - 1);
        merged.entries.assign(w.entries.begin(), w.entries.begin() + static_cast<std::ptrdiff_t>(i));
        merged.entries.push_back(*prod);
        merged.entries.insert(merged.entries.end(),
                              w.entries.begin() + static_cast<std::ptrdiff_t>(i) + 2,
                              w.entries.end());
        add_word(out, merged);
    }
    return out;
}

BarComplexF2::BarComplexF2(const HopfPresentation& A, int s_max, int deg_max)
    : s_max_(s_max), deg_max_(deg_max)
{
    std::vector<Monomial> basis = A.reduced_basis();
    /* enumerate words of filtration s <= s_max with total degree <= deg_max */
    std::vector<Monomial> cur;
    auto rec = [&](auto&& self, int deg) -> void {
        if (!cur.empty()) {
            BarWord w{cur};
            words_[{w.filtration(), deg}].push_back(w);
        }
        if (static_cast<int>(cur.size()) == s_max_) return;
        for (const auto& m : basis) {
            int d2 = deg + 1 + m.underlying_degree();
            if (d2 > deg_max_) continue;
            cur.push_back(m);
            self(self, d2);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    for (auto& [key, ws] : words_) std::sort(ws.begin(), ws.end());
}

const std::vector<BarWord>& BarComplexF2::words_at(int s, int deg) const
{
    auto it = words_.find({s, deg});
    return it == words_.end() ? empty_ : it->second;
}

F2Matrix BarComplexF2::differential_matrix(int s, int deg) const
{
    const auto& src = words_at(s, deg);
    const auto& dst = words_at(s - 1, deg - 1);
    F2Matrix m(src.size(), dst.size());
    for (std::size_t r = 0; r < src.size(); ++r) {
        for (const auto& [w, c] : bar_differential(src[r])) {
            (void)c;
            auto it = std::lower_bound(dst.begin(), dst.end(), w);
            if (it != dst.end() && *it == w)
                m.set(r, static_cast<std::size_t>(it - dst.begin()));
        }
    }
    return m;
}

bool BarComplexF2::is_cycle(int s, int deg, const WordVector& v) const
{
    WordVector dv;
    for (const auto& [w, c] : v) {
        (void)c;
        for (const auto& [w2, c2] : bar_differential(w)) add_word(dv, w2, c2);
    }
    (void)s;
    (void)deg;
    return dv.empty();
}

bool BarComplexF2::is_boundary(int s, int deg, const WordVector& v) const
{
    const auto& dst = words_at(s, deg);
    F2Matrix img = differential_matrix(s + 1, deg + 1);
    /* rows of img live in the (s, deg) coordinates */
    std::vector<std::uint64_t> vec((dst.size() + 63) / 64, 0);
    for (const auto& [w, c] : v) {
        (void)c;
        auto it = std::lower_bound(dst.begin(), dst.end(), w);
        if (it == dst.end() || !(*it == w)) return false;
        std::size_t idx = static_cast<std::size_t>(it - dst.begin());
        vec[idx / 64] ^= std::uint64_t{1} << (idx % 64);
    }
    if (img.cols() != dst.size()) {
        /* no sources: only the zero vector is a boundary */
        bool zero = true;
        for (auto wd : vec) zero = zero && wd == 0;
        return zero;
    }
    return img.row_space_contains(vec);
}

std::string TorClass::label() const
{
    if (kind == Suspension) return "s(" + of.token() + ")";
    return "phi^(" + std::to_string(k) + ")(" + of.token() + ")";
}

SmallAlgebra truncated_polynomial(int gen_degree, int height)
{
    SmallAlgebra A;
    for (int k = 1; k < height; ++k) {
        A.degree.push_back(k * gen_degree);
        std::string l = "x";
        if (k > 1) l += "^" + std::to_string(k);
        A.label.push_back(l);
    }
    A.mult.assign(A.degree.size(), std::vector<int>(A.degree.size(), -1));
    for (int i = 1; i < height; ++i)
        for (int j = 1; j < height; ++j)
            if (i + j < height) A.mult[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = i + j - 1;
    return A;
}

std::map<std::vector<int>, int> small_bar_differential(const SmallAlgebra& A,
                                                       const std::vector<int>& word)
{
    std::map<std::vector<int>, int> out;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        int prod = A.mult[static_cast<std::size_t>(word[i])][static_cast<std::size_t>(word[i + 1])];
        if (prod < 0) continue;
        std::vector<int> merged(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i));
        merged.push_back(prod);
        merged.insert(merged.end(), word.begin() + static_cast<std::ptrdiff_t>(i) + 2, word.end());
        auto [it, inserted] = out.emplace(std::move(merged), 1);
        if (!inserted) out.erase(it);
    }
    return out;
}

std::map<std::pair<int, int>, int> tor_small(const SmallAlgebra& A, int s_max, int deg_max)
{
    /* words by (s, total degree) */
    std::map<std::pair<int, int>, std::vector<std::vector<int>>> words;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int deg) -> void {
        if (!cur.empty()) words[{static_cast<int>(cur.size()), deg}].push_back(cur);
        if (static_cast<int>(cur.size()) == s_max + 1) return;
        for (std::size_t b = 0; b < A.degree.size(); ++b) {
            int d2 = deg + 1 + A.degree[b];
            if (d2 > deg_max + 1) continue;
            cur.push_back(static_cast<int>(b));
            self(self, d2);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    for (auto& [k, ws] : words) std::sort(ws.begin(), ws.end());

    auto matrix = [&](int s, int deg) {
        auto src_it = words.find({s, deg});
        auto dst_it = words.find({s - 1, deg - 1});
        std::size_t rows = src_it == words.end() ? 0 : src_it->second.size();
        std::size_t cols = dst_it == words.end() ? 0 : dst_it->second.size();
        F2Matrix m(rows, cols);
        if (!rows || !cols) return m;
        for (std::size_t r = 0; r < rows; ++r)
            for (const auto& [w, c] : small_bar_differential(A, src_it->second[r])) {
                (void)c;
                auto it = std::lower_bound(dst_it->second.begin(), dst_it->second.end(), w);
                if (it != dst_it->second.end() && *it == w)
                    m.set(r, static_cast<std::size_t>(it - dst_it->second.begin()));
            }
        return m;
    };

    std::map<std::pair<int, int>, int> out;
    out[{0, 0}] = 1;
    for (int s = 1; s <= s_max; ++s)
        for (int deg = s; deg <= deg_max; ++deg) {
            auto it = words.find({s, deg});
            if (it == words.end()) continue;
            int n = static_cast<int>(it->second.size());
            int dim = n - static_cast<int>(matrix(s, deg).rank()) -
                      static_cast<int>(matrix(s + 1, deg + 1).rank());
            if (dim > 0) out[{s, deg}] = dim;
        }
    return out;
}

TorTable tor_f2(const HopfPresentation& A, int s_max, int deg_max)
{
    /* one extra filtration so image ranks at s_max are honest */
    BarComplexF2 C(A, s_max + 1, deg_max + 1);
    TorTable out;
    for (int s = 0; s <= s_max; ++s) {
        for (int deg = s; deg <= deg_max; ++deg) {
            int n = static_cast<int>(C.words_at(s, deg).size());
            if (s == 0) {
                if (deg == 0) out.dims[{0, 0}] = 1;
                continue;
            }
            if (n == 0) continue;
            int rank_out = static_cast<int>(C.differential_matrix(s, deg).rank());
            int rank_in = static_cast<int>(C.differential_matrix(s + 1, deg + 1).rank());
            int dim = n - rank_out - rank_in;
            if (dim > 0) out.dims[{s, deg}] = dim;
        }
    }
    /* identify suspension and transpotence witnesses among survivors */
    for (const auto& g : A.generators) {
        Monomial m{g};
        TorClass susp{TorClass::Suspension, 0, m, BarWord{{m}}, false};
        if (susp.degree() <= deg_max) {
            WordVector v;
            add_word(v, susp.witness);
            susp.survives = C.is_cycle(susp.s(), susp.degree(), v) &&
                            !C.is_boundary(susp.s(), susp.degree(), v);
            out.classes.push_back(susp);
        }
        for (int k = 1; (1 << k) <= s_max; ++k) {
            BarWord w;
            w.entries.assign(static_cast<std::size_t>(1 << k), m);
            if (w.underlying_degree() > deg_max) break;
            TorClass phi{TorClass::Transpotence, k, m, w, false};
            WordVector v;
            add_word(v, w);
            phi.survives =
                C.is_cycle(phi.s(), phi.degree(), v) && !C.is_boundary(phi.s(), phi.degree(), v);
            out.classes.push_back(phi);
        }
    }
    return out;
}

}  // namespace equicones

#include "equicones/barss.hpp"

#include <algorithm>
#include <functional>

#include "equicones/parallel.hpp"

namespace equicones {

namespace {

/* Words whose free cone meets the (p-expanded) window. Entry bidegrees in
 * every shipped presentation satisfy p >= q >= 0, so both reach conditions
 * grow monotonically along a word and pruning is safe. */
void enumerate_words(const std::vector<Monomial>& basis, int t_max, const Region& window,
                     const std::function<void(const BarWord&)>& emit)
{
    std::vector<Monomial> cur;
    auto rec = [&](auto&& self, BiDegree shift) -> void {
        if (!cur.empty()) {
            BarWord w{cur};
            if (Summand::cone(shift).reaches(window)) emit(w);
        }
        if (static_cast<int>(cur.size()) == t_max) return;
        for (const auto& m : basis) {
            BiDegree s2 = shift + m.degree() + kTrivial;  /* entry + one sphere step */
            bool pos_ok = s2.p - s2.q <= window.p_max - window.q_min;
            bool neg_ok = s2.p <= window.p_max && s2.q + 2 <= window.q_max;
            if (!pos_ok && !neg_ok) continue;
            cur.push_back(m);
            self(self, s2);
            cur.pop_back();
        }
    };
    rec(rec, BiDegree{0, 0});
}

struct AliveSummand {
    SummandRef ref;
};

std::vector<SummandRef> alive_at(const Page& page, int t, BiDegree x)
{
    std::vector<SummandRef> out;
    auto it = page.filtrations.find(t);
    if (it == page.filtrations.end()) return out;
    for (int i = 0; i < static_cast<int>(it->second.size()); ++i)
        if (it->second[static_cast<std::size_t>(i)].summand.dim_at(x) > 0)
            out.push_back({t, i});
    return out;
}

/* entry of a summand map at page bidegree x (source side) */
int map_entry(const Page& page, const SummandMap& m, BiDegree x)
{
    const PageSummand& src = page.at(m.from);
    const PageSummand& dst = page.at(m.to);
    BiDegree target = x - BiDegree{1, 0};
    if (src.summand.dim_at(x) == 0 || dst.summand.dim_at(target) == 0) return 0;
    switch (m.kind) {
        case SummandMap::ConeCone: {
            auto gen = m2_basis_at(x - src.summand.shift);
            if (!gen) return 0;
            M2Element v = m2_mul(m.coeff, M2Element::monomial(gen->negative, gen->i, gen->j));
            return v.is_zero() ? 0 : 1;
        }
        case SummandMap::TowerTower:
            return 1;
        case SummandMap::TowerCone: {
            BiDegree rel = target - dst.summand.shift;
            return (rel.p >= 0 && rel.q >= rel.p + 2) ? 1 : 0;  /* upper cone only */
        }
        case SummandMap::ConeTowerZeroed:
            return 0;
    }
    return 0;
}

F2Matrix matrix_at(const Page& page, int t, BiDegree x)
{
    std::vector<SummandRef> src = alive_at(page, t, x);
    std::vector<SummandRef> dst = alive_at(page, t - 1, x - BiDegree{1, 0});
    F2Matrix m(src.size(), dst.size());
    for (const auto& d : page.diffs) {
        if (d.from.t != t) continue;
        auto si = std::find(src.begin(), src.end(), d.from);
        if (si == src.end()) continue;
        auto di = std::find(dst.begin(), dst.end(), d.to);
        if (di == dst.end()) continue;
        if (map_entry(page, d, x))
            m.set(static_cast<std::size_t>(si - src.begin()),
                  static_cast<std::size_t>(di - dst.begin()));
    }
    return m;
}

}  // namespace

Page bar_e1_equivariant(const HopfPresentation& A, int t_max, Region region)
{
    Page page;
    page.presentation = A.name;
    page.region = region;
    page.t_max = t_max;
    page.twisted = false;
    Region window = region.grown(1);

    /* the unit cone in filtration zero */
    page.filtrations[0].push_back({Summand::cone({0, 0}, "[]"), BarWord{}, true});

    enumerate_words(A.reduced_basis(), t_max, window, [&](const BarWord& w) {
        page.filtrations[w.filtration()].push_back(
            {Summand::cone(w.shift(), w.label()), w, true});
    });
    for (auto& [t, v] : page.filtrations)
        std::sort(v.begin(), v.end(),
                  [](const PageSummand& a, const PageSummand& b) { return a.word < b.word; });

    /* truncation audit: would filtration t_max+1 reach the window? */
    bool clipped = false;
    enumerate_words(A.reduced_basis(), t_max + 1, window, [&](const BarWord& w) {
        if (w.filtration() == t_max + 1) clipped = true;
    });
    if (clipped)
        page.warnings.push_back("TruncationWarning: filtration " + std::to_string(t_max + 1) +
                                " reaches the region; E2 at t=" + std::to_string(t_max) +
                                " may be incomplete");
    return page;
}

void bar_d1(Page& page)
{
    for (auto& [t, summands] : page.filtrations) {
        if (t == 0) continue;
        auto prev = page.filtrations.find(t - 1);
        if (prev == page.filtrations.end()) continue;
        for (int i = 0; i < static_cast<int>(summands.size()); ++i) {
            const BarWord& w = summands[static_cast<std::size_t>(i)].word;
            for (const auto& [target, c] : bar_differential(w)) {
                (void)c;
                auto it = std::lower_bound(
                    prev->second.begin(), prev->second.end(), target,
                    [](const PageSummand& s, const BarWord& v) { return s.word < v; });
                if (it == prev->second.end() || !(it->word == target)) continue;
                SummandMap m;
                m.from = {t, i};
                m.to = {t - 1, static_cast<int>(it - prev->second.begin())};
                m.kind = SummandMap::ConeCone;
                m.coeff = M2Element::one();
                page.diffs.push_back(m);
            }
        }
    }
    page.r = 1;
}

DimTable page_e2_dims(const Page& page, Region region)
{
    DimTable out;
    out.region = region;
    out.warnings = page.warnings;
    out.annotations = page.annotations;
    std::vector<std::pair<int, BiDegree>> tasks;
    for (const auto& [t, summands] : page.filtrations) {
        (void)summands;
        region.for_each([&](BiDegree x) { tasks.emplace_back(t, x); });
    }
    std::vector<int> dims(tasks.size(), 0);
    parallel_for(tasks.size(), [&](std::size_t i) {
        auto [t, x] = tasks[i];
        int alive = 0;
        for (const auto& s : page.filtrations.at(t)) alive += s.summand.dim_at(x);
        if (alive == 0) return;
        int rank_out = static_cast<int>(matrix_at(page, t, x).rank());
        int rank_in = static_cast<int>(matrix_at(page, t + 1, x + BiDegree{1, 0}).rank());
        dims[i] = alive - rank_out - rank_in;
    });
    for (std::size_t i = 0; i < tasks.size(); ++i)
        if (dims[i] > 0) out.dims[{tasks[i].first, tasks[i].second}] = dims[i];
    return out;
}

std::string check_d1_squared(const Page& page, Region region)
{
    for (const auto& [t, summands] : page.filtrations) {
        (void)summands;
        std::string fail;
        region.for_each([&](BiDegree x) {
            if (!fail.empty()) return;
            /* compose (t+1 at x+1) then (t at x) */
            std::vector<SummandRef> a = alive_at(page, t + 1, x + BiDegree{1, 0});
            std::vector<SummandRef> b = alive_at(page, t, x);
            std::vector<SummandRef> c = alive_at(page, t - 1, x - BiDegree{1, 0});
            if (a.empty() || b.empty() || c.empty()) return;
            F2Matrix m1 = matrix_at(page, t + 1, x + BiDegree{1, 0});
            F2Matrix m2 = matrix_at(page, t, x);
            for (std::size_t i = 0; i < a.size(); ++i)
                for (std::size_t k = 0; k < c.size(); ++k) {
                    int sum = 0;
                    for (std::size_t j = 0; j < b.size(); ++j)
                        sum ^= (m1.get(i, j) & m2.get(j, k));
                    if (sum) {
                        fail = "d1 o d1 != 0 at t=" + std::to_string(t + 1) + " x=" +
                               to_string(x + BiDegree{1, 0});
                        return;
                    }
                }
        });
        if (!fail.empty()) return fail;
    }
    return {};
}

std::map<BarWord, M2Element> circle_on_bar_word(HopfCalculus& calc, const BarWord& w,
                                                const Monomial& k)
{
    std::map<BarWord, M2Element> out;
    auto accumulate = [&out](const BarWord& word, const M2Element& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = out.emplace(word, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    int t = w.filtration();
    if (t == 0 || k.is_unit()) {
        accumulate(w, M2Element::one());
        return out;
    }
    for (const auto& term : calc.iterated_psi(Monomial(k), t)) {
        /* slot-wise circle products, expanded multilinearly */
        std::vector<std::pair<BarWord, M2Element>> partial{{BarWord{}, term.coeff}};
        for (int i = 0; i < t && !partial.empty(); ++i) {
            Element slot = calc.circle(Monomial(w.entries[static_cast<std::size_t>(i)]),
                                       term.slots[static_cast<std::size_t>(i)]);
            std::vector<std::pair<BarWord, M2Element>> next;
            for (const auto& [pw, pc] : partial) {
                for (const auto& [m, mc] : slot) {
                    if (m.is_unit()) continue;  /* degenerate entry */
                    M2Element c = m2_mul(pc, mc);
                    if (c.is_zero()) continue;
                    BarWord nw = pw;
                    nw.entries.push_back(m);
                    next.emplace_back(std::move(nw), std::move(c));
                }
            }
            partial = std::move(next);
        }
        for (auto& [word, c] : partial) accumulate(word, c);
    }
    return out;
}

GradedModule module_from_monomials(const std::vector<Monomial>& monomials)
{
    GradedModule m;
    for (const auto& mono : monomials) m.add(Summand::cone(mono.degree(), mono.token()));
    return m;
}

CycleIdentification identify_permanent_cycles(const HopfPresentation& A, int t_max, Region region,
                                              const std::vector<CircleMonomial>& catalog)
{
    CycleIdentification out;
    /* survival analysis runs in the underlying classical complex */
    int deg_max = region.p_max + 2;
    TorTable tor = tor_f2(A, t_max, deg_max);
    for (const auto& cls : tor.classes) {
        BiDegree shift = cls.equivariant_shift();
        if (!Summand::cone(shift).reaches(region)) continue;
        if (!cls.survives) {
            out.notes.push_back(cls.label() + " does not survive to E2");
            continue;
        }
        std::vector<CircleMonomial> hits;
        for (const auto& c : catalog)
            if (c.degree() == shift && c.underlying_degree() == cls.degree()) hits.push_back(c);
        CycleMatch m{cls, std::nullopt};
        if (hits.size() == 1)
            m.match = hits.front();
        else if (hits.size() > 1)
            out.notes.push_back("ambiguous catalog match for " + cls.label());
        out.matches.push_back(std::move(m));
    }
    return out;
}

}  // namespace equicones

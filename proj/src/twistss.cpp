#include "equicones/twistss.hpp"

#include <algorithm>
#include <map>

namespace equicones {

namespace {

BarWord conjugate_word(const HopfPresentation& A, const BarWord& w)
{
    BarWord out;
    out.entries.reserve(w.entries.size());
    for (auto it = w.entries.rbegin(); it != w.entries.rend(); ++it)
        out.entries.push_back(A.conjugate(*it));
    return out;
}

}  // namespace

BiDegree twisted_sphere(int t) { return {t, (t + 1) / 2}; }

std::vector<TwistedOrbit> twisted_words(const HopfPresentation& A,
                                        const std::vector<Monomial>& basis, int t)
{
    std::vector<TwistedOrbit> out;
    if (t == 0) return out;
    double budget = 1;
    for (int i = 0; i < t; ++i) budget *= static_cast<double>(basis.size());
    if (budget > 5e6) throw std::runtime_error("twisted_words: basis too large at t=" + std::to_string(t));

    std::vector<std::size_t> idx(static_cast<std::size_t>(t), 0);
    bool done = basis.empty();
    while (!done) {
        BarWord w;
        w.entries.reserve(static_cast<std::size_t>(t));
        for (int i = 0; i < t; ++i) w.entries.push_back(basis[idx[static_cast<std::size_t>(i)]]);
        BarWord g = conjugate_word(A, w);
        if (w == g)
            out.push_back({w, true});
        else if (w < g)
            out.push_back({w, false});
        /* advance odometer */
        int pos = t - 1;
        while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == basis.size()) {
            idx[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        done = pos < 0;
    }
    std::sort(out.begin(), out.end(),
              [](const TwistedOrbit& a, const TwistedOrbit& b) { return a.rep < b.rep; });
    return out;
}

Summand orbit_summand(const HopfPresentation& A, const TwistedOrbit& orbit)
{
    (void)A;
    const auto& e = orbit.rep.entries;
    int t = orbit.rep.filtration();
    if (!orbit.fixed) {
        int p0 = t;
        for (const auto& m : e) p0 += m.underlying_degree();
        return Summand::tower(p0, orbit.rep.label());
    }
    BiDegree shift = twisted_sphere(t);
    for (int i = 0; i < t / 2; ++i)
        shift += e[static_cast<std::size_t>(i)].underlying_degree() * kRho;
    if (t % 2 == 1) shift += e[static_cast<std::size_t>(t / 2)].degree();
    return Summand::cone(shift, orbit.rep.label());
}

Page twisted_e1(const HopfPresentation& A, int t_max, Region region)
{
    Page page;
    page.presentation = A.name;
    page.region = region;
    page.t_max = t_max;
    page.twisted = true;
    Region window = region.grown(1);

    page.filtrations[0].push_back({Summand::cone({0, 0}, "[]"), BarWord{}, true});

    std::vector<Monomial> basis = A.reduced_basis();
    bool clipped = false;
    for (int t = 1; t <= t_max + 1; ++t) {
        for (const auto& orbit : twisted_words(A, basis, t)) {
            Summand s = orbit_summand(A, orbit);
            if (!s.reaches(window)) continue;
            if (t == t_max + 1) {
                clipped = true;
                continue;
            }
            page.filtrations[t].push_back({std::move(s), orbit.rep, orbit.fixed});
        }
    }
    if (clipped)
        page.warnings.push_back("TruncationWarning: filtration " + std::to_string(t_max + 1) +
                                " reaches the region; E2 at t=" + std::to_string(t_max) +
                                " may be incomplete");
    return page;
}

void twisted_d1(Page& page, const HopfPresentation& A)
{
    for (auto& [t, summands] : page.filtrations) {
        if (t == 0) continue;
        auto prev_it = page.filtrations.find(t - 1);
        if (prev_it == page.filtrations.end()) continue;
        const auto& prev = prev_it->second;
        auto find_orbit = [&](const BarWord& v) -> int {
            for (int j = 0; j < static_cast<int>(prev.size()); ++j)
                if (prev[static_cast<std::size_t>(j)].word == v) return j;
            return -1;
        };
        for (int i = 0; i < static_cast<int>(summands.size()); ++i) {
            const PageSummand& src = summands[static_cast<std::size_t>(i)];
            /* orbit-level coefficients: target orbit -> (on rep, on conjugate) */
            std::map<int, std::pair<int, int>> comps;
            std::vector<std::pair<BarWord, BarWord>> missing;  /* targets outside page */
            for (const auto& [v, c] : bar_differential(src.word)) {
                (void)c;
                BarWord gv = conjugate_word(A, v);
                BarWord rep = std::min(v, gv);
                int j = find_orbit(rep);
                if (j < 0) {
                    missing.emplace_back(src.word, v);
                    continue;
                }
                if (v == rep)
                    comps[j].first ^= 1;
                else
                    comps[j].second ^= 1;  /* v is the conjugate of the representative */
            }
            for (const auto& [j, ab] : comps) {
                const PageSummand& dst = prev[static_cast<std::size_t>(j)];
                bool src_fixed = src.fixed;
                bool dst_fixed = dst.fixed;
                SummandMap m;
                m.from = {t, i};
                m.to = {t - 1, j};
                if (src_fixed && dst_fixed) {
                    if ((ab.first & 1) == 0) continue;
                    BiDegree delta = src.summand.shift - dst.summand.shift - BiDegree{1, 0};
                    auto mult = m2_basis_at(delta);
                    if (!mult)
                        throw TemplateError("cone->cone component with no M2 monomial at " +
                                            to_string(delta) + ": " + src.word.label() + " -> " +
                                            dst.word.label());
                    m.kind = SummandMap::ConeCone;
                    m.coeff = M2Element::monomial(mult->negative, mult->i, mult->j);
                    page.diffs.push_back(m);
                } else if (src_fixed && !dst_fixed) {
                    int a = ab.first, b = ab.second;
                    if (a != b)
                        throw TemplateError("equivariance-violating cone->tower component: " +
                                            src.word.label() + " -> " + dst.word.label());
                    if (a == 0) continue;
                    m.kind = SummandMap::ConeTowerZeroed;
                    m.note = "transfer-type component zeroed";
                    page.diffs.push_back(m);
                    page.warnings.push_back("cone->tower d1 component zeroed by template: " +
                                            src.word.label() + " -> " + dst.word.label());
                } else if (!src_fixed && dst_fixed) {
                    if ((ab.first & 1) == 0) continue;
                    m.kind = SummandMap::TowerCone;
                    m.note = "norm column map (sigma-1 shifted) with hidden extension";
                    page.diffs.push_back(m);
                    bool seen = false;
                    for (const auto& an : page.annotations)
                        if (an.target == m.to) seen = true;
                    if (!seen)
                        page.annotations.push_back(Annotation{"hidden-extension", kSigma, m.to});
                } else {
                    int a = ab.first, b = ab.second;
                    if (((a ^ b) & 1) == 0) continue;  /* equal coefficients: zero on towers */
                    m.kind = SummandMap::TowerTower;
                    page.diffs.push_back(m);
                }
            }
            for (const auto& [from, to] : missing)
                page.warnings.push_back("TruncationWarning: d1 target " + to.label() +
                                        " of " + from.label() + " missing from the page");
        }
    }
    page.r = 1;
}

DimTable twisted_e2_dims(const Page& page, Region region) { return page_e2_dims(page, region); }

namespace {

/* underlying class of a summand: the fixed word, or the orbit norm w + gw */
WordVector underlying_class(const HopfPresentation& A, const PageSummand& s)
{
    WordVector v;
    add_word(v, s.word);
    if (!s.fixed) add_word(v, conjugate_word(A, s.word));
    return v;
}

enum class UnderlyingFate { Survives, Boundary, NonCycle };

UnderlyingFate fate(const BarComplexF2& C, int t, int deg, const WordVector& v)
{
    if (!C.is_cycle(t, deg, v)) return UnderlyingFate::NonCycle;
    if (C.is_boundary(t, deg, v)) return UnderlyingFate::Boundary;
    return UnderlyingFate::Survives;
}

}  // namespace

std::vector<LedgerEntry> must_die_ledger(const Page& page, const HopfPresentation& A,
                                         const GradedModule& answer)
{
    std::vector<LedgerEntry> out;
    int deg_max = 1;
    for (const auto& [t, summands] : page.filtrations) {
        (void)t;
        for (const auto& s : summands) deg_max = std::max(deg_max, s.word.underlying_degree());
    }
    BarComplexF2 C(A, page.t_max + 1, deg_max + 1);

    auto annotated_shift = [&](SummandRef ref) {
        BiDegree d = page.at(ref).summand.shift;
        for (const auto& an : page.annotations)
            if (an.target == ref) d += an.shift;
        return d;
    };

    for (const auto& [t, summands] : page.filtrations) {
        if (t == 0) continue;
        for (int i = 0; i < static_cast<int>(summands.size()); ++i) {
            const PageSummand& s = summands[static_cast<std::size_t>(i)];
            SummandRef ref{t, i};
            int deg = s.word.underlying_degree();
            UnderlyingFate f = fate(C, t, deg, underlying_class(A, s));
            if (f == UnderlyingFate::Survives) continue;

            if (!s.fixed) {
                /* towers consumed by a d1 are already accounted for */
                bool incident = false;
                for (const auto& d : page.diffs)
                    if ((d.from == ref || d.to == ref) && d.kind != SummandMap::ConeTowerZeroed)
                        incident = true;
                if (incident) continue;
                out.push_back({s.word.label(), BiDegree{s.summand.p0, 0}, t,
                               "orbit tower with no d1 whose underlying norm class dies"});
                continue;
            }

            /* a cone regenerated by a surviving tower remnant is accounted for */
            bool regenerated = false;
            for (const auto& d : page.diffs) {
                if (!(d.to == ref) || d.kind != SummandMap::TowerCone) continue;
                const PageSummand& tower = page.at(d.from);
                UnderlyingFate tf = fate(C, d.from.t, tower.word.underlying_degree(),
                                         underlying_class(A, tower));
                if (tf == UnderlyingFate::Survives) regenerated = true;
            }
            if (regenerated) continue;

            LedgerEntry e;
            e.label = s.word.label();
            e.position = annotated_shift(ref);
            e.t = t;
            e.reason = f == UnderlyingFate::Boundary
                           ? "underlying class is a d1 boundary; cone must be hit by some d_r, r>=2"
                           : "underlying class supports a differential; cone must support some d_r, r>=2";
            if (module_dim(answer, e.position) == 0) e.reason += " (no abutment class at its position)";
            out.push_back(std::move(e));
        }
    }
    return out;
}

NormCandidateResult norm_candidate(const HopfPresentation& A, const BarWord& fixed_word,
                                   const Page& page)
{
    NormCandidateResult out;
    BarWord gw = conjugate_word(A, fixed_word);
    if (!(gw == fixed_word)) {
        out.note = "word is not fixed";
        return out;
    }
    int t = fixed_word.filtration();
    if (t == 0) {
        out.note = "NoCandidate: empty word";
        return out;
    }

    /* ordered two-factor splits of a monomial into non-unit parts */
    auto splits = [](const Monomial& m) {
        std::vector<std::pair<Monomial, Monomial>> out_;
        const auto& ls = m.letters();
        std::size_t n = ls.size();
        if (n < 2) return out_;
        for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
            std::vector<CircleMonomial> u, v;
            for (std::size_t k = 0; k < n; ++k)
                ((mask >> k) & 1u ? u : v).push_back(ls[k]);
            out_.emplace_back(Monomial(std::move(u)), Monomial(std::move(v)));
        }
        return out_;
    };

    /* unfold each entry of the first half; the mirror half follows by
     * conjugation, the middle needs a c * g(c) factorization */
    std::vector<std::vector<std::pair<Monomial, Monomial>>> options;
    for (int i = 0; i < t / 2; ++i) {
        auto o = splits(fixed_word.entries[static_cast<std::size_t>(i)]);
        if (o.empty()) {
            out.note = "NoCandidate: entry " +
                       fixed_word.entries[static_cast<std::size_t>(i)].token() + " has no factorization";
            return out;
        }
        options.push_back(std::move(o));
    }
    std::vector<std::pair<Monomial, Monomial>> middle_options;
    if (t % 2 == 1) {
        const Monomial& mid = fixed_word.entries[static_cast<std::size_t>(t / 2)];
        for (const auto& [u, v] : splits(mid))
            if (A.conjugate(u) == v) middle_options.emplace_back(u, v);
        if (middle_options.empty()) {
            out.note = "NoCandidate: middle entry has no norm factorization";
            return out;
        }
    }

    /* locate the target summand and its annotated shift */
    BiDegree target_shift{};
    bool found = false;
    BiDegree annotation{0, 0};
    for (const auto& [ft, summands] : page.filtrations) {
        for (int i = 0; i < static_cast<int>(summands.size()); ++i) {
            if (!(summands[static_cast<std::size_t>(i)].word == fixed_word)) continue;
            target_shift = summands[static_cast<std::size_t>(i)].summand.shift;
            found = true;
            for (const auto& an : page.annotations)
                if (an.target == SummandRef{ft, i}) annotation += an.shift;
        }
    }
    if (!found) {
        out.note = "word not on the page";
        return out;
    }

    std::vector<std::pair<Monomial, Monomial>> chosen(options.size());
    auto emit = [&](const std::pair<Monomial, Monomial>* mid) {
        BarWord cand;
        for (const auto& [u, v] : chosen) {
            cand.entries.push_back(u);
            cand.entries.push_back(v);
        }
        if (mid) {
            cand.entries.push_back(mid->first);
            cand.entries.push_back(mid->second);
        }
        for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) {
            cand.entries.push_back(A.conjugate(it->second));
            cand.entries.push_back(A.conjugate(it->first));
        }
        Summand cone = orbit_summand(A, TwistedOrbit{cand, true});
        NormCandidate nc;
        nc.candidate = cand;
        nc.r = cand.filtration() - t;
        nc.required_shift = cone.shift - target_shift - BiDegree{1, 0};
        nc.degree_compatible = (cone.shift - (target_shift + annotation) == BiDegree{1, 0});
        out.candidates.push_back(std::move(nc));
    };
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == options.size()) {
            if (t % 2 == 1)
                for (const auto& mid : middle_options) emit(&mid);
            else
                emit(nullptr);
            return;
        }
        for (const auto& opt : options[i]) {
            chosen[i] = opt;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.candidates.begin(), out.candidates.end(),
              [](const NormCandidate& a, const NormCandidate& b) { return a.candidate < b.candidate; });
    return out;
}

}  // namespace equicones

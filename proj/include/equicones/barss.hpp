#ifndef EQUICONES_BARSS_HPP
#define EQUICONES_BARSS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "equicones/bar.hpp"
#include "equicones/graded_module.hpp"
#include "equicones/hopf_calculus.hpp"
#include "equicones/presentation.hpp"

namespace equicones {

struct SummandRef {
    int t = 0;
    int idx = 0;
    auto operator<=>(const SummandRef&) const = default;
};

struct PageSummand {
    Summand summand;
    BarWord word;          /* witness / orbit representative */
    bool fixed = true;     /* orbit type; cones are fixed, towers free */
};

struct SummandMap {
    enum Template { ConeCone, TowerTower, TowerCone, ConeTowerZeroed };
    SummandRef from, to;
    Template kind = ConeCone;
    M2Element coeff;  /* ConeCone multiplier */
    std::string note;
};

struct Annotation {
    std::string kind;  /* "hidden-extension" */
    BiDegree shift{};
    SummandRef target;
};

struct Page {
    int r = 1;
    std::string presentation;
    Region region{};
    int t_max = 0;
    std::map<int, std::vector<PageSummand>> filtrations;
    std::vector<SummandMap> diffs;
    std::vector<Annotation> annotations;
    std::vector<std::string> warnings;
    bool twisted = false;

    const PageSummand& at(SummandRef r_) const
    {
        return filtrations.at(r_.t)[static_cast<std::size_t>(r_.idx)];
    }
};

/* thrown when no summand-map template covers a nonzero d1 component */
struct TemplateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimTable {
    Region region{};
    /* (t, bidegree) -> F2 dimension; absent means zero */
    std::map<std::pair<int, BiDegree>, int> dims;
    std::vector<std::string> warnings;
    std::vector<Annotation> annotations;

    int dim(int t, BiDegree d) const
    {
        auto it = dims.find({t, d});
        return it == dims.end() ? 0 : it->second;
    }
    int total(BiDegree d) const
    {
        int n = 0;
        for (const auto& [key, v] : dims)
            if (key.second == d) n += v;
        return n;
    }
};

/* E1 of the RO(C2)-graded bar spectral sequence: one free cone per bar
 * word, shifted by (t,0) plus the entry bidegrees. */
Page bar_e1_equivariant(const HopfPresentation& A, int t_max, Region region);

/* install d1 on a bar E1 page */
void bar_d1(Page& page);

/* per-bidegree kernel/image ranks; exact inside the region */
DimTable page_e2_dims(const Page& page, Region region);

/* d1 o d1 = 0 as per-bidegree matrix products; returns a failing bidegree
 * description or empty */
std::string check_d1_squared(const Page& page, Region region);

/* (k_1|...|k_t) o k through the iterated reduced coproduct */
std::map<BarWord, M2Element> circle_on_bar_word(HopfCalculus& calc, const BarWord& w,
                                                const Monomial& k);

/* Tor-generator cycle identification against a circle-monomial catalog. */
struct CycleMatch {
    TorClass cls;
    std::optional<CircleMonomial> match;  /* empty = UNIDENTIFIED */
};

struct CycleIdentification {
    std::vector<CycleMatch> matches;
    std::vector<std::string> notes;
};

CycleIdentification identify_permanent_cycles(const HopfPresentation& A, int t_max, Region region,
                                              const std::vector<CircleMonomial>& catalog);

/* one cone per monomial, at its bidegree */
GradedModule module_from_monomials(const std::vector<Monomial>& monomials);

}  // namespace equicones

#endif

#ifndef EQUICONES_BAR_HPP
#define EQUICONES_BAR_HPP

#include <map>
#include <string>
#include <vector>

#include "equicones/f2matrix.hpp"
#include "equicones/presentation.hpp"

namespace equicones {

/* A reduced bar word [k_1|...|k_t]; entries are non-unit basis monomials. */
struct BarWord {
    std::vector<Monomial> entries;

    int filtration() const { return static_cast<int>(entries.size()); }
    int underlying_degree() const
    {
        int d = filtration();
        for (const auto& m : entries) d += m.underlying_degree();
        return d;
    }
    BiDegree shift() const
    {
        BiDegree d{filtration(), 0};
        for (const auto& m : entries) d += m.degree();
        return d;
    }
    std::string label() const;
    auto operator<=>(const BarWord&) const = default;
};

/* F2 linear combination of words. */
using WordVector = std::map<BarWord, int>;

void add_word(WordVector& v, const BarWord& w, int c = 1);

/* Reduced bar differential: sum of adjacent star products. Words acquiring
 * a unit entry are normalized away. */
WordVector bar_differential(const BarWord& w);

/* The classical F2 bar complex of the underlying algebra of A, graded by
 * (filtration s, total degree t = s + internal). */
class BarComplexF2 {
public:
    BarComplexF2(const HopfPresentation& A, int s_max, int deg_max);

    const std::vector<BarWord>& words_at(int s, int deg) const;
    /* matrix of d: (s, deg) -> (s-1, deg-1), rows = source words */
    F2Matrix differential_matrix(int s, int deg) const;

    int s_max() const { return s_max_; }
    int deg_max() const { return deg_max_; }

    /* true iff v is a boundary at (s, deg); v must be a combination of
     * words_at(s, deg). */
    bool is_boundary(int s, int deg, const WordVector& v) const;
    bool is_cycle(int s, int deg, const WordVector& v) const;

private:
    int s_max_;
    int deg_max_;
    std::map<std::pair<int, int>, std::vector<BarWord>> words_;
    std::vector<BarWord> empty_;
};

/* Tor class bookkeeping: suspensions s(x) = [x] and transpotence
 * phi^(k)(x) = [x|...|x] with 2^k entries. */
struct TorClass {
    enum Kind { Suspension, Transpotence };
    Kind kind = Suspension;
    int k = 0;  /* phi^(k); 0 for suspensions */
    Monomial of;
    BarWord witness;
    bool survives = false;

    int s() const { return witness.filtration(); }
    int degree() const { return witness.underlying_degree(); }
    BiDegree equivariant_shift() const { return witness.shift(); }
    std::string label() const;
};

struct TorTable {
    std::map<std::pair<int, int>, int> dims;  /* (s, total degree) -> dim */
    std::vector<TorClass> classes;

    int dim(int s, int deg) const
    {
        auto it = dims.find({s, deg});
        return it == dims.end() ? 0 : it->second;
    }
};

/* Homology of the bar complex over F2, with identified witnesses. */
TorTable tor_f2(const HopfPresentation& A, int s_max, int deg_max);

/* Bar homology for a finite graded F2 algebra given by an explicit
 * multiplication table on its reduced basis; covers non-exterior inputs
 * such as truncated polynomial rings. */
struct SmallAlgebra {
    std::vector<int> degree;               /* of reduced basis elements */
    std::vector<std::string> label;
    std::vector<std::vector<int>> mult;    /* basis index, or -1 for zero */
};

/* F2[x]/(x^height) with |x| = gen_degree. */
SmallAlgebra truncated_polynomial(int gen_degree, int height);

/* d of a small-algebra word, as index words over F2 */
std::map<std::vector<int>, int> small_bar_differential(const SmallAlgebra& A,
                                                       const std::vector<int>& word);

/* dims of Tor_{s,t} for the small algebra */
std::map<std::pair<int, int>, int> tor_small(const SmallAlgebra& A, int s_max, int deg_max);

}  // namespace equicones

#endif

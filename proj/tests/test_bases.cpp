#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "equicones/bar.hpp"
#include "equicones/bases.hpp"

using namespace equicones;

namespace {

CircleMonomial letter(std::initializer_list<Sym> syms) { return CircleMonomial{{syms}}; }

bool contains(const std::vector<CircleMonomial>& v, const CircleMonomial& g)
{
    for (const auto& x : v)
        if (x == g) return true;
    return false;
}

}  // namespace

TEST_CASE("gen_signed_basis: the n = 0, 1, 2 families")
{
    Region region{0, 12, 0, 8};
    auto n0 = gen_signed_basis(0, region);
    REQUIRE(n0.size() == 1);
    CHECK(n0.front().is_unit());

    auto n1 = gen_signed_basis(1, region);
    CHECK(contains(n1, letter({sym_esigma()})));
    CHECK(contains(n1, letter({sym_abar(0)})));
    CHECK(contains(n1, letter({sym_abar(1)})));
    CHECK(contains(n1, letter({sym_abar(2)})));
    for (const auto& g : n1) CHECK(g.syms().size() == 1);

    auto n2 = gen_signed_basis(2, region);
    CHECK(contains(n2, letter({sym_esigma(), sym_esigma()})));
    CHECK(contains(n2, letter({sym_esigma(), sym_abar(0)})));
    CHECK(contains(n2, letter({sym_abar(0), sym_abar(0)})));
    CHECK(contains(n2, letter({sym_abar(0), sym_abar(1)})));
    for (const auto& g : n2) CHECK(g.syms().size() == 2);
}

TEST_CASE("gen_signed_basis(1) monomials realize one class per ceil(k/2)sigma + floor(k/2)")
{
    Region region{0, 14, 0, 8};
    auto gens = gen_signed_basis(1, region);
    std::map<BiDegree, int> counts;
    for (const auto& m : exterior_monomials(gens, 14, underlying_letter_degree))
        counts[m.degree()] += 1;
    for (int k = 1; k <= 13; ++k) {
        BiDegree d{k, (k + 1) / 2};
        INFO("k = ", k);
        CHECK(counts[d] == 1);
    }
    int total = 0;
    for (const auto& [d, c] : counts) total += c;
    CHECK(total == 14);  /* unit plus one per degree ladder step */
}

TEST_CASE("gen_sigma_plus_basis(1): the K_rho generator families exactly")
{
    Region region{0, 20, 0, 10};
    auto basis = gen_sigma_plus_basis(1, region);
    /* expected: e1 o abar_(m); alpha_(i1) o abar_(m), m > i1; bbar_(t) */
    std::set<CircleMonomial> expected;
    for (int m = 0; m <= 3; ++m) {
        CircleMonomial g = letter({sym_e1(), sym_abar(m)});
        if (region.contains(g.degree())) expected.insert(g);
    }
    for (int i1 = 0; i1 <= 3; ++i1)
        for (int m = i1 + 1; m <= 3; ++m) {
            CircleMonomial g = letter({sym_alpha(i1), sym_abar(m)});
            if (region.contains(g.degree())) expected.insert(g);
        }
    for (int t = 0; t <= 3; ++t) {
        CircleMonomial g = letter({sym_bbar(t)});
        if (region.contains(g.degree())) expected.insert(g);
    }
    std::set<CircleMonomial> got(basis.generators.begin(), basis.generators.end());
    CHECK(got == expected);
    CHECK(!basis.flags.empty());  /* the empty-beta edge case is reported */
}

TEST_CASE("gen_sigma_plus_basis(2): the five K_{sigma+2} families appear")
{
    Region region{0, 24, 0, 12};
    auto basis = gen_sigma_plus_basis(2, region);
    CHECK(contains(basis.generators, letter({sym_e1(), sym_alpha(0), sym_abar(1)})));
    CHECK(contains(basis.generators, letter({sym_alpha(0), sym_alpha(1), sym_abar(2)})));
    CHECK(contains(basis.generators, letter({sym_e1(), sym_bbar(0)})));
    CHECK(contains(basis.generators, letter({sym_beta(0), sym_abar(0)})));
    CHECK(contains(basis.generators, letter({sym_alpha(0), sym_bbar(1)})));
    /* the strictness constraints hold throughout */
    for (const auto& g : basis.generators) {
        int alpha_max = -1, beta_max = -1, abar_idx = -1, bbar_idx = -1;
        for (const auto& s : g.syms()) {
            if (s.family == Family::Alpha) alpha_max = std::max(alpha_max, s.index);
            if (s.family == Family::Beta) beta_max = std::max(beta_max, s.index);
            if (s.family == Family::AlphaBar) abar_idx = s.index;
            if (s.family == Family::BetaBar) bbar_idx = s.index;
        }
        if (abar_idx >= 0) {
            CHECK(abar_idx > alpha_max);
            if (beta_max >= 0) CHECK(abar_idx >= beta_max);
        }
        if (bbar_idx >= 0) {
            CHECK(bbar_idx > alpha_max);
            if (beta_max >= 0) CHECK(bbar_idx >= beta_max);
        }
    }
}

TEST_CASE("gen_sigma_plus_basis rejects random constraint-violating sequences")
{
    Region region{0, 40, 0, 20};
    auto basis = gen_sigma_plus_basis(2, region);
    std::set<CircleMonomial> got(basis.generators.begin(), basis.generators.end());
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> idx(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
        int i1 = idx(rng), i2 = idx(rng), m = idx(rng);
        if (i1 >= i2) continue;
        CircleMonomial g = letter({sym_alpha(i1), sym_alpha(i2), sym_abar(m)});
        bool legal = m > i2;
        if (!region.contains(g.degree())) continue;
        CHECK(contains(basis.generators, g) == legal);
    }
}

TEST_CASE("gen_sigma_plus_basis(0) falls back to K_sigma generators")
{
    Region region{0, 10, 0, 6};
    auto b = gen_sigma_plus_basis(0, region);
    auto k = gen_signed_basis(1, region);
    CHECK(b.generators == k);
}

TEST_CASE("gen_rw_basis: one monomial per degree for n = 1")
{
    auto b = gen_rw_basis(1, 8);
    std::map<int, int> per_degree;
    for (const auto& m : b) per_degree[m.underlying_degree()] += 1;
    for (int d = 0; d <= 8; ++d) CHECK(per_degree[d] == 1);

    auto b0 = gen_rw_basis(0, 6);
    REQUIRE(b0.size() == 1);
    CHECK(b0.front().is_unit());
}

TEST_CASE("gen_rw_basis(2) counts agree with the iterated Tor oracle")
{
    /* dims of H_* K_2 = Tor over H_* K_1, summed over filtration */
    HopfPresentation K1 = make_presentation("classical_K1", 2);
    TorTable t = tor_f2(K1, 6, 6);
    std::map<int, int> tor_counts;
    for (const auto& [k, v] : t.dims) tor_counts[k.second] += v;

    std::map<int, int> rw_counts;
    for (const auto& m : gen_rw_basis(2, 6)) rw_counts[m.underlying_degree()] += 1;
    for (int d = 0; d <= 6; ++d) {
        INFO("degree ", d);
        CHECK(rw_counts[d] == tor_counts[d]);
    }
}

TEST_CASE("caruso_factors on the pinned examples")
{
    CHECK(caruso_factors({3, 3}) == std::vector<int>{0, 1, 2, 3});
    CHECK(caruso_factors(kSigma + BiDegree{2, 0}) == std::vector<int>{2, 3});
    CHECK(caruso_factors(kSigma) == std::vector<int>{0, 1});
    CHECK_THROWS_AS(caruso_factors({4, 0}), NotFixedPointFree);
}

TEST_CASE("gen_fixed_basis alphabet and the degMax = 0 edge")
{
    auto b = gen_fixed_basis({2, 2}, 6);
    bool has_e0 = false, has_a, has_pair;
    has_a = has_pair = false;
    for (const auto& m : b) {
        for (const auto& l : m.letters()) {
            if (l == letter({sym_e0()})) has_e0 = true;
            if (l == letter({sym_afix(1)})) has_a = true;
            if (l == letter({sym_afix(0), sym_afix(1)})) has_pair = true;
        }
    }
    CHECK(has_e0);
    CHECK(has_a);
    CHECK(has_pair);

    auto b0 = gen_fixed_basis({2, 2}, 0);
    REQUIRE(b0.size() == 2);  /* unit and e0 */
    CHECK(b0[0].is_unit());
    CHECK(b0[1] == Monomial(letter({sym_e0()})));
}

TEST_CASE("phi_e on the pinned examples")
{
    CHECK(phi_e(letter({sym_esigma(), sym_abar(0)})) == letter({sym_e1(), sym_alpha(0)}));
    CHECK(phi_e(CircleMonomial{}) == CircleMonomial{});
    CHECK(phi_e(letter({sym_e1(), sym_alpha(1), sym_abar(2)})) ==
          letter({sym_e1(), sym_alpha(1), sym_alpha(2)}));
}

TEST_CASE("phi_fixed on the pinned examples")
{
    CHECK(phi_fixed(letter({sym_esigma(), sym_abar(1)})) == letter({sym_e0(), sym_afix(1)}));
    CHECK(phi_fixed(letter({sym_esigma(), sym_esigma(), sym_esigma()})) == letter({sym_e0()}));
    CHECK(phi_fixed(letter({sym_e1(), sym_alpha(0), sym_bbar(2)})) ==
          letter({sym_e1(), sym_alpha(0), sym_afix(2)}));
}

TEST_CASE("phi maps are injective on the shipped families")
{
    Region region{0, 20, 0, 12};
    for (int n : {1, 2, 3}) {
        auto gens = gen_signed_basis(n, region);
        std::set<CircleMonomial> e_images, f_images;
        for (const auto& g : gens) {
            e_images.insert(phi_e(g));
            f_images.insert(phi_fixed(g));
        }
        CHECK(e_images.size() == gens.size());
        CHECK(f_images.size() == gens.size());
    }
    auto sp = gen_sigma_plus_basis(1, region);
    std::set<CircleMonomial> e_images, f_images;
    for (const auto& g : sp.generators) {
        e_images.insert(phi_e(g));
        f_images.insert(phi_fixed(g));
    }
    CHECK(e_images.size() == sp.generators.size());
    CHECK(f_images.size() == sp.generators.size());
}

TEST_CASE("degreewise counts: signed monomials match the RW basis, n <= 3, d <= 14")
{
    for (int n : {1, 2, 3}) {
        auto gens = signed_candidates_for_bw(n, 14);
        std::map<int, int> signed_counts;
        for (const auto& m : exterior_monomials(gens, 14, underlying_letter_degree))
            signed_counts[m.underlying_degree()] += 1;
        std::map<int, int> rw_counts;
        for (const auto& m : gen_rw_basis(n, 14)) rw_counts[m.underlying_degree()] += 1;
        for (int d = 0; d <= 14; ++d) {
            INFO("n = ", n, ", degree ", d);
            CHECK(signed_counts[d] == rw_counts[d]);
        }
    }
}

TEST_CASE("verify_bw passes for the signed and sigma-plus families")
{
    BwReport r2 = verify_bw(signed_candidates_for_bw(2, 12), {2, 2}, 12);
    INFO(r2.first_failure);
    CHECK(r2.pass);

    auto sp = gen_sigma_plus_basis(1, Region{0, 22, 0, 12});
    BwReport r1 = verify_bw(sp.generators, kSigma + BiDegree{1, 0}, 10);
    INFO(r1.first_failure);
    CHECK(r1.pass);
}

TEST_CASE("verify_bw fails at the right degree when a generator is deleted")
{
    auto gens = signed_candidates_for_bw(2, 12);
    /* delete e_sigma o abar_(0), underlying degree 3 */
    std::erase(gens, letter({sym_esigma(), sym_abar(0)}));
    BwReport rep = verify_bw(gens, {2, 2}, 12);
    CHECK(!rep.pass);
    bool mismatch_at_3 = false;
    for (const auto& l : rep.lines)
        if (!l.ok && l.degree == 3 && l.side == "underlying") mismatch_at_3 = true;
    for (const auto& l : rep.lines)
        if (!l.ok) CHECK(l.degree >= 3);  /* lower degrees unaffected */
    CHECK(mismatch_at_3);
}

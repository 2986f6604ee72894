#include "equicones/json_io.hpp"

#include <sstream>

namespace equicones {

Json to_json(BiDegree d) { return Json::array({d.p, d.q}); }

BiDegree bidegree_from_json(const Json& j) { return {j.at(0).get<int>(), j.at(1).get<int>()}; }

Json to_json(const M2Element& e)
{
    Json pos = Json::array(), neg = Json::array();
    for (const auto& t : e.terms()) (t.negative ? neg : pos).push_back(Json::array({t.i, t.j}));
    return Json{{"pos", pos}, {"neg", neg}};
}

M2Element m2_from_json(const Json& j)
{
    M2Element e;
    for (const auto& t : j.at("pos")) e.toggle({false, t.at(0).get<int>(), t.at(1).get<int>()});
    for (const auto& t : j.at("neg")) e.toggle({true, t.at(0).get<int>(), t.at(1).get<int>()});
    return e;
}

Json to_json(const Summand& s)
{
    Json j;
    j["kind"] = s.kind == Summand::FreeCone ? "cone" : "tower";
    if (s.kind == Summand::FreeCone)
        j["shift"] = to_json(s.shift);
    else
        j["p0"] = s.p0;
    j["label"] = s.label;
    return j;
}

Summand summand_from_json(const Json& j)
{
    if (j.at("kind") == "cone")
        return Summand::cone(bidegree_from_json(j.at("shift")), j.value("label", ""));
    return Summand::tower(j.at("p0").get<int>(), j.value("label", ""));
}

Json to_json(const GradedModule& m)
{
    Json arr = Json::array();
    for (const auto& s : m.summands) arr.push_back(to_json(s));
    return Json{{"summands", arr}};
}

GradedModule module_from_json(const Json& j)
{
    GradedModule m;
    for (const auto& s : j.at("summands")) m.add(summand_from_json(s));
    return m;
}

Json to_json(const HopfPresentation& p)
{
    Json gens = Json::array();
    for (const auto& g : p.generators) {
        Json jg;
        jg["name"] = g.token();
        jg["index"] = g.syms().empty() ? 0 : g.syms().front().index;
        jg["bidegree"] = to_json(g.degree());
        jg["underlying"] = g.underlying_degree();
        gens.push_back(jg);
    }
    Json cop = Json::object();
    for (const auto& g : p.generators) {
        Json terms = Json::array();
        for (const auto& [lr, c] : p.generator_coproduct(g))
            terms.push_back(Json{{"coeff", to_json(c)},
                                 {"left", lr.first.token()},
                                 {"right", lr.second.token()}});
        cop[g.token()] = terms;
    }
    return Json{{"name", p.name}, {"generators", gens}, {"mult", "exterior"}, {"coproduct", cop}};
}

HopfPresentation presentation_from_json(const Json& j)
{
    HopfPresentation p;
    p.name = j.at("name").get<std::string>();
    for (const auto& jg : j.at("generators"))
        p.generators.push_back(letter_from_token(jg.at("name").get<std::string>()));
    for (const auto& [key, terms] : j.at("coproduct").items()) {
        TensorElement t;
        for (const auto& term : terms)
            add_term(t, monomial_from_token(term.at("left").get<std::string>()),
                     monomial_from_token(term.at("right").get<std::string>()),
                     m2_from_json(term.at("coeff")));
        p.coproduct_table.emplace(letter_from_token(key), std::move(t));
    }
    return p;
}

Json to_json(const Page& page)
{
    Json j;
    j["r"] = page.r;
    j["presentation"] = page.presentation;
    j["region"] = Json::array({page.region.p_min, page.region.p_max, page.region.q_min,
                               page.region.q_max});
    Json filt = Json::object();
    for (const auto& [t, summands] : page.filtrations) {
        Json arr = Json::array();
        for (const auto& s : summands) {
            Json js = to_json(s.summand);
            if (page.twisted) js["orbit"] = s.fixed ? "fixed" : "free";
            arr.push_back(js);
        }
        filt[std::to_string(t)] = Json{{"summands", arr}};
    }
    j["filtrations"] = filt;
    Json diffs = Json::array();
    for (const auto& d : page.diffs) {
        Json jd;
        jd["from"] = page.at(d.from).summand.label;
        jd["to"] = page.at(d.to).summand.label;
        jd["coeff"] = to_json(d.kind == SummandMap::ConeCone ? d.coeff
                              : d.kind == SummandMap::ConeTowerZeroed ? M2Element::zero()
                                                                      : M2Element::one());
        switch (d.kind) {
            case SummandMap::ConeCone: jd["template"] = "cone-cone"; break;
            case SummandMap::TowerTower: jd["template"] = "tower-tower"; break;
            case SummandMap::TowerCone: jd["template"] = "tower-cone"; break;
            case SummandMap::ConeTowerZeroed: jd["template"] = "cone-tower-zeroed"; break;
        }
        if (!d.note.empty()) jd["note"] = d.note;
        diffs.push_back(jd);
    }
    j["d"] = diffs;
    if (page.twisted) {
        Json ann = Json::array();
        for (const auto& a : page.annotations)
            ann.push_back(Json{{"kind", a.kind},
                               {"shift", to_json(a.shift)},
                               {"target", page.at(a.target).summand.label}});
        j["annotations"] = ann;
    }
    if (!page.warnings.empty()) j["warnings"] = page.warnings;
    return j;
}

Json to_json(const BwReport& rep)
{
    Json lines = Json::array();
    for (const auto& l : rep.lines)
        lines.push_back(Json{{"degree", l.degree},
                             {"side", l.side},
                             {"expected", l.expected},
                             {"got", l.got},
                             {"status", l.ok ? "ok" : "mismatch"}});
    Json j{{"pass", rep.pass}, {"lines", lines}};
    if (!rep.first_failure.empty()) j["first_failure"] = rep.first_failure;
    return j;
}

Json basis_to_json(const std::vector<CircleMonomial>& gens)
{
    Json arr = Json::array();
    for (const auto& g : gens) {
        Json factors = Json::array();
        for (const auto& s : g.syms()) factors.push_back(s.token());
        arr.push_back(Json{{"factors", factors}, {"bidegree", to_json(g.degree())}});
    }
    return arr;
}

Json basis_to_json(const std::vector<Monomial>& monomials)
{
    Json arr = Json::array();
    for (const auto& m : monomials) {
        Json factors = Json::array();
        for (const auto& l : m.letters()) factors.push_back(l.token());
        arr.push_back(Json{{"factors", factors}, {"bidegree", to_json(m.degree())}});
    }
    return arr;
}

Json to_json(const TorTable& t)
{
    Json dims = Json::array();
    for (const auto& [key, v] : t.dims)
        dims.push_back(Json{{"s", key.first}, {"degree", key.second}, {"dim", v}});
    Json classes = Json::array();
    for (const auto& c : t.classes)
        classes.push_back(Json{{"label", c.label()},
                               {"witness", c.witness.label()},
                               {"s", c.s()},
                               {"degree", c.degree()},
                               {"survives", c.survives}});
    return Json{{"dims", dims}, {"classes", classes}};
}

Json to_json(const std::vector<LedgerEntry>& ledger)
{
    Json arr = Json::array();
    for (const auto& e : ledger)
        arr.push_back(Json{{"label", e.label},
                           {"position", to_json(e.position)},
                           {"t", e.t},
                           {"reason", e.reason}});
    return arr;
}

Json to_json(const NormCandidateResult& r)
{
    Json arr = Json::array();
    for (const auto& c : r.candidates)
        arr.push_back(Json{{"candidate", c.candidate.label()},
                           {"r", c.r},
                           {"required_shift", to_json(c.required_shift)},
                           {"degree_compatible", c.degree_compatible}});
    Json j{{"candidates", arr}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

std::string dims_to_csv(const DimTable& t)
{
    std::ostringstream out;
    out << "p,q,t,dim\n";
    /* sorted by (p, q, t) */
    std::map<std::tuple<int, int, int>, int> sorted;
    for (const auto& [key, v] : t.dims)
        sorted[{key.second.p, key.second.q, key.first}] = v;
    for (const auto& [key, v] : sorted)
        out << std::get<0>(key) << "," << std::get<1>(key) << "," << std::get<2>(key) << "," << v
            << "\n";
    return out.str();
}

Sym sym_from_token(const std::string& tok)
{
    auto num = [&](std::size_t at) { return std::stoi(tok.substr(at)); };
    if (tok == "e2s") return sym_e2sigma();
    if (tok == "e0") return sym_e0();
    if (tok == "e1") return sym_e1();
    if (tok == "e2") return sym_e2();
    if (tok == "es") return sym_esigma();
    if (tok.rfind("ab", 0) == 0) return sym_abar(num(2));
    if (tok.rfind("bb", 0) == 0) return sym_bbar(num(2));
    if (tok.rfind("xb", 0) == 0) return sym_xbar(num(2));
    if (tok.rfind("af", 0) == 0) return sym_afix(num(2));
    if (tok[0] == 'a') return sym_alpha(num(1));
    if (tok[0] == 'b') return sym_beta(num(1));
    if (tok[0] == 'x') return Sym{Family::Gen, num(1)};
    throw NameError("bad symbol token: " + tok);
}

CircleMonomial letter_from_token(const std::string& tok)
{
    if (tok == "1") return {};
    std::vector<Sym> syms;
    std::size_t start = 0;
    while (start < tok.size()) {
        std::size_t dot = tok.find('.', start);
        if (dot == std::string::npos) dot = tok.size();
        syms.push_back(sym_from_token(tok.substr(start, dot - start)));
        start = dot + 1;
    }
    return CircleMonomial(std::move(syms));
}

Monomial monomial_from_token(const std::string& tok)
{
    if (tok == "1") return {};
    std::vector<CircleMonomial> letters;
    std::size_t start = 0;
    while (start < tok.size()) {
        std::size_t star = tok.find('*', start);
        if (star == std::string::npos) star = tok.size();
        letters.push_back(letter_from_token(tok.substr(start, star - start)));
        start = star + 1;
    }
    return Monomial(std::move(letters));
}

}  // namespace equicones

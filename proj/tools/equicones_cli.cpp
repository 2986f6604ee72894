#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "equicones/chart.hpp"
#include "equicones/json_io.hpp"

using namespace equicones;

namespace {

Region parse_region(const std::string& s)
{
    Region r;
    if (std::sscanf(s.c_str(), "%d:%d:%d:%d", &r.p_min, &r.p_max, &r.q_min, &r.q_max) != 4)
        throw CLI::ValidationError("--region", "expected pMin:pMax:qMin:qMax");
    if (r.p_min > r.p_max || r.q_min > r.q_max)
        throw CLI::ValidationError("--region", "empty region");
    return r;
}

void write_out(const std::string& path, const std::string& content)
{
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    f << content;
}

HopfPresentation load_presentation(const std::string& name, int max_index, int p_cap)
{
    if (name.rfind("K_", 0) == 0 && name.find("sigma") != std::string::npos && name != "K_sigma") {
        /* K_<n>sigma derived presentations */
        int n = std::stoi(name.substr(2, name.find("sigma") - 2));
        return make_signed_presentation(n, max_index, p_cap);
    }
    return make_presentation(name, max_index);
}

/* known abutments for the must-die analysis */
GradedModule expected_abutment(const std::string& pres, Region region)
{
    std::vector<CircleMonomial> gens;
    if (pres == "K_sigma") {
        gens = gen_signed_basis(2, Region{0, region.p_max + 2, 0, region.q_max + 2});
    } else if (pres == "F2") {
        gens = gen_signed_basis(1, Region{0, region.p_max + 2, 0, region.q_max + 2});
    } else if (pres == "S_sigma") {
        gens.emplace_back(sym_e2sigma());
        for (int j = 0; (4 << j) <= region.p_max + 2; ++j) gens.emplace_back(sym_xbar(j));
    }
    GradedModule m;
    for (const auto& mono : exterior_monomials(gens, region.p_max + 2, underlying_letter_degree))
        m.add(Summand::cone(mono.degree(), mono.token()));
    return m;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"equicones: exact RO(C2)-graded Hopf-ring and bar spectral sequence engine"};
    app.require_subcommand(1);

    std::string presentation = "K_sigma", region_str = "0:12:-4:12", format = "json", out_path,
                space = "2sigma", input_path;
    int t_max = 6, deg_max = 12, s_max = 6, max_index = 3, gen_degree = 0, p_max = 12;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--region", region_str, "pMin:pMax:qMin:qMax");
        cmd->add_option("--format", format, "json|csv|ascii|svg");
        cmd->add_option("--out", out_path, "output path (default stdout)");
    };

    auto* tor_cmd = app.add_subcommand("tor", "classical bar homology Tor over F2");
    tor_cmd->add_option("--presentation", presentation, "presentation name");
    tor_cmd->add_option("--gen-degree", gen_degree, "use E[x] with |x| = d instead");
    tor_cmd->add_option("--smax", s_max, "max homological degree");
    tor_cmd->add_option("--degmax", deg_max, "max total degree");
    tor_cmd->add_option("--max-index", max_index, "generator family truncation");
    add_common(tor_cmd);

    auto* bar_cmd = app.add_subcommand("barss", "RO(C2)-graded bar spectral sequence E1/E2");
    bar_cmd->add_option("--presentation", presentation, "presentation name");
    bar_cmd->add_option("--tmax", t_max, "max filtration")->check(CLI::Range(0, 16));
    bar_cmd->add_option("--max-index", max_index, "generator family truncation");
    add_common(bar_cmd);

    auto* tw_cmd = app.add_subcommand("twistss", "twisted bar spectral sequence");
    tw_cmd->add_option("--presentation", presentation, "presentation name");
    tw_cmd->add_option("--tmax", t_max, "max filtration")->check(CLI::Range(0, 16));
    tw_cmd->add_option("--max-index", max_index, "generator family truncation");
    add_common(tw_cmd);

    auto* basis_cmd = app.add_subcommand("basis", "generator/basis enumeration");
    basis_cmd->add_option("--space", space, "nsigma | sigma+i | integer n");
    basis_cmd->add_option("--degmax", deg_max, "degree bound");
    add_common(basis_cmd);

    auto* bw_cmd = app.add_subcommand("verify-bw", "Behrens-Wilson basis verification");
    bw_cmd->add_option("--space", space, "nsigma | sigma+i");
    bw_cmd->add_option("--degmax", deg_max, "degree bound");
    add_common(bw_cmd);

    auto* ax_cmd = app.add_subcommand("axioms", "Hopf presentation axiom suite");
    ax_cmd->add_option("--presentation", presentation, "presentation name");
    ax_cmd->add_option("--pmax", p_max, "topological degree bound");
    ax_cmd->add_option("--max-index", max_index, "generator family truncation");
    add_common(ax_cmd);

    auto* chart_cmd = app.add_subcommand("chart", "bigraded chart emission");
    chart_cmd->add_option("--input", input_path, "page or module JSON")->required();
    add_common(chart_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        Region region = parse_region(region_str);

        if (*tor_cmd) {
            HopfPresentation A = gen_degree > 0 ? make_exterior_presentation(gen_degree)
                                                : load_presentation(presentation, max_index, 64);
            TorTable t = tor_f2(A, s_max, deg_max);
            if (format == "csv") {
                std::ostringstream csv;
                csv << "s,degree,dim\n";
                for (const auto& [k, v] : t.dims)
                    csv << k.first << "," << k.second << "," << v << "\n";
                write_out(out_path, csv.str());
            } else {
                write_out(out_path, to_json(t).dump(2) + "\n");
            }
            return 0;
        }

        if (*bar_cmd || *tw_cmd) {
            HopfPresentation A = load_presentation(presentation, max_index, region.p_max + 2);
            Page page;
            if (*bar_cmd) {
                page = bar_e1_equivariant(A, t_max, region);
                bar_d1(page);
            } else {
                page = twisted_e1(A, t_max, region);
                twisted_d1(page, A);
            }
            for (const auto& w : page.warnings) std::cerr << w << "\n";
            DimTable e2 = page_e2_dims(page, region);
            if (format == "csv") {
                write_out(out_path, dims_to_csv(e2));
            } else if (format == "ascii") {
                write_out(out_path, ascii_chart(page_module(page), region, page_arrows(page)));
            } else if (format == "svg") {
                Json src = to_json(page);
                write_out(out_path,
                          svg_chart(page_module(page), region, src.dump(), page_arrows(page)));
            } else {
                Json doc;
                doc["e1"] = to_json(page);
                Json dims = Json::array();
                for (const auto& [k, v] : e2.dims)
                    dims.push_back(Json{{"t", k.first}, {"bidegree", to_json(k.second)}, {"dim", v}});
                doc["e2"] = dims;
                if (*tw_cmd) {
                    GradedModule answer = expected_abutment(presentation, region);
                    auto ledger = must_die_ledger(page, A, answer);
                    doc["must_die"] = to_json(ledger);
                    Json norms = Json::array();
                    for (const auto& entry : ledger) {
                        for (const auto& [t, summands] : page.filtrations) {
                            (void)t;
                            for (const auto& s : summands) {
                                if (s.summand.label != entry.label || !s.fixed) continue;
                                Json n = to_json(norm_candidate(A, s.word, page));
                                n["word"] = entry.label;
                                norms.push_back(n);
                            }
                        }
                    }
                    doc["norm_candidates"] = norms;
                }
                write_out(out_path, doc.dump(2) + "\n");
            }
            return 0;
        }

        if (*basis_cmd) {
            Json j;
            BiDegree V = parse_space(space);
            if (V.q == 0) {
                j = basis_to_json(gen_rw_basis(V.p, deg_max));
            } else if (V.p == V.q) {
                j = basis_to_json(gen_signed_basis(V.q, Region{0, deg_max, 0, deg_max}));
            } else if (V.q == 1) {
                auto b = gen_sigma_plus_basis(V.p - 1, Region{0, deg_max, 0, deg_max});
                j = Json{{"generators", basis_to_json(b.generators)}, {"flags", b.flags}};
            } else {
                throw NameError("basis: unsupported space " + space);
            }
            write_out(out_path, j.dump(2) + "\n");
            return 0;
        }

        if (*bw_cmd) {
            BiDegree V = parse_space(space);
            std::vector<CircleMonomial> candidates;
            if (V.p == V.q)
                candidates = signed_candidates_for_bw(V.q, deg_max);
            else if (V.q == 1)
                candidates = gen_sigma_plus_basis(V.p - 1,
                                                  Region{0, V.p + 2 * deg_max, 0, V.p + deg_max})
                                 .generators;
            else
                throw NameError("verify-bw: unsupported space " + space);
            BwReport rep = verify_bw(candidates, V, deg_max);
            write_out(out_path, to_json(rep).dump(2) + "\n");
            std::cerr << (rep.pass ? "PASS" : "FAIL: " + rep.first_failure) << "\n";
            return rep.pass ? 0 : 2;
        }

        if (*ax_cmd) {
            HopfPresentation A = load_presentation(presentation, max_index, p_max + 2);
            AxiomReport rep = verify_hopf_axioms(A, p_max);
            Json j{{"pass", rep.pass}, {"checks", rep.checks}};
            if (!rep.failure.empty()) j["failure"] = rep.failure;
            write_out(out_path, j.dump(2) + "\n");
            std::cerr << (rep.pass ? "PASS" : "FAIL: " + rep.failure) << "\n";
            return rep.pass ? 0 : 2;
        }

        if (*chart_cmd) {
            std::ifstream f(input_path);
            if (!f) throw NameError("cannot open " + input_path);
            Json doc = Json::parse(f);
            GradedModule m;
            std::vector<ChartArrow> arrows;
            if (doc.contains("filtrations")) {
                std::map<std::string, BiDegree> positions;
                for (const auto& [t, jm] : doc.at("filtrations").items()) {
                    (void)t;
                    for (const auto& js : jm.at("summands")) {
                        Summand s = summand_from_json(js);
                        positions[s.label] = s.kind == Summand::FreeCone ? s.shift
                                                                         : BiDegree{s.p0, 0};
                        m.add(std::move(s));
                    }
                }
                for (const auto& jd : doc.at("d")) {
                    if (jd.value("template", "") == "cone-tower-zeroed") continue;
                    std::string from = jd.at("from"), to = jd.at("to");
                    if (positions.count(from) && positions.count(to))
                        arrows.push_back({positions[from], positions[to], "d1 " + from + "->" + to});
                }
                if (doc.contains("region")) {
                    const auto& r = doc.at("region");
                    region = Region{r.at(0), r.at(1), r.at(2), r.at(3)};
                }
            } else {
                m = module_from_json(doc);
            }
            if (format == "svg")
                write_out(out_path, svg_chart(m, region, doc.dump(), arrows));
            else
                write_out(out_path, ascii_chart(m, region, arrows));
            return 0;
        }
    } catch (const NameError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const NotFixedPointFree& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

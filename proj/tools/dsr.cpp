// Command-line front end: graph construction, spectral queries,
// matching/factor queries, exact charpolys, and the verification harness.
//
// Exit codes: 0 all good / all checks pass, 1 at least one check failed,
// 2 inconclusive outcomes but no failure, 3 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dsr/connectivity.hpp"
#include "dsr/factor.hpp"
#include "dsr/families.hpp"
#include "dsr/forms.hpp"
#include "dsr/graph6.hpp"
#include "dsr/harness.hpp"
#include "dsr/matching.hpp"
#include "dsr/matrix.hpp"
#include "dsr/report.hpp"

using namespace dsr;

namespace {

std::vector<int> parse_int_list(const std::string& text, char sep) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

Partition parse_partition(const std::string& text, int order) {
    std::vector<VertexSet> classes;
    std::stringstream ss(text);
    std::string cls;
    while (std::getline(ss, cls, ';')) {
        VertexSet v;
        for (int x : parse_int_list(cls, ',')) v.add(x);
        classes.push_back(v);
    }
    return Partition::of(std::move(classes), order);
}

void print_reports(const CheckResult& res, const Config& cfg) {
    std::cout << "# eps_cmp=" << format_double(cfg.eps_cmp)
              << " power_tol=" << format_double(cfg.power_tol) << " seed=" << cfg.seed << "\n";
    for (const auto& r : res.reports) {
        std::cout << '[' << outcome_name(r.outcome) << (r.asserted ? "" : "/recorded") << "] "
                  << r.check << ' ' << r.params;
        if (r.margin != 0.0) std::cout << " margin=" << format_double(r.margin);
        if (!r.witness.empty()) std::cout << "  " << r.witness;
        std::cout << "\n";
    }
    int pass = 0, fail = 0, inc = 0, adv = 0;
    for (const auto& r : res.reports) {
        if (!r.asserted) { ++adv; continue; }
        if (r.outcome == Outcome::pass) ++pass;
        else if (r.outcome == Outcome::fail) ++fail;
        else ++inc;
    }
    std::cout << "# pass=" << pass << " fail=" << fail << " inconclusive=" << inc
              << " recorded=" << adv << "\n";
}

int emit_and_exit(CheckResult res, const Config& cfg, const std::string& json_path,
                  const std::string& csv_path) {
    sort_results(res);
    print_reports(res, cfg);
    if (!json_path.empty()) {
        std::ofstream os(json_path, std::ios::binary);
        if (!os) {
            std::cerr << "cannot open " << json_path << "\n";
            return 3;
        }
        write_json(os, res, cfg);
    }
    if (!csv_path.empty()) {
        std::ofstream os(csv_path, std::ios::binary);
        if (!os) {
            std::cerr << "cannot open " << csv_path << "\n";
            return 3;
        }
        write_csv(os, res);
    }
    return exit_code(res);
}

FamilyParams params_from_flags(const std::string& variant, int n, int s, int k, int b,
                               int delta) {
    if (variant == "matching") return FamilyParams::matching(n, s, k);
    if (variant == "odd-factor" || variant == "odd_factor")
        return FamilyParams::odd_factor(n, s, b);
    if (variant == "case31") return FamilyParams::case31(n, b, delta);
    if (variant == "case32") return FamilyParams::case32(n, s, b, delta);
    if (variant == "case3")
        return s == 1 ? FamilyParams::case31(n, b, delta)
                      : FamilyParams::case32(n, s, b, delta);
    throw std::invalid_argument("unknown variant: " + variant);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"distance-spectral workbench for matching and odd-factor extremal families"};
    app.require_subcommand(1);

    Config cfg;
    std::string config_path, json_path, csv_path;
    app.add_option("--config", config_path, "JSON config file (flags win)");
    auto* opt_eps = app.add_option("--eps-cmp", cfg.eps_cmp, "strict-comparison margin");
    auto* opt_ptol = app.add_option("--power-tol", cfg.power_tol, "power-iteration tolerance");
    auto* opt_seed = app.add_option("--seed", cfg.seed, "RNG seed for randomized grids");
    auto* opt_thr = app.add_option("--threads", cfg.threads, "OpenMP thread count (0 = default)");
    auto* opt_par = app.add_flag("--serial", "disable parallel scans");

    // graph ------------------------------------------------------------
    auto* graph = app.add_subcommand("graph", "build, parse, inspect graphs");
    graph->require_subcommand(1);

    auto* gbuild = graph->add_subcommand("build", "construct a named graph, print graph6");
    std::string g_family = "complete", g_parts;
    int g_n = 0, g_s = 1, g_k = 2, g_b = 1, g_delta = 3;
    gbuild->add_option("--family", g_family,
                       "complete|empty|matching|odd-factor|case3|join-cliques");
    gbuild->add_option("--n", g_n);
    gbuild->add_option("--s", g_s);
    gbuild->add_option("--k", g_k);
    gbuild->add_option("--b", g_b);
    gbuild->add_option("--delta", g_delta);
    gbuild->add_option("--parts", g_parts, "comma-separated clique orders (join-cliques)");

    auto* gparse = graph->add_subcommand("parse", "validate a graph6 string and re-encode it");
    std::string gparse_text;
    gparse->add_option("graph6", gparse_text)->required();

    auto* ginfo = graph->add_subcommand("info", "order, size, degrees, connectivity");
    std::string ginfo_text;
    ginfo->add_option("graph6", ginfo_text)->required();

    // spectral -----------------------------------------------------------
    auto* spectral = app.add_subcommand("spectral", "distance-spectral queries");
    spectral->require_subcommand(1);
    auto* sradius = spectral->add_subcommand("radius", "distance spectral radius");
    std::string sradius_text;
    sradius->add_option("graph6", sradius_text)->required();
    auto* squot = spectral->add_subcommand("quotient", "quotient matrix over a partition");
    std::string squot_text, squot_partition;
    squot->add_option("graph6", squot_text)->required();
    squot->add_option("--partition", squot_partition, "classes 'v,v,...;v,...'")->required();

    // forms ---------------------------------------------------------------
    auto* forms = app.add_subcommand("forms", "exact characteristic cubics");
    forms->require_subcommand(1);
    std::string f_variant;
    int f_n = 0, f_s = 1, f_k = 2, f_b = 1, f_delta = 3;
    for (auto* sub : {forms->add_subcommand("charpoly", "coefficients as JSON rationals"),
                      forms->add_subcommand("root", "largest root of the cubic")}) {
        sub->add_option("--variant", f_variant, "matching|odd-factor|case31|case32")->required();
        sub->add_option("--n", f_n)->required();
        sub->add_option("--s", f_s);
        sub->add_option("--k", f_k);
        sub->add_option("--b", f_b);
        sub->add_option("--delta", f_delta);
    }

    // matching -------------------------------------------------------------
    auto* match = app.add_subcommand("matching", "matching number and deficiency");
    match->require_subcommand(1);
    auto* malpha = match->add_subcommand("alpha", "maximum matching size");
    std::string malpha_text;
    malpha->add_option("graph6", malpha_text)->required();
    auto* mdef = match->add_subcommand("deficiency", "max of o(G-S)-|S| over all S");
    std::string mdef_text;
    bool mdef_witness = false;
    mdef->add_option("graph6", mdef_text)->required();
    mdef->add_flag("--witness", mdef_witness, "print the maximizing S");

    // factor ----------------------------------------------------------------
    auto* factor = app.add_subcommand("factor", "odd [1,b]-factor existence");
    auto* fcheck = factor->add_subcommand("check", "criterion check, optional construction");
    std::string fcheck_text;
    int fcheck_b = 1;
    bool fcheck_construct = false;
    fcheck->add_option("graph6", fcheck_text)->required();
    fcheck->add_option("--b", fcheck_b, "odd degree bound")->required();
    fcheck->add_flag("--construct", fcheck_construct, "also build an explicit factor");

    // verify ------------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run the verification harness");
    verify->require_subcommand(1);
    verify->fallthrough();
    verify->add_option("--json", json_path, "write the JSON report here");
    verify->add_option("--csv", csv_path, "write the sweep CSV here");
    auto* vall = verify->add_subcommand("all", "every check at desk-scale defaults");
    auto* vlemma = verify->add_subcommand("lemma", "one statement by id (e.g. 2.5, 3.3)");
    auto* vtheorem = verify->add_subcommand("theorem", "one statement by id (e.g. 3.2, 4.1)");
    std::string v_id;
    int v_nmax = -1, v_n = -1, v_k = -1, v_t = -1, v_b = -1, v_delta = -1;
    int v_nlo = -1, v_nhi = -1, v_samples = -1;
    for (auto* sub : {vlemma, vtheorem}) {
        sub->add_option("id", v_id)->required();
        sub->add_option("--nmax", v_nmax, "exhaustive order cap");
        sub->add_option("--n", v_n);
        sub->add_option("--k", v_k);
        sub->add_option("--t", v_t);
        sub->add_option("--b", v_b);
        sub->add_option("--delta", v_delta);
        sub->add_option("--n-lo", v_nlo);
        sub->add_option("--n-hi", v_nhi);
        sub->add_option("--samples", v_samples);
    }
    auto* vsweep = verify->add_subcommand("sweep", "radius-comparison sweeps (CSV-oriented)");
    std::string sw_variant = "matching", sw_blist = "1";
    int sw_k = 2, sw_t = 1, sw_delta = 3, sw_nlo = 18, sw_nhi = 48;
    vsweep->add_option("--variant", sw_variant, "matching|odd-factor");
    vsweep->add_option("--k", sw_k);
    vsweep->add_option("--t", sw_t);
    vsweep->add_option("--delta", sw_delta);
    vsweep->add_option("--b-list", sw_blist, "comma-separated odd b values");
    vsweep->add_option("--n-lo", sw_nlo);
    vsweep->add_option("--n-hi", sw_nhi);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        // config file first, then flags that were actually given
        if (!config_path.empty()) {
            std::ifstream is(config_path);
            if (!is) throw std::invalid_argument("cannot open config file " + config_path);
            nlohmann::json j = nlohmann::json::parse(is);
            Config file_cfg;
            file_cfg.eps_cmp = j.value("eps_cmp", file_cfg.eps_cmp);
            file_cfg.power_tol = j.value("power_tol", file_cfg.power_tol);
            file_cfg.power_iteration_cap =
                j.value("power_iteration_cap", file_cfg.power_iteration_cap);
            file_cfg.seed = j.value("seed", file_cfg.seed);
            file_cfg.threads = j.value("threads", file_cfg.threads);
            file_cfg.parallel = j.value("parallel", file_cfg.parallel);
            if (!opt_eps->count()) cfg.eps_cmp = file_cfg.eps_cmp;
            if (!opt_ptol->count()) cfg.power_tol = file_cfg.power_tol;
            if (!opt_seed->count()) cfg.seed = file_cfg.seed;
            if (!opt_thr->count()) cfg.threads = file_cfg.threads;
            cfg.power_iteration_cap = file_cfg.power_iteration_cap;
            if (!opt_par->count()) cfg.parallel = file_cfg.parallel;
        }
        if (opt_par->count()) cfg.parallel = false;
        cfg.validate();

        if (gbuild->parsed()) {
            Graph g;
            if (g_family == "complete") g = complete(g_n);
            else if (g_family == "empty") g = empty_graph(g_n);
            else if (g_family == "join-cliques")
                g = join_of_cliques(g_s, parse_int_list(g_parts, ','));
            else if (g_family == "matching") g = family_matching(g_n, g_s, g_k).graph;
            else if (g_family == "odd-factor") g = family_odd_factor(g_n, g_s, g_b).graph;
            else if (g_family == "case3") g = family_case3(g_n, g_s, g_b, g_delta).graph;
            else throw std::invalid_argument("unknown family: " + g_family);
            std::cout << write_graph6(g) << "\n";
            return 0;
        }
        if (gparse->parsed()) {
            Graph g = parse_graph6(gparse_text);
            std::cout << write_graph6(g) << "\n";
            std::cout << "n=" << g.order() << " m=" << g.edge_count() << "\n";
            return 0;
        }
        if (ginfo->parsed()) {
            Graph g = parse_graph6(ginfo_text);
            std::cout << "n=" << g.order() << " m=" << g.edge_count()
                      << " min_degree=" << (g.order() ? min_degree(g) : 0)
                      << " connected=" << (is_connected(g) ? "yes" : "no")
                      << " kappa=" << vertex_connectivity(g) << "\n";
            return 0;
        }
        if (sradius->parsed()) {
            Graph g = parse_graph6(sradius_text);
            double mu = perron_radius(distance_matrix(g), cfg.power_tol,
                                      cfg.power_iteration_cap);
            std::cout << format_double(mu) << " (power_tol=" << format_double(cfg.power_tol)
                      << ")\n";
            return 0;
        }
        if (squot->parsed()) {
            Graph g = parse_graph6(squot_text);
            SquareMatrix d = distance_matrix(g);
            Partition part = parse_partition(squot_partition, g.order());
            QuotientResult qr = quotient_matrix(d, part);
            std::cout << "equitable=" << (qr.equitable ? "yes" : "no") << "\n";
            for (int i = 0; i < qr.q.order(); ++i) {
                for (int j = 0; j < qr.q.order(); ++j)
                    std::cout << (j ? " " : "") << format_double(qr.q.at(i, j));
                std::cout << "\n";
            }
            if (qr.equitable) {
                if (qr.q.order() == 3) {
                    // integer entries; exact cubic route
                    RationalMatrix3 m3;
                    for (int i = 0; i < 3; ++i)
                        for (int j = 0; j < 3; ++j)
                            m3.at(i, j) = Rational{static_cast<long long>(qr.q.at(i, j))};
                    double rho = largest_root(charpoly3(m3), -1.0, 1.0 + qr.q.max_abs_row_sum());
                    std::cout << "radius=" << format_double(rho) << " (abs_tol=1e-10)\n";
                } else {
                    double rho = perron_radius(qr.q, cfg.power_tol, cfg.power_iteration_cap);
                    std::cout << "radius=" << format_double(rho)
                              << " (power_tol=" << format_double(cfg.power_tol) << ")\n";
                }
            }
            return 0;
        }
        if (forms->parsed()) {
            FamilyParams p = params_from_flags(f_variant, f_n, f_s, f_k, f_b, f_delta);
            Cubic c = family_charpoly(p);
            bool want_root = forms->get_subcommands().front()->get_name() == "root";
            if (want_root) {
                std::cout << format_double(family_mu(p)) << " (abs_tol=1e-10)\n";
            } else {
                nlohmann::json j;
                j["variant"] = f_variant;
                j["c3"] = "1";
                j["c2"] = c.c2.str();
                j["c1"] = c.c1.str();
                j["c0"] = c.c0.str();
                std::cout << j.dump() << "\n";
            }
            return 0;
        }
        if (malpha->parsed()) {
            Graph g = parse_graph6(malpha_text);
            std::cout << matching_number(g) << "\n";
            return 0;
        }
        if (mdef->parsed()) {
            Graph g = parse_graph6(mdef_text);
            Deficiency d = berge_tutte(g);
            std::cout << "deficiency=" << d.value
                      << " alpha=" << matching_number_from_deficiency(g, d);
            if (mdef_witness) {
                std::cout << " S={";
                bool first = true;
                for (int v : d.witness.to_vector()) {
                    std::cout << (first ? "" : ",") << v;
                    first = false;
                }
                std::cout << "}";
            }
            std::cout << "\n";
            return 0;
        }
        if (fcheck->parsed()) {
            Graph g = parse_graph6(fcheck_text);
            FactorResult r;
            if (g.order() <= 24) {
                r = amahashi_check(g, fcheck_b);
            } else if (fcheck_b == 1) {
                // perfect-matching case: blossom verdict, deficiency witness
                // from the Gallai-Edmonds sets
                if (g.order() % 2 == 0 && has_perfect_matching(g)) {
                    r = FactorResult{true, {}, VertexSet{}};
                } else {
                    r = FactorResult{false, {}, gallai_edmonds_witness(g).witness};
                }
            } else {
                throw std::invalid_argument(
                    "factor check beyond 24 vertices supports --b 1 only");
            }
            if (r.exists) {
                std::cout << "verdict=exists\n";
                if (fcheck_construct) {
                    if (fcheck_b == 1 && (g.order() > 12 && g.edge_count() > 30)) {
                        Matching m = maximum_matching(g);
                        std::cout << "factor=";
                        for (std::size_t i = 0; i < m.edges.size(); ++i)
                            std::cout << (i ? " " : "") << m.edges[i].first << "-"
                                      << m.edges[i].second;
                        std::cout << "\n";
                    } else {
                        FactorResult built = find_odd_factor(g, fcheck_b);
                        std::cout << "factor=";
                        for (std::size_t i = 0; i < built.factor.size(); ++i)
                            std::cout << (i ? " " : "") << built.factor[i].first << "-"
                                      << built.factor[i].second;
                        std::cout << "\n";
                    }
                }
            } else {
                std::cout << "verdict=violated S={";
                bool first = true;
                for (int v : r.violator.to_vector()) {
                    std::cout << (first ? "" : ",") << v;
                    first = false;
                }
                ComponentCount cc = odd_components(g, r.violator);
                std::cout << "} o=" << cc.odd << " b|S|=" << fcheck_b * r.violator.count()
                          << "\n";
            }
            return 0;
        }
        if (vall->parsed()) return emit_and_exit(run_all(cfg), cfg, json_path, csv_path);
        if (vlemma->parsed() || vtheorem->parsed()) {
            CheckResult res;
            // explicit parameters override the defaults
            if (v_id == "2.1" && v_nmax > 0) res = check_lemma_2_1(v_nmax, cfg);
            else if (v_id == "2.4" && v_samples > 0) res = check_lemma_2_4(v_samples, cfg);
            else if (v_id == "2.5" && v_nmax > 0) res = check_edge_deletion(v_nmax, cfg);
            else if (v_id == "3.1" && v_nmax > 0) res = check_lemma_3_1(v_nmax, cfg);
            else if (v_id == "3.3" && v_n > 0)
                res = check_lemma_3_3(v_n, v_k > 0 ? v_k : 2, v_t > 0 ? v_t : 1, cfg);
            else if (v_id == "3.4" && v_nlo > 0)
                res = check_lemma_3_4(v_k > 0 ? v_k : 2, v_t > 0 ? v_t : 1, v_nlo,
                                      v_nhi > 0 ? v_nhi : v_nlo + 30, cfg);
            else if (v_id == "3.2" && v_n > 0)
                res = check_theorem_3_2(v_n, v_k > 0 ? v_k : 2, v_t > 0 ? v_t : 1, cfg);
            else if (v_id == "3.5" && v_n > 0)
                res = check_corollary_3_5(v_n, v_t > 0 ? v_t : 1, cfg);
            else if (v_id == "4.1" && v_n > 0)
                res = check_theorem_4_1(v_n, v_b > 0 ? v_b : 1, v_delta > 0 ? v_delta : 3, cfg);
            else if (v_id == "4.2" && v_n > 0)
                res = check_corollary_4_2(v_n, v_delta > 0 ? v_delta : 3, cfg);
            else res = run_statement(v_id, cfg);
            return emit_and_exit(std::move(res), cfg, json_path, csv_path);
        }
        if (vsweep->parsed()) {
            CheckResult res;
            if (sw_variant == "matching") {
                res = check_lemma_3_4(sw_k, sw_t, sw_nlo, sw_nhi, cfg);
            } else if (sw_variant == "odd-factor" || sw_variant == "odd_factor") {
                for (int b : parse_int_list(sw_blist, ','))
                    for (int n = sw_nlo + (sw_nlo % 2); n <= sw_nhi; n += 2)
                        res.append(check_theorem_4_1(n, b, sw_delta, cfg));
            } else {
                throw std::invalid_argument("unknown sweep variant: " + sw_variant);
            }
            return emit_and_exit(std::move(res), cfg, json_path, csv_path);
        }
        std::cerr << "no subcommand executed\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

// Command-line surface for the library: model validation, curve
// generation/verification/classification, and Hopf cylinder root solving,
// threshold computation, and parameter scans with JSON/CSV artifacts.

#include <biharm/checks.hpp>
#include <biharm/constructors.hpp>
#include <biharm/serialize.hpp>

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

using namespace biharm;

namespace {

int g_exit = 0;

void fail_expectation(const std::string& why) {
    std::cout << "MISMATCH: " << why << "\n";
    g_exit = std::max(g_exit, 1);
}

std::shared_ptr<SpaceFormModel> model_from(const std::string& kind, int n, double a, double c,
                                           bool c_set) {
    if (kind == "unit-sphere") return std::make_shared<SpaceFormModel>(SpaceFormModel::unit_sphere(n));
    if (kind == "flat") return std::make_shared<SpaceFormModel>(SpaceFormModel::flat_sasakian(n));
    if (kind == "deformed-sphere") {
        if (c_set) a = 4.0 / (c + 3.0);  // c = 4/a - 3
        return std::make_shared<SpaceFormModel>(SpaceFormModel::deformed_sphere(n, a));
    }
    throw CLI::ValidationError("--kind", "unknown model kind '" + kind + "'");
}

void emit_json(const std::string& path, const nlohmann::json& j) {
    if (path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream os(path);
        os << j.dump(2) << "\n";
    }
}

struct CurveArgs {
    std::string family = "circle";
    int n = 2;
    double kappa1 = 0.5, kappa2 = 1.0;
    double c = 1.0;
    bool c_set = false;
    double length = 3.0;
    int branch = 0;
    unsigned seed = 1;
    std::string expect, json_path, csv_path;
};

void add_curve_flags(CLI::App* cmd, CurveArgs& a) {
    cmd->add_option("--family", a.family,
                    "circle | helix | geodesic | order4 | case2 | case3 | random")
        ->default_val("circle");
    cmd->add_option("--n", a.n, "ambient complex dimension parameter (space is 2n+1 dim)");
    cmd->add_option("--kappa1", a.kappa1);
    cmd->add_option("--kappa2", a.kappa2);
    cmd->add_option("--c", a.c, "phi-sectional curvature of the ambient model")
        ->each([&a](const std::string&) { a.c_set = true; });
    cmd->add_option("--length", a.length, "arclength span to integrate/sample");
    cmd->add_option("--branch", a.branch, "order-4 profile branch (0 or 1)");
    cmd->add_option("--seed", a.seed, "seed for the random family");
    cmd->add_option("--expect", a.expect,
                    "assert the verdict: harmonic | proper-biharmonic | not-biharmonic | "
                    "geodesic-only | not-proper-biharmonic");
    cmd->add_option("--json", a.json_path, "write the JSON report here (default: stdout)");
    cmd->add_option("--csv", a.csv_path, "write per-sample CSV here");
}

ParamCurve build_curve(const CurveArgs& a) {
    const double c = a.c_set ? a.c : 1.0;
    auto sphere_model = [&]() {
        return c == 1.0 ? std::make_shared<SpaceFormModel>(SpaceFormModel::unit_sphere(a.n))
                        : std::make_shared<SpaceFormModel>(
                              SpaceFormModel::deformed_sphere(a.n, 4.0 / (c + 3.0)));
    };
    if (a.family == "circle") return circle_curve(a.n, a.length);
    if (a.family == "helix") return helix_curve(a.n, a.kappa1, a.length);
    if (a.family == "geodesic") return legendre_geodesic(a.n, a.length);
    if (a.family == "random") {
        std::mt19937 rng(a.seed);
        return random_legendre_curve(sphere_model(), rng, a.length);
    }
    auto model = sphere_model();
    if (a.family == "case2") {
        std::vector<double> ks = {a.kappa1};
        int r = 2;
        if (a.kappa2 > 0.0) { ks.push_back(a.kappa2); r = 3; }
        return integrate_frenet_ode(model, case2_frame(*model, r), ks, a.length);
    }
    if (a.family == "case3")
        return integrate_frenet_ode(model, case3_frame(*model), {a.kappa1, a.kappa2}, a.length);
    if (a.family == "order4") {
        Order4Profile prof = order4_profile(c);
        if (!prof.admissible) throw std::domain_error("order4: " + prof.reason);
        return integrate_frenet_ode(model, case4_frame(*model, prof, a.branch),
                                    {prof.kappa1, prof.kappa2, prof.kappa3}, a.length);
    }
    throw CLI::ValidationError("--family", "unknown curve family '" + a.family + "'");
}

void check_expect(const std::string& expect, const std::string& got) {
    if (!expect.empty() && expect != got)
        fail_expectation("expected '" + expect + "' but the verdict is '" + got + "'");
}

void run_curve(const CurveArgs& a, bool do_verify, bool do_classify) {
    ParamCurve curve = build_curve(a);
    json j;
    j["model"] = to_json(*curve.model);
    j["family"] = a.family;
    j["span"] = {curve.s0, curve.s1};
    j["legendre_residual"] = legendre_residual(curve);
    if (do_verify) {
        BiharmonicReport rep = biharmonic_verdict(curve);
        j["report"] = to_json(rep);
        check_expect(a.expect, to_string(rep.verdict));
        if (!a.csv_path.empty()) {
            std::ofstream os(a.csv_path);
            write_report_csv(os, rep);
        }
    }
    if (do_classify) {
        ClassificationVerdict v = classify(curve);
        j["classification"] = to_json(v);
        check_expect(a.expect, to_string(v.verdict));
    }
    emit_json(a.json_path, j);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical verification of proper-biharmonic Legendre curves and Hopf "
                 "cylinders in Sasakian space forms"};
    app.require_subcommand(1);

    // ---- models validate ----
    auto* models_cmd = app.add_subcommand("models", "model structure validation");
    auto* validate = models_cmd->add_subcommand("validate", "run the contact-metric axiom suite");
    std::string mv_kind = "unit-sphere";
    int mv_n = 2;
    double mv_a = 1.0, mv_c = 1.0;
    bool mv_c_set = false;
    unsigned mv_seed = 1;
    int mv_trials = 8;
    std::string mv_json;
    validate->add_option("--kind", mv_kind, "unit-sphere | deformed-sphere | flat")
        ->default_val("unit-sphere");
    validate->add_option("--n", mv_n);
    validate->add_option("--a", mv_a, "deformation parameter (deformed-sphere)");
    validate->add_option("--c", mv_c, "target phi-sectional curvature (deformed-sphere)")
        ->each([&](const std::string&) { mv_c_set = true; });
    validate->add_option("--seed", mv_seed);
    validate->add_option("--trials", mv_trials);
    validate->add_option("--json", mv_json);
    validate->callback([&] {
        auto m = model_from(mv_kind, mv_n, mv_a, mv_c, mv_c_set);
        std::mt19937 rng(mv_seed);
        double worst_axiom = 0.0, worst_curv = 0.0, worst_koszul = 0.0, worst_phi_sec = 0.0;
        for (int t = 0; t < mv_trials; ++t) {
            worst_axiom = std::max(worst_axiom, checks::contact_axioms(*m, rng).max_residual());
            worst_curv = std::max(worst_curv, checks::curvature_op_residual(*m, rng));
            worst_koszul = std::max(worst_koszul, checks::koszul_residual(*m, rng));
            worst_phi_sec = std::max(worst_phi_sec,
                                     std::abs(checks::phi_sectional_measured(*m, rng) - m->c()));
        }
        const double tol = default_tolerance(*m);
        json j;
        j["model"] = to_json(*m);
        j["axiom_residual_max"] = worst_axiom;
        j["curvature_operator_residual_max"] = worst_curv;
        j["koszul_residual_max"] = worst_koszul;
        j["phi_sectional_error_max"] = worst_phi_sec;
        j["tolerance"] = tol;
        bool ok = std::max({worst_axiom, worst_curv, worst_koszul, worst_phi_sec}) < tol;
        j["pass"] = ok;
        emit_json(mv_json, j);
        if (!ok) fail_expectation("model axiom suite exceeded tolerance");
    });

    // ---- curve generate / verify / classify ----
    auto* curve_cmd = app.add_subcommand("curve", "Legendre curve generation and analysis");
    CurveArgs cg, cv, cc;
    auto* generate = curve_cmd->add_subcommand(
        "generate", "construct a curve, verify it, and report the biharmonic verdict");
    add_curve_flags(generate, cg);
    generate->callback([&] { run_curve(cg, true, false); });
    auto* verify = curve_cmd->add_subcommand(
        "verify", "evaluate tension and both bitension routes along the curve");
    add_curve_flags(verify, cv);
    verify->callback([&] { run_curve(cv, true, false); });
    auto* classify_sub = curve_cmd->add_subcommand(
        "classify", "measure Frenet data and run the case analysis");
    add_curve_flags(classify_sub, cc);
    classify_sub->callback([&] { run_curve(cc, false, true); });

    // ---- hopf solve / threshold / scan ----
    auto* hopf_cmd = app.add_subcommand("hopf", "Hopf cylinders over homogeneous hypersurfaces");
    std::string h_type = "A1", h_json, h_csv;
    double h_c = 1.0, h_cmin = -2.5, h_cmax = 10.0;
    int h_n = 2, h_p = 0, h_q = 0, h_steps = 200, h_jobs = 1;

    auto add_hopf_common = [&](CLI::App* cmd) {
        cmd->add_option("--type", h_type, "A1 | A2 | B | C | D | E")->default_val("A1");
        cmd->add_option("--n", h_n);
        cmd->add_option("--p", h_p);
        cmd->add_option("--q", h_q);
        cmd->add_option("--json", h_json);
    };
    auto parse_type = [&]() {
        if (h_type == "A1") return TakagiType::A1;
        if (h_type == "A2") return TakagiType::A2;
        throw std::domain_error("no principal-curvature data for type " + h_type
                                + "; the known classification excludes proper-biharmonic "
                                  "cylinders over it (not verified numerically here)");
    };

    auto* solve = hopf_cmd->add_subcommand("solve", "tan^2(u) roots of the biharmonicity equation");
    add_hopf_common(solve);
    solve->add_option("--c", h_c);
    solve->add_option("--csv", h_csv);
    solve->callback([&] {
        auto roots = solve_biharmonic_u(parse_type(), h_c, h_n, h_p, h_q);
        json j;
        j["type"] = h_type;
        j["c"] = h_c;
        j["n"] = h_n;
        if (h_type == "A2") { j["p"] = h_p; j["q"] = h_q; }
        j["roots"] = to_json(roots);
        emit_json(h_json, j);
        if (!h_csv.empty()) {
            std::ofstream os(h_csv);
            write_roots_csv(os, roots);
        }
    });

    auto* thresh = hopf_cmd->add_subcommand("threshold", "minimal c admitting biharmonic radii");
    add_hopf_common(thresh);
    thresh->callback([&] {
        TakagiType t = parse_type();
        json j;
        j["type"] = h_type;
        j["n"] = h_n;
        if (h_type == "A2") { j["p"] = h_p; j["q"] = h_q; }
        j["c_min"] = existence_threshold(t, h_n, h_p, h_q);
        j["c_min_numeric"] = existence_threshold_numeric(t, h_n, h_p, h_q);
        emit_json(h_json, j);
    });

    auto* scan = hopf_cmd->add_subcommand("scan", "root table over a range of c");
    add_hopf_common(scan);
    scan->add_option("--c-min", h_cmin);
    scan->add_option("--c-max", h_cmax);
    scan->add_option("--steps", h_steps);
    scan->add_option("--jobs", h_jobs, "worker threads");
    scan->add_option("--csv", h_csv);
    scan->callback([&] {
        TakagiType t = parse_type();
        std::vector<std::vector<HopfRoot>> rows(h_steps + 1);
        std::vector<double> cs(h_steps + 1);
        std::atomic<int> next{0};
        auto worker = [&] {
            for (int i = next.fetch_add(1); i <= h_steps; i = next.fetch_add(1)) {
                cs[i] = h_cmin + (h_cmax - h_cmin) * i / h_steps;
                rows[i] = solve_biharmonic_u(t, cs[i], h_n, h_p, h_q);
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < std::max(1, h_jobs); ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        std::ostream* os = &std::cout;
        std::ofstream fs;
        if (!h_csv.empty()) { fs.open(h_csv); os = &fs; }
        *os << "type,c,n,p,q,root_index,tan2u,u,H,verdict\n";
        for (int i = 0; i <= h_steps; ++i) {
            for (size_t k = 0; k < rows[i].size(); ++k) {
                const HopfRoot& r = rows[i][k];
                char buf[256];
                std::snprintf(buf, sizeof(buf), "%s,%.17g,%d,%d,%d,%zu,%.17g,%.17g,%.17g,%s\n",
                              h_type.c_str(), cs[i], h_n, h_p, h_q, k, r.tan2_u, r.u,
                              r.mean_curvature, to_string(r.verdict).c_str());
                *os << buf;
            }
        }
    });

    auto* three = hopf_cmd->add_subcommand("criterion3d", "3-dimensional cylinder criterion");
    double h3_c = 5.0, h3_kappa = 2.0;
    std::string h3_expect;
    three->add_option("--c", h3_c);
    three->add_option("--kappa", h3_kappa, "constant curvature of the base curve");
    three->add_option("--expect", h3_expect, "proper-biharmonic | minimal-only | not-proper-biharmonic");
    three->add_option("--json", h_json);
    three->callback([&] {
        Hopf3Result r = hopf3_criterion(h3_c, h3_kappa);
        std::string verdict = !r.proper_possible ? "minimal-only"
                            : r.proper_biharmonic ? "proper-biharmonic"
                                                  : "not-proper-biharmonic";
        json j;
        j["c"] = h3_c;
        j["kappa"] = h3_kappa;
        j["verdict"] = verdict;
        if (r.proper_possible) j["required_kappa_sq"] = r.required_kappa2;
        emit_json(h_json, j);
        check_expect(h3_expect, verdict);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::domain_error& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return g_exit;
}

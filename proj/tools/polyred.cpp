// polyred: measure reducibility probabilities of random integer polynomials,
// compare against closed-form values, and reproduce the experiment figures.

#include "polyred/analytic.hpp"
#include "polyred/exhaustive.hpp"
#include "polyred/factorint.hpp"
#include "polyred/figures.hpp"
#include "polyred/mcengine.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using nlohmann::json;
using namespace polyred;

namespace {

json to_json(const ConfidenceInterval& ci) {
    return {{"point", ci.point},
            {"halfwidth", ci.halfwidth},
            {"sigma", ci.sigma_level},
            {"method", ci.method == CiMethod::Conservative ? "conservative" : "wald"}};
}

json to_json(const AnalyticValue& v) {
    json j{{"label", v.label}, {"approx", v.approx}, {"asymptotic", v.asymptotic}};
    if (v.exact) {
        j["exact"] = v.exact->get_str();
        j["exact_decimal"] = v.exact->get_d();
    }
    return j;
}

json factor_report_json(const IntPolynomial& poly, const FactorReport& rep) {
    json factors = json::array();
    for (const auto& [g, mult] : rep.factors)
        factors.push_back({{"coeffs", g.to_text()},
                           {"pretty", g.to_pretty()},
                           {"degree", g.degree()},
                           {"multiplicity", mult}});
    return {{"input", poly.to_text()},
            {"pretty", poly.to_pretty()},
            {"input_degree", rep.input_degree},
            {"content", rep.content.get_str()},
            {"factors", std::move(factors)},
            {"is_reducible", rep.is_reducible},
            {"min_factor_degree", rep.min_factor_degree},
            {"decision_path", to_string(rep.decision_path)}};
}

json trial_stats_json(const TrialStats& st, double sigma) {
    json hist = json::object();
    for (const auto& [deg, count] : st.min_degree_histogram)
        hist[std::to_string(deg)] = count;
    json j{{"model", st.model.to_text()},
           {"trials", st.trials},
           {"seed", st.seed},
           {"reducible", st.reducible},
           {"linear_factor", st.linear_factor},
           {"constant_zero", st.constant_zero},
           {"min_degree_histogram", std::move(hist)},
           {"reducible_ci", to_json(confidence(st, sigma))}};
    try {
        j["heuristic_ratio"] = to_json(heuristic_ratio(st, sigma));
        j["baseline"] = heuristic_baseline(st.model).get_str();
    } catch (const std::domain_error&) {
        // no baseline for this model; the histogram carries the information
    }
    return j;
}

json exact_stats_json(const ExactStats& ex) {
    json hist = json::object();
    for (const auto& [deg, mass] : ex.min_degree_histogram)
        hist[std::to_string(deg)] = {{"exact", mass.get_str()}, {"decimal", mass.get_d()}};
    return {{"model", ex.model.to_text()},
            {"support", ex.support.get_str()},
            {"reducible_prob", ex.reducible_prob.get_str()},
            {"reducible_prob_decimal", ex.reducible_prob.get_d()},
            {"linear_factor_prob", ex.linear_factor_prob.get_str()},
            {"linear_factor_prob_decimal", ex.linear_factor_prob.get_d()},
            {"constant_zero_prob", ex.constant_zero_prob.get_str()},
            {"constant_zero_prob_decimal", ex.constant_zero_prob.get_d()},
            {"min_degree_histogram", std::move(hist)}};
}

void exact_stats_csv(std::ostream& out, const ExactStats& ex) {
    out << "model,degree,K,support,reducible_prob,linear_factor_prob,constant_zero_prob\n";
    out << ex.model.to_text() << ',' << ex.model.degree << ',' << ex.model.support << ','
        << ex.support.get_str() << ',' << ex.reducible_prob.get_d() << ','
        << ex.linear_factor_prob.get_d() << ',' << ex.constant_zero_prob.get_d() << '\n';
}

AnalyticValue analytic_by_label(const std::string& label, int d) {
    if (label == "p1-linear") return zero_one_linear_prob(d);
    if (label == "p1-main") return zero_one_linear_main_term(d);
    if (label == "pm1-linear") return pm1_linear_prob(d);
    if (label == "pm1-main") return pm1_linear_main_term(d);
    if (label == "chela") return chela_constant(d);
    if (label == "slab") return slab_volume_value(d);
    if (label == "zeta") return zeta_int(d);
    if (label == "matrix-bound") return matrix_bound_value(d);
    if (label == "matrix-main") return matrix_bound_main_term(d);
    throw std::invalid_argument(
        "unknown formula '" + label +
        "' (expected p1-linear, p1-main, pm1-linear, pm1-main, chela, slab, zeta, "
        "matrix-bound, matrix-main)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"measure reducibility of random integer polynomials over Q"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    uint64_t seed = 12345;
    int workers = 2;
    double sigma = 5.0;
    app.add_option("--seed", seed, "base RNG seed")->capture_default_str();
    app.add_option("--workers", workers, "worker threads")->capture_default_str();
    app.add_option("--sigma", sigma, "confidence level in standard deviations")
        ->capture_default_str();

    // --- factor ------------------------------------------------------------
    auto* cmd_factor = app.add_subcommand("factor", "factor an integer polynomial over Q");
    std::string poly_text;
    cmd_factor->add_option("coeffs", poly_text,
                           "comma-separated coefficients, constant term first")
        ->required();

    // --- simulate ----------------------------------------------------------
    auto* cmd_sim = app.add_subcommand("simulate", "Monte Carlo reducibility measurement");
    std::string model_text;
    uint64_t trials = 100000;
    bool csv = false;
    cmd_sim->add_option("--model", model_text, "model spec family:degree[:K]")->required();
    cmd_sim->add_option("--trials", trials, "number of trials")->capture_default_str();
    cmd_sim->add_flag("--csv", csv, "emit CSV instead of JSON");

    // --- enumerate ---------------------------------------------------------
    auto* cmd_enum = app.add_subcommand("enumerate", "exact probabilities by full enumeration");
    std::string enum_model;
    uint64_t cap = uint64_t{1} << 30;
    bool enum_csv = false;
    cmd_enum->add_option("--model", enum_model, "model spec family:degree[:K]")->required();
    cmd_enum->add_option("--cap", cap, "support size cap")->capture_default_str();
    cmd_enum->add_flag("--csv", enum_csv, "emit CSV instead of JSON");

    // --- analytic ----------------------------------------------------------
    auto* cmd_analytic = app.add_subcommand("analytic", "closed-form oracle values");
    std::string formula;
    int adegree = 0;
    cmd_analytic->add_option("formula", formula, "formula label")->required();
    cmd_analytic->add_option("--degree", adegree, "degree / dimension / argument")->required();

    // --- figure ------------------------------------------------------------
    auto* cmd_figure = app.add_subcommand("figure", "reproduce a figure (CSV + SVG)");
    std::string figure_id;
    std::string out_dir = ".";
    uint64_t fig_trials = 0;
    bool paper_scale = false;
    bool list_figures = false;
    cmd_figure->add_option("id", figure_id, "figure id (see --list)");
    cmd_figure->add_option("--out", out_dir, "output directory")->capture_default_str();
    cmd_figure->add_option("--trials", fig_trials, "override per-point trial count");
    cmd_figure->add_flag("--paper-scale", paper_scale, "use full-scale trial counts");
    cmd_figure->add_flag("--list", list_figures, "list figure ids");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_factor) {
            const IntPolynomial poly = IntPolynomial::parse(poly_text);
            const FactorReport rep = factor(poly);
            std::cout << factor_report_json(poly, rep).dump(2) << '\n';
        } else if (*cmd_sim) {
            const ModelSpec spec = ModelSpec::parse(model_text);
            const TrialStats st = run(spec, trials, seed, workers);
            if (csv) {
                std::cout << "model,degree,K,trials,seed,reducible,linear_factor,constant_zero,"
                             "p_hat,ci_halfwidth,sigma\n";
                const auto ci = confidence(st, sigma);
                std::cout << spec.to_text() << ',' << spec.degree << ',' << spec.support << ','
                          << st.trials << ',' << st.seed << ',' << st.reducible << ','
                          << st.linear_factor << ',' << st.constant_zero << ',' << ci.point
                          << ',' << ci.halfwidth << ',' << sigma << '\n';
            } else {
                std::cout << trial_stats_json(st, sigma).dump(2) << '\n';
            }
        } else if (*cmd_enum) {
            const ModelSpec spec = ModelSpec::parse(enum_model);
            const ExactStats ex = exact(spec, workers, cap);
            if (enum_csv)
                exact_stats_csv(std::cout, ex);
            else
                std::cout << exact_stats_json(ex).dump(2) << '\n';
        } else if (*cmd_analytic) {
            std::cout << to_json(analytic_by_label(formula, adegree)).dump(2) << '\n';
        } else if (*cmd_figure) {
            if (list_figures) {
                for (const auto& id : figure_ids()) std::cout << id << '\n';
                return 0;
            }
            if (figure_id.empty())
                throw std::invalid_argument("figure id required (try --list)");
            const FigureJob job = figure_job(figure_id, fig_trials, paper_scale);
            const auto rows = run_figure(job, seed, workers);
            std::filesystem::create_directories(out_dir);
            const auto csv_path = std::filesystem::path(out_dir) / (figure_id + ".csv");
            const auto svg_path = std::filesystem::path(out_dir) / (figure_id + ".svg");
            {
                std::ofstream f(csv_path);
                if (!f) throw std::runtime_error("cannot write " + csv_path.string());
                write_figure_csv(f, rows);
            }
            {
                std::ofstream f(svg_path);
                if (!f) throw std::runtime_error("cannot write " + svg_path.string());
                write_figure_svg(f, job, rows);
            }
            std::cout << "wrote " << csv_path.string() << " and " << svg_path.string() << '\n';
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

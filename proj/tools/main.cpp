#include "peo/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Periodic effort optimizer: measure-valued effort profiles "
                 "minimizing the weighted average of a periodically forced state"};
    app.require_subcommand(0, 1);

    peo::RunConfig cfg;
    std::string config_file;

    auto add_common = [&](CLI::App* sub, bool with_eta) {
        sub->add_option("--preset", cfg.preset_name,
                        "built-in instance (fig1, fig2_sawtooth, fig3_rising_sawtooth, "
                        "fig4_square, fig6_tent)");
        sub->add_option("--problem", cfg.problem_file, "problem JSON file");
        sub->add_option("--K", cfg.grid_size, "base grid gap count")->check(CLI::Range(16, 2000000));
        sub->add_option("--refine", cfg.refine_near, "extra grid times")->delimiter(',');
        sub->add_option("--out", cfg.output_dir, "output directory");
        if (with_eta) sub->add_option("--eta-bar", cfg.eta_bar, "mean effort budget");
        sub->add_option("--tol", cfg.solver.tolerance, "solver tolerance");
        sub->add_option("--max-iterations", cfg.solver.max_iterations, "iteration cap");
    };

    auto* s_solve = app.add_subcommand("solve", "minimize the period cost");
    add_common(s_solve, true);
    auto* s_analyze = app.add_subcommand("analyze", "closed-form diagnostics of an instance");
    add_common(s_analyze, true);
    auto* s_certify = app.add_subcommand("certify", "first-order certificate of a given profile");
    add_common(s_certify, true);
    s_certify->add_option("--profile", cfg.profile_file,
                          "profile CSV (t,alpha,...) or the word 'uniform'");
    auto* s_sweep = app.add_subcommand("sweep", "solve along an increasing eta_bar list");
    add_common(s_sweep, false);
    s_sweep->add_option("--eta-list", cfg.eta_list, "increasing eta_bar values")
        ->delimiter(',');
    s_sweep->add_flag_callback("--no-warm-start", [&] { cfg.warm_start = false; },
                               "make the sweep solves independent");
    auto* s_fig = app.add_subcommand("reproduce-figure", "emit the data behind a worked figure");
    add_common(s_fig, false);
    s_fig->add_option("--figure", cfg.figure, "fig1, fig2, fig3, fig4 or fig6");

    auto* s_run = app.add_subcommand("run", "execute a JSON run config");
    s_run->add_option("--config", config_file, "run config JSON")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (s_run->parsed()) {
            cfg = peo::config_from_json_file(config_file);
        } else if (s_solve->parsed()) {
            cfg.subcommand = "solve";
        } else if (s_analyze->parsed()) {
            cfg.subcommand = "analyze";
        } else if (s_certify->parsed()) {
            cfg.subcommand = "certify";
        } else if (s_sweep->parsed()) {
            cfg.subcommand = "sweep";
        } else if (s_fig->parsed()) {
            cfg.subcommand = "reproduce-figure";
        } else {
            std::cout << app.help();
            return 0;
        }
        return peo::run(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

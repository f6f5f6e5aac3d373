#include "peo/cli.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <stdexcept>

namespace peo {

namespace {

namespace fs = std::filesystem;

ProblemData load_problem(const RunConfig& cfg) {
    if (!cfg.preset_name.empty() && !cfg.problem_file.empty())
        throw std::invalid_argument("give either a preset or a problem file, not both");
    if (!cfg.preset_name.empty()) return preset(cfg.preset_name);
    if (!cfg.problem_file.empty()) {
        std::ifstream in(cfg.problem_file);
        if (!in) throw std::invalid_argument("cannot read problem file: " + cfg.problem_file);
        nlohmann::json j;
        in >> j;
        return problem_from_json(j);
    }
    throw std::invalid_argument("no problem given (use a preset name or a problem file)");
}

fs::path resolve_output_dir(const RunConfig& cfg) {
    const char* env = std::getenv("PEO_OUTPUT_DIR");
    fs::path dir = (env && *env) ? fs::path(env) : fs::path(cfg.output_dir);
    fs::create_directories(dir);
    return dir;
}

nlohmann::json analytic_report(const ProblemData& p, const Grid& grid) {
    nlohmann::json j;
    j["eta_bar_m"] = eta_bar_threshold(p);
    if (p.eta_bar > j["eta_bar_m"].get<double>()) {
        j["phi_min"] = closed_form_solution(p, grid).phi_min;
    } else {
        j["phi_min"] = nullptr;
    }
    auto conc = concentration_function(p, grid);
    j["t_max"] = conc.t_max;

    auto rep = classify_discontinuities(p);
    j["d_plus"] = rep.d_plus;
    nlohmann::json dmin = nlohmann::json::array();
    for (const auto& d : rep.d_minus)
        dmin.push_back({{"t", d.t}, {"mass", d.mass}, {"s_ratio", d.s_ratio}});
    j["d_minus"] = dmin;

    j["pure_atom_threshold"] = nullptr;
    if (rep.d_minus.size() == 1 && p.w.is_constant()) {
        try {
            j["pure_atom_threshold"] = pure_atom_threshold(p, rep.d_minus[0].t);
        } catch (const std::invalid_argument&) {
            // monotonicity hypothesis fails; leave null
        }
    }
    return j;
}

nlohmann::json solve_report_json(const ProblemData& p, const SolveReport& rep) {
    nlohmann::json j;
    j["eta_bar"] = p.eta_bar;
    j["phi"] = rep.phi;
    j["lambda"] = rep.lambda_estimate;
    j["lambda_relative_spread"] = rep.lambda_relative_spread;
    j["eta_bar_m"] = eta_bar_threshold(p);
    j["psi_max"] = rep.certificate.psi_max;
    j["certificate_residual"] = rep.certificate.certificate_residual;
    j["identity_residual"] = rep.certificate.identity_residual;
    j["atom_sign_violation"] = rep.certificate.atom_sign_violation;
    j["support"] = support_json(rep.support);
    j["support_measure"] = rep.support.measure();
    j["atoms"] = atoms_json(rep.atoms)["atoms"];
    j["iterations"] = rep.iterations;
    j["converged"] = rep.converged;
    j["gradient_map_norm"] = rep.gradient_map_norm;
    return j;
}

void write_json(const fs::path& path, const nlohmann::json& j) {
    write_file(path, j.dump(2) + "\n");
}

int do_solve(const RunConfig& cfg, const ProblemData& base, const fs::path& dir) {
    ProblemData p = base;
    if (cfg.eta_bar) p.eta_bar = *cfg.eta_bar;
    auto grid = build_grid(p, cfg.grid_size, cfg.refine_near);
    auto rep = solve(p, grid, cfg.solver);
    write_file(dir / "run.csv", run_csv(p, rep.profile));
    write_json(dir / "report.json", solve_report_json(p, rep));
    return rep.converged ? 0 : 2;
}

int do_analyze(const RunConfig& cfg, const ProblemData& base, const fs::path& dir) {
    ProblemData p = base;
    if (cfg.eta_bar) p.eta_bar = *cfg.eta_bar;
    auto grid = build_grid(p, cfg.grid_size, cfg.refine_near);
    write_json(dir / "report.json", analytic_report(p, *grid));
    return 0;
}

int do_certify(const RunConfig& cfg, const ProblemData& base, const fs::path& dir) {
    ProblemData p = base;
    if (cfg.eta_bar) p.eta_bar = *cfg.eta_bar;
    auto grid = build_grid(p, cfg.grid_size, cfg.refine_near);

    EffortProfile prof;
    if (cfg.profile_file == "uniform") {
        prof = uniform_profile(grid, p.period() * p.eta_bar);
    } else {
        std::ifstream in(cfg.profile_file);
        if (!in) throw std::invalid_argument("cannot read profile: " + cfg.profile_file);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        prof = profile_from_csv(text, grid);
        double target = p.period() * p.eta_bar;
        if (std::abs(prof.mass() - target) > 0.01 * target)
            throw std::invalid_argument("profile mass differs from T*eta_bar by more than 1%");
        normalize_mass(prof, target);
    }

    auto diag = certificate(p, prof);
    write_file(dir / "run.csv", run_csv(p, prof));
    nlohmann::json j;
    j["eta_bar"] = p.eta_bar;
    j["phi"] = cost(p, prof);
    j["psi_max"] = diag.psi_max;
    j["certificate_residual"] = diag.certificate_residual;
    j["identity_residual"] = diag.identity_residual;
    j["atom_sign_violation"] = diag.atom_sign_violation;
    j["support"] = support_json(diag.support);
    j["atoms"] = atoms_json(detect_atoms(prof))["atoms"];
    write_json(dir / "report.json", j);
    return 0;
}

int do_sweep(const RunConfig& cfg, const ProblemData& base, const fs::path& dir) {
    auto grid = build_grid(base, cfg.grid_size, cfg.refine_near);
    auto entries = sweep_eta(base, grid, cfg.eta_list, cfg.solver, cfg.warm_start);
    auto jumps = classify_discontinuities(base);

    std::string csv = "eta_bar,phi,support_measure";
    for (const auto& d : jumps.d_minus) csv += ",atom_mass_" + format_double(d.t);
    csv += "\n";

    nlohmann::json arr = nlohmann::json::array();
    bool all_converged = true;
    for (const auto& e : entries) {
        csv += format_double(e.eta_bar);
        csv += ',';
        csv += format_double(e.report.phi);
        csv += ',';
        csv += format_double(e.report.support.measure());
        for (const auto& d : jumps.d_minus) {
            double m = 0.0;
            for (const auto& at : e.report.atoms)
                if (std::abs(at.t - d.t) <= 2.0 * base.period() / cfg.grid_size) m += at.mass;
            csv += ',';
            csv += format_double(m);
        }
        csv += '\n';

        nlohmann::json ej = solve_report_json(base.with_eta_bar(e.eta_bar), e.report);
        ej["dominance_violation"] = e.dominance_violation;
        arr.push_back(std::move(ej));
        all_converged = all_converged && e.report.converged;
    }
    write_file(dir / "sweep.csv", csv);
    write_json(dir / "report.json", nlohmann::json{{"entries", arr}});
    return all_converged ? 0 : 2;
}

int do_reproduce(const RunConfig& cfg, const fs::path& dir) {
    static const std::map<std::string, std::pair<std::string, std::vector<double>>> targets = {
        {"fig1", {"fig1", {1.0, 4.0, 20.0}}},
        {"fig2", {"fig2_sawtooth", {0.1, 1.0, 6.0}}},
        {"fig3", {"fig3_rising_sawtooth", {1.0, 4.0, 10.0}}},
        {"fig4", {"fig4_square", {1.0, 4.0, 10.0}}},
        {"fig6", {"fig6_tent", {0.5, 2.0, 8.0}}},
    };
    std::string key = cfg.figure;
    for (const auto& [k, v] : targets)
        if (v.first == key) key = k;
    auto it = targets.find(key);
    if (it == targets.end())
        throw std::invalid_argument("unknown figure target: " + cfg.figure);

    ProblemData p = preset(it->second.first);
    auto grid = build_grid(p, cfg.grid_size, cfg.refine_near);
    nlohmann::json summary;
    summary["preset"] = it->second.first;
    nlohmann::json runs = nlohmann::json::array();
    int status = 0;
    for (double eb : it->second.second) {
        ProblemData q = p.with_eta_bar(eb);
        auto rep = solve(q, grid, cfg.solver);
        fs::path sub = dir / (key + "_eta_" + format_double(eb));
        fs::create_directories(sub);
        write_file(sub / "run.csv", run_csv(q, rep.profile));
        write_json(sub / "report.json", solve_report_json(q, rep));
        runs.push_back({{"eta_bar", eb},
                        {"phi", rep.phi},
                        {"converged", rep.converged},
                        {"dir", sub.filename().string()}});
        if (!rep.converged) status = 2;
    }
    summary["runs"] = runs;
    write_json(dir / "report.json", summary);
    return status;
}

} // namespace

void RunConfig::validate() const {
    static const std::vector<std::string> subs = {"solve", "analyze", "certify", "sweep",
                                                  "reproduce-figure"};
    if (std::find(subs.begin(), subs.end(), subcommand) == subs.end())
        throw std::invalid_argument("unknown subcommand: " + subcommand);
    if (subcommand == "sweep") {
        if (eta_bar || eta_list.empty())
            throw std::invalid_argument("sweep takes an eta list (and no single eta_bar)");
    } else if (subcommand != "reproduce-figure") {
        if (!eta_list.empty())
            throw std::invalid_argument(subcommand + " takes a single eta_bar, not a list");
    }
    if (subcommand == "certify" && profile_file.empty())
        throw std::invalid_argument("certify needs a profile file");
    if (subcommand == "reproduce-figure" && figure.empty())
        throw std::invalid_argument("reproduce-figure needs a figure target");
    if (eta_bar && !(*eta_bar > 0.0)) throw std::invalid_argument("eta_bar must be positive");
    for (double e : eta_list)
        if (!(e > 0.0)) throw std::invalid_argument("eta values must be positive");
    solver.validate();
}

RunConfig config_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config: " + path);
    nlohmann::json j;
    in >> j;

    RunConfig cfg;
    cfg.subcommand = j.at("subcommand").get<std::string>();
    if (j.contains("preset")) cfg.preset_name = j["preset"].get<std::string>();
    if (j.contains("problem")) {
        if (j["problem"].is_string()) {
            cfg.problem_file = j["problem"].get<std::string>();
        } else {
            // inline problem document: stage it next to the config
            fs::path tmp = fs::path(path).parent_path() / ".peo_inline_problem.json";
            write_file(tmp, j["problem"].dump());
            cfg.problem_file = tmp.string();
        }
    }
    cfg.grid_size = j.value("K", 2000);
    if (j.contains("refine_near")) cfg.refine_near = j["refine_near"].get<std::vector<double>>();
    if (j.contains("eta_bar")) cfg.eta_bar = j["eta_bar"].get<double>();
    if (j.contains("eta_list")) cfg.eta_list = j["eta_list"].get<std::vector<double>>();
    if (j.contains("profile")) cfg.profile_file = j["profile"].get<std::string>();
    if (j.contains("figure")) cfg.figure = j["figure"].get<std::string>();
    if (j.contains("output_dir")) cfg.output_dir = j["output_dir"].get<std::string>();
    if (j.contains("warm_start")) cfg.warm_start = j["warm_start"].get<bool>();
    if (j.contains("solver")) {
        const auto& s = j["solver"];
        cfg.solver.max_iterations = s.value("max_iterations", cfg.solver.max_iterations);
        cfg.solver.tolerance = s.value("tolerance", cfg.solver.tolerance);
        cfg.solver.armijo_c = s.value("armijo_c", cfg.solver.armijo_c);
        cfg.solver.armijo_shrink = s.value("armijo_shrink", cfg.solver.armijo_shrink);
        cfg.solver.initial_step = s.value("initial_step", cfg.solver.initial_step);
    }
    return cfg;
}

int run(const RunConfig& cfg) {
    cfg.validate();
    fs::path dir = resolve_output_dir(cfg);
    if (cfg.subcommand == "reproduce-figure") return do_reproduce(cfg, dir);

    ProblemData base = load_problem(cfg);
    base.validate();
    if (cfg.subcommand == "solve") return do_solve(cfg, base, dir);
    if (cfg.subcommand == "analyze") return do_analyze(cfg, base, dir);
    if (cfg.subcommand == "certify") return do_certify(cfg, base, dir);
    if (cfg.subcommand == "sweep") return do_sweep(cfg, base, dir);
    throw std::logic_error("unreachable subcommand");
}

} // namespace peo

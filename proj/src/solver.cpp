#include "peo/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace peo {

void SolverConfig::validate() const {
    if (max_iterations <= 0) throw std::invalid_argument("max_iterations must be positive");
    if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (!(armijo_c > 0.0 && armijo_c < 1.0))
        throw std::invalid_argument("armijo_c must lie in (0,1)");
    if (!(armijo_shrink > 0.0 && armijo_shrink < 1.0))
        throw std::invalid_argument("armijo_shrink must lie in (0,1)");
    if (!(initial_step > 0.0)) throw std::invalid_argument("initial_step must be positive");
}

std::vector<double> project_simplex(std::span<const double> d, double mass) {
    if (!(mass > 0.0)) throw std::invalid_argument("projection mass must be positive");
    const std::size_t n = d.size();
    std::vector<double> u(d.begin(), d.end());
    std::sort(u.begin(), u.end(), std::greater<>());
    double accum = 0.0, tau = 0.0;
    std::size_t rho = 0;
    for (std::size_t i = 0; i < n; ++i) {
        accum += u[i];
        double cand = (accum - mass) / static_cast<double>(i + 1);
        if (u[i] - cand > 0.0) {
            rho = i + 1;
            tau = cand;
        }
    }
    (void)rho;
    std::vector<double> out(n);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = std::max(d[i] - tau, 0.0);
        sum += out[i];
    }
    if (sum > 0.0) {
        double scale = mass / sum;
        for (auto& v : out) v *= scale;
    }
    return out;
}

namespace {

struct Objective {
    const SampleSet* samples; // geometry reused across iterates
    SampleSet work;

    Objective(const ProblemData& p, const EffortProfile& init) : work(make_samples(p, init)) {}

    // evaluate cost + increment gradient at increments d
    void eval(std::span<const double> d, double& phi, std::vector<double>& G) {
        double a = 0.0;
        work.alpha[0] = 0.0;
        for (std::size_t i = 0; i + 1 < work.alpha.size(); ++i) {
            a += d[i];
            work.alpha[i + 1] = a;
        }
        auto cu = build_cumulants(work);
        auto S = state_values(work, cu);
        phi = cost_value(work, S);
        G = increment_gradient(cost_gradient_alpha(work, cu, S));
    }
};

double mapping_norm(std::span<const double> d, const std::vector<double>& G, double mass) {
    std::vector<double> y(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) y[i] = d[i] - G[i + 1];
    auto pd = project_simplex(y, mass);
    double s = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        double e = d[i] - pd[i];
        s += e * e;
    }
    return std::sqrt(s);
}

EffortProfile profile_from_increments(std::shared_ptr<const Grid> grid,
                                      std::span<const double> d, double mass) {
    EffortProfile p;
    p.grid = std::move(grid);
    p.alpha.assign(p.grid->size(), 0.0);
    for (std::size_t i = 0; i + 1 < p.alpha.size(); ++i) p.alpha[i + 1] = p.alpha[i] + d[i];
    if (p.alpha.back() > 0.0) {
        double s = mass / p.alpha.back();
        for (auto& a : p.alpha) a *= s;
    }
    p.alpha.back() = mass;
    return p;
}

} // namespace

SolveReport solve(const ProblemData& p, std::shared_ptr<const Grid> grid,
                  const SolverConfig& cfg) {
    cfg.validate();
    p.validate();
    const double mass = p.period() * p.eta_bar;
    const std::size_t K = grid->gap_count();

    // initial increments: restart profile rescaled, or the uniform density
    std::vector<double> d(K, 0.0);
    if (cfg.restart_profile) {
        const auto& r = *cfg.restart_profile;
        if (r.grid->nodes != grid->nodes)
            throw std::invalid_argument("restart profile must live on the solve grid");
        if (!r.atoms.empty())
            throw std::invalid_argument("restart profile must be atom-free in representation");
        for (std::size_t i = 0; i < K; ++i) d[i] = r.alpha[i + 1] - r.alpha[i];
    } else {
        auto widths = grid->gap_widths();
        for (std::size_t i = 0; i < K; ++i) d[i] = p.eta_bar * widths[i];
    }
    d = project_simplex(d, mass);

    Objective obj(p, profile_from_increments(grid, d, mass));

    double phi = 0.0;
    std::vector<double> G;
    obj.eval(d, phi, G);
    std::vector<double> phi_trace{phi};

    double step = cfg.initial_step;
    double gm = mapping_norm(d, G, mass);
    bool converged = gm < cfg.tolerance;
    int it = 0;

    std::vector<double> phi_window;
    std::vector<double> dn(K), s_vec(K), y_vec(K);

    while (!converged && it < cfg.max_iterations) {
        ++it;
        // projected-arc backtracking
        double phin = 0.0;
        std::vector<double> Gn;
        int bt = 0;
        for (;;) {
            std::vector<double> y(K);
            for (std::size_t i = 0; i < K; ++i) y[i] = d[i] - step * G[i + 1];
            dn = project_simplex(y, mass);
            double gtd = 0.0;
            for (std::size_t i = 0; i < K; ++i) gtd += G[i + 1] * (dn[i] - d[i]);
            obj.eval(dn, phin, Gn);
            if (phin <= phi + cfg.armijo_c * gtd || bt >= 60) break;
            step *= cfg.armijo_shrink;
            ++bt;
        }

        double ss = 0.0, sy = 0.0;
        for (std::size_t i = 0; i < K; ++i) {
            s_vec[i] = dn[i] - d[i];
            y_vec[i] = Gn[i + 1] - G[i + 1];
            ss += s_vec[i] * s_vec[i];
            sy += s_vec[i] * y_vec[i];
        }
        step = (sy > 1e-30) ? std::clamp(ss / sy, 1e-14, 1e10) : step * 2.0;

        d.swap(dn);
        phi = phin;
        G.swap(Gn);
        phi_trace.push_back(phi);

        gm = mapping_norm(d, G, mass);
        if (gm < cfg.tolerance) {
            converged = true;
            break;
        }
        phi_window.push_back(phi);
        if (phi_window.size() > 10) {
            double drop = phi_window.front() - phi;
            phi_window.erase(phi_window.begin());
            if (std::abs(drop) < cfg.tolerance * cfg.tolerance * std::max(std::abs(phi), 1.0)) {
                converged = true;
                break;
            }
        }
    }

    SolveReport rep;
    rep.profile = profile_from_increments(grid, d, mass);
    rep.phi = phi;
    rep.iterations = it;
    rep.gradient_map_norm = gm;
    rep.converged = converged;
    rep.phi_trace = std::move(phi_trace);
    rep.certificate = certificate(p, rep.profile);
    rep.support = rep.certificate.support;
    rep.atoms = detect_atoms(rep.profile);

    // multiplier from the state law on the detected support
    {
        auto st = periodic_state(p, rep.profile);
        auto samples = make_samples(p, rep.profile);
        double sum = 0.0, sum2 = 0.0;
        std::size_t n = 0;
        for (std::size_t i = 0; i < samples.size(); ++i) {
            if (!rep.support.contains(samples.t[i])) continue;
            double v = st.S[i] / std::sqrt(samples.c[i] / samples.w[i]);
            sum += v;
            sum2 += v * v;
            ++n;
        }
        if (n > 0) {
            double mean = sum / static_cast<double>(n);
            double var = std::max(sum2 / static_cast<double>(n) - mean * mean, 0.0);
            rep.lambda_estimate = mean;
            rep.lambda_relative_spread = (mean != 0.0) ? std::sqrt(var) / std::abs(mean) : 0.0;
        }
    }
    return rep;
}

std::vector<SweepEntry> sweep_eta(const ProblemData& p, std::shared_ptr<const Grid> grid,
                                  std::span<const double> eta_list, const SolverConfig& cfg,
                                  bool warm_start) {
    for (std::size_t i = 0; i + 1 < eta_list.size(); ++i)
        if (!(eta_list[i] < eta_list[i + 1]))
            throw std::invalid_argument("eta_list must be strictly increasing");

    std::vector<SweepEntry> out;
    out.reserve(eta_list.size());
    SolverConfig run_cfg = cfg;
    const EffortProfile* prev = nullptr;

    for (double eb : eta_list) {
        if (!(eb > 0.0)) throw std::invalid_argument("eta_bar values must be positive");
        ProblemData q = p.with_eta_bar(eb);
        if (warm_start && prev) {
            EffortProfile start = *prev;
            normalize_mass(start, q.period() * eb);
            run_cfg.restart_profile = std::move(start);
        }
        SweepEntry e;
        e.eta_bar = eb;
        e.report = solve(q, grid, run_cfg);

        if (!out.empty()) {
            // max over s < t of [alpha_1(t)-alpha_1(s)] - [alpha_2(t)-alpha_2(s)]
            // for consecutive eta_1 < eta_2, via a running minimum of the gap
            const auto& a1 = out.back().report.profile.alpha;
            const auto& a2 = e.report.profile.alpha;
            double run_min = 0.0, worst = 0.0;
            for (std::size_t i = 0; i < a1.size(); ++i) {
                double diff = a1[i] - a2[i];
                worst = std::max(worst, diff - run_min);
                run_min = std::min(run_min, diff);
            }
            e.dominance_violation = worst;
        }
        prev = &out.emplace_back(std::move(e)).report.profile;
    }
    return out;
}

} // namespace peo

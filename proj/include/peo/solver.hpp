#pragma once

#include "peo/first_order.hpp"

#include <optional>
#include <span>

namespace peo {

struct SolverConfig {
    int max_iterations = 50000;
    /// Convergence: projected-gradient mapping norm below this, or relative
    /// cost decrease below tolerance^2 over a 10-iteration window.
    double tolerance = 1e-8;
    double armijo_c = 1e-4;
    double armijo_shrink = 0.5;
    double initial_step = 1.0;
    std::optional<EffortProfile> restart_profile;

    void validate() const;
};

struct SolveReport {
    EffortProfile profile;
    double phi = 0.0;
    int iterations = 0;
    double gradient_map_norm = 0.0;
    bool converged = false;
    FirstOrderDiagnostics certificate;
    SupportSet support;
    std::vector<Atom> atoms;
    /// Mass-constraint multiplier estimated from S / sqrt(c/w) averaged over
    /// the detected support, with its relative spread as a consistency check.
    double lambda_estimate = 0.0;
    double lambda_relative_spread = 0.0;
    /// Cost after every accepted iterate (non-increasing under the Armijo
    /// rule); entry 0 is the starting cost.
    std::vector<double> phi_trace;
};

/// Euclidean projection onto {d >= 0, sum d = mass} by sort-and-threshold;
/// the output sum is renormalized to the target mass.
std::vector<double> project_simplex(std::span<const double> d, double mass);

/// Minimizes the discretized cost over bound profiles on the grid by
/// projected gradient on the increment simplex, Barzilai-Borwein steps with
/// an Armijo backtracking safeguard. Deterministic for a given config and
/// grid. Exceeding max_iterations returns the best iterate flagged
/// non-converged.
SolveReport solve(const ProblemData& p, std::shared_ptr<const Grid> grid,
                  const SolverConfig& cfg = {});

struct SweepEntry {
    double eta_bar = 0.0;
    SolveReport report;
    /// Largest violation of window-mass monotonicity against the previous
    /// (smaller) eta_bar solution; a diagnostic, near zero when the
    /// dominance conjecture holds numerically.
    double dominance_violation = 0.0;
};

/// Solves along an increasing eta_bar list, warm-starting each solve from
/// the previous solution rescaled to the new mass (warm_start = false makes
/// the solves independent).
std::vector<SweepEntry> sweep_eta(const ProblemData& p, std::shared_ptr<const Grid> grid,
                                  std::span<const double> eta_list, const SolverConfig& cfg = {},
                                  bool warm_start = true);

} // namespace peo

#pragma once

#include "peo/profile.hpp"

#include <vector>

namespace peo {

/// Fully explicit optimum available above the full-support threshold:
/// density eta_hat, state S_hat (per grid node, one-sided at jumps), the
/// optimal cost, the multiplier, and the threshold itself.
struct ClosedFormSolution {
    std::vector<double> eta_hat;
    std::vector<double> S_hat;
    double phi_min = 0.0;
    double lambda_hat = 0.0;
    double eta_bar_m = 0.0;
};

/// Mean-effort level above which the optimizer has full support and is
/// given in closed form.
double eta_bar_threshold(const ProblemData& p);

/// Explicit optimum for eta_bar > eta_bar_threshold(p); throws below it.
ClosedFormSolution closed_form_solution(const ProblemData& p, const Grid& grid);

struct EtaStarResult {
    std::vector<double> eta; // per node; 0 outside omega
    double lambda = 0.0;
};

/// Optimal density formula restricted to a known support omega (a finite
/// union of intervals): the multiplier comes from the mass constraint over
/// omega, with the logarithmic-derivative term integrated in closed form.
EtaStarResult eta_star(const ProblemData& p, const Grid& grid, const SupportSet& omega);

struct ConcentrationResult {
    std::vector<double> f; // per node
    double t_max = 0.0;
    double f_max = 0.0;
};

/// Vanishing-budget concentration function; its maximizer locates where
/// effort concentrates as eta_bar -> 0.
ConcentrationResult concentration_function(const ProblemData& p, const Grid& grid);

struct DownwardJump {
    double t = 0.0;
    double mass = 0.0;    // predicted atom mass: (1/2) ln(phi(t-)/phi(t+))
    double s_ratio = 0.0; // predicted state drop: sqrt(phi(t+)/phi(t-))
};

/// Splits the jump points of phi = c/w into upward jumps (never in the
/// support) and downward jumps (candidate atom hosts).
struct DiscontinuityReport {
    std::vector<double> d_plus;
    std::vector<DownwardJump> d_minus;
};

DiscontinuityReport classify_discontinuities(const ProblemData& p);

/// Largest mean effort below which the optimizer is the pure atom at the
/// downward jump t_star (w constant, c non-decreasing away from t_star;
/// throws when the monotonicity hypothesis fails). Implemented by
/// translating the instance so the jump sits at the period end.
double pure_atom_threshold(const ProblemData& p, double t_star);

} // namespace peo

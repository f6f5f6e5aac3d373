#pragma once

#include "peo/forward.hpp"

namespace peo {

/// First-order objects of a bound profile. h and psi are the faithful
/// per-sample discretizations of the stationarity density and the switching
/// function. The certificate quantities (psi_hat, psi_max, residual) come
/// from the exact gradient of the discrete cost, so a converged solve
/// certifies at the solver tolerance rather than at quadrature accuracy;
/// psi_hat agrees with psi to quadrature order.
struct FirstOrderDiagnostics {
    std::shared_ptr<const Grid> grid;
    std::vector<double> t;       // sample times
    std::vector<double> h;       // per sample
    std::vector<double> psi;     // per sample
    std::vector<double> psi_hat; // per sample; psi_hat[0] = psi_hat[last]
    double psi_max = 0.0;
    double certificate_residual = 0.0;
    double identity_residual = 0.0;
    double M = 0.0;
    /// Worst violation of the one-sided conditions h(t-) <= 0 <= h(t+) over
    /// detected atoms (0 when there are none).
    double atom_sign_violation = 0.0;
    SupportSet support;
};

std::vector<double> h_function(const ProblemData& p, const EffortProfile& a);
std::vector<double> psi_function(const ProblemData& p, const EffortProfile& a);

struct GradientResult {
    std::vector<double> node;      // d cost / d alpha_k  (entry 0 pinned to 0)
    std::vector<double> increment; // d cost / d d_k, suffix sums (entry 0 unused)
};

/// Exact gradient of the discrete cost; the profile must be atom-free in
/// representation (atoms live in grid increments).
GradientResult gradient(const ProblemData& p, const EffortProfile& a);

/// Optimality certificate per the maximal-switching-function condition:
/// residual = max over the detected support of (psi_max - psi_hat). Small
/// residual is necessary and sufficient for near-optimality.
FirstOrderDiagnostics certificate(const ProblemData& p, const EffortProfile& a,
                                  double support_tol = -1.0 /* eta_bar * 1e-4 */);

/// Max deviation in the quadratic state identity
///   psi + (h/c) S + M = (w/c) S^2
/// over samples with c above 1e-12; pure quadrature error in the continuum.
double identity_residual(const ProblemData& p, const EffortProfile& a);

} // namespace peo

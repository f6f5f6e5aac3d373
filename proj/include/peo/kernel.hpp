#pragma once

#include "peo/profile.hpp"

#include <vector>

namespace peo {

/// Expanded per-sample view of (problem, grid, profile). Samples follow the
/// grid nodes, with one extra split per explicit atom so every jump of
/// alpha sits across a zero-width sample gap carrying one-sided data
/// values. All kernel quadrature runs on this sequence.
struct SampleSet {
    std::vector<double> t, c, w, alpha;
    std::vector<std::size_t> node; // originating grid node per sample
    double period = 1.0;
    double delta = 1.0;

    double mass() const { return alpha.back(); }
    double decay_exponent() const { return alpha.back() + delta * period; } // alpha(T)+delta*T
    std::size_t size() const { return t.size(); }
    bool pure_nodes() const { return t.size() == node.size() && node.back() + 1 == t.size(); }

    std::vector<double> trapezoid_weights() const;
};

SampleSet make_samples(const ProblemData& p, const EffortProfile& a);

/// Prefix/suffix cumulative integrals of the kernel representation, all in
/// overflow-safe shifted form (x = alpha + delta*t is non-decreasing, so
/// every stored quantity is a sum of exp(non-positive) terms):
///   U[k]  = int_0^{t_k} c e^{x - x_k}
///   Q[k]  = int_{t_k}^T w e^{x_k - x}
///   W0[k] = int_0^{t_k} w e^{-x}
///   CA[k] = int_{t_k}^T c e^{x - A},  A = x_K
/// The per-gap rule integrates the exponential exactly against linearly
/// interpolated data, which is exact for the piecewise-linear alpha this
/// discretization fixes.
struct Cumulants {
    std::vector<double> U, Q, W0, CA;
    double A = 0.0; // decay exponent
    double E = 0.0; // exp(-A)
};

Cumulants build_cumulants(const SampleSet& s);

/// Periodic state at every sample: S = (U + e^{-x} CA)/(1-E).
std::vector<double> state_values(const SampleSet& s, const Cumulants& c);

/// Stationarity density h at every sample.
std::vector<double> h_values(const SampleSet& s, const Cumulants& c,
                             const std::vector<double>& S);

/// Switching function psi = -int_0^t h by cumulative trapezoid of the
/// sampled h (psi(0) = 0 exactly, psi(T) = 0 to quadrature accuracy).
std::vector<double> psi_prefix_values(const SampleSet& s, const std::vector<double>& h);

/// psi through the product of the kernel cumulants. Algebraically locked to
/// S, h and M (the quadratic state identity holds exactly for it), so it
/// serves as the reference the trapezoid psi is measured against.
std::vector<double> psi_product_values(const SampleSet& s, const Cumulants& c);

/// Constant of the quadratic state identity.
double identity_constant(const SampleSet& s, const Cumulants& c);

/// Trapezoid cost  sum omega * w * S.
double cost_value(const SampleSet& s, const std::vector<double>& S);

/// Exact gradient of the discrete cost with respect to the nodal alpha
/// values (index 0 is the pinned normalization, reported as 0). Requires a
/// sample set without atom splits.
std::vector<double> cost_gradient_alpha(const SampleSet& s, const Cumulants& c,
                                        const std::vector<double>& S);

/// Suffix sums of the nodal gradient: derivative with respect to the gap
/// increments d_j = alpha_j - alpha_{j-1}, j = 1..K (entry 0 unused, 0).
std::vector<double> increment_gradient(const std::vector<double>& g_alpha);

// Exponential-weighted hat-function moments (z >= 0), all bounded:
//   phi1_neg(z) = int_0^1 (1-u) e^{-zu} du
//   phi2_neg(z) = int_0^1 u e^{-zu} du
// and the scaled derivative combinations used by the gradient.
double phi1_neg(double z);
double phi2_neg(double z);
double dphi1_scaled(double z); // phi1'(z) e^{-z}
double dphi2_scaled(double z); // phi2'(z) e^{-z}
double chi_scaled(double z);   // (phi1(z) - phi1'(z)) e^{-z}

} // namespace peo

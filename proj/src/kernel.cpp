#include "peo/kernel.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace peo {

namespace {

// factorials up to 22! fit a double exactly up to 18!; beyond that the
// rounding is irrelevant at these magnitudes
double inv_factorial(int n) {
    static const auto table = [] {
        std::array<double, 24> f{};
        double v = 1.0;
        f[0] = 1.0;
        for (int i = 1; i < 24; ++i) {
            v *= i;
            f[i] = 1.0 / v;
        }
        return f;
    }();
    return table[static_cast<std::size_t>(n)];
}

constexpr double kSeriesCut = 1.0;

} // namespace

double phi1_neg(double z) {
    // int_0^1 (1-u)e^{-zu} du = (e^{-z} - 1 + z)/z^2
    if (z < kSeriesCut) {
        double s = 0.0, zp = 1.0;
        for (int k = 0;; ++k) {
            double term = zp * inv_factorial(k + 2);
            s += (k % 2 == 0) ? term : -term;
            if (term < 1e-19) break;
            zp *= z;
        }
        return s;
    }
    return (std::exp(-z) - 1.0 + z) / (z * z);
}

double phi2_neg(double z) {
    // int_0^1 u e^{-zu} du = (1 - (1+z)e^{-z})/z^2
    if (z < kSeriesCut) {
        double s = 0.0, zp = 1.0;
        for (int k = 0;; ++k) {
            double term = (k + 1) * zp * inv_factorial(k + 2);
            s += (k % 2 == 0) ? term : -term;
            if (term < 1e-19) break;
            zp *= z;
        }
        return s;
    }
    return (1.0 - (1.0 + z) * std::exp(-z)) / (z * z);
}

double dphi1_scaled(double z) {
    if (z < kSeriesCut) {
        double s = 0.0, zp = 1.0;
        for (int k = 0;; ++k) {
            double term = (k + 1) * zp * inv_factorial(k + 3);
            s += term;
            if (term < 1e-19) break;
            zp *= z;
        }
        return s * std::exp(-z);
    }
    return (z - 2.0 + (z + 2.0) * std::exp(-z)) / (z * z * z);
}

double dphi2_scaled(double z) {
    if (z < kSeriesCut) {
        double s = 0.0, zp = 1.0;
        for (int k = 0;; ++k) {
            double term = (k + 2) * (k + 1) * zp * inv_factorial(k + 3);
            s += term;
            if (term < 1e-19) break;
            zp *= z;
        }
        return s * std::exp(-z);
    }
    return (z * z - 2.0 * z + 2.0 - 2.0 * std::exp(-z)) / (z * z * z);
}

double chi_scaled(double z) {
    if (z < kSeriesCut) {
        double s = 0.0, zp = 1.0;
        for (int k = 0;; ++k) {
            double term = 2.0 * zp * inv_factorial(k + 3);
            s += term;
            if (term < 1e-19) break;
            zp *= z;
        }
        return s * std::exp(-z);
    }
    return (2.0 - (z * z + 2.0 * z + 2.0) * std::exp(-z)) / (z * z * z);
}

std::vector<double> SampleSet::trapezoid_weights() const {
    std::vector<double> w(t.size(), 0.0);
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        double half = 0.5 * (t[i + 1] - t[i]);
        w[i] += half;
        w[i + 1] += half;
    }
    return w;
}

SampleSet make_samples(const ProblemData& p, const EffortProfile& a) {
    a.check_well_formed();
    const Grid& g = *a.grid;
    SampleSet s;
    s.period = g.period;
    s.delta = p.delta;
    std::size_t n = g.size();
    s.t.reserve(n + a.atoms.size());
    for (std::size_t i = 0; i < n; ++i) {
        Side side = g.node_side(i);
        double ti = g.nodes[i];
        double ci = p.c.eval(ti, side);
        double wi = p.w.eval(ti, side);
        double m = a.atom_mass_at_node(i);
        if (m > 0.0 && i > 0) {
            s.t.push_back(ti);
            s.c.push_back(ci);
            s.w.push_back(wi);
            s.alpha.push_back(a.alpha[i] - m);
            s.node.push_back(i);
        }
        s.t.push_back(ti);
        s.c.push_back(ci);
        s.w.push_back(wi);
        s.alpha.push_back(a.alpha[i]);
        s.node.push_back(i);
    }
    return s;
}

Cumulants build_cumulants(const SampleSet& s) {
    const std::size_t n = s.size();
    Cumulants cu;
    cu.A = s.decay_exponent();
    cu.E = std::exp(-cu.A);
    cu.U.assign(n, 0.0);
    cu.Q.assign(n, 0.0);
    cu.W0.assign(n, 0.0);
    cu.CA.assign(n, 0.0);

    auto x = [&](std::size_t i) { return s.alpha[i] + s.delta * s.t[i]; };

    for (std::size_t i = 0; i + 1 < n; ++i) {
        double dt = s.t[i + 1] - s.t[i];
        double z = x(i + 1) - x(i);
        double ez = std::exp(-z);
        // int_gap c e^{x - x_{i+1}} = dt*(c_i*phi1(z)e^{-z} + c_{i+1}*phi2(z)e^{-z})
        //                           = dt*(c_i*phi2_neg(z) + c_{i+1}*phi1_neg(z))
        cu.U[i + 1] = ez * cu.U[i] + dt * (s.c[i] * phi2_neg(z) + s.c[i + 1] * phi1_neg(z));
        cu.W0[i + 1] =
            cu.W0[i] + dt * std::exp(-x(i)) * (s.w[i] * phi1_neg(z) + s.w[i + 1] * phi2_neg(z));
    }
    for (std::size_t i = n - 1; i-- > 0;) {
        double dt = s.t[i + 1] - s.t[i];
        double z = x(i + 1) - x(i);
        double ez = std::exp(-z);
        cu.Q[i] = dt * (s.w[i] * phi1_neg(z) + s.w[i + 1] * phi2_neg(z)) + ez * cu.Q[i + 1];
        cu.CA[i] = cu.CA[i + 1] + std::exp(x(i + 1) - cu.A) * dt *
                                      (s.c[i] * phi2_neg(z) + s.c[i + 1] * phi1_neg(z));
    }
    return cu;
}

std::vector<double> state_values(const SampleSet& s, const Cumulants& cu) {
    std::vector<double> S(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        double xi = s.alpha[i] + s.delta * s.t[i];
        S[i] = (cu.U[i] + std::exp(-xi) * cu.CA[i]) / (1.0 - cu.E);
    }
    return S;
}

std::vector<double> h_values(const SampleSet& s, const Cumulants& cu,
                             const std::vector<double>& S) {
    std::vector<double> h(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        double xi = s.alpha[i] + s.delta * s.t[i];
        double r = (std::exp(xi - cu.A) * cu.W0[i] + cu.Q[i]) / (1.0 - cu.E);
        h[i] = s.w[i] * S[i] - s.c[i] * r;
    }
    return h;
}

std::vector<double> psi_prefix_values(const SampleSet& s, const std::vector<double>& h) {
    std::vector<double> psi(s.size(), 0.0);
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        psi[i + 1] = psi[i] - 0.5 * (s.t[i + 1] - s.t[i]) * (h[i] + h[i + 1]);
    return psi;
}

std::vector<double> psi_product_values(const SampleSet& s, const Cumulants& cu) {
    std::vector<double> psi(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        psi[i] = (cu.U[i] * cu.Q[i] - cu.W0[i] * cu.CA[i]) / (1.0 - cu.E);
    return psi;
}

double identity_constant(const SampleSet& s, const Cumulants& cu) {
    (void)s;
    double d = 1.0 - cu.E;
    return cu.W0.back() * cu.CA.front() / (d * d);
}

double cost_value(const SampleSet& s, const std::vector<double>& S) {
    auto om = s.trapezoid_weights();
    double phi = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) phi += om[i] * s.w[i] * S[i];
    return phi;
}

std::vector<double> cost_gradient_alpha(const SampleSet& s, const Cumulants& cu,
                                        const std::vector<double>& S) {
    if (!s.pure_nodes())
        throw std::invalid_argument("gradient requires an atom-free profile representation");
    const std::size_t n = s.size();
    auto om = s.trapezoid_weights();
    auto x = [&](std::size_t i) { return s.alpha[i] + s.delta * s.t[i]; };

    // Ghat1[m] = sum_{k>=m} om_k w_k e^{x_m - x_k}
    std::vector<double> g1(n);
    g1[n - 1] = om[n - 1] * s.w[n - 1];
    for (std::size_t m = n - 1; m-- > 0;) {
        double z = x(m + 1) - x(m);
        g1[m] = om[m] * s.w[m] + std::exp(-z) * g1[m + 1];
    }
    double Wt = 0.0;
    for (std::size_t k = 0; k < n; ++k) Wt += om[k] * s.w[k] * std::exp(-x(k));
    const double one_minus_E = 1.0 - cu.E;

    std::vector<double> g(n, 0.0);
    for (std::size_t m = 1; m < n; ++m) {
        double val = -om[m] * s.w[m] * S[m];
        {
            // node m as right endpoint of gap (m-1, m)
            double dt = s.t[m] - s.t[m - 1];
            double z = x(m) - x(m - 1);
            double dr = dt * (s.c[m - 1] * dphi1_scaled(z) + s.c[m] * dphi2_scaled(z));
            val += dr * (g1[m] + std::exp(x(m) - cu.A) * Wt / one_minus_E);
        }
        if (m + 1 < n) {
            // node m as left endpoint of gap (m, m+1)
            double dt = s.t[m + 1] - s.t[m];
            double z = x(m + 1) - x(m);
            double q = dt * (s.c[m] * chi_scaled(z) + s.c[m + 1] * dphi1_scaled(z));
            val += q * (g1[m + 1] + std::exp(x(m + 1) - cu.A) * Wt / one_minus_E);
        } else {
            // alpha_K also moves the periodic closure factor
            val -= cu.U.back() * Wt / (one_minus_E * one_minus_E);
        }
        g[m] = val;
    }
    return g;
}

std::vector<double> increment_gradient(const std::vector<double>& g_alpha) {
    std::vector<double> G(g_alpha.size(), 0.0);
    double acc = 0.0;
    for (std::size_t m = g_alpha.size(); m-- > 1;) {
        acc += g_alpha[m];
        G[m] = acc;
    }
    return G;
}

} // namespace peo

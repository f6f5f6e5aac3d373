#include "peo/first_order.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace peo {

std::vector<double> h_function(const ProblemData& p, const EffortProfile& a) {
    require_bound(p, a);
    auto s = make_samples(p, a);
    auto cu = build_cumulants(s);
    return h_values(s, cu, state_values(s, cu));
}

std::vector<double> psi_function(const ProblemData& p, const EffortProfile& a) {
    require_bound(p, a);
    auto s = make_samples(p, a);
    auto cu = build_cumulants(s);
    return psi_prefix_values(s, h_values(s, cu, state_values(s, cu)));
}

GradientResult gradient(const ProblemData& p, const EffortProfile& a) {
    require_bound(p, a);
    if (!a.atoms.empty())
        throw std::invalid_argument("gradient requires an atom-free profile representation");
    auto s = make_samples(p, a);
    auto cu = build_cumulants(s);
    GradientResult r;
    r.node = cost_gradient_alpha(s, cu, state_values(s, cu));
    r.increment = increment_gradient(r.node);
    return r;
}

FirstOrderDiagnostics certificate(const ProblemData& p, const EffortProfile& a,
                                  double support_tol) {
    require_bound(p, a);
    if (support_tol < 0.0) support_tol = p.eta_bar * 1e-4;

    auto s = make_samples(p, a);
    auto cu = build_cumulants(s);
    auto S = state_values(s, cu);

    FirstOrderDiagnostics d;
    d.grid = a.grid;
    d.t = s.t;
    d.h = h_values(s, cu, S);
    d.psi = psi_prefix_values(s, d.h);
    d.M = identity_constant(s, cu);
    d.support = support(a, support_tol);

    // switching values consistent with the exact discrete gradient: adding
    // mass into sample gap j changes the cost by -psi_hat[j] per unit
    auto G = increment_gradient(cost_gradient_alpha(s, cu, S));
    const std::size_t n = s.size();
    d.psi_hat.assign(n, 0.0);
    for (std::size_t j = 1; j < n; ++j) d.psi_hat[j] = -G[j];
    d.psi_hat[0] = d.psi_hat[n - 1];
    d.psi_max = *std::max_element(d.psi_hat.begin(), d.psi_hat.end());

    const double mass_floor = 1e-9 * std::max(a.mass(), 1e-300);
    double res = 0.0;
    for (std::size_t j = 1; j < n; ++j) {
        double dt = s.t[j] - s.t[j - 1];
        double inc = s.alpha[j] - s.alpha[j - 1];
        bool active = (dt > 0.0) ? inc / dt > support_tol : inc > mass_floor;
        if (active) res = std::max(res, d.psi_max - d.psi_hat[j]);
    }
    d.certificate_residual = res;

    // one-sided stationarity signs at atoms: h(t-) <= 0 <= h(t+)
    double viol = 0.0;
    for (const auto& at : detect_atoms(a)) {
        std::size_t first = n, last = n;
        for (std::size_t i = 0; i < n; ++i)
            if (s.t[i] == at.t) {
                if (first == n) first = i;
                last = i;
            }
        if (first == n || first == last) continue;
        viol = std::max({viol, d.h[first], -d.h[last]});
    }
    d.atom_sign_violation = viol;

    double idres = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (s.c[i] <= 1e-12) continue;
        double lhs = d.psi[i] + d.h[i] / s.c[i] * S[i] + d.M;
        double rhs = s.w[i] / s.c[i] * S[i] * S[i];
        idres = std::max(idres, std::abs(lhs - rhs));
    }
    d.identity_residual = idres;
    return d;
}

double identity_residual(const ProblemData& p, const EffortProfile& a) {
    return certificate(p, a).identity_residual;
}

} // namespace peo

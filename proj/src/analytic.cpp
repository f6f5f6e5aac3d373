#include "peo/analytic.hpp"

#include "peo/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace peo {

namespace {

// golden-section maximization on [a, b] for a unimodal bracket
double golden_max(const std::function<double(double)>& f, double a, double b,
                  double tol = 1e-10) {
    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

// prefix function t -> int_0^t f(r) e^{rate r} dr on [0, T], side-aware at
// the piece boundaries, with cached piece prefixes
class CumulativeExpIntegral {
public:
    CumulativeExpIntegral(const PeriodicPiecewise& f, double rate, double tol = 1e-13)
        : f_(&f), rate_(rate), tol_(tol) {
        cuts_ = f.breakpoints();
        cuts_.push_back(f.period());
        prefix_.assign(cuts_.size(), 0.0);
        for (std::size_t i = 0; i + 1 < cuts_.size(); ++i)
            prefix_[i + 1] = prefix_[i] + span_integral(cuts_[i], cuts_[i + 1], cuts_[i + 1]);
    }

    double operator()(double t) const {
        auto it = std::upper_bound(cuts_.begin(), cuts_.end(), t);
        std::size_t i = static_cast<std::size_t>(it - cuts_.begin());
        i = (i == 0) ? 0 : i - 1;
        if (i + 1 >= cuts_.size()) return prefix_.back();
        return prefix_[i] + span_integral(cuts_[i], t, cuts_[i + 1]);
    }

    double total() const { return prefix_.back(); }

private:
    double span_integral(double a, double b, double span_end) const {
        auto g = [&](double t) {
            Side s = (t == span_end) ? Side::left : Side::right;
            return f_->eval(t, s) * std::exp(rate_ * t);
        };
        return adaptive_simpson(g, a, b, tol_);
    }

    const PeriodicPiecewise* f_;
    double rate_, tol_;
    std::vector<double> cuts_;
    std::vector<double> prefix_;
};

} // namespace

double eta_bar_threshold(const ProblemData& p) {
    const double T = p.period();
    double mean_sqrt = integrate_sqrt_wc(p, 0.0, T) / T;

    auto expr = [&](double t, Side s) {
        double sw = std::sqrt(p.w.eval(t, s) * p.c.eval(t, s));
        return (p.delta + 0.5 * log_ratio_derivative(p, t, s)) / sw;
    };

    auto cuts = data_breakpoints(p);
    cuts.push_back(T);
    double sup = expr(0.0, Side::right);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double a = cuts[i], b = cuts[i + 1];
        sup = std::max({sup, expr(a, Side::right), expr(b, Side::left)});
        const int n = 2048;
        int best = -1;
        double best_v = sup;
        for (int k = 1; k < n; ++k) {
            double t = a + (b - a) * k / n;
            double v = expr(t, Side::right);
            if (v > best_v) {
                best_v = v;
                best = k;
            }
        }
        sup = std::max(sup, best_v);
        if (best > 0) {
            double lo = a + (b - a) * (best - 1) / n;
            double hi = a + (b - a) * (best + 1) / n;
            double ts = golden_max([&](double t) { return expr(t, Side::right); }, lo, hi);
            sup = std::max(sup, expr(ts, Side::right));
        }
    }
    return mean_sqrt * sup - p.delta;
}

ClosedFormSolution closed_form_solution(const ProblemData& p, const Grid& grid) {
    ClosedFormSolution out;
    out.eta_bar_m = eta_bar_threshold(p);
    if (!(p.eta_bar > out.eta_bar_m))
        throw std::invalid_argument(
            "closed-form optimum requires eta_bar above the full-support threshold");

    const double T = p.period();
    double I = integrate_sqrt_wc(p, 0.0, T);
    double mean_sqrt = I / T;
    out.lambda_hat = mean_sqrt / (p.eta_bar + p.delta);
    out.phi_min = I * I / ((p.eta_bar + p.delta) * T);

    out.eta_hat.resize(grid.size());
    out.S_hat.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double t = grid.nodes[i];
        Side s = grid.node_side(i);
        double cw = p.c.eval(t, s) / p.w.eval(t, s);
        double sw = std::sqrt(p.w.eval(t, s) * p.c.eval(t, s));
        out.eta_hat[i] =
            sw / out.lambda_hat - 0.5 * log_ratio_derivative(p, t, s) - p.delta;
        out.S_hat[i] = out.lambda_hat * std::sqrt(cw);
    }
    return out;
}

EtaStarResult eta_star(const ProblemData& p, const Grid& grid, const SupportSet& omega) {
    if (omega.intervals.empty())
        throw std::invalid_argument("eta_star needs a support with positive measure");
    const double T = p.period();

    double num = 0.0, logterm = 0.0, meas = 0.0;
    for (auto [a, b] : omega.intervals) {
        num += integrate_sqrt_wc(p, a, b);
        logterm += integrate_log_ratio_derivative(p, a, b);
        meas += b - a;
    }
    double den = T * p.eta_bar + p.delta * meas + 0.5 * logterm;
    if (!(den > 0.0))
        throw std::invalid_argument("non-positive multiplier denominator on this support");

    EtaStarResult r;
    r.lambda = num / den;
    r.eta.assign(grid.size(), 0.0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        double t = grid.nodes[i];
        if (!omega.contains(t)) continue;
        Side s = grid.node_side(i);
        double sw = std::sqrt(p.w.eval(t, s) * p.c.eval(t, s));
        r.eta[i] = sw / r.lambda - 0.5 * log_ratio_derivative(p, t, s) - p.delta;
    }
    return r;
}

ConcentrationResult concentration_function(const ProblemData& p, const Grid& grid) {
    const double T = p.period();
    CumulativeExpIntegral P(p.c, p.delta);   // int c e^{dr}
    CumulativeExpIntegral W(p.w, -p.delta);  // int w e^{-dr}
    const double PT = P.total(), WT = W.total(), eT = std::exp(-p.delta * T);

    auto f = [&](double t) { return P(t) * (WT - W(t)) - eT * W(t) * (PT - P(t)); };

    ConcentrationResult r;
    r.f.resize(grid.size());
    std::size_t best = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        r.f[i] = f(grid.nodes[i]);
        if (r.f[i] > r.f[best]) best = i;
    }
    double lo = grid.nodes[best > 0 ? best - 1 : 0];
    double hi = grid.nodes[std::min(best + 1, grid.size() - 1)];
    r.t_max = (hi > lo) ? golden_max(f, lo, hi) : grid.nodes[best];
    r.f_max = f(r.t_max);
    return r;
}

DiscontinuityReport classify_discontinuities(const ProblemData& p) {
    DiscontinuityReport rep;
    auto cuts = data_breakpoints(p); // includes 0, so the wrap point is checked
    for (double t : cuts) {
        double pm = p.c.eval(t, Side::left) / p.w.eval(t, Side::left);
        double pp = p.c.eval(t, Side::right) / p.w.eval(t, Side::right);
        double scale = std::max({pm, pp, 1e-300});
        if (std::abs(pp - pm) <= 1e-12 * scale) continue;
        if (pp > pm) {
            rep.d_plus.push_back(t);
        } else {
            rep.d_minus.push_back(
                DownwardJump{t, 0.5 * std::log(pm / pp), std::sqrt(pp / pm)});
        }
    }
    return rep;
}

double pure_atom_threshold(const ProblemData& p, double t_star) {
    const double T = p.period();
    if (!p.w.is_constant())
        throw std::invalid_argument("pure-atom threshold requires a constant weight");
    if (!(t_star > 0.0) || !(t_star <= T))
        throw std::invalid_argument("t_star must lie in (0, T]");

    // monotonicity hypothesis: c non-decreasing on (0, t*) and (t*, T)
    auto check_span = [&](double a, double b) {
        auto bps = p.c.breakpoints();
        bps.push_back(T);
        for (double bp : bps) {
            if (bp <= a || bp >= b) continue;
            if (p.c.eval(bp, Side::right) < p.c.eval(bp, Side::left) - 1e-12)
                throw std::invalid_argument("c must be non-decreasing away from t_star");
        }
        const int n = 512;
        for (int k = 0; k <= n; ++k) {
            double t = a + (b - a) * (k + 0.5) / (n + 1);
            if (p.c.derivative(t) < -1e-10)
                throw std::invalid_argument("c must be non-decreasing away from t_star");
        }
    };
    check_span(0.0, t_star);
    check_span(t_star, T);

    // translate so the jump sits at the period end: integrals of the shifted
    // instance reduce to the prefix of c(u) e^{delta u} over [t*-T, t*]
    CumulativeExpIntegral P(p.c, p.delta);
    const double eT = std::exp(-p.delta * T);
    auto J0 = [&](double t) { // int_0^t for t possibly negative (periodic split)
        if (t >= 0.0) return P(t);
        return -eT * (P.total() - P(t + T));
    };
    const double sigma = t_star - T;
    auto rhs = [&](double t) {
        double edt = std::exp(p.delta * t);
        double num = (edt - 1.0) * (J0(t_star) - J0(t + sigma));
        double den = (std::exp(p.delta * T) - edt) * (J0(t + sigma) - J0(sigma));
        return std::log(num / den) / T;
    };

    const int n = 4096;
    const double eps = 1e-6 * T;
    double best_t = eps, best_v = rhs(eps);
    for (int k = 0; k <= n; ++k) {
        double t = eps + (T - 2.0 * eps) * k / n;
        double v = rhs(t);
        if (v < best_v) {
            best_v = v;
            best_t = t;
        }
    }
    double lo = std::max(eps, best_t - (T - 2.0 * eps) / n);
    double hi = std::min(T - eps, best_t + (T - 2.0 * eps) / n);
    double ts = golden_max([&](double t) { return -rhs(t); }, lo, hi);
    best_v = std::min(best_v, rhs(ts));
    return std::max(best_v, 0.0);
}

} // namespace peo

#include "peo/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace peo {

namespace {

double simpson_rec(const std::function<double(double)>& f, double a, double fa, double b,
                   double fb, double m, double fm, double whole, double tol, int depth) {
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return simpson_rec(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth) {
    if (b <= a) return 0.0;
    double m = 0.5 * (a + b);
    double fa = f(a), fb = f(b), fm = f(m);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

double integrate_with_breaks(const std::function<double(double)>& f,
                             const std::vector<double>& breaks, double a, double b, double tol) {
    if (b <= a) return 0.0;
    std::vector<double> cuts{a};
    for (double c : breaks)
        if (c > a && c < b) cuts.push_back(c);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        total += adaptive_simpson(f, cuts[i], cuts[i + 1], tol);
    return total;
}

std::vector<double> data_breakpoints(const ProblemData& p) {
    std::vector<double> b = p.c.breakpoints();
    auto wb = p.w.breakpoints();
    b.insert(b.end(), wb.begin(), wb.end());
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    return b;
}

double integrate_sqrt_wc(const ProblemData& p, double a, double b, double tol) {
    auto f = [&](double t) { return std::sqrt(p.w.eval(t) * p.c.eval(t)); };
    return integrate_with_breaks(f, data_breakpoints(p), a, b, tol);
}

double integrate_log_ratio_derivative(const ProblemData& p, double a, double b) {
    if (b <= a) return 0.0;
    auto phi = [&](double t, Side s) { return p.c.eval(t, s) / p.w.eval(t, s); };
    std::vector<double> cuts{a};
    for (double c : data_breakpoints(p))
        if (c > a && c < b) cuts.push_back(c);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        total += std::log(phi(cuts[i + 1], Side::left)) - std::log(phi(cuts[i], Side::right));
    return total;
}

double log_ratio_derivative(const ProblemData& p, double t, Side side) {
    return p.c.derivative(t, side) / p.c.eval(t, side) -
           p.w.derivative(t, side) / p.w.eval(t, side);
}

} // namespace peo

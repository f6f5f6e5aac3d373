#pragma once

#include "peo/problem.hpp"

#include <functional>
#include <vector>

namespace peo {

/// Adaptive Simpson integration of a smooth function on [a, b].
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12, int max_depth = 40);

/// Same, but first splits [a, b] at the given interior points (typically
/// data breakpoints) and evaluates strictly inside each smooth span.
double integrate_with_breaks(const std::function<double(double)>& f,
                             const std::vector<double>& breaks, double a, double b,
                             double tol = 1e-12);

/// Combined breakpoints of c and w in [0, T), sorted.
std::vector<double> data_breakpoints(const ProblemData& p);

/// int_a^b sqrt(w c) dt with piece-aware splitting (0 <= a <= b <= T).
double integrate_sqrt_wc(const ProblemData& p, double a, double b, double tol = 1e-13);

/// Closed-form  int over [a,b] of the classical derivative [ln(c/w)]'
/// (jumps excluded): telescoping of ln(c/w) over the smooth spans.
double integrate_log_ratio_derivative(const ProblemData& p, double a, double b);

/// One-sided value of [ln(c/w)]' = c'/c - w'/w.
double log_ratio_derivative(const ProblemData& p, double t, Side side = Side::right);

} // namespace peo

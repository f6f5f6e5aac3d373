#include "peo/grid.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace peo {

std::vector<double> Grid::gap_widths() const {
    std::vector<double> d(gap_count());
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) d[i] = nodes[i + 1] - nodes[i];
    return d;
}

std::vector<double> Grid::trapezoid_weights() const {
    std::vector<double> w(nodes.size(), 0.0);
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        double half = 0.5 * (nodes[i + 1] - nodes[i]);
        w[i] += half;
        w[i + 1] += half;
    }
    return w;
}

std::size_t Grid::find_node(double t, Side side) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i] == t && (!is_duplicated(i) || node_side(i) == side)) return i;
    return static_cast<std::size_t>(-1);
}

std::shared_ptr<const Grid> build_grid(const ProblemData& p, int K,
                                       const std::vector<double>& refine_near) {
    if (K < 16) throw std::invalid_argument("grid needs at least 16 gaps");
    const double T = p.period();
    const double tol = 1e-12 * T;

    // breakpoints first so their exact values win the merge
    std::vector<double> pts;
    auto add_break = [&](double b) {
        double r = reduce_mod_period(b, T);
        if (r > tol && r < T - tol) pts.push_back(r);
    };
    for (double b : p.c.breakpoints()) add_break(b);
    for (double b : p.w.breakpoints()) add_break(b);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [&](double a, double b) { return std::abs(a - b) <= tol; }),
              pts.end());
    std::vector<double> breaks = pts;

    auto near_existing = [&](double t) {
        for (double q : pts)
            if (std::abs(q - t) <= tol) return true;
        return false;
    };
    for (int i = 1; i < K; ++i) {
        double t = T * static_cast<double>(i) / static_cast<double>(K);
        if (!near_existing(t)) pts.push_back(t);
    }
    for (double r : refine_near) {
        double t = reduce_mod_period(r, T);
        if (t > tol && t < T - tol && !near_existing(t)) pts.push_back(t);
    }
    std::sort(pts.begin(), pts.end());

    auto grid = std::make_shared<Grid>();
    grid->period = T;
    grid->nodes.push_back(0.0);
    for (double t : pts) {
        grid->nodes.push_back(t);
        bool is_break = std::binary_search(breaks.begin(), breaks.end(), t);
        if (is_break && (!p.c.continuous_at(t) || !p.w.continuous_at(t)))
            grid->nodes.push_back(t); // duplicate: left copy then right copy
    }
    grid->nodes.push_back(T);
    return grid;
}

} // namespace peo

#include "peo/profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace peo {

double EffortProfile::atom_mass_at_node(std::size_t i) const {
    if (grid->is_duplicated(i)) return 0.0; // the jump already lives in alpha
    double m = 0.0;
    for (const auto& a : atoms)
        if (a.t == grid->nodes[i]) m += a.mass;
    return m;
}

void EffortProfile::check_well_formed() const {
    if (!grid) throw std::invalid_argument("profile has no grid");
    if (alpha.size() != grid->size()) throw std::invalid_argument("alpha/node size mismatch");
    if (alpha.front() != 0.0) throw std::invalid_argument("alpha(0) must be 0");
    for (std::size_t i = 0; i + 1 < alpha.size(); ++i)
        if (alpha[i + 1] < alpha[i] - 1e-14 * std::max(1.0, mass()))
            throw std::invalid_argument("alpha must be non-decreasing");
    for (const auto& a : atoms) {
        if (!(a.mass > 0.0)) throw std::invalid_argument("atom mass must be positive");
        std::size_t i = grid->find_node(a.t, Side::right);
        if (i == static_cast<std::size_t>(-1))
            throw std::invalid_argument("atom location must be a grid node");
        if (grid->is_right_copy(i)) {
            double jump = alpha[i] - alpha[i - 1];
            if (std::abs(jump - a.mass) > 1e-9 * std::max(1.0, mass()))
                throw std::invalid_argument("atom mass must equal the alpha jump at its node");
        } else if (i > 0 && alpha[i] - a.mass < alpha[i - 1] - 1e-12 * std::max(1.0, mass())) {
            throw std::invalid_argument("atom mass exceeds the increment at its node");
        }
    }
}

double SupportSet::measure() const {
    double m = 0.0;
    for (auto [a, b] : intervals) m += b - a;
    return m;
}

bool SupportSet::contains(double t, double pad) const {
    for (auto [a, b] : intervals)
        if (t >= a - pad && t <= b + pad) return true;
    for (double p : atom_points)
        if (std::abs(t - p) <= pad) return true;
    return false;
}

double SupportSet::distance(double t) const {
    double d = std::numeric_limits<double>::infinity();
    for (auto [a, b] : intervals) {
        if (t >= a && t <= b) return 0.0;
        d = std::min(d, std::min(std::abs(t - a), std::abs(t - b)));
    }
    for (double p : atom_points) d = std::min(d, std::abs(t - p));
    return d;
}

EffortProfile from_density(std::shared_ptr<const Grid> grid, std::span<const double> eta) {
    if (eta.size() != grid->size()) throw std::invalid_argument("density/node size mismatch");
    for (double e : eta)
        if (e < 0.0) throw std::invalid_argument("density must be non-negative");
    EffortProfile p;
    p.grid = std::move(grid);
    p.alpha.assign(p.grid->size(), 0.0);
    for (std::size_t i = 0; i + 1 < p.alpha.size(); ++i) {
        double dt = p.grid->nodes[i + 1] - p.grid->nodes[i];
        p.alpha[i + 1] = p.alpha[i] + 0.5 * dt * (eta[i] + eta[i + 1]);
    }
    return p;
}

EffortProfile uniform_profile(std::shared_ptr<const Grid> grid, double total_mass) {
    std::vector<double> eta(grid->size(), total_mass / grid->period);
    auto p = from_density(std::move(grid), eta);
    normalize_mass(p, total_mass);
    return p;
}

void normalize_mass(EffortProfile& p, double total_mass) {
    double m = p.mass();
    if (!(m > 0.0)) throw std::invalid_argument("cannot rescale a zero-mass profile");
    double s = total_mass / m;
    for (auto& a : p.alpha) a *= s;
    for (auto& a : p.atoms) a.mass *= s;
    p.alpha.back() = total_mass;
}

double alpha_at(const EffortProfile& p, double t, Side side) {
    const auto& g = *p.grid;
    const double T = g.period;
    double k = std::floor(t / T);
    double tm = t - k * T;
    if (tm >= T) {
        tm -= T;
        k += 1.0;
    }
    if (side == Side::left && tm == 0.0) {
        tm = T;
        k -= 1.0;
    }
    double base = k * p.mass();

    auto it = std::upper_bound(g.nodes.begin(), g.nodes.end(), tm);
    std::size_t j = static_cast<std::size_t>(it - g.nodes.begin()); // first node > tm
    if (j == 0) return base; // tm < 0 cannot happen; defensive
    std::size_t i = j - 1;   // last node with nodes[i] <= tm (right copy of a pair)
    if (g.nodes[i] == tm) {
        if (side == Side::right) return base + p.alpha[i];
        std::size_t f = i;
        while (f > 0 && g.nodes[f - 1] == tm) --f; // left copy
        return base + p.alpha[f] - p.atom_mass_at_node(f);
    }
    // strictly inside gap (nodes[i], nodes[j]): interpolate alpha(t_i+) -> alpha(t_j-)
    double a0 = p.alpha[i];
    double a1 = p.alpha[j] - p.atom_mass_at_node(j);
    double u = (tm - g.nodes[i]) / (g.nodes[j] - g.nodes[i]);
    return base + a0 + u * (a1 - a0);
}

std::vector<double> gap_densities(const EffortProfile& p) {
    const auto& g = *p.grid;
    std::vector<double> d(g.gap_count(), 0.0);
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
        double dt = g.nodes[i + 1] - g.nodes[i];
        if (dt > 0.0) d[i] = (p.alpha[i + 1] - p.alpha[i]) / dt;
    }
    return d;
}

namespace {

// continuous part of each gap increment (explicit atom masses removed)
std::vector<double> continuous_increments(const EffortProfile& p) {
    const auto& g = *p.grid;
    std::vector<double> inc(g.gap_count());
    for (std::size_t i = 0; i + 1 < g.size(); ++i)
        inc[i] = p.alpha[i + 1] - p.alpha[i] - p.atom_mass_at_node(i + 1);
    return inc;
}

} // namespace

std::vector<Atom> detect_atoms(const EffortProfile& p, double threshold_ratio) {
    if (!(threshold_ratio > 1.0)) throw std::invalid_argument("threshold_ratio must exceed 1");
    const auto& g = *p.grid;
    const double mean_density = p.mass() / g.period;
    const double floor = 1e-9 * std::max(p.mass(), 1e-300);
    auto inc = continuous_increments(p);

    std::vector<bool> flag(inc.size(), false);
    for (std::size_t i = 0; i < inc.size(); ++i) {
        double dt = g.nodes[i + 1] - g.nodes[i];
        flag[i] = (dt > 0.0) ? inc[i] > threshold_ratio * dt * mean_density + floor
                             : inc[i] > floor;
    }

    std::vector<Atom> out = p.atoms;
    std::size_t i = 0;
    while (i < inc.size()) {
        if (!flag[i]) {
            ++i;
            continue;
        }
        std::size_t j = i;
        double m = 0.0, loc = 0.0;
        while (j < inc.size() && flag[j]) {
            m += inc[j];
            loc += inc[j] * 0.5 * (g.nodes[j] + g.nodes[j + 1]);
            ++j;
        }
        out.push_back(Atom{loc / m, m});
        i = j;
    }
    std::sort(out.begin(), out.end(), [](const Atom& a, const Atom& b) { return a.t < b.t; });
    return out;
}

SupportSet support(const EffortProfile& p, double density_tol) {
    if (density_tol < 0.0) throw std::invalid_argument("density_tol must be non-negative");
    const auto& g = *p.grid;
    const double floor = 1e-9 * std::max(p.mass(), 1e-300);
    auto inc = continuous_increments(p);

    std::vector<bool> active(inc.size(), false);
    for (std::size_t i = 0; i < inc.size(); ++i) {
        double dt = g.nodes[i + 1] - g.nodes[i];
        double raw = p.alpha[i + 1] - p.alpha[i]; // includes explicit atoms
        active[i] = (dt > 0.0) ? inc[i] / dt > density_tol : raw > floor;
    }
    // gaps ending at an explicit single-node atom are support even if smooth-flat
    for (const auto& a : p.atoms) {
        std::size_t i = g.find_node(a.t, Side::right);
        if (i != static_cast<std::size_t>(-1) && i > 0 && !g.is_duplicated(i)) active[i - 1] = true;
    }

    SupportSet s;
    std::size_t i = 0;
    while (i < active.size()) {
        if (!active[i]) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < active.size() && active[j]) ++j;
        double a = g.nodes[i], b = g.nodes[j];
        if (b > a)
            s.intervals.emplace_back(a, b);
        else
            s.atom_points.push_back(a);
        i = j;
    }
    for (const auto& a : p.atoms)
        if (!s.contains(a.t)) s.atom_points.push_back(a.t);
    // zero-width active gaps already contribute either an interval or a point
    std::sort(s.atom_points.begin(), s.atom_points.end());
    s.atom_points.erase(std::unique(s.atom_points.begin(), s.atom_points.end()),
                        s.atom_points.end());
    return s;
}

void require_bound(const ProblemData& p, const EffortProfile& a) {
    if (!a.grid || a.grid->period != p.period())
        throw std::invalid_argument("profile grid does not match the problem period");
    double target = p.period() * p.eta_bar;
    if (std::abs(a.mass() - target) > 1e-9 * std::max(1.0, target))
        throw std::invalid_argument("profile is not bound to the problem: alpha(T) != T*eta_bar");
}

} // namespace peo

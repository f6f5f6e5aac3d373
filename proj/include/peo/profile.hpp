#pragma once

#include "peo/grid.hpp"

#include <memory>
#include <span>
#include <vector>

namespace peo {

struct Atom {
    double t = 0.0;
    double mass = 0.0;
};

/// Cumulative effort profile alpha on a grid: monotone, alpha(0) = 0,
/// periodically extended by alpha(t+T) = alpha(t) + alpha(T). Linear
/// between nodes (uniform density per gap). Jumps live either across a
/// duplicated node pair (the stored values differ) or as explicit atoms at
/// single nodes, where the stored value is the right limit alpha(t+).
struct EffortProfile {
    std::shared_ptr<const Grid> grid;
    std::vector<double> alpha;
    std::vector<Atom> atoms;

    double mass() const { return alpha.empty() ? 0.0 : alpha.back(); }

    /// Total mass of explicit atoms located at node i (left limit there is
    /// alpha[i] - this).
    double atom_mass_at_node(std::size_t i) const;

    void check_well_formed() const;
};

/// Discrete support estimate: maximal closed intervals of positive density
/// plus isolated atom locations not covered by an interval.
struct SupportSet {
    std::vector<std::pair<double, double>> intervals;
    std::vector<double> atom_points;

    double measure() const;
    bool contains(double t, double pad = 0.0) const;
    /// Distance from t to the nearest support point (0 if inside).
    double distance(double t) const;
    bool empty() const { return intervals.empty() && atom_points.empty(); }
};

/// Cumulative trapezoid of a non-negative nodal density; no atoms.
EffortProfile from_density(std::shared_ptr<const Grid> grid, std::span<const double> eta);

/// Uniform profile with density mass/T.
EffortProfile uniform_profile(std::shared_ptr<const Grid> grid, double total_mass);

/// Rescale so that alpha(T) equals total_mass exactly.
void normalize_mass(EffortProfile& p, double total_mass);

/// Periodic evaluation; side picks the branch at jump nodes.
double alpha_at(const EffortProfile& p, double t, Side side = Side::right);

/// Per-gap density d_k / dt_k (0 on zero-width gaps; their mass is a jump).
std::vector<double> gap_densities(const EffortProfile& p);

/// Flags gaps whose increment exceeds threshold_ratio * (gap width * mean
/// density), merging adjacent flagged gaps; explicit atoms are passed
/// through unchanged. Zero-width gaps count as atoms whenever they carry
/// non-negligible mass.
std::vector<Atom> detect_atoms(const EffortProfile& p, double threshold_ratio = 10.0);

SupportSet support(const EffortProfile& p, double density_tol);

/// Throws unless the profile lives on the problem's period and carries
/// total mass T * eta_bar.
void require_bound(const ProblemData& p, const EffortProfile& a);

} // namespace peo

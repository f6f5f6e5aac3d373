#pragma once

#include "peo/kernel.hpp"

#include <span>

namespace peo {

/// Periodic state sampled on the (jump-expanded) grid. Repeated times mark
/// one-sided values across a jump of the data or of alpha.
struct StateTrajectory {
    std::shared_ptr<const Grid> grid;
    std::vector<double> t;
    std::vector<double> S;

    double max() const;
    double min() const;
};

/// Evaluates the closed kernel form of the periodic state. The profile
/// must be bound to the problem (alpha(T) = T*eta_bar).
StateTrajectory periodic_state(const ProblemData& p, const EffortProfile& a);

/// Period cost  int_0^T w S dt  for the bound profile.
double cost(const ProblemData& p, const EffortProfile& a);

/// phi(eps) = cost of (1-eps) a + eps b along the segment between two bound
/// profiles on the same grid; the blend acts on cumulative values and atom
/// masses.
std::vector<double> cost_along_segment(const ProblemData& p, const EffortProfile& a,
                                       const EffortProfile& b, std::span<const double> eps_list);

} // namespace peo

#pragma once

#include "peo/problem.hpp"

#include <cstddef>
#include <memory>
#include <vector>

namespace peo {

/// Discretization grid on [0, T]. Nodes are non-decreasing; a data
/// discontinuity is represented by a duplicated node (two equal times), so
/// quadrature never straddles a jump: the left copy carries the left-hand
/// data values, the right copy the right-hand ones. t=0 is always a
/// right-side node and t=T a left-side node (the same circle point seen
/// from both sides).
struct Grid {
    std::vector<double> nodes; // t_0 = 0 <= ... <= t_K = T
    double period = 1.0;

    std::size_t size() const { return nodes.size(); }
    std::size_t gap_count() const { return nodes.size() - 1; }

    bool is_left_copy(std::size_t i) const {
        return i + 1 < nodes.size() && nodes[i + 1] == nodes[i];
    }
    bool is_right_copy(std::size_t i) const { return i > 0 && nodes[i - 1] == nodes[i]; }
    bool is_duplicated(std::size_t i) const { return is_left_copy(i) || is_right_copy(i); }

    /// Side used when evaluating data at node i.
    Side node_side(std::size_t i) const {
        if (is_left_copy(i) || i + 1 == nodes.size()) return Side::left;
        return Side::right;
    }

    std::vector<double> gap_widths() const;

    /// Trapezoid weight of each node over the whole period.
    std::vector<double> trapezoid_weights() const;

    /// Index of the node at time t with the requested side, or npos.
    std::size_t find_node(double t, Side side) const;
};

/// Uniform K-gap base grid plus all breakpoints of c and w (duplicated
/// where the data jumps) and any extra refinement times. Rejects K < 16.
std::shared_ptr<const Grid> build_grid(const ProblemData& p, int K,
                                       const std::vector<double>& refine_near = {});

} // namespace peo

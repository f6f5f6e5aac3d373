#pragma once

#include "peo/piecewise.hpp"

#include <nlohmann/json_fwd.hpp>
#include <string_view>

namespace peo {

/// A full problem instance: inflow rate c, cost weight w (sharing one
/// period), base decay delta, and the mean-effort budget eta_bar.
struct ProblemData {
    PeriodicPiecewise c;
    PeriodicPiecewise w;
    double delta = 1.0;
    double eta_bar = 1.0;

    double period() const { return c.period(); }

    /// Throws unless c and w share a period, delta > 0, eta_bar > 0 and the
    /// one-sided limits of c and w are strictly positive.
    void validate() const;

    ProblemData with_eta_bar(double eb) const {
        ProblemData q = *this;
        q.eta_bar = eb;
        return q;
    }
};

/// Instances used throughout: inflow profiles behind the worked figures,
/// always with w == 1, delta = 1, T = 1. eta_bar defaults to 1; callers
/// rebind it per run.
///   fig1                 c(t) = 1 - 0.9 cos(2 pi t)
///   fig2_sawtooth        c = t+1 on [0,.5), t on [.5,1)        (downward jump)
///   fig3_rising_sawtooth c = 1-t on [0,.5), 2-t on [.5,1)      (upward jump)
///   fig4_square          c = 0.25 / 1.75 / 0.25 on quarters    (both jumps)
///   fig6_tent            c = 1+3t on [0,.5), 3-2t on [.5,1)    (rise, drop, fall)
ProblemData preset(std::string_view name);

ProblemData problem_from_json(const nlohmann::json& j);
nlohmann::json problem_to_json(const ProblemData& p);

} // namespace peo

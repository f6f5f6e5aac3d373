#include "peo/forward.hpp"

#include <algorithm>
#include <stdexcept>

namespace peo {

double StateTrajectory::max() const { return *std::max_element(S.begin(), S.end()); }
double StateTrajectory::min() const { return *std::min_element(S.begin(), S.end()); }

StateTrajectory periodic_state(const ProblemData& p, const EffortProfile& a) {
    require_bound(p, a);
    auto s = make_samples(p, a);
    auto cu = build_cumulants(s);
    StateTrajectory st;
    st.grid = a.grid;
    st.t = s.t;
    st.S = state_values(s, cu);
    return st;
}

double cost(const ProblemData& p, const EffortProfile& a) {
    require_bound(p, a);
    auto s = make_samples(p, a);
    auto cu = build_cumulants(s);
    return cost_value(s, state_values(s, cu));
}

std::vector<double> cost_along_segment(const ProblemData& p, const EffortProfile& a,
                                       const EffortProfile& b, std::span<const double> eps_list) {
    require_bound(p, a);
    require_bound(p, b);
    if (a.grid->nodes != b.grid->nodes)
        throw std::invalid_argument("segment endpoints must share a grid");

    // union of atom locations so masses blend componentwise
    auto mass_of = [](const EffortProfile& q, double t) {
        double m = 0.0;
        for (const auto& at : q.atoms)
            if (at.t == t) m += at.mass;
        return m;
    };
    std::vector<double> locs;
    for (const auto& at : a.atoms) locs.push_back(at.t);
    for (const auto& at : b.atoms) locs.push_back(at.t);
    std::sort(locs.begin(), locs.end());
    locs.erase(std::unique(locs.begin(), locs.end()), locs.end());

    std::vector<double> out;
    out.reserve(eps_list.size());
    for (double eps : eps_list) {
        if (eps < 0.0 || eps > 1.0) throw std::invalid_argument("eps must lie in [0,1]");
        EffortProfile blend;
        blend.grid = a.grid;
        blend.alpha.resize(a.alpha.size());
        for (std::size_t i = 0; i < a.alpha.size(); ++i)
            blend.alpha[i] = (1.0 - eps) * a.alpha[i] + eps * b.alpha[i];
        for (double t : locs) {
            double m = (1.0 - eps) * mass_of(a, t) + eps * mass_of(b, t);
            if (m > 0.0) blend.atoms.push_back(Atom{t, m});
        }
        out.push_back(cost(p, blend));
    }
    return out;
}

} // namespace peo

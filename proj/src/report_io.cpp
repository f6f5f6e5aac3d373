#include "peo/report_io.hpp"

#include "peo/kernel.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace peo {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string run_csv(const ProblemData& p, const EffortProfile& a) {
    auto s = make_samples(p, a);
    auto cu = build_cumulants(s);
    auto S = state_values(s, cu);
    auto h = h_values(s, cu, S);
    auto psi = psi_prefix_values(s, h);

    std::string out = "t,alpha,eta,S,psi,h\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
        double eta = 0.0;
        if (i + 1 < s.size()) {
            double dt = s.t[i + 1] - s.t[i];
            if (dt > 0.0) eta = (s.alpha[i + 1] - s.alpha[i]) / dt;
        }
        out += format_double(s.t[i]);
        out += ',';
        out += format_double(s.alpha[i]);
        out += ',';
        out += format_double(eta);
        out += ',';
        out += format_double(S[i]);
        out += ',';
        out += format_double(psi[i]);
        out += ',';
        out += format_double(h[i]);
        out += '\n';
    }
    return out;
}

std::string profile_csv(const EffortProfile& a) {
    std::string out = "t,alpha,eta\n";
    const auto& g = *a.grid;
    for (std::size_t i = 0; i < g.size(); ++i) {
        double eta = 0.0;
        if (i + 1 < g.size()) {
            double dt = g.nodes[i + 1] - g.nodes[i];
            if (dt > 0.0) eta = (a.alpha[i + 1] - a.alpha[i]) / dt;
        }
        out += format_double(g.nodes[i]);
        out += ',';
        out += format_double(a.alpha[i]);
        out += ',';
        out += format_double(eta);
        out += '\n';
    }
    return out;
}

nlohmann::json atoms_json(const std::vector<Atom>& atoms) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& at : atoms) arr.push_back({{"t", at.t}, {"mass", at.mass}});
    return nlohmann::json{{"atoms", arr}};
}

nlohmann::json support_json(const SupportSet& s) {
    nlohmann::json intervals = nlohmann::json::array();
    for (auto [a, b] : s.intervals) intervals.push_back({a, b});
    return {{"intervals", intervals}, {"atom_points", s.atom_points}};
}

EffortProfile profile_from_csv(const std::string& text, std::shared_ptr<const Grid> grid) {
    std::istringstream in(text);
    std::string line;
    std::vector<double> ts, as;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line.find("t,") == 0 || line.find("t;") == 0) continue; // header
        }
        std::istringstream row(line);
        std::string cell;
        std::vector<double> vals;
        while (std::getline(row, cell, ',')) vals.push_back(std::stod(cell));
        if (vals.size() < 2) throw std::invalid_argument("profile CSV rows need t,alpha");
        ts.push_back(vals[0]);
        as.push_back(vals[1]);
    }
    if (ts.size() < 2) throw std::invalid_argument("profile CSV has too few rows");

    // cumulative value at time t with one-sided selection at repeated rows
    auto value = [&](double t, Side side) {
        if (t <= ts.front()) return as.front();
        if (t >= ts.back()) return as.back();
        std::size_t j = 1;
        while (j < ts.size() && ts[j] < t) ++j;
        // rows j-1 < t <= ts[j]
        if (ts[j] == t) {
            std::size_t lo = j, hi = j;
            while (hi + 1 < ts.size() && ts[hi + 1] == t) ++hi;
            return (side == Side::left) ? as[lo] : as[hi];
        }
        double u = (t - ts[j - 1]) / (ts[j] - ts[j - 1]);
        return as[j - 1] + u * (as[j] - as[j - 1]);
    };

    EffortProfile p;
    p.grid = std::move(grid);
    p.alpha.resize(p.grid->size());
    for (std::size_t i = 0; i < p.grid->size(); ++i)
        p.alpha[i] = value(p.grid->nodes[i], p.grid->node_side(i)) - as.front();
    // repair any rounding-induced non-monotonicity from resampling
    for (std::size_t i = 0; i + 1 < p.alpha.size(); ++i)
        p.alpha[i + 1] = std::max(p.alpha[i + 1], p.alpha[i]);
    p.alpha[0] = 0.0;
    return p;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << content;
}

} // namespace peo

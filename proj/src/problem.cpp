#include "peo/problem.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace peo {

namespace {

void check_positive(const PeriodicPiecewise& f, const char* name) {
    // one-sided limits at every breakpoint, plus a dense sample per piece
    for (double b : f.breakpoints()) {
        if (!(f.eval(b, Side::left) > 0.0) || !(f.eval(b, Side::right) > 0.0))
            throw std::invalid_argument(std::string(name) + " must have positive one-sided limits");
    }
    auto bps = f.breakpoints();
    bps.push_back(f.period());
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
        for (int k = 0; k < 64; ++k) {
            double t = bps[i] + (bps[i + 1] - bps[i]) * (k + 0.5) / 64.0;
            if (!(f.eval(t) > 0.0))
                throw std::invalid_argument(std::string(name) + " must be strictly positive");
        }
    }
}

} // namespace

void ProblemData::validate() const {
    if (c.period() != w.period())
        throw std::invalid_argument("c and w must share the same period");
    if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
    if (!(eta_bar > 0.0)) throw std::invalid_argument("eta_bar must be positive");
    check_positive(c, "c");
    check_positive(w, "w");
}

ProblemData preset(std::string_view name) {
    const double two_pi = 2.0 * std::numbers::pi;
    auto one = PeriodicPiecewise::constant(1.0, 1.0);
    if (name == "fig1") {
        PeriodicPiecewise c(1.0, {Piece{0.0, PieceKind::cosine, {1.0, -0.9, two_pi}}});
        return ProblemData{c, one, 1.0, 1.0};
    }
    if (name == "fig2_sawtooth") {
        PeriodicPiecewise c(1.0, {Piece{0.0, PieceKind::polynomial, {1.0, 1.0}},
                                  Piece{0.5, PieceKind::polynomial, {0.0, 1.0}}});
        return ProblemData{c, one, 1.0, 1.0};
    }
    if (name == "fig3_rising_sawtooth") {
        PeriodicPiecewise c(1.0, {Piece{0.0, PieceKind::polynomial, {1.0, -1.0}},
                                  Piece{0.5, PieceKind::polynomial, {2.0, -1.0}}});
        return ProblemData{c, one, 1.0, 1.0};
    }
    if (name == "fig4_square") {
        PeriodicPiecewise c(1.0, {Piece{0.0, PieceKind::constant, {0.25}},
                                  Piece{0.25, PieceKind::constant, {1.75}},
                                  Piece{0.75, PieceKind::constant, {0.25}}});
        return ProblemData{c, one, 1.0, 1.0};
    }
    if (name == "fig6_tent") {
        PeriodicPiecewise c(1.0, {Piece{0.0, PieceKind::polynomial, {1.0, 3.0}},
                                  Piece{0.5, PieceKind::polynomial, {3.0, -2.0}}});
        return ProblemData{c, one, 1.0, 1.0};
    }
    throw std::invalid_argument("unknown preset: " + std::string(name));
}

namespace {

PieceKind kind_from_string(const std::string& s) {
    if (s == "const") return PieceKind::constant;
    if (s == "poly") return PieceKind::polynomial;
    if (s == "cos") return PieceKind::cosine;
    if (s == "sin") return PieceKind::sine;
    throw std::invalid_argument("unknown piece kind: " + s);
}

std::string kind_to_string(PieceKind k) {
    switch (k) {
    case PieceKind::constant: return "const";
    case PieceKind::polynomial: return "poly";
    case PieceKind::cosine: return "cos";
    case PieceKind::sine: return "sin";
    }
    return "?";
}

PeriodicPiecewise function_from_json(const nlohmann::json& arr, double period) {
    if (!arr.is_array() || arr.empty())
        throw std::invalid_argument("piecewise function must be a non-empty array of pieces");
    std::vector<Piece> pieces;
    for (const auto& pj : arr) {
        Piece p;
        p.start = pj.at("t").get<double>();
        p.kind = kind_from_string(pj.at("kind").get<std::string>());
        p.coeffs = pj.at("coeffs").get<std::vector<double>>();
        pieces.push_back(std::move(p));
    }
    return PeriodicPiecewise(period, std::move(pieces));
}

nlohmann::json function_to_json(const PeriodicPiecewise& f) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : f.pieces())
        arr.push_back({{"t", p.start}, {"kind", kind_to_string(p.kind)}, {"coeffs", p.coeffs}});
    return arr;
}

} // namespace

ProblemData problem_from_json(const nlohmann::json& j) {
    double period = j.at("period").get<double>();
    ProblemData p{function_from_json(j.at("c"), period),
                  j.contains("w") ? function_from_json(j.at("w"), period)
                                  : PeriodicPiecewise::constant(1.0, period),
                  j.at("delta").get<double>(),
                  j.value("eta_bar", 1.0)};
    p.validate();
    return p;
}

nlohmann::json problem_to_json(const ProblemData& p) {
    return {{"period", p.period()},
            {"delta", p.delta},
            {"eta_bar", p.eta_bar},
            {"c", function_to_json(p.c)},
            {"w", function_to_json(p.w)}};
}

} // namespace peo

#include "peo/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace peo {

double Piece::value(double t) const {
    switch (kind) {
    case PieceKind::constant:
        return coeffs.at(0);
    case PieceKind::polynomial: {
        double v = 0.0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * t + *it;
        return v;
    }
    case PieceKind::cosine:
        return coeffs.at(0) + coeffs.at(1) * std::cos(coeffs.at(2) * t);
    case PieceKind::sine:
        return coeffs.at(0) + coeffs.at(1) * std::sin(coeffs.at(2) * t);
    }
    throw std::logic_error("unreachable piece kind");
}

double Piece::derivative(double t) const {
    switch (kind) {
    case PieceKind::constant:
        return 0.0;
    case PieceKind::polynomial: {
        double v = 0.0;
        for (std::size_t i = coeffs.size(); i-- > 1;) v = v * t + coeffs[i] * static_cast<double>(i);
        return v;
    }
    case PieceKind::cosine:
        return -coeffs.at(1) * coeffs.at(2) * std::sin(coeffs.at(2) * t);
    case PieceKind::sine:
        return coeffs.at(1) * coeffs.at(2) * std::cos(coeffs.at(2) * t);
    }
    throw std::logic_error("unreachable piece kind");
}

double reduce_mod_period(double t, double period) {
    double r = t - period * std::floor(t / period);
    if (r >= period) r -= period; // guard the rounding edge t/period just below an integer
    if (r < 0.0) r = 0.0;
    return r;
}

PeriodicPiecewise::PeriodicPiecewise(double period, std::vector<Piece> pieces)
    : period_(period), pieces_(std::move(pieces)) {
    if (!(period_ > 0.0)) throw std::invalid_argument("period must be positive");
    if (pieces_.empty()) throw std::invalid_argument("piecewise function needs at least one piece");
    if (pieces_.front().start != 0.0)
        throw std::invalid_argument("first breakpoint must be 0");
    for (std::size_t i = 1; i < pieces_.size(); ++i)
        if (!(pieces_[i].start > pieces_[i - 1].start))
            throw std::invalid_argument("breakpoints must be strictly increasing");
    if (!(pieces_.back().start < period_))
        throw std::invalid_argument("breakpoints must lie in [0, period)");
    for (const auto& p : pieces_) {
        std::size_t need = (p.kind == PieceKind::constant) ? 1
                         : (p.kind == PieceKind::polynomial) ? 1
                                                             : 3;
        if (p.coeffs.size() < need) throw std::invalid_argument("piece has too few coefficients");
    }
}

PeriodicPiecewise PeriodicPiecewise::constant(double value, double period) {
    return PeriodicPiecewise(period, {Piece{0.0, PieceKind::constant, {value}}});
}

std::size_t PeriodicPiecewise::piece_index(double tr, Side side, double* t_eval) const {
    // pieces_[i] owns [start_i, start_{i+1})
    auto it = std::upper_bound(pieces_.begin(), pieces_.end(), tr,
                               [](double v, const Piece& p) { return v < p.start; });
    std::size_t idx = static_cast<std::size_t>(it - pieces_.begin());
    idx = (idx == 0) ? 0 : idx - 1;
    *t_eval = tr;
    if (side == Side::left && tr == pieces_[idx].start) {
        // left limit at a breakpoint comes from the previous piece; at t = 0
        // that wraps to the last piece evaluated at t = period
        if (idx == 0) {
            *t_eval = period_;
            return pieces_.size() - 1;
        }
        return idx - 1;
    }
    return idx;
}

double PeriodicPiecewise::eval(double t, Side side) const {
    double te;
    std::size_t idx = piece_index(reduce_mod_period(t, period_), side, &te);
    return pieces_[idx].value(te);
}

double PeriodicPiecewise::derivative(double t, Side side) const {
    double te;
    std::size_t idx = piece_index(reduce_mod_period(t, period_), side, &te);
    return pieces_[idx].derivative(te);
}

std::vector<double> PeriodicPiecewise::breakpoints() const {
    std::vector<double> b;
    b.reserve(pieces_.size());
    for (const auto& p : pieces_) b.push_back(p.start);
    return b;
}

bool PeriodicPiecewise::continuous_at(double breakpoint, double rel_tol) const {
    double l = eval(breakpoint, Side::left);
    double r = eval(breakpoint, Side::right);
    double scale = std::max({std::abs(l), std::abs(r), 1.0});
    return std::abs(l - r) <= rel_tol * scale;
}

bool PeriodicPiecewise::is_constant() const {
    if (pieces_.size() == 1 && pieces_[0].kind == PieceKind::constant) return true;
    if (pieces_.size() == 1 && pieces_[0].kind == PieceKind::polynomial) {
        for (std::size_t i = 1; i < pieces_[0].coeffs.size(); ++i)
            if (pieces_[0].coeffs[i] != 0.0) return false;
        return true;
    }
    return false;
}

} // namespace peo

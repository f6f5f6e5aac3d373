#pragma once

#include <string>
#include <vector>

namespace peo {

/// Which one-sided limit to take when evaluating at a discontinuity.
enum class Side { left, right };

enum class PieceKind { constant, polynomial, cosine, sine };

/// One piece of a periodic piecewise-smooth function, valid on
/// [start, next_start). Supported forms:
///   constant    coeffs = {a}
///   polynomial  coeffs = {a0, a1, ...}            a0 + a1*t + ...
///   cosine      coeffs = {a, b, omega}            a + b*cos(omega*t)
///   sine        coeffs = {a, b, omega}            a + b*sin(omega*t)
/// Expressions are evaluated in absolute time, so a piece's value at its
/// own breakpoint is the right-hand limit there.
struct Piece {
    double start = 0.0;
    PieceKind kind = PieceKind::constant;
    std::vector<double> coeffs;

    double value(double t) const;
    double derivative(double t) const;
};

/// A T-periodic function assembled from closed-form pieces. Breakpoints are
/// strictly increasing and the first piece starts at 0. One-sided limits
/// exist everywhere; pieces carry exact derivatives, which downstream code
/// needs for the logarithmic-derivative terms.
class PeriodicPiecewise {
public:
    PeriodicPiecewise(double period, std::vector<Piece> pieces);

    static PeriodicPiecewise constant(double value, double period);

    double period() const { return period_; }
    const std::vector<Piece>& pieces() const { return pieces_; }

    /// One-sided evaluation after reducing t modulo the period.
    double eval(double t, Side side = Side::right) const;

    /// One-sided value of the classical derivative (piecewise closed form).
    double derivative(double t, Side side = Side::right) const;

    /// Piece start times in [0, period), including 0.
    std::vector<double> breakpoints() const;

    /// True when the one-sided limits agree at the given breakpoint
    /// (also checks the wrap-around point t = 0).
    bool continuous_at(double breakpoint, double rel_tol = 1e-12) const;

    bool is_constant() const;

private:
    double period_;
    std::vector<Piece> pieces_;

    // index of the piece owning the reduced time, with side selection
    std::size_t piece_index(double t_reduced, Side side, double* t_eval) const;
};

/// Reduce t to [0, period) with an explicit floor so negative times work.
double reduce_mod_period(double t, double period);

} // namespace peo

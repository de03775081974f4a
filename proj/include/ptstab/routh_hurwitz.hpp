#pragma once

#include "ptstab/core.hpp"

namespace ptstab {

/// Hurwitz conditions for  lambda^4 + a3 lambda^3 + a2 lambda^2 + a1 lambda + a0:
///   h1 = a3,  h2 = a0,  h3 = a3 a2 - a1,  h4 = a1 (a3 a2 - a1) - a3^2 a0.
/// All roots lie in the open left half-plane iff every h_i > 0. h4 is the
/// minor that vanishes on a flutter boundary.
struct HurwitzReport {
    double h1 = 0.0, h2 = 0.0, h3 = 0.0, h4 = 0.0;
    bool stable = false;
};

HurwitzReport hurwitz(const Quartic& q);

inline bool hurwitz_stable(const Quartic& q) { return hurwitz(q).stable; }

/// Squared critical damping scale for D = delta * Dtilde:
///   ((tr K Dt - s1 tr Dt)(tr K Dt - s2 tr Dt)) / (-det Dt tr Dt (tr K Dt - tr K tr Dt)),
/// s1, s2 the eigenvalues of K. A negative value means no finite threshold
/// (stable for every delta > 0 when tr Dt > 0). Throws DegenerateError when the
/// denominator vanishes.
double delta_cr_squared(const Mat2& dtilde, const Mat2& stiffness);

/// Marginal-stability limit |sqrt(s1) - sqrt(s2)| / sqrt(-det Dt) of the balanced
/// gain/loss system. Requires tr Dt = 0 and tr K Dt = 0 (to 1e-10 (1 + |K|)),
/// det Dt < 0 and K positive semidefinite; throws DomainError naming the
/// violated condition otherwise.
double delta_pt(const Mat2& dtilde, const Mat2& stiffness);

}  // namespace ptstab

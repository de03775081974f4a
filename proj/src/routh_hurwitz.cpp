#include "ptstab/routh_hurwitz.hpp"

#include <algorithm>
#include <cmath>

#include "ptstab/error.hpp"

namespace ptstab {

HurwitzReport hurwitz(const Quartic& q) {
    const double a3 = q.c3(), a2 = q.c2(), a1 = q.c1(), a0 = q.c0();
    HurwitzReport r;
    r.h1 = a3;
    r.h2 = a0;
    r.h3 = a3 * a2 - a1;
    r.h4 = a1 * r.h3 - a3 * a3 * a0;
    r.stable = r.h1 > 0.0 && r.h2 > 0.0 && r.h3 > 0.0 && r.h4 > 0.0;
    return r;
}

double delta_cr_squared(const Mat2& dtilde, const Mat2& stiffness) {
    const auto [s1, s2] = stiffness.symmetric_eigenvalues();
    const double tr_d = dtilde.trace();
    const double tr_kd = (stiffness * dtilde).trace();
    const double denom = -dtilde.det() * tr_d * (tr_kd - stiffness.trace() * tr_d);
    if (denom == 0.0) throw DegenerateError("delta_cr_squared: det Dt * tr Dt * (tr K Dt - tr K tr Dt) vanishes");
    return (tr_kd - s1 * tr_d) * (tr_kd - s2 * tr_d) / denom;
}

double delta_pt(const Mat2& dtilde, const Mat2& stiffness) {
    if (!stiffness.is_symmetric()) throw DomainError("delta_pt: K is not symmetric");
    const double knorm = std::max({std::abs(stiffness.m11), std::abs(stiffness.m12), std::abs(stiffness.m22)});
    const double tol = 1e-10 * (1.0 + knorm);
    if (std::abs(dtilde.trace()) > tol) throw DomainError("delta_pt: tr Dt != 0");
    if (std::abs((stiffness * dtilde).trace()) > tol) throw DomainError("delta_pt: tr K Dt != 0");
    if (!(dtilde.det() < 0.0)) throw DomainError("delta_pt: det Dt >= 0 (damping is not indefinite)");
    const auto [s1, s2] = stiffness.symmetric_eigenvalues();
    if (s1 < 0.0) throw DomainError("delta_pt: K has a negative eigenvalue");
    // On this locus the quartic is biquadratic in lambda with middle coefficient
    // tr K + delta^2 det Dt; both lambda^2 roots are real negative iff
    // delta^2 (-det Dt) < (sqrt s1 - sqrt s2)^2.
    return std::abs(std::sqrt(s1) - std::sqrt(s2)) / std::sqrt(-dtilde.det());
}

}  // namespace ptstab

#include "ptstab/potential.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ptstab/error.hpp"
#include "ptstab/polynomial.hpp"
#include "ptstab/routh_hurwitz.hpp"
#include "ptstab/sweep.hpp"

namespace ptstab::potential {

namespace {

HurwitzReport hurwitz_at(double k1, double X, double Y, double k2, double kappa) {
    return hurwitz(char_poly(to_system({k1, k2, kappa, X, Y})));
}

// Neville extrapolation to zero through (x[i], y[i]).
double extrapolate_to_zero(std::span<const double> x, std::span<const double> y) {
    std::vector<double> p(y.begin(), y.end());
    const std::size_t n = p.size();
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = 0; i + level < n; ++i) {
            const std::size_t j = i + level;
            p[i] = (x[i] * p[i + 1] - x[j] * p[i]) / (x[i] - x[j]);
        }
    return p[0];
}

}  // namespace

SystemSpec to_system(const PotentialParams& p) {
    return SystemSpec(Mat2::diag(p.delta1(), p.delta2()), Mat2::symmetric(p.k1, p.kappa, p.k2), 0.0);
}

SystemSpec balanced_system(double delta, double k, double kappa) {
    return SystemSpec(Mat2::diag(-delta, delta), Mat2::symmetric(k, kappa, k), 0.0);
}

Eigen::Matrix4cd hamiltonian_form(double delta, double k, double kappa) {
    const cplx i{0.0, 1.0};
    Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
    h(0, 2) = i;
    h(1, 3) = i;
    h(2, 0) = -i * k;
    h(2, 1) = kappa;
    h(2, 3) = i * delta;
    h(3, 0) = -kappa;
    h(3, 1) = -i * k;
    h(3, 2) = i * delta;
    return h;
}

Eigen::Matrix4cd parity() {
    Eigen::Matrix4cd p = Eigen::Matrix4cd::Zero();
    p(0, 0) = 1.0;
    p(1, 1) = -1.0;
    p(2, 2) = -1.0;
    p(3, 3) = 1.0;
    return p;
}

EPPair ep_interval(double k2, double kappa) {
    const double s1 = k2 - std::abs(kappa);
    const double s2 = k2 + std::abs(kappa);
    if (!(s1 > 0.0)) throw DomainError("ep_interval: k2 - |kappa| <= 0, divergence already at zero damping");
    const double r1 = std::sqrt(s1), r2 = std::sqrt(s2);
    return {2.0 * (r2 - r1), 2.0 * (r2 + r1), cplx{0.0, std::sqrt(r1 * r2)}};
}

std::array<double, 3> boundary_quadratic(double X, double Y, double k2, double kappa) {
    const double d1 = 0.5 * (X + Y), d2 = 0.5 * (X - Y);
    const double a = d1 * d2;
    return {a * k2 * (k2 + X * d1) + X * X * kappa * kappa, a * (X * d2 - 2.0 * k2), a};
}

std::vector<BoundaryRoot> boundary_k1(double X, double Y, double k2, double kappa) {
    if (!(X > 0.0)) throw DomainError("boundary_k1: requires X > 0 (tr D > 0)");
    const auto q = boundary_quadratic(X, Y, k2, kappa);

    std::vector<double> candidates = poly::real_roots(q);
    const double qscale = std::max({std::abs(q[0]), std::abs(q[1]), std::abs(q[2])});
    if (std::abs(q[2]) <= 1e-14 * qscale && std::abs(q[1]) <= 1e-14 * qscale) {
        // Analytic form degenerates (d1 d2 = 0); fall back to scanning the predicate.
        const double w = 4.0 * (std::abs(k2) + std::abs(kappa) + 1.0);
        auto stable = [&](double k1) { return hurwitz_at(k1, X, Y, k2, kappa).stable; };
        candidates.clear();
        for (const auto& t : find_transitions(stable, k2 - w, k2 + w, 256, 1e-13)) candidates.push_back(t.value);
    }

    std::vector<BoundaryRoot> out;
    for (double k1 : candidates) {
        // One Newton step against the minor of the assembled system.
        const double f = hurwitz_at(k1, X, Y, k2, kappa).h4;
        const double df = 2.0 * q[2] * k1 + q[1];
        if (df != 0.0) {
            const double trial = k1 - f / df;
            if (std::abs(hurwitz_at(trial, X, Y, k2, kappa).h4) < std::abs(f)) k1 = trial;
        }
        const HurwitzReport h = hurwitz_at(k1, X, Y, k2, kappa);
        if (!(h.h1 > 0.0 && h.h2 > 0.0 && h.h3 > 0.0)) continue;

        BoundaryRoot r;
        r.k1 = k1;
        r.residual = std::abs(h.h4);
        const double probe = 1e-4 * std::max(1.0, std::abs(k1));
        const bool above = hurwitz_at(k1 + probe, X, Y, k2, kappa).stable;
        const bool below = hurwitz_at(k1 - probe, X, Y, k2, kappa).stable;
        r.stable_side = above == below ? StableSide::None : (above ? StableSide::Above : StableSide::Below);
        out.push_back(r);
    }
    std::sort(out.begin(), out.end(), [](const BoundaryRoot& a, const BoundaryRoot& b) { return a.k1 < b.k1; });
    return out;
}

double conoid_linear(double X, double Y, double k2, double kappa, Branch branch) {
    if (Y == 0.0) throw DomainError("conoid_linear: Y = 0 is the axis of the conoid");
    const EPPair ep = ep_interval(k2, kappa);
    const double y2 = Y * Y;
    const double radicand = (y2 - ep.y_minus * ep.y_minus) * (y2 - ep.y_plus * ep.y_plus);
    if (radicand < 0.0) throw DomainError("conoid_linear: Y inside the flutter band, no real sheet");
    const double root = std::sqrt(radicand);
    return k2 + 0.25 * (X / Y) * (y2 + (branch == Branch::Plus ? root : -root));
}

ConoidPoint plucker_canonical(double k2, double kappa, double rho, double phi) {
    if (!(rho >= 0.0)) throw DomainError("plucker_canonical: rho must be non-negative");
    if (!(k2 > 0.0)) throw DomainError("plucker_canonical: k2 must be positive");
    const double sk = std::sqrt(k2);
    return {k2 + rho * std::cos(phi), rho * std::sin(phi) / sk, 2.0 * kappa * std::sin(phi) / sk};
}

double critical_y(double k1, double X, double k2, double kappa, Side side, double y_max, std::size_t scan_points,
                  double tol) {
    const double dir = side == Side::Upper ? 1.0 : -1.0;
    auto stable = [&](double y) { return hurwitz_at(k1, X, dir * y, k2, kappa).stable; };
    if (!stable(0.0)) throw DomainError("critical_y: not asymptotically stable at Y = 0");
    const auto grid = linspace(0.0, y_max, scan_points);
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!stable(grid[i])) return dir * bisect_transition(stable, grid[i - 1], grid[i], tol).value;
    throw ConvergenceError("critical_y: no loss of stability up to |Y| = y_max");
}

RayLimit ray_limit(double slope, Side side, double k2, double kappa, const RayOptions& opts) {
    if (slope == 0.0 || !std::isfinite(slope)) throw DomainError("ray_limit: slope must be finite and non-zero");
    if (opts.levels < 4) throw DomainError("ray_limit: need at least four levels");
    const double y_max = ep_interval(k2, kappa).y_plus + 1.0;

    RayLimit out;
    double rho = opts.rho0;
    for (int n = 0; n < opts.levels; ++n, rho *= 0.5) {
        out.rho.push_back(rho);
        out.y_critical.push_back(
            critical_y(k2 + rho / slope, rho, k2, kappa, side, y_max, opts.scan_points, opts.bisect_tol));
    }

    const auto& y = out.y_critical;
    bool increasing = true, decreasing = true;
    for (std::size_t i = 1; i < y.size(); ++i) {
        const double d = y[i] - y[i - 1];
        if (d < -opts.monotone_tol) increasing = false;
        if (d > opts.monotone_tol) decreasing = false;
    }
    if (!increasing && !decreasing) {
        std::ostringstream msg;
        msg.precision(12);
        msg << "ray_limit: threshold sequence is not monotone:";
        for (std::size_t i = 0; i < y.size(); ++i) msg << " (" << out.rho[i] << ", " << y[i] << ")";
        throw ConvergenceError(msg.str());
    }

    const std::size_t n = y.size();
    const std::span<const double> xr(out.rho), yr(out.y_critical);
    const double t3 = extrapolate_to_zero(xr.subspan(n - 4), yr.subspan(n - 4));
    const double t2 = extrapolate_to_zero(xr.subspan(n - 3), yr.subspan(n - 3));
    out.y_limit = t3;
    out.error_estimate = std::abs(t3 - t2);
    return out;
}

}  // namespace ptstab::potential

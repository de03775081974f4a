#include "ptstab/nls.hpp"

#include <algorithm>
#include <cmath>

#include "ptstab/error.hpp"
#include "ptstab/polynomial.hpp"
#include "ptstab/routh_hurwitz.hpp"

namespace ptstab::nls {

namespace {

constexpr double kConfirmOffset = 1e-6;

Eigen::Matrix2d j2() {
    Eigen::Matrix2d j;
    j << 0.0, -1.0, 1.0, 0.0;
    return j;
}

double h4_minor(const NLSParams& p) { return hurwitz(char_poly(assemble_linearization(p))).h4; }

}  // namespace

double NLSParams::u0_norm() const { return std::hypot(u0[0], u0[1]); }

NLSParams NLSParams::with_amplitude(double norm) const {
    NLSParams out = *this;
    const double n = u0_norm();
    if (n > 0.0)
        out.u0 = {u0[0] * norm / n, u0[1] * norm / n};
    else
        out.u0 = {norm, 0.0};
    return out;
}

NLSParams NLSParams::with_losses(double a_, double c_) const {
    NLSParams out = *this;
    out.a = a_;
    out.c = c_;
    return out;
}

void NLSParams::validate() const {
    for (double v : {alpha, gamma, a, c, k, sigma, u0[0], u0[1]})
        if (!std::isfinite(v)) throw DomainError("NLSParams: non-finite parameter");
    if (!(alpha > 0.0)) throw DomainError("NLSParams: alpha must be positive");
    if (!(gamma > 0.0)) throw DomainError("NLSParams: gamma must be positive");
    if (!(sigma > 0.0)) throw DomainError("NLSParams: sigma must be positive");
}

Eigen::Matrix4d assemble_linearization(const NLSParams& p) {
    p.validate();
    const Eigen::Matrix2d I = Eigen::Matrix2d::Identity();
    const Eigen::Matrix2d J = j2();
    const Eigen::Vector2d u(p.u0[0], p.u0[1]);
    const Eigen::Matrix2d U = u * u.transpose();
    const double s2 = p.sigma * p.sigma;

    const Eigen::Matrix2d A = -p.a * s2 * I - p.alpha * s2 * J + 2.0 * p.gamma * J * U - 2.0 * p.c * U;
    const Eigen::Matrix2d B = -2.0 * p.alpha * p.k * p.sigma * I + 2.0 * p.k * p.a * p.sigma * J;

    Eigen::Matrix4d m;
    m << A, B, -B, A;
    return m;
}

bool hurwitz_stable(const NLSParams& p) { return hurwitz(char_poly(assemble_linearization(p))).stable; }

std::array<cplx, 4> ideal_spectrum(const NLSParams& p) {
    p.validate();
    if (p.a != 0.0 || p.c != 0.0) throw DomainError("ideal_spectrum: requires a = c = 0");
    const double si = p.alpha * p.sigma * p.sigma / (2.0 * p.gamma);
    const cplx i{0.0, 1.0};
    const cplx carrier = i * (2.0 * p.alpha * p.k * p.sigma);
    const cplx split = i * p.sigma * std::sqrt(cplx{2.0 * p.alpha * p.gamma * (si - p.u0_norm_sq())});
    return {carrier + split, carrier - split, -carrier + split, -carrier - split};
}

double ideal_threshold(const NLSParams& p) {
    p.validate();
    return std::sqrt(p.alpha * p.sigma * p.sigma / (2.0 * p.gamma));
}

SystemSpec as_gyro_system(const NLSParams& p) {
    p.validate();
    if (p.a != 0.0 || p.c != 0.0) throw DomainError("as_gyro_system: requires a = c = 0");
    const double u1 = p.u0[0], u2 = p.u0[1];
    const double n2 = p.u0_norm_sq();
    // U J - J U = [[2 u1 u2, u2^2 - u1^2], [u2^2 - u1^2, -2 u1 u2]]
    const double g2 = 2.0 * p.gamma;
    const Mat2 d = Mat2::symmetric(g2 * 2.0 * u1 * u2, g2 * (u2 * u2 - u1 * u1), -g2 * 2.0 * u1 * u2);
    const double kk = 4.0 * p.alpha * p.alpha * p.k * p.k * p.sigma * p.sigma + p.gamma * p.gamma * n2 * n2;
    return SystemSpec(d, kk * Mat2::identity(), p.alpha * p.sigma * p.sigma - p.gamma * n2);
}

std::array<double, 4> threshold_polynomial(const NLSParams& tmpl, double a, double c) {
    const double al = tmpl.alpha, ga = tmpl.gamma, k = tmpl.k, s = tmpl.sigma;
    const double s2 = s * s, k2 = k * k;
    const double c3 = 2.0 * c * c * (c * a - ga * al);
    const double c2 = 4.0 * s2 * c * a * (c * a - ga * al) - 4.0 * a * a * k2 * (ga * ga + c * c) +
                      c * c * s2 * (a * a + al * al);
    const double c1 = 2.0 * a * s2 * (al * s2 * (al * c - ga * a) + 2.0 * s2 * c * a * a + 4.0 * a * k2 * (ga * al - c * a));
    const double c0 = a * a * s2 * s2 * (s2 - 4.0 * k2) * (a * a + al * al);
    return {c0, c1, c2, c3};
}

double threshold_residual(const NLSParams& tmpl, double a, double c, double amplitude) {
    const auto coeffs = threshold_polynomial(tmpl, a, c);
    const double S = amplitude * amplitude;
    double value = 0.0, largest = 0.0, power = 1.0;
    for (double ci : coeffs) {
        value += ci * power;
        largest = std::max(largest, std::abs(ci * power));
        power *= S;
    }
    return largest > 0.0 ? std::abs(value) / largest : std::abs(value);
}

std::vector<ThresholdRoot> dissipative_threshold(const NLSParams& tmpl, double a, double c) {
    tmpl.validate();
    if (a == 0.0 && c == 0.0) throw DomainError("dissipative_threshold: requires (a, c) != (0, 0)");
    const auto coeffs = threshold_polynomial(tmpl, a, c);

    std::vector<ThresholdRoot> out;
    for (double S : poly::real_roots(coeffs)) {
        if (!(S > 0.0)) continue;
        ThresholdRoot r;
        r.amplitude = std::sqrt(S);
        const NLSParams lossy = tmpl.with_losses(a, c);
        r.minor_below = h4_minor(lossy.with_amplitude(r.amplitude - kConfirmOffset));
        r.minor_above = h4_minor(lossy.with_amplitude(r.amplitude + kConfirmOffset));
        r.confirmed = (r.minor_below > 0.0) != (r.minor_above > 0.0);
        out.push_back(r);
    }
    return out;
}

SlopePair boundary_linear_slope(const NLSParams& p) {
    const double si = ideal_threshold(p);
    const double si2 = si * si;
    const double n2 = p.u0_norm_sq();
    if (!(n2 > 0.0)) throw DomainError("boundary_linear_slope: requires |u0| > 0");
    if (!(n2 < si2)) throw DomainError("boundary_linear_slope: requires |u0| < |u0|_i");
    const double bracket = p.k * (2.0 * si2 - n2) / (si * std::sqrt(si2 - n2));
    const double pre = p.sigma / n2;
    return {pre * (-p.sigma + bracket), pre * (-p.sigma - bracket)};
}

double whitney_amplitude(const NLSParams& tmpl, double a, double c, double max_ratio) {
    if (!(c > 0.0)) throw DomainError("whitney_amplitude: requires c > 0");
    if (a < 0.0 || a / c > max_ratio) throw DomainError("whitney_amplitude: requires 0 <= a/c <= max_ratio");
    const double si = ideal_threshold(tmpl);
    const double ratio = a / c;
    return si - 0.5 * (tmpl.k * tmpl.k * tmpl.sigma * tmpl.sigma / (si * si * si)) * ratio * ratio;
}

std::vector<ThresholdCurve> threshold_curves(const NLSParams& tmpl, std::span<const double> a_values,
                                             std::span<const double> c_values) {
    std::vector<ThresholdCurve> curves;
    for (double a : a_values)
        for (double c : c_values) {
            if (a == 0.0 && c == 0.0) continue;
            const auto roots = dissipative_threshold(tmpl, a, c);
            for (std::size_t b = 0; b < roots.size(); ++b) {
                if (curves.size() <= b) curves.push_back({static_cast<int>(b), {}});
                curves[b].samples.push_back({a, c, roots[b].amplitude});
            }
        }
    return curves;
}

}  // namespace ptstab::nls

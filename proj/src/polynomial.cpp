#include "ptstab/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ptstab/error.hpp"

namespace ptstab::poly {

namespace {

template <typename T>
T horner(std::span<const double> c, T x) {
    T acc{0.0};
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

template <typename T>
T horner_derivative(std::span<const double> c, T x) {
    T acc{0.0};
    for (std::size_t i = c.size(); i-- > 1;) acc = acc * x + static_cast<double>(i) * c[i];
    return acc;
}

double abs_scale(std::span<const double> c, double ax) {
    double s = 0.0, p = 1.0;
    for (double ci : c) {
        s += std::abs(ci) * p;
        p *= ax;
    }
    return s;
}

}  // namespace

cplx evaluate(std::span<const double> coeffs, cplx x) { return horner(coeffs, x); }
cplx evaluate_derivative(std::span<const double> coeffs, cplx x) { return horner_derivative(coeffs, x); }
double evaluate(std::span<const double> coeffs, double x) { return horner(coeffs, x); }
double evaluate_derivative(std::span<const double> coeffs, double x) { return horner_derivative(coeffs, x); }

std::array<cplx, 2> monic_quadratic(double b, double c) {
    const double disc = b * b - 4.0 * c;
    if (disc >= 0.0) {
        const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
        if (q == 0.0) return {cplx{0.0}, cplx{0.0}};
        return {cplx{q}, cplx{c / q}};
    }
    const double re = -0.5 * b;
    const double im = 0.5 * std::sqrt(-disc);
    return {cplx{re, im}, cplx{re, -im}};
}

std::vector<double> monic_cubic_real(double a, double b, double c) {
    const std::array<double, 4> coeffs{c, b, a, 1.0};
    const double shift = a / 3.0;
    const double p = b - a * a / 3.0;
    const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    const double disc = 0.25 * q * q + p * p * p / 27.0;

    std::vector<double> out;
    if (disc > 0.0) {
        const double big = -std::copysign(std::cbrt(0.5 * std::abs(q) + std::sqrt(disc)), q);
        const double small = big != 0.0 ? -p / (3.0 * big) : 0.0;
        out.push_back(big + small - shift);
    } else if (p == 0.0) {
        out.push_back(-shift);
    } else {
        const double r = 2.0 * std::sqrt(-p / 3.0);
        const double arg = std::clamp(3.0 * q / (p * r), -1.0, 1.0);
        const double phi = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k)
            out.push_back(r * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0) - shift);
    }
    for (double& x : out) x = polish(coeffs, x, 2);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> real_roots(std::span<const double> coeffs) {
    std::vector<double> c(coeffs.begin(), coeffs.end());
    double cmax = 0.0;
    for (double v : c) cmax = std::max(cmax, std::abs(v));
    if (cmax == 0.0) return {};
    while (!c.empty() && std::abs(c.back()) <= 1e-14 * cmax) c.pop_back();
    if (c.size() > 4) throw DomainError("real_roots: degree above 3");

    // Exact zero roots are deflated so they do not perturb the remaining factor.
    std::vector<double> out;
    while (c.size() > 1 && c.front() == 0.0) {
        out.push_back(0.0);
        c.erase(c.begin());
    }
    switch (c.size()) {
        case 0:
        case 1:
            break;
        case 2:
            out.push_back(-c[0] / c[1]);
            break;
        case 3: {
            const auto r = monic_quadratic(c[1] / c[2], c[0] / c[2]);
            if (r[0].imag() == 0.0) {
                out.push_back(polish(c, r[0].real(), 2));
                out.push_back(polish(c, r[1].real(), 2));
            }
            break;
        }
        case 4:
            for (double x : monic_cubic_real(c[2] / c[3], c[1] / c[3], c[0] / c[3])) out.push_back(polish(c, x, 2));
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<cplx> aberth(std::span<const double> coeffs, int max_iter) {
    if (coeffs.size() < 2 || coeffs.back() == 0.0) throw DomainError("aberth: needs a non-vanishing leading coefficient");
    const std::size_t n = coeffs.size() - 1;
    std::vector<double> c(coeffs.begin(), coeffs.end());
    for (double& v : c) v /= coeffs.back();

    // Start on a circle at the geometric-mean root radius, rotated off the axes.
    const double radius = std::max(std::pow(std::abs(c[0]), 1.0 / static_cast<double>(n)), 1e-3);
    std::vector<cplx> z(n);
    for (std::size_t k = 0; k < n; ++k)
        z[k] = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4);

    for (int it = 0; it < max_iter; ++it) {
        double worst = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const cplx pk = horner(std::span<const double>(c), z[k]);
            if (pk == 0.0) continue;
            const cplx ratio = pk / horner_derivative(std::span<const double>(c), z[k]);
            cplx repulsion{0.0};
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) repulsion += 1.0 / (z[k] - z[j]);
            const cplx step = ratio / (1.0 - ratio * repulsion);
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
            z[k] -= step;
            worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[k])));
        }
        bool residual_ok = true;
        for (const cplx& zk : z)
            if (std::abs(horner(std::span<const double>(c), zk)) > 8e-16 * abs_scale(c, std::abs(zk))) residual_ok = false;
        if (worst < 1e-15 || residual_ok) return z;
    }
    throw ConvergenceError("aberth: iteration cap reached");
}

cplx polish(std::span<const double> coeffs, cplx x, int steps) {
    cplx fx = horner(coeffs, x);
    for (int i = 0; i < steps && fx != 0.0; ++i) {
        const cplx d = horner_derivative(coeffs, x);
        if (d == 0.0) break;
        const cplx trial = x - fx / d;
        const cplx ft = horner(coeffs, trial);
        if (!(std::abs(ft) < std::abs(fx))) break;
        x = trial;
        fx = ft;
    }
    return x;
}

double polish(std::span<const double> coeffs, double x, int steps) {
    double fx = horner(coeffs, x);
    for (int i = 0; i < steps && fx != 0.0; ++i) {
        const double d = horner_derivative(coeffs, x);
        if (d == 0.0) break;
        const double trial = x - fx / d;
        const double ft = horner(coeffs, trial);
        if (!(std::abs(ft) < std::abs(fx))) break;
        x = trial;
        fx = ft;
    }
    return x;
}

}  // namespace ptstab::poly

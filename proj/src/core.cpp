#include "ptstab/core.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <vector>

#include "ptstab/error.hpp"
#include "ptstab/polynomial.hpp"

namespace ptstab {

namespace {

bool finite(const Mat2& m) {
    return std::isfinite(m.m11) && std::isfinite(m.m12) && std::isfinite(m.m21) && std::isfinite(m.m22);
}

// Roots split into real values and representatives (Im > 0) of conjugate pairs.
struct RootStructure {
    std::vector<double> reals;
    std::vector<cplx> pairs;

    void add(cplx z) {
        if (z.imag() == 0.0)
            reals.push_back(z.real());
        else
            pairs.push_back(z.imag() > 0.0 ? z : std::conj(z));
    }

    // Both roots of a real quadratic factor: either two reals or one conjugate pair.
    void add_factor(const std::array<cplx, 2>& r) {
        if (r[0].imag() == 0.0) {
            reals.push_back(r[0].real());
            reals.push_back(r[1].real());
        } else {
            add(r[0]);
        }
    }

    std::array<cplx, 4> expand() const {
        std::array<cplx, 4> out{};
        std::size_t i = 0;
        for (double x : reals) out[i++] = cplx{x};
        for (const cplx& z : pairs) {
            out[i++] = z;
            out[i++] = std::conj(z);
        }
        return out;
    }
};

std::optional<RootStructure> ferrari(const Quartic& q) {
    const double a = q.c3(), b = q.c2(), c = q.c1(), d = q.c0();
    const double shift = 0.25 * a;
    const double a2 = a * a;
    const double p = b - 0.375 * a2;
    const double qq = c - 0.5 * a * b + 0.125 * a2 * a;
    const double r = d - 0.25 * a * c + a2 * b / 16.0 - 3.0 * a2 * a2 / 256.0;

    RootStructure rs;
    if (qq == 0.0) {
        // Biquadratic in y: z = y^2.
        const auto z = poly::monic_quadratic(p, r);
        if (z[0].imag() == 0.0) {
            for (const cplx& zi : z) {
                const double zr = zi.real();
                if (zr >= 0.0) {
                    const double s = std::sqrt(zr);
                    rs.reals.push_back(s - shift);
                    rs.reals.push_back(-s - shift);
                } else {
                    rs.pairs.push_back(cplx{-shift, std::sqrt(-zr)});
                }
            }
        } else {
            cplx w = std::sqrt(z[0]);
            if (w.imag() < 0.0) w = std::conj(w);
            rs.add(w - shift);
            rs.add(-std::conj(w) - shift);
        }
        return rs;
    }

    // Resolvent cubic m^3 + p m^2 + (p^2/4 - r) m - q^2/8 = 0 always has a root m > 0.
    const auto ms = poly::monic_cubic_real(p, 0.25 * p * p - r, -0.125 * qq * qq);
    if (ms.empty() || !(ms.back() > 0.0)) return std::nullopt;
    const double m = ms.back();
    const double s = std::sqrt(2.0 * m);
    const double t1 = 0.5 * p + m - qq / (2.0 * s);
    const double t2 = 0.5 * p + m + qq / (2.0 * s);
    auto f1 = poly::monic_quadratic(s, t1);
    auto f2 = poly::monic_quadratic(-s, t2);
    for (auto* f : {&f1, &f2})
        for (cplx& z : *f) z -= shift;
    rs.add_factor(f1);
    rs.add_factor(f2);
    return rs;
}

// Conjugate structure recovered from an unstructured complex root set.
RootStructure pair_up(std::vector<cplx> z) {
    RootStructure rs;
    while (!z.empty()) {
        auto it = std::max_element(z.begin(), z.end(),
                                   [](const cplx& l, const cplx& r) { return std::abs(l.imag()) < std::abs(r.imag()); });
        const double tol = 1e-7 * std::max(1.0, std::abs(*it));
        if (std::abs(it->imag()) <= tol) {
            for (const cplx& zi : z) rs.reals.push_back(zi.real());
            break;
        }
        const cplx zi = *it;
        z.erase(it);
        auto partner = std::min_element(z.begin(), z.end(), [&](const cplx& l, const cplx& r) {
            return std::abs(l - std::conj(zi)) < std::abs(r - std::conj(zi));
        });
        cplx rep = 0.5 * (zi + std::conj(*partner));
        z.erase(partner);
        rs.pairs.push_back(rep.imag() > 0.0 ? rep : std::conj(rep));
    }
    return rs;
}

void polish_structure(const Quartic& q, RootStructure& rs) {
    const auto c = q.coefficients();
    for (double& x : rs.reals) x = poly::polish(c, x, 2);
    for (cplx& z : rs.pairs) {
        z = poly::polish(c, z, 2);
        if (z.imag() < 0.0) z = std::conj(z);
    }
}

bool passes_residual_gate(const Quartic& q, const RootStructure& rs) {
    if (rs.reals.size() + 2 * rs.pairs.size() != 4) return false;
    for (const cplx& z : rs.expand()) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        const double az = std::abs(z);
        if (std::abs(q(z)) > 1e-10 * std::max(1.0, q.magnitude_scale(az))) return false;
    }
    return true;
}

}  // namespace

std::pair<double, double> Mat2::symmetric_eigenvalues() const {
    const double mean = 0.5 * (m11 + m22);
    const double half_diff = 0.5 * (m11 - m22);
    const double rad = std::hypot(half_diff, m12);
    return {mean - rad, mean + rad};
}

SystemSpec::SystemSpec(const Mat2& damping, const Mat2& stiffness, double omega)
    : damping_(damping), stiffness_(stiffness), omega_(omega) {
    if (!finite(damping) || !finite(stiffness) || !std::isfinite(omega))
        throw DomainError("SystemSpec: non-finite entry");
    if (!damping.is_symmetric()) throw DomainError("SystemSpec: damping matrix is not symmetric");
    if (!stiffness.is_symmetric()) throw DomainError("SystemSpec: stiffness matrix is not symmetric");
}

Quartic::Quartic(double c0, double c1, double c2, double c3) : c_{c0, c1, c2, c3} {
    for (double v : c_)
        if (!std::isfinite(v)) throw DomainError("Quartic: non-finite coefficient");
}

cplx Quartic::operator()(cplx lambda) const {
    const auto c = coefficients();
    return poly::evaluate(c, lambda);
}

cplx Quartic::derivative(cplx lambda) const {
    const auto c = coefficients();
    return poly::evaluate_derivative(c, lambda);
}

double Quartic::magnitude_scale(double abs_lambda) const {
    double s = 0.0, p = 1.0;
    for (double ci : coefficients()) {
        s += std::abs(ci) * p;
        p *= abs_lambda;
    }
    return s;
}

std::string_view to_string(Stability s) {
    switch (s) {
        case Stability::AsymptoticallyStable: return "AsymptoticallyStable";
        case Stability::MarginallyStable: return "MarginallyStable";
        case Stability::Flutter: return "Flutter";
        case Stability::Divergence: return "Divergence";
        case Stability::Degenerate: return "Degenerate";
    }
    return "Unknown";
}

Quartic char_poly(const SystemSpec& sys) {
    const double om = sys.omega();
    const Mat2 g = sys.damping() + (2.0 * om) * Mat2::gyroscopic();
    const Mat2 k = sys.stiffness() - (om * om) * Mat2::identity();
    const double c3 = g.m11 + g.m22;
    const double c2 = k.m11 + k.m22 + g.m11 * g.m22 - g.m12 * g.m21;
    const double c1 = g.m11 * k.m22 + g.m22 * k.m11 - g.m12 * k.m21 - g.m21 * k.m12;
    const double c0 = k.m11 * k.m22 - k.m12 * k.m21;
    return Quartic(c0, c1, c2, c3);
}

Quartic char_poly(const Eigen::Matrix4d& m) {
    std::array<double, 4> c{};
    Eigen::Matrix4d n = Eigen::Matrix4d::Identity();
    for (int k = 1; k <= 4; ++k) {
        const Eigen::Matrix4d mn = m * n;
        const double ck = -mn.trace() / k;
        c[4 - k] = ck;
        n = mn + ck * Eigen::Matrix4d::Identity();
    }
    return Quartic(c[0], c[1], c[2], c[3]);
}

Eigen::Matrix4d first_order_matrix(const SystemSpec& sys) {
    const double om = sys.omega();
    const Mat2 g = sys.damping() + (2.0 * om) * Mat2::gyroscopic();
    const Mat2 k = sys.stiffness() - (om * om) * Mat2::identity();
    Eigen::Matrix4d a = Eigen::Matrix4d::Zero();
    a(0, 2) = 1.0;
    a(1, 3) = 1.0;
    a(2, 0) = -k.m11;
    a(2, 1) = -k.m12;
    a(3, 0) = -k.m21;
    a(3, 1) = -k.m22;
    a(2, 2) = -g.m11;
    a(2, 3) = -g.m12;
    a(3, 2) = -g.m21;
    a(3, 3) = -g.m22;
    return a;
}

std::array<bool, 4> cluster_flags(const std::array<cplx, 4>& roots, double tol) {
    std::array<bool, 4> flags{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            const double scale = std::max({1.0, std::abs(roots[i]), std::abs(roots[j])});
            if (std::abs(roots[i] - roots[j]) <= tol * scale) flags[i] = flags[j] = true;
        }
    return flags;
}

Stability classify(const std::array<cplx, 4>& roots, const std::array<bool, 4>& multiple, double eps) {
    if (!(eps > 0.0)) throw DomainError("classify: eps must be positive");
    bool any_growing = false, real_growing = false, all_decaying = true, all_neutral = true;
    for (const cplx& z : roots) {
        if (z.real() > eps) {
            any_growing = true;
            if (std::abs(z.imag()) <= eps) real_growing = true;
        }
        if (!(z.real() < -eps)) all_decaying = false;
        if (std::abs(z.real()) > eps) all_neutral = false;
    }
    if (real_growing) return Stability::Divergence;
    if (any_growing) return Stability::Flutter;
    if (all_decaying) return Stability::AsymptoticallyStable;
    if (all_neutral) {
        const bool clustered = multiple[0] || multiple[1] || multiple[2] || multiple[3];
        return clustered ? Stability::Degenerate : Stability::MarginallyStable;
    }
    return Stability::Degenerate;
}

Spectrum roots(const Quartic& q, double eps) {
    std::optional<RootStructure> rs = ferrari(q);
    if (rs) polish_structure(q, *rs);
    if (!rs || !passes_residual_gate(q, *rs)) {
        const auto c = q.coefficients();
        rs = pair_up(poly::aberth(c));
        polish_structure(q, *rs);
        if (!passes_residual_gate(q, *rs)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "roots: residual gate failed for quartic (c0..c3) = (" << q.c0() << ", " << q.c1() << ", "
                << q.c2() << ", " << q.c3() << ")";
            throw ConvergenceError(msg.str());
        }
    }

    Spectrum s;
    s.roots = rs->expand();
    std::sort(s.roots.begin(), s.roots.end(), [](const cplx& l, const cplx& r) {
        if (l.imag() != r.imag()) return l.imag() > r.imag();
        return l.real() < r.real();
    });
    s.multiple = cluster_flags(s.roots);
    s.classification = classify(s.roots, s.multiple, eps);
    return s;
}

}  // namespace ptstab

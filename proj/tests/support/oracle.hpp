#pragma once

// Independent reference computations for the tests: dense eigensolves and
// permutation-minimal multiset distances.

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>

#include <Eigen/Eigenvalues>

#include "ptstab/core.hpp"

namespace oracle {

using ptstab::cplx;
using Roots = std::array<cplx, 4>;

inline Roots eig(const Eigen::Matrix4d& m) {
    Eigen::EigenSolver<Eigen::Matrix4d> es(m, false);
    Roots r;
    for (int i = 0; i < 4; ++i) r[i] = es.eigenvalues()[i];
    return r;
}

inline Roots companion_roots(const ptstab::Quartic& q) {
    Eigen::Matrix4d c = Eigen::Matrix4d::Zero();
    for (int i = 1; i < 4; ++i) c(i, i - 1) = 1.0;
    c(0, 3) = -q.c0();
    c(1, 3) = -q.c1();
    c(2, 3) = -q.c2();
    c(3, 3) = -q.c3();
    return eig(c);
}

inline Roots eig(const ptstab::SystemSpec& sys) { return eig(ptstab::first_order_matrix(sys)); }

/// min over permutations of max_i |a_i - b_p(i)| / max(1, |a_i|).
inline double distance(const Roots& a, const Roots& b) {
    std::array<int, 4> p{0, 1, 2, 3};
    double best = INFINITY;
    do {
        double worst = 0.0;
        for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(a[i] - b[p[i]]) / std::max(1.0, std::abs(a[i])));
        best = std::min(best, worst);
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

/// Every root has a partner under f (e.g. conjugation) within tol.
template <class F>
double closure_defect(const Roots& r, F f) {
    Roots mapped;
    for (int i = 0; i < 4; ++i) mapped[i] = f(r[i]);
    return distance(r, mapped);
}

/// det(lambda^2 I + lambda (D + 2 Omega J) + K - Omega^2 I) evaluated directly.
inline cplx pencil_det(const ptstab::SystemSpec& s, cplx l) {
    const auto& d = s.damping();
    const auto& k = s.stiffness();
    const double w = s.omega();
    const cplx a11 = l * l + l * d.m11 + k.m11 - w * w;
    const cplx a12 = l * (d.m12 - 2.0 * w) + k.m12;
    const cplx a21 = l * (d.m21 + 2.0 * w) + k.m21;
    const cplx a22 = l * l + l * d.m22 + k.m22 - w * w;
    return a11 * a22 - a12 * a21;
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen); }
};

}  // namespace oracle

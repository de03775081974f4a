#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "ptstab/error.hpp"
#include "ptstab/potential.hpp"
#include "ptstab/routh_hurwitz.hpp"
#include "ptstab/sweep.hpp"

using namespace ptstab;

namespace {

// Monic quartic with the given roots (conjugate pairs supplied explicitly).
Quartic from_roots(const std::array<cplx, 4>& r) {
    std::array<cplx, 5> p{1.0, 0.0, 0.0, 0.0, 0.0};  // descending
    int deg = 0;
    for (const auto& z : r) {
        for (int i = deg + 1; i >= 1; --i) p[i] -= z * p[i - 1];
        ++deg;
    }
    return Quartic(p[4].real(), p[3].real(), p[2].real(), p[1].real());
}

}  // namespace

TEST_CASE("hurwitz examples") {
    const HurwitzReport h = hurwitz(Quartic(1.0, 4.0, 6.0, 4.0));
    CHECK(h.stable);
    CHECK(h.h1 == 4.0);
    CHECK(h.h2 == 1.0);
    CHECK(h.h3 == 20.0);
    CHECK(h.h4 == 64.0);

    const HurwitzReport m = hurwitz(Quartic(1.0, 0.0, 2.0, 0.0));
    CHECK_FALSE(m.stable);
    CHECK(m.h1 == 0.0);
}

TEST_CASE("hurwitz agrees with the root oracle on 1e4 random quartics") {
    oracle::Rng rng(99);
    int compared = 0, disagreements = 0;
    for (int i = 0; i < 10000; ++i) {
        Quartic q(0, 0, 0, 0);
        if (i % 2 == 0) {
            q = Quartic(rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-1, 4));
        } else {
            // Root-sampled quartics give a balanced mix of stable and unstable cases.
            const cplx a{rng.uniform(-2, 0.5), rng.uniform(0, 2)};
            const cplx b{rng.uniform(-2, 0.5), rng.uniform(0, 2)};
            q = from_roots({a, std::conj(a), b, std::conj(b)});
        }
        const auto ref = oracle::companion_roots(q);
        double min_abs_re = INFINITY;
        bool all_left = true;
        for (const auto& z : ref) {
            min_abs_re = std::min(min_abs_re, std::abs(z.real()));
            all_left = all_left && z.real() < 0.0;
        }
        if (min_abs_re <= 1e-6) continue;  // epsilon band excluded
        ++compared;
        const bool core_stable = roots(q).classification == Stability::AsymptoticallyStable;
        if (hurwitz_stable(q) != all_left || core_stable != all_left) ++disagreements;
    }
    CHECK(compared > 9900);
    CHECK(disagreements == 0);
}

TEST_CASE("delta_cr_squared examples") {
    const Mat2 k = Mat2::symmetric(1.0, 0.4, 1.0);
    CHECK(delta_cr_squared(Mat2::diag(2, -1), k) == doctest::Approx(0.08).epsilon(1e-14));
    CHECK(delta_cr_squared(Mat2::diag(2, 1), k) == doctest::Approx(-0.08).epsilon(1e-14));
    for (double d : {0.1, 1.0, 10.0, 100.0}) CHECK(hurwitz_stable(char_poly(SystemSpec(d * Mat2::diag(2, 1), k))));
    CHECK(delta_cr_squared(Mat2::diag(2, -1), 1.7 * Mat2::identity()) == 0.0);
    CHECK(delta_cr_squared(Mat2::symmetric(0.3, 0.5, -0.1), 2.0 * Mat2::identity()) == doctest::Approx(0.0));

    // tr K Dt - tr K tr Dt = 0.
    CHECK_THROWS_AS(delta_cr_squared(Mat2::diag(1, 0), Mat2::diag(0, 1)), DegenerateError);
    CHECK_THROWS_AS(delta_cr_squared(Mat2::diag(1, -1), k), DegenerateError);  // tr Dt = 0
}

TEST_CASE("delta_cr agrees with bisection on the Hurwitz predicate") {
    const Mat2 k = Mat2::symmetric(1.0, 0.4, 1.0);
    const Mat2 dt = Mat2::diag(2, -1);
    const auto t = find_transitions([&](double d) { return hurwitz_stable(char_poly(SystemSpec(d * dt, k))); }, 1e-3,
                                    1.0, 256, 1e-13);
    REQUIRE(t.size() == 1);
    CHECK(t[0].holds_below);
    CHECK(t[0].value == doctest::Approx(std::sqrt(0.08)).epsilon(1e-6));
}

TEST_CASE("delta_cr_squared random property") {
    oracle::Rng rng(7);
    int tested = 0, unstable_everywhere = 0;
    for (int i = 0; i < 1000; ++i) {
        // Indefinite Dt with positive trace.
        const double a = rng.uniform(0.2, 3), b = rng.uniform(-3, -0.1), phi = rng.uniform(0, M_PI);
        const double c = std::cos(phi), s = std::sin(phi);
        const Mat2 dt = Mat2::symmetric(a * c * c + b * s * s, (a - b) * c * s, a * s * s + b * c * c);
        if (!(dt.trace() > 0.05)) continue;
        const Mat2 kk = Mat2::symmetric(rng.uniform(0.5, 3), rng.uniform(-1, 1), rng.uniform(0.5, 3));
        if (kk.det() <= 0.1) continue;
        double sq = 0.0;
        try {
            sq = delta_cr_squared(dt, kk);
        } catch (const DegenerateError&) {
            continue;
        }
        if (!(sq > 1e-8)) continue;
        const double dcr = std::sqrt(sq);
        if ((kk * dt).trace() - kk.trace() * dt.trace() > 0.0) {
            // Linear coefficient tr K tr D - tr KD < 0 for every delta > 0: the
            // positive value does not describe a threshold, nothing is stable.
            for (double f : {1e-3, 0.5, 1.0, 2.0, 100.0})
                CHECK_FALSE(hurwitz_stable(char_poly(SystemSpec(f * dcr * dt, kk))));
            ++unstable_everywhere;
            continue;
        }
        const auto t = find_transitions([&](double d) { return hurwitz_stable(char_poly(SystemSpec(d * dt, kk))); },
                                        1e-4 * dcr, 3.0 * dcr, 128, 1e-14 * dcr);
        REQUIRE_MESSAGE(!t.empty(), "no Hurwitz failure found for sample " << i);
        double best = t[0].value;
        for (const auto& x : t)
            if (std::abs(x.value - dcr) < std::abs(best - dcr)) best = x.value;
        CHECK(best * best == doctest::Approx(sq).epsilon(1e-6));
        ++tested;
    }
    CHECK(tested > 100);
    CHECK(unstable_everywhere > 50);
}

TEST_CASE("delta_pt examples and preconditions") {
    CHECK(delta_pt(Mat2::diag(1, -1), Mat2::symmetric(1, 0.4, 1)) ==
          doctest::Approx(std::sqrt(1.4) - std::sqrt(0.6)).epsilon(1e-15));
    CHECK(delta_pt(Mat2::diag(1, -1), Mat2::identity()) == 0.0);
    // Same eigenvalues 1 and 4, rotated onto the tr K Dt = 0 locus.
    CHECK(delta_pt(Mat2::diag(1, -1), Mat2::symmetric(2.5, 1.5, 2.5)) == doctest::Approx(1.0).epsilon(1e-15));

    CHECK_THROWS_AS(delta_pt(Mat2::diag(1, -1), Mat2::diag(1, 4)), DomainError);  // tr K Dt = -3
    CHECK_THROWS_AS(delta_pt(Mat2::diag(1, -0.9), Mat2::identity()), DomainError);
    CHECK_THROWS_AS(delta_pt(Mat2::diag(0, 0), Mat2::identity()), DomainError);
    CHECK_THROWS_AS(delta_pt(Mat2::diag(1, -1), Mat2::symmetric(0.5, 2.0, 0.5)), DomainError);
}

TEST_CASE("marginal iff delta < delta_PT on random PT inputs") {
    oracle::Rng rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        // Traceless Dt of random scale and orientation, K with tr K Dt = 0.
        const double scale = rng.uniform(0.3, 3), phi = rng.uniform(0, M_PI);
        const Mat2 dt = scale * Mat2::symmetric(std::cos(phi), std::sin(phi), -std::cos(phi));
        const Mat2 r = Mat2::symmetric(-std::sin(phi), std::cos(phi), std::sin(phi));
        const Mat2 kk = rng.uniform(1, 3) * Mat2::identity() + rng.uniform(0.1, 0.9) * r;
        const double dpt = delta_pt(dt, kk);
        const auto [s1, s2] = kk.symmetric_eigenvalues();
        const double upper = (std::sqrt(s1) + std::sqrt(s2)) / std::sqrt(-dt.det());
        for (int i = 0; i < 100; ++i) {
            const double below = rng.uniform(0.0, 0.999) * dpt;
            const Spectrum sb = spectrum(SystemSpec(below * dt, kk));
            CHECK(sb.classification == Stability::MarginallyStable);
            const double above = dpt + rng.uniform(0.001, 0.999) * (upper - dpt);
            CHECK(spectrum(SystemSpec(above * dt, kk)).classification == Stability::Flutter);
        }
    }
}

#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "ptstab/error.hpp"
#include "ptstab/sweep.hpp"

using namespace ptstab;

TEST_CASE("linspace") {
    const auto v = linspace(-1.0, 1.0, 5);
    REQUIRE(v.size() == 5);
    CHECK(v.front() == -1.0);
    CHECK(v[2] == 0.0);
    CHECK(v.back() == 1.0);
    CHECK(linspace(0.1, 0.7, 7).back() == 0.7);
    CHECK(linspace(2.0, 2.0, 1) == std::vector<double>{2.0});
    CHECK_THROWS_AS(linspace(0, 1, 1), DomainError);
    CHECK_THROWS_AS(linspace(0, 1, 0), DomainError);
    CHECK_THROWS_AS(linspace(0, INFINITY, 3), DomainError);
}

TEST_CASE("match_permutation follows nearest roots and avoids conjugate swaps") {
    const std::array<cplx, 4> pred{cplx{0, 1}, cplx{0, -1}, cplx{-1, 0}, cplx{2, 0}};
    const std::array<cplx, 4> next{cplx{2.01, 0}, cplx{-1.01, 0}, cplx{0.01, -0.99}, cplx{0.01, 0.99}};
    const auto p = match_permutation(pred, next);
    CHECK(p == std::array<std::size_t, 4>{3, 2, 1, 0});

    // Nearest pairing would cross the real axis; the guard keeps the sign of Im.
    const std::array<cplx, 4> a{cplx{-1, 0.01}, cplx{-1, -0.01}, cplx{-5, 0}, cplx{5, 0}};
    const std::array<cplx, 4> b{cplx{-1, -0.02}, cplx{-1, 0.02}, cplx{-5, 0}, cplx{5, 0}};
    const auto m = match_roots(a, b);
    CHECK(m[0].imag() > 0.0);
    CHECK(m[1].imag() < 0.0);

    // Always a permutation.
    oracle::Rng rng(4);
    for (int i = 0; i < 500; ++i) {
        std::array<cplx, 4> x, y;
        for (int j = 0; j < 4; ++j) {
            x[j] = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
            y[j] = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
        }
        auto q = match_permutation(x, y);
        std::sort(q.begin(), q.end());
        CHECK(q == std::array<std::size_t, 4>{0, 1, 2, 3});
    }
}

TEST_CASE("eigen_sweep keeps branches continuous and records failures") {
    // (l^2 + 1)(l^2 + t): the t-branch passes through the fixed pair at t = 1.
    const auto family = [](double t) {
        if (std::abs(t - 0.5) < 1e-9) return Quartic(NAN, 0, 0, 0);
        return Quartic(t, 0.0, 1.0 + t, 0.0);
    };
    const auto rows = eigen_sweep(family, 0.25, 2.0, 8);
    REQUIRE(rows.size() == 8);
    CHECK(rows[1].parameter == doctest::Approx(0.5));
    CHECK(rows[1].failed);
    CHECK_FALSE(rows[1].failure.empty());
    CHECK(std::isnan(rows[1].roots[0].real()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == 1) continue;
        CHECK_FALSE(rows[i].failed);
        const oracle::Roots ref{cplx{0, 1}, cplx{0, -1}, cplx{0, std::sqrt(rows[i].parameter)},
                                cplx{0, -std::sqrt(rows[i].parameter)}};
        CHECK(oracle::distance(rows[i].roots, ref) < 1e-8);
        // Coinciding pairs at t = 1 are reported as a degenerate spectrum.
        const bool collide = std::abs(rows[i].parameter - 1.0) < 1e-12;
        CHECK(rows[i].stability == (collide ? Stability::Degenerate : Stability::MarginallyStable));
        CHECK(rows[i].multiple[0] == collide);
    }
    // Each slot stays on the same side of the real axis across the sweep.
    for (int j = 0; j < 4; ++j) {
        const double sign = std::copysign(1.0, rows[0].roots[j].imag());
        for (const auto& r : rows)
            if (!r.failed) CHECK(std::copysign(1.0, r.roots[j].imag()) == sign);
    }
}

TEST_CASE("find_transitions") {
    const auto t = find_transitions([](double x) { return std::abs(x) < 0.3; }, -1.0, 1.0, 11, 1e-12);
    REQUIRE(t.size() == 2);
    CHECK(t[0].value == doctest::Approx(-0.3).epsilon(1e-10));
    CHECK_FALSE(t[0].holds_below);
    CHECK(t[1].value == doctest::Approx(0.3).epsilon(1e-10));
    CHECK(t[1].holds_below);

    CHECK(find_transitions([](double) { return true; }, 0, 1).empty());
    // A sign-change pair inside one scan cell is not resolved by the coarse scan.
    CHECK(find_transitions([](double x) { return std::abs(x - 0.51) < 0.001; }, 0, 1, 11).empty());
    CHECK_THROWS_AS(find_transitions([](double) { return true; }, 0, 1, 1), DomainError);

    const Transition b = bisect_transition([](double x) { return x > std::sqrt(2.0); }, 1.0, 2.0, 1e-14);
    CHECK(b.value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
    CHECK_THROWS_AS(bisect_transition([](double) { return false; }, 0, 1, 1e-3), DomainError);
}

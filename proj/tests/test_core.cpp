#include "doctest.h"

#include "collapse/cutoffs.hpp"
#include "collapse/errors.hpp"
#include "collapse/field.hpp"
#include "collapse/grid.hpp"
#include "collapse/ground_state.hpp"
#include "collapse/interp.hpp"
#include "collapse/operators.hpp"
#include "collapse/params.hpp"

#include <cmath>
#include <random>

using namespace collapse;

namespace {

// deterministic smooth decaying complex field: polynomial in r^2 times Gaussians
ComplexField random_smooth_field(const GridPtr& grid, std::mt19937& rng) {
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::uniform_real_distribution<double> width(0.3, 1.2);
    ComplexField f(grid);
    for (int term = 0; term < 4; ++term) {
        const Complex c(coef(rng), coef(rng));
        const double a = width(rng);
        const int p = term % 3;
        for (std::size_t i = 0; i < f.size(); ++i) {
            const double r2 = grid->r(i) * grid->r(i);
            f[i] += c * std::pow(r2, p) * std::exp(-a * r2);
        }
    }
    return f;
}

} // namespace

TEST_SUITE_BEGIN("core");

TEST_CASE("derived parameters match hand arithmetic") {
    auto p = derive_params(1, 2.2, 2.2, 1e-4, 0.1);
    CHECK(p.s_c == doctest::Approx(0.5 - 1.0 / 2.2).epsilon(1e-14));
    CHECK(p.b_star == doctest::Approx(1.117974).epsilon(1e-5));
    CHECK(p.sigma_star == doctest::Approx(p.s_c * 2.2).epsilon(1e-14));
    CHECK(p.sigma2_max == doctest::Approx(2.2));
    CHECK(p.admissible);
    CHECK(p.eta_small == (1e-4 <= std::pow(p.s_c, 3)));

    auto crit = derive_params(2, 1.0);
    CHECK(crit.s_c == doctest::Approx(0.0));
    CHECK_FALSE(crit.admissible);
    CHECK(crit.regime == "mass-critical-or-subcritical");
    CHECK(std::isnan(crit.b_star));
    CHECK_THROWS_AS(require_supercritical(crit), SolverError);

    CHECK_THROWS_AS(derive_params(4, 1.0), ConfigError);
    CHECK_THROWS_AS(derive_params(1, 2.0, -1.0), ConfigError);
    CHECK_THROWS_AS(derive_params(1, 2.0, 0.0, 0.0, 1.5), ConfigError);
}

TEST_CASE("gaussian volume is reproduced to 1e-8 on the reference grids") {
    const double exact[4] = {0.0, std::sqrt(M_PI), M_PI, std::pow(M_PI, 1.5)};
    for (int d = 1; d <= 3; ++d) {
        auto g = RadialGrid::uniform(d, 2048, 12.0);
        std::vector<double> f(g->size());
        for (std::size_t i = 0; i < f.size(); ++i)
            f[i] = std::exp(-g->r(i) * g->r(i));
        CHECK(std::abs(g->integrate(f) - exact[d]) / exact[d] < 1e-8);
        for (double w : g->weights())
            CHECK(w >= 0.0);
    }
    // graded grid keeps the same exactness
    auto g = RadialGrid::graded(1, 1e-3, 0.5, 1.01, 0.05, 14.0);
    std::vector<double> f(g->size());
    for (std::size_t i = 0; i < f.size(); ++i)
        f[i] = std::exp(-g->r(i) * g->r(i));
    CHECK(std::abs(g->integrate(f) - exact[1]) / exact[1] < 1e-8);
}

TEST_CASE("real pairing basics") {
    auto g = RadialGrid::uniform(1, 2048, 12.0);
    ComplexField f(g), fi(g);
    for (std::size_t i = 0; i < f.size(); ++i) {
        f[i] = std::exp(-0.5 * g->r(i) * g->r(i));
        fi[i] = Complex(0, 1) * f[i];
    }
    CHECK(real_pair(f, f) >= 0.0);
    CHECK(std::abs(real_pair(f, fi)) < 1e-14);
    // \int_R e^{-r^2} = sqrt(pi)
    CHECK(real_pair(f, f) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-8));

    auto g2 = RadialGrid::uniform(1, 1024, 12.0);
    ComplexField other(g2);
    CHECK_THROWS_AS(real_pair(f, other), SolverError);
}

TEST_CASE("laplacian on gaussians") {
    for (int d : {1, 3}) {
        auto g = RadialGrid::uniform(d, 4096, 16.0);
        ComplexField f(g);
        for (std::size_t i = 0; i < f.size(); ++i)
            f[i] = std::exp(-0.5 * g->r(i) * g->r(i));
        auto lap = laplacian(f);
        double worst = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i) {
            const double r2 = g->r(i) * g->r(i);
            const double expect = (r2 - d) * std::exp(-0.5 * r2);
            worst = std::max(worst, std::abs(lap[i].real() - expect));
        }
        CHECK(worst < 1e-8);
    }
    // constants are annihilated
    auto g = RadialGrid::uniform(2, 512, 8.0);
    ComplexField c(g);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = 3.5;
    auto lap = laplacian(c);
    for (std::size_t i = 0; i < c.size(); ++i)
        CHECK(std::abs(lap[i]) < 1e-10);
}

TEST_CASE("Lambda and D identities") {
    auto g = RadialGrid::uniform(1, 4096, 16.0);
    const double sigma1 = 1.0;
    const auto p = derive_params(1, sigma1);
    ComplexField f(g);
    for (std::size_t i = 0; i < f.size(); ++i)
        f[i] = std::exp(-0.5 * g->r(i) * g->r(i));

    SUBCASE("explicit gaussian") {
        auto lf = apply_Lambda(f, sigma1);
        double worst = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i) {
            const double r2 = g->r(i) * g->r(i);
            worst = std::max(worst, std::abs(lf[i].real() - (1.0 - r2) * std::exp(-0.5 * r2)));
        }
        CHECK(worst < 1e-8);
    }

    SUBCASE("Lambda = D - s_c pointwise and adjointness") {
        std::mt19937 rng(12345);
        for (int trial = 0; trial < 20; ++trial) {
            ComplexField a = random_smooth_field(g, rng);
            ComplexField b = random_smooth_field(g, rng);
            auto la = apply_Lambda(a, sigma1);
            auto da = apply_D(a);
            double worst = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i)
                worst = std::max(worst, std::abs(la[i] - (da[i] - p.s_c * a[i])));
            CHECK(worst < 1e-10);

            const double lhs = real_pair(a, apply_Lambda(b, sigma1)) +
                               real_pair(b, la) + 2.0 * p.s_c * real_pair(a, b);
            CHECK(std::abs(lhs) <=
                  1e-6 * std::sqrt(norm_l2_sq(a)) * std::sqrt(norm_l2_sq(b)) + 1e-12);
        }
    }
}

TEST_CASE("commutator Lap(Lambda f) = 2 Lap f + Lambda(Lap f) at O(h^2) or better") {
    const double sigma1 = 2.0;
    double prev = 0.0;
    std::vector<double> errs;
    // coarse enough that truncation, not roundoff amplification, dominates
    for (std::size_t n : {256u, 512u, 1024u}) {
        auto g = RadialGrid::uniform(1, n, 14.0);
        ComplexField f(g);
        for (std::size_t i = 0; i < f.size(); ++i) {
            const double r2 = g->r(i) * g->r(i);
            f[i] = Complex(1.0, 0.5) * (1.0 + 0.3 * r2) * std::exp(-0.4 * r2);
        }
        auto lhs = laplacian(apply_Lambda(f, sigma1));
        auto lap = laplacian(f);
        auto rhs = apply_Lambda(lap, sigma1);
        double worst = 0.0;
        // skip the few boundary-stencil rows
        for (std::size_t i = 4; i + 4 < f.size(); ++i)
            worst = std::max(worst, std::abs(lhs[i] - 2.0 * lap[i] - rhs[i]));
        errs.push_back(worst);
        prev = worst;
    }
    (void)prev;
    CHECK(errs[2] < errs[0]);
    const double order = std::log2(errs[0] / errs[2]) / 2.0;
    CHECK(order > 1.8); // 4th-order stencils typically give ~4
}

TEST_CASE("interpolant is exact on nodes and O(h^6) between") {
    auto g = RadialGrid::uniform(1, 512, 10.0);
    std::vector<double> v(g->size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = std::cos(g->r(i)) * std::exp(-0.3 * g->r(i) * g->r(i));
    RadialInterpolant itp(g->nodes(), v);
    CHECK(itp.eval(g->r(17)) == doctest::Approx(v[17]).epsilon(1e-15));
    double worst = 0.0;
    for (double x = 0.011; x < 8.0; x += 0.137) {
        const double exact = std::cos(x) * std::exp(-0.3 * x * x);
        worst = std::max(worst, std::abs(itp.eval(x) - exact));
    }
    CHECK(worst < 1e-9);
    CHECK(itp.eval(11.0) == 0.0);
}

TEST_CASE("cutoff shapes") {
    CoreCutoff phi{4.0, 5.0};
    CHECK(phi.value(3.9) == 1.0);
    CHECK(phi.value(5.1) == 0.0);
    CHECK(phi.value(4.5) == doctest::Approx(0.5));
    CHECK(phi.d1(4.0) == 0.0);
    CHECK(phi.d1(4.5) < 0.0);

    // chi: plateau values, monotone, slope band on [1,2]
    CHECK(chi_flux(0.4) == 0.0);
    CHECK(chi_flux(3.2) == 1.0);
    double prev = -1.0;
    for (double r = 0.0; r <= 3.5; r += 0.01) {
        const double v = chi_flux(r);
        CHECK(v >= prev - 1e-12);
        prev = v;
        CHECK(chi_flux_d1(r) >= -1e-12);
    }
    for (double r = 1.0; r <= 2.0; r += 0.005) {
        CHECK(chi_flux_d1(r) >= 0.25 - 1e-12);
        CHECK(chi_flux_d1(r) <= 0.50 + 1e-12);
    }
    // consistency of value and derivative
    const double h = 1e-6;
    for (double r : {0.7, 1.3, 2.4, 2.9})
        CHECK(chi_flux_d1(r) ==
              doctest::Approx((chi_flux(r + h) - chi_flux(r - h)) / (2 * h)).epsilon(1e-5));
}

TEST_CASE("ground state closed forms in 1d") {
    auto p1 = derive_params(1, 1.0);
    auto g = RadialGrid::uniform(1, 4096, 40.0);
    auto q1 = solve_ground_state(p1, g);
    CHECK(q1.peak == doctest::Approx(std::sqrt(2.0)).epsilon(1e-7));
    CHECK(q1.mass == doctest::Approx(4.0).epsilon(1e-7));
    double worst = 0.0;
    for (std::size_t i = 0; i < g->size() && g->r(i) <= 15.0; ++i) {
        const double exact = std::sqrt(2.0) / std::cosh(g->r(i));
        worst = std::max(worst, std::abs(q1.samples[i] - exact));
    }
    CHECK(worst < 1e-6);
    CHECK(ground_state_residual(q1) < 1e-8 * q1.peak);

    auto p2 = derive_params(1, 2.0);
    auto q2 = solve_ground_state(p2, g);
    CHECK(q2.peak == doctest::Approx(std::pow(3.0, 0.25)).epsilon(1e-7));
    worst = 0.0;
    for (std::size_t i = 0; i < g->size() && g->r(i) <= 15.0; ++i) {
        const double exact = std::pow(3.0 / std::pow(std::cosh(2.0 * g->r(i)), 2), 0.25);
        worst = std::max(worst, std::abs(q2.samples[i] - exact));
    }
    CHECK(worst < 1e-6);

    // strictly decreasing, decayed tail
    for (std::size_t i = 1; i < g->size(); ++i)
        CHECK(q2.samples[i] < q2.samples[i - 1] + 1e-14);
    CHECK(std::abs(q2.samples.back()) < 1e-10 * q2.peak);
}

TEST_CASE("ground state in higher dimension stays residual-small") {
    auto p = derive_params(3, 1.0);
    auto g = RadialGrid::uniform(3, 4096, 30.0);
    auto q = solve_ground_state(p, g);
    CHECK(q.peak == doctest::Approx(4.3374).epsilon(2e-3));
    CHECK(ground_state_residual(q) < 1e-8 * q.peak);
}

TEST_SUITE_END();

#include "doctest.h"

#include "gessel/elliptic_checks.hpp"
#include "gessel/lattice.hpp"
#include "gessel/uniformization.hpp"

#include <numbers>
#include <random>

using namespace gessel;

namespace {

const cplx kI{0.0, 1.0};

const UniformizationContext& ctx01() {
    static const UniformizationContext ctx = make_context(0.1);
    return ctx;
}

} // namespace

TEST_CASE("rejects degenerate periods") {
    CHECK_THROWS_AS(RectLattice(cplx(1.0), cplx(2.0)), std::invalid_argument);
    CHECK_THROWS_AS(RectLattice(cplx(0.0), cplx(1.0)), std::invalid_argument);
}

TEST_CASE("square lattice has g3 = 0") {
    const RectLattice sq(kI, cplx(1.0));
    CHECK(std::abs(sq.g3()) < 1e-14);
    CHECK(std::abs(sq.g2().imag()) < 1e-14);
    CHECK(sq.g2().real() > 0);
}

TEST_CASE("invariant homogeneity and wp scaling") {
    const RectLattice base(cplx{0.0, 1.3}, cplx(0.9));
    const cplx t{1.4, 0.6};
    const RectLattice scaled(t * base.omega_bar(), t * base.omega_hat());
    const cplx t4 = t * t * t * t;
    CHECK(std::abs(scaled.g2() - base.g2() / t4) < 1e-12 * std::abs(base.g2()));
    CHECK(std::abs(scaled.g3() - base.g3() / (t4 * t * t)) < 1e-12);
    const cplx w{0.23, 0.11};
    CHECK(std::abs(scaled.wp(t * w) - base.wp(w) / (t * t)) < 1e-10);
}

TEST_CASE("differential equation on random points") {
    const auto& lat = ctx01().lat;
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> d(0.06, 0.94);
    for (int k = 0; k < 100; ++k) {
        const cplx u = d(rng) * lat.omega_hat() + d(rng) * lat.omega_bar();
        const cplx p = lat.wp(u), pp = lat.wp_prime(u);
        const cplx res = pp * pp - (4.0 * p * p * p - lat.g2() * p - lat.g3());
        CHECK(std::abs(res) < 1e-9 * std::max(1.0, std::abs(pp * pp)));
    }
}

TEST_CASE("parity and periodicity") {
    const auto& lat = ctx01().lat;
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> d(0.1, 0.9);
    for (int k = 0; k < 30; ++k) {
        const cplx u = d(rng) * lat.omega_hat() + d(rng) * lat.omega_bar();
        CHECK(std::abs(lat.wp(-u) - lat.wp(u)) < 1e-10);
        CHECK(std::abs(lat.zeta(-u) + lat.zeta(u)) < 1e-10);
        CHECK(std::abs(lat.wp_prime(-u) + lat.wp_prime(u)) < 1e-10);
        CHECK(std::abs(lat.wp(u + lat.omega_bar()) - lat.wp(u)) < 1e-10);
        CHECK(std::abs(lat.wp(u + lat.omega_hat()) - lat.wp(u)) < 1e-10);
    }
    // center of a rectangular cell: wp is real there
    const cplx center = (lat.omega_bar() + lat.omega_hat()) / 2.0;
    CHECK(std::abs(lat.wp(center).imag()) < 1e-10);
}

TEST_CASE("zeta derivative is -wp") {
    const auto& lat = ctx01().lat;
    const double h = 1e-5;
    for (const cplx u : {cplx{1.1, 0.4}, cplx{3.0, 1.2}, cplx{0.6, 2.1}}) {
        const cplx fd = (lat.zeta(u + h) - lat.zeta(u - h)) / (2.0 * h);
        CHECK(std::abs(fd + lat.wp(u)) < 1e-6);
    }
}

TEST_CASE("Legendre relation of the reduced basis") {
    for (const RectLattice& lat : {ctx01().lat, ctx01().lat13, RectLattice(kI, cplx(1.0))}) {
        const cplx lhs = lat.zeta(lat.reduced_a() / 2.0) * lat.reduced_b() -
                         lat.zeta(lat.reduced_b() / 2.0) * lat.reduced_a();
        CHECK(std::abs(lhs - kI * std::numbers::pi) < 1e-11);
    }
}

TEST_CASE("poles signal as infinities") {
    const auto& lat = ctx01().lat;
    CHECK(lat.is_lattice_point(cplx(0.0)));
    CHECK(lat.is_lattice_point(lat.omega_bar() + 2.0 * lat.omega_hat()));
    CHECK(std::isinf(lat.wp(cplx(0.0)).real()));
    CHECK(std::isinf(lat.zeta(lat.omega_hat()).real()));
    CHECK_FALSE(lat.is_lattice_point(lat.omega_hat() / 2.0));
}

TEST_CASE("wp second derivative matches finite differences") {
    const auto& lat = ctx01().lat;
    const cplx u{1.3, 0.8};
    const double h = 1e-4;
    const cplx fd = (lat.wp_prime(u + h) - lat.wp_prime(u - h)) / (2.0 * h);
    CHECK(std::abs(lat.wp_second(u) - fd) < 1e-5);
}

TEST_CASE("invariants against Eisenstein-independent closed forms") {
    // the model's closed forms at z = 0.1, via the quadrature periods
    const auto& ctx = ctx01();
    const double z = 0.1, z2 = z * z;
    const double g2c = (4.0 / 3) * (1 - 16 * z2 + 16 * z2 * z2);
    const double g3c = -(8.0 / 27) * (1 - 8 * z2) * (1 - 16 * z2 - 8 * z2 * z2);
    CHECK(std::abs(ctx.inv.g2 - g2c) < 1e-8 * std::abs(g2c));
    CHECK(std::abs(ctx.inv.g3 - g3c) < 1e-8 * std::abs(g3c));
}

TEST_CASE("local expansion order") {
    const auto fit = check_P3_expansion(ctx01().lat, 0.4);
    CHECK(fit.fitted_order > 5.5);
    CHECK(fit.fitted_order < 6.5);
    const auto sq = check_P3_expansion(RectLattice(kI, cplx(1.0)), 0.25);
    CHECK(sq.fitted_order > 5.5);
}

TEST_CASE("addition theorems") {
    CHECK(check_addition_theorems(ctx01().lat, 60, 101) < 1e-9);
    CHECK(check_addition_theorems(ctx01().lat13, 60, 102) < 1e-9);
    CHECK(check_addition_theorems(RectLattice(kI, cplx(1.0)), 60, 103) < 1e-9);
}

TEST_CASE("quasi-periodicity") {
    CHECK(check_quasi_periodicity(ctx01().lat, 50, 201) < 1e-9);
    CHECK(check_quasi_periodicity(ctx01().lat13, 50, 202) < 1e-9);
}

TEST_CASE("sum-zero triples") {
    CHECK(check_frobenius_stickelberger(ctx01().lat, 60, 301) < 1e-8);
    CHECK(check_frobenius_stickelberger(ctx01().lat13, 60, 302) < 1e-8);
}

TEST_CASE("bisection on the documented real segment") {
    CHECK(check_bisection(ctx01().lat, 40, 401) < 1e-8);
    CHECK(check_bisection(RectLattice(kI, cplx(1.0)), 40, 402) < 1e-8);
}

TEST_CASE("coset sum reproduces finer lattices") {
    const auto& ctx = ctx01();
    // p = 1 is the identity
    const cplx u{1.7, 0.9};
    CHECK(std::abs(sublattice_wp(u, ctx.lat, 1) - ctx.lat.wp(u)) == 0.0);
    // dividing the long period of (omega1, 3 omega2) by 3 lands on (omega1, omega2)
    CHECK(std::abs(sublattice_wp(u, ctx.lat13, 3) - ctx.lat.wp(u)) < 1e-9);
    CHECK(check_sublattice_wp(ctx.lat13, 3, 40, 501) < 1e-9);
    CHECK(check_sublattice_wp(RectLattice(kI, cplx(1.0)), 2, 40, 502) < 1e-9);
    CHECK_THROWS_AS(sublattice_wp(u, ctx.lat, 0), std::domain_error);
}

TEST_CASE("zeta combination periodicity dichotomy") {
    const auto& lat = ctx01().lat13;
    const ZetaCombination elliptic{lat, cplx(0.3), {{cplx(1.5), cplx(0.4)}, {cplx(-1.5), cplx(1.9)}}};
    CHECK(std::abs(elliptic.coefficient_sum()) == 0.0);
    const auto d1 = check_zeta_combination_periodicity(elliptic, 40, 601);
    CHECK(d1.consistent);
    CHECK(d1.periodicity_residual < 1e-8);

    const ZetaCombination skew{lat, cplx(0.0), {{cplx(1.0), cplx(0.4)}, {cplx(0.5), cplx(1.9)}}};
    const auto d2 = check_zeta_combination_periodicity(skew, 40, 602);
    CHECK(d2.consistent);
    CHECK(d2.periodicity_residual >= d2.expected_defect - 1e-8);
}

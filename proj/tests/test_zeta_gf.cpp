#include "doctest.h"

#include "gessel/hypergeom.hpp"
#include "gessel/zeta_gf.hpp"

#include <random>

using namespace gessel;

namespace {

const RYContext& rctx_at(double z) {
    static std::map<double, RYContext> cache;
    auto it = cache.find(z);
    if (it == cache.end()) it = cache.emplace(z, make_ry_context(z)).first;
    return it->second;
}

const CountTable& table80() {
    static const CountTable t = count_table(StepSet::gessel(), 80);
    return t;
}

// random point of the fundamental parallelogram away from the real axis poles
cplx sample_w(const UniformizationContext& ctx, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dre(0.05, 0.95), dim(0.15, 0.85);
    return dre(rng) * cplx(ctx.periods.omega2) + dim(rng) * ctx.periods.omega1;
}

} // namespace

TEST_CASE("f_y: defining form equals the logarithmic-derivative form") {
    const auto& ctx = rctx_at(0.1).ctx;
    std::mt19937_64 rng(41);
    for (int k = 0; k < 40; ++k) {
        const cplx w = sample_w(ctx, rng);
        const cplx a = f_y(w, ctx), b = f_y_log_form(w, ctx);
        if (std::abs(a) > 1e5) continue;
        CHECK(std::abs(a - b) < 1e-8 * std::max(1.0, std::abs(a)));
        // omega2-periodicity through the ellipticity of x
        CHECK(std::abs(f_y(w + ctx.periods.omega2, ctx) - a) < 1e-8);
    }
}

TEST_CASE("f_y has residue -1/(2z) at omega2/8") {
    const auto& ctx = rctx_at(0.1).ctx;
    const auto est = numeric_residue([&](cplx w) { return f_y(w, ctx); },
                                     cplx(ctx.periods.omega2 / 8.0),
                                     0.01 * ctx.periods.omega2);
    CHECK(std::abs(est.value - cplx(-1.0 / (2 * 0.1))) < 1e-5);
    CHECK(est.direction_spread < 1e-5);
}

TEST_CASE("the four-term f_y orbit sum vanishes") {
    CHECK(check_orbit_sum_vanishes(rctx_at(0.1).ctx, 40, 43) < 1e-8);
}

TEST_CASE("zeta representation matches the generating function on its strip") {
    const auto& rctx = rctx_at(0.1);
    const double z = 0.1;
    const TruncatedSeries3 Q(table80());
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> dre(0.55, 0.95), dim(-0.25, 0.25);
    int used = 0;
    for (int k = 0; k < 200 && used < 20; ++k) {
        const cplx w =
            dre(rng) * cplx(rctx.ctx.periods.omega2) + dim(rng) * rctx.ctx.periods.omega1;
        const cplx yv = y_of_omega(w, rctx.ctx);
        if (!(std::abs(yv) < 0.9)) continue;  // stay inside the series disk
        ++used;
        const cplx series = z * (yv + 1.0) * Q.eval_x0(yv, z, 80);
        CHECK(std::abs(ry_zeta(w, rctx) - series) < 1e-7);
    }
    CHECK(used == 20);
}

TEST_CASE("value at the y-zero and 3 omega2 periodicity") {
    const auto& rctx = rctx_at(0.1);
    const double o2 = rctx.ctx.periods.omega2;
    CHECK(std::abs(ry_zeta(cplx(7 * o2 / 8), rctx) - 0.1 * rctx.q00) < 1e-7);
    std::mt19937_64 rng(53);
    for (int k = 0; k < 20; ++k) {
        const cplx w = sample_w(rctx.ctx, rng);
        CHECK(std::abs(ry_zeta(w + 3.0 * o2, rctx) - ry_zeta(w, rctx)) < 1e-8);
    }
    // the eight coefficients sum to zero exactly by construction
    CHECK(std::abs(rctx.combo.coefficient_sum()) == 0.0);
}

TEST_CASE("r_y minus the zeta sum is constant across the strip") {
    // Evaluate the generating-function side minus the eight-term sum at
    // scattered points: the spread must vanish.
    const auto& rctx = rctx_at(0.1);
    const double z = 0.1;
    const TruncatedSeries3 Q(table80());
    std::mt19937_64 rng(59);
    std::uniform_real_distribution<double> dre(0.6, 0.9), dim(-0.2, 0.2);
    double lo = 1e300, hi = -1e300;
    int used = 0;
    for (int k = 0; k < 200 && used < 12; ++k) {
        const cplx w =
            dre(rng) * cplx(rctx.ctx.periods.omega2) + dim(rng) * rctx.ctx.periods.omega1;
        const cplx yv = y_of_omega(w, rctx.ctx);
        if (!(std::abs(yv) < 0.9)) continue;
        ++used;
        const cplx gf = z * (yv + 1.0) * Q.eval_x0(yv, z, 80);
        const double c = (gf - rctx.combo.eval_no_constant(w)).real();
        lo = std::min(lo, c);
        hi = std::max(hi, c);
    }
    CHECK(used == 12);
    CHECK(hi - lo < 1e-8);
    CHECK(std::abs(lo - rctx.c) < 1e-7);
}

TEST_CASE("residue table") {
    const auto rep = verify_table1(rctx_at(0.1));
    CHECK(rep.pass);
    REQUIRE(rep.poles.size() == 8);
    // spot values: 1/(2z) at omega2/8 and 1/z at 17 omega2/8
    CHECK(std::abs(rep.poles[0].got - cplx(5.0)) < 1e-5);
    CHECK(std::abs(rep.poles[5].got - cplx(10.0)) < 1e-5);
    CHECK(rep.removable_max < 1e-5);
    for (const auto& e : rep.poles) {
        CHECK(e.rel_error < 1e-6);
        CHECK(e.direction_spread < 1e-6);
    }
}

TEST_CASE("excursion series from the zeta expression") {
    const TruncatedSeries3 Q(table80());
    SUBCASE("z = 0.1 vs series and hypergeometric route") {
        const double q = q00_zeta(rctx_at(0.1).ctx);
        CHECK(std::abs(q - Q.eval(0, 0, 0.1, 80).real()) < 1e-8);
        const double G = gauss_2f1(Rat(-1, 2), Rat(-1, 6), Rat(2, 3), cplx(16 * 0.01)).real();
        CHECK(std::abs(q - (G - 1) / (2 * 0.01)) < 1e-8);
    }
    SUBCASE("z = 0.2 vs series") {
        const double q = q00_zeta(rctx_at(0.2).ctx);
        CHECK(std::abs(q - Q.eval(0, 0, 0.2, 80).real()) < 1e-6);
    }
}

TEST_CASE("difference route to the excursion series") {
    CHECK(std::abs(q00_from_ry(rctx_at(0.1)) - rctx_at(0.1).q00) < 1e-8);
    CHECK(std::abs(q00_from_ry(rctx_at(0.05)) - rctx_at(0.05).q00) < 1e-8);
    // the constant c cancels in the difference
    RYContext shifted = rctx_at(0.1);
    shifted.c += 1.0;
    CHECK(std::abs(q00_from_ry(shifted) - q00_from_ry(rctx_at(0.1))) < 1e-14);
}

TEST_CASE("continuation identities") {
    const auto rep = check_continuation_identities(rctx_at(0.1), 50, 61);
    CHECK(rep.shift_residual < 1e-7);
    CHECK(rep.eta_residual < 1e-7);
    CHECK(rep.period1_residual < 1e-7);
    CHECK(rep.rx_shift_residual < 1e-7);
}

TEST_CASE("coefficient extraction along the vertical axis") {
    const TruncatedSeries3 Q(table80());
    for (const double z : {0.05, 0.1}) {
        const auto& rctx = rctx_at(z);
        CHECK(extract_gj(rctx, 0) == rctx.q00);
        const double g1 = extract_gj(rctx, 1);
        const double series = Q.q0j_series(1, cplx(z * z), 40).real();
        CHECK(std::abs(g1 - series) < 1e-7);
    }
    CHECK_THROWS_AS(extract_gj(rctx_at(0.1), 2), std::domain_error);
}

TEST_CASE("branch count stays within six") {
    const auto& rctx = rctx_at(0.1);
    SUBCASE("real y inside (0,1)") {
        const auto rep = check_six_branches(rctx, cplx(0.37));
        CHECK(rep.pass);
        CHECK(rep.distinct_clusters <= 6);
        CHECK(rep.y_consistency < 1e-8);
        CHECK(rep.periodicity_residual < 1e-8);
        // one branch value is the convergent series branch
        const TruncatedSeries3 Q(table80());
        const cplx principal = Q.eval_x0(0.37, 0.1, 80);
        double best = 1e300;
        for (const cplx v : rep.branch_values) best = std::min(best, std::abs(v - principal));
        CHECK(best < 1e-7);
    }
    SUBCASE("y on the unit circle") {
        const auto rep = check_six_branches(rctx, std::polar(1.0, 0.7));
        CHECK(rep.pass);
        CHECK(rep.distinct_clusters <= 6);
    }
}

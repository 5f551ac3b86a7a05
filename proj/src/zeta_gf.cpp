#include "gessel/zeta_gf.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

namespace gessel {

namespace {

const cplx kI{0.0, 1.0};

cplx eta_of(cplx w, const UniformizationContext& ctx) {
    return -w + ctx.periods.omega1 + cplx(ctx.periods.omega2) + cplx(ctx.periods.omega3);
}

} // namespace

cplx f_y(cplx w, const UniformizationContext& ctx) {
    const cplx reflected = -w + ctx.periods.omega1 + cplx(ctx.periods.omega2);
    return x_of_omega(w, ctx) * (y_of_omega(reflected, ctx) - y_of_omega(w, ctx));
}

cplx f_y_log_form(cplx w, const UniformizationContext& ctx) {
    return x_prime_of_omega(w, ctx) / (2.0 * ctx.z * x_of_omega(w, ctx));
}

cplx f_x(cplx w, const UniformizationContext& ctx) {
    return y_of_omega(w, ctx) * (x_of_omega(eta_of(w, ctx), ctx) - x_of_omega(w, ctx));
}

double check_orbit_sum_vanishes(const UniformizationContext& ctx, int samples,
                                std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> d(0.07, 0.93);
    const double o3 = ctx.periods.omega3;
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        const cplx w = d(rng) * cplx(ctx.periods.omega2) + d(rng) * ctx.periods.omega1;
        cplx total = 0.0;
        bool usable = true;
        for (int k = 0; k < 4; ++k) {
            const cplx v = f_y(w + double(k) * o3, ctx);
            if (!(std::abs(v) < 1e7)) usable = false;
            total += v;
        }
        if (usable) worst = std::max(worst, std::abs(total));
    }
    return worst;
}

// ---------------------------------------------------------------------------

double q00_zeta(const UniformizationContext& ctx) {
    const double o2 = ctx.periods.omega2, z = ctx.z;
    const auto zt = [&](double k) { return ctx.lat13.zeta(cplx(k * o2 / 4.0)); };
    const cplx s =
        zt(1) - 3.0 * zt(2) + 2.0 * zt(3) + 3.0 * zt(4) - 5.0 * zt(5) + 2.0 * zt(6);
    const cplx v = s / (2.0 * z * z);
    if (std::abs(v.imag()) > 1e-9)
        throw std::runtime_error("q00_zeta: unexpected imaginary part");
    return v.real();
}

double q00_zeta(double z) { return q00_zeta(make_context(z)); }

RYContext make_ry_context(const UniformizationContext& ctx) {
    const double o2 = ctx.periods.omega2, z = ctx.z;
    ZetaCombination combo{ctx.lat13, cplx{0.0, 0.0}, {}};
    static constexpr int kEighths[8] = {1, 3, 11, 13, 15, 17, 21, 23};
    static constexpr double kWeights[8] = {1, -1, 1, -1, -1, 2, -2, 1};
    for (int i = 0; i < 8; ++i)
        combo.terms.emplace_back(cplx(kWeights[i] / (2.0 * z)),
                                 cplx(kEighths[i] * o2 / 8.0));
    const double q00 = q00_zeta(ctx);
    const cplx zhat = combo.eval_no_constant(cplx(7.0 * o2 / 8.0));
    const cplx c = z * q00 - zhat;
    if (std::abs(c.imag()) > 1e-10)
        throw std::runtime_error("make_ry_context: constant c is not real");
    return RYContext{ctx, std::move(combo), c.real(), q00};
}

RYContext make_ry_context(double z) { return make_ry_context(make_context(z)); }

cplx ry_zeta(cplx w, const RYContext& rctx) {
    return rctx.c + rctx.combo.eval_no_constant(w);
}

cplx ry_zeta_prime(cplx w, const RYContext& rctx) { return rctx.combo.eval_derivative(w); }

cplx rx_zeta(cplx w, const RYContext& rctx) {
    return x_of_omega(w, rctx.ctx) * y_of_omega(w, rctx.ctx) - ry_zeta(w, rctx) +
           rctx.ctx.z * rctx.q00;
}

double q00_from_ry(const RYContext& rctx) {
    const double o2 = rctx.ctx.periods.omega2;
    const cplx v =
        (ry_zeta(cplx(7.0 * o2 / 8.0), rctx) - ry_zeta(cplx(5.0 * o2 / 8.0), rctx)) /
        rctx.ctx.z;
    return v.real();
}

// ---------------------------------------------------------------------------

ResidueEstimate numeric_residue(const std::function<cplx(cplx)>& f, cplx p, double eps) {
    // Per-direction Richardson on (w-p) f(w): four levels kill the eps..eps^3
    // terms of the local expansion; the spread across the four directions
    // flags a misclassified pole order.
    std::array<cplx, 4> dir_limits;
    for (int kd = 0; kd < 4; ++kd) {
        const cplx d = std::polar(1.0, 0.25 + kd * std::acos(-1.0) / 2.0);
        std::array<cplx, 4> a;
        for (int lev = 0; lev < 4; ++lev) {
            const double e = eps / double(1 << lev);
            a[lev] = (e * d) * f(p + e * d);
        }
        // Richardson triangle for first-order steps halving each level
        for (int ord = 1; ord < 4; ++ord)
            for (int i = 3; i >= ord; --i) {
                const double w2 = std::pow(2.0, ord);
                a[i] = (w2 * a[i] - a[i - 1]) / (w2 - 1.0);
            }
        dir_limits[kd] = a[3];
    }
    ResidueEstimate out{};
    out.value = (dir_limits[0] + dir_limits[1] + dir_limits[2] + dir_limits[3]) / 4.0;
    double spread = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            spread = std::max(spread, std::abs(dir_limits[i] - dir_limits[j]));
    out.direction_spread = spread;
    return out;
}

Table1Report verify_table1(const RYContext& rctx, double rel_tol) {
    const double o2 = rctx.ctx.periods.omega2, z = rctx.ctx.z;
    const auto f = [&](cplx w) { return ry_zeta(w, rctx); };
    static constexpr int kEighths[8] = {1, 3, 11, 13, 15, 17, 21, 23};
    static constexpr double kWeights[8] = {1, -1, 1, -1, -1, 2, -2, 1};
    Table1Report rep{};
    rep.pass = true;
    const double eps = 0.01 * o2;
    for (int i = 0; i < 8; ++i) {
        const cplx p = cplx(kEighths[i] * o2 / 8.0);
        const cplx expected = cplx(kWeights[i] / (2.0 * z));
        const ResidueEstimate est = numeric_residue(f, p, eps);
        const double rel = std::abs(est.value - expected) / std::abs(expected);
        rep.poles.push_back({kEighths[i] / 8.0, expected, est.value, rel,
                             est.direction_spread / std::abs(expected)});
        if (rel > rel_tol || est.direction_spread / std::abs(expected) > rel_tol)
            rep.pass = false;
    }
    // 9/8 and 19/8 are removable
    double removable = 0.0;
    for (const int k : {9, 19}) {
        const ResidueEstimate est = numeric_residue(f, cplx(k * o2 / 8.0), eps);
        removable = std::max(removable, std::abs(est.value));
    }
    rep.removable_max = removable;
    if (removable > rel_tol / z) rep.pass = false;
    // mesh scan of one fundamental domain, away from the listed poles
    double offpole = 0.0;
    const cplx o1 = rctx.ctx.periods.omega1;
    for (int a = 0; a < 48; ++a)
        for (int b = 1; b < 8; ++b) {
            const cplx w = (0.125 + 3.0 * a / 48.0) * o2 + (b / 8.0) * o1;
            double dist = 1e30;
            for (const int k : kEighths)
                dist = std::min(dist, std::abs(w - cplx(k * o2 / 8.0)));
            if (dist < 0.1 * o2) continue;
            offpole = std::max(offpole, std::abs(f(w)));
        }
    rep.offpole_max = offpole;
    if (!(offpole < 1e3 / z)) rep.pass = false;
    return rep;
}

// ---------------------------------------------------------------------------

double ContinuationReport::max() const {
    return std::max({shift_residual, eta_residual, period1_residual, rx_shift_residual});
}

ContinuationReport check_continuation_identities(const RYContext& rctx, int samples,
                                                 std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> d(0.06, 0.94);
    const auto& ctx = rctx.ctx;
    const cplx o1 = ctx.periods.omega1;
    const double o2 = ctx.periods.omega2, o3 = ctx.periods.omega3;
    ContinuationReport rep{0, 0, 0, 0};
    int used = 0;
    for (int s = 0; s < samples || used < samples / 2; ++s) {
        if (s > 8 * samples) break;
        const cplx w = 3.0 * d(rng) * cplx(o2) + d(rng) * o1;
        const cplx fyv = f_y(w, ctx), fxv = f_x(w, ctx);
        const cplx xy = x_of_omega(w, ctx) * y_of_omega(w, ctx);
        if (!(std::abs(fyv) < 1e5 && std::abs(fxv) < 1e5 && std::abs(xy) < 1e5)) continue;
        ++used;
        rep.shift_residual = std::max(
            rep.shift_residual, std::abs(ry_zeta(w + o3, rctx) - ry_zeta(w, rctx) - fyv));
        rep.eta_residual = std::max(
            rep.eta_residual, std::abs(ry_zeta(eta_of(w, ctx), rctx) - ry_zeta(w, rctx)));
        rep.period1_residual = std::max(
            rep.period1_residual, std::abs(ry_zeta(w + o1, rctx) - ry_zeta(w, rctx)));
        rep.rx_shift_residual = std::max(
            rep.rx_shift_residual, std::abs(rx_zeta(w - o3, rctx) - rx_zeta(w, rctx) - fxv));
    }
    return rep;
}

// ---------------------------------------------------------------------------

double extract_gj(const RYContext& rctx, int j) {
    if (j != 0 && j != 1) throw std::domain_error("extract_gj: j must be 0 or 1");
    if (j == 0) return rctx.q00;
    const auto& ctx = rctx.ctx;
    const double o2 = ctx.periods.omega2, z = ctx.z;
    const cplx w0 = cplx(7.0 * o2 / 8.0);
    // y has a double zero at w0, so r_y'/(z y') is evaluated as the limit
    // r_y''(w0) / (z y''(w0)): the numerator analytically, the denominator
    // by symmetric differences (y(w0 +/- h) = (y''/2) h^2 + O(h^3)) with one
    // Richardson step.
    cplx ry_second = 0.0;  // d/dw of r_y' = -sum r_l wp(w - shift_l)
    for (const auto& [coeff, shift] : rctx.combo.terms)
        ry_second -= coeff * ctx.lat13.wp_prime(w0 - shift);
    const auto ysecond_at = [&](double h) {
        return (y_of_omega(w0 + cplx(h), ctx) + y_of_omega(w0 - cplx(h), ctx)) / (h * h);
    };
    const double h = 1e-3 * o2;
    const cplx y2a = ysecond_at(h), y0b = ysecond_at(h / 2.0);
    const cplx ysecond = (4.0 * y0b - y2a) / 3.0;
    if (std::abs(ysecond) < 1e-12)
        throw std::runtime_error("extract_gj: y''(7 omega2/8) vanished");
    const cplx g1 = ry_second / (z * ysecond) - rctx.q00;
    return g1.real();
}

// ---------------------------------------------------------------------------

namespace {

// Complex Newton for y(w) = y0, from a seed grid over the fundamental cell.
std::vector<cplx> solve_y_equals(const UniformizationContext& ctx, cplx y0) {
    const cplx o1 = ctx.periods.omega1;
    const double o2 = ctx.periods.omega2;
    std::vector<cplx> sols;
    const auto push_unique = [&](cplx w) {
        // reduce mod (omega1, omega2) to [0,1)x[0,1); omega2 is real and
        // omega1 purely imaginary here
        double aq = w.real() / o2, bq = w.imag() / o1.imag();
        aq -= std::floor(aq);
        bq -= std::floor(bq);
        const cplx rep = aq * cplx(o2) + bq * o1;
        for (const cplx s : sols)
            if (std::abs(s - rep) < 1e-6 * o2) return;
        sols.push_back(rep);
    };
    for (int a = 0; a < 12; ++a) {
        for (int b = 0; b < 7; ++b) {
            cplx w = ((a + 0.5) / 12.0) * cplx(o2) + ((b + 0.5) / 7.0) * o1;
            bool ok = false;
            for (int it = 0; it < 60; ++it) {
                const cplx fv = y_of_omega(w, ctx) - y0;
                if (std::abs(fv) < 1e-12) {
                    ok = true;
                    break;
                }
                const cplx dv = y_prime_of_omega(w, ctx);
                if (!(std::abs(dv) > 1e-14)) break;
                cplx step = fv / dv;
                if (std::abs(step) > 0.2 * o2) step *= 0.2 * o2 / std::abs(step);
                w -= step;
            }
            if (ok) push_unique(w);
        }
    }
    return sols;
}

} // namespace

SixBranchesReport check_six_branches(const RYContext& rctx, cplx y0, double cluster_tol) {
    const auto& ctx = rctx.ctx;
    const cplx o1 = ctx.periods.omega1;
    const double o2 = ctx.periods.omega2, z = ctx.z;
    SixBranchesReport rep{};
    rep.y0 = y0;
    const auto sols = solve_y_equals(ctx, y0);
    if (sols.empty()) throw std::runtime_error("check_six_branches: no solution of y(w)=y0");
    const cplx wa = sols.front();
    // 12 representatives: omega2-shifts across the 3*omega2 domain, the
    // eta-reflections of each, and an omega1-translate of the first six.
    std::vector<cplx> reps;
    for (int k = 0; k < 3; ++k) {
        reps.push_back(wa + double(k) * o2);
        reps.push_back(eta_of(wa, ctx) + double(k) * o2);
    }
    for (int k = 0; k < 6; ++k) reps.push_back(reps[k] + o1);
    rep.y_consistency = 0.0;
    for (const cplx w : reps) {
        rep.y_consistency = std::max(rep.y_consistency, std::abs(y_of_omega(w, ctx) - y0));
        rep.branch_values.push_back(ry_zeta(w, rctx) / (z * (y0 + 1.0)));
    }
    // cluster
    std::vector<cplx> centers;
    for (const cplx v : rep.branch_values) {
        bool found = false;
        for (const cplx c : centers)
            if (std::abs(v - c) < cluster_tol * std::max(1.0, std::abs(c))) found = true;
        if (!found) centers.push_back(v);
    }
    rep.distinct_clusters = static_cast<int>(centers.size());
    rep.periodicity_residual =
        std::abs(ry_zeta(wa + 3.0 * o2, rctx) - ry_zeta(wa, rctx));
    rep.pass = rep.distinct_clusters <= 6 && rep.y_consistency < 1e-8 &&
               rep.periodicity_residual < 1e-8;
    return rep;
}

} // namespace gessel

#pragma once

#include "gessel/lattice.hpp"
#include "gessel/uniformization.hpp"
#include "gessel/walks.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace gessel {

// ---------------------------------------------------------------------------
// The zeta-function representation of the sectionally lifted generating
// functions r_x(w) = K(x(w),0) Q(x(w),0) and r_y(w) = K(0,y(w)) Q(0,y(w)).

/// f_y(w) = x(w) [y(-w + o1 + o2) - y(w)], the increment of r_y under the
/// omega3 shift. Equal to x'(w) / (2 z x(w)).
cplx f_y(cplx w, const UniformizationContext& ctx);
cplx f_y_log_form(cplx w, const UniformizationContext& ctx);

/// f_x(w) = y(w) [x(-w + o1 + o2 + o3) - x(w)].
cplx f_x(cplx w, const UniformizationContext& ctx);

/// max |f_y(w) + f_y(w+o3) + f_y(w+2 o3) + f_y(w+3 o3)| over random w;
/// zero because the alternating orbit sum of the model vanishes.
double check_orbit_sum_vanishes(const UniformizationContext& ctx, int samples,
                                std::uint64_t seed);

// ---------------------------------------------------------------------------

/// r_y as the eight-term zeta_{1,3} combination: shifts k*omega2/8 for
/// k in {1,3,11,13,15,17,21,23}, coefficients {1,-1,1,-1,-1,2,-2,1}/(2z),
/// plus the constant c = z Q(0,0) - zhat(7 omega2/8) resolved through the
/// zero of y at 7 omega2/8 (never fitted).
struct RYContext {
    UniformizationContext ctx;
    ZetaCombination combo;  // on ctx.lat13, zero constant; c kept separate
    double c;
    double q00;  // Q(0,0;z) from the six-term zeta expression
};

RYContext make_ry_context(double z);
RYContext make_ry_context(const UniformizationContext& ctx);

cplx ry_zeta(cplx w, const RYContext& rctx);
/// r_y'(w) = -sum_l r_l wp_{1,3}(w - shift_l).
cplx ry_zeta_prime(cplx w, const RYContext& rctx);

/// r_x recovered from the functional equation:
/// r_x(w) = x(w) y(w) - r_y(w) + z Q(0,0).
cplx rx_zeta(cplx w, const RYContext& rctx);

// ---------------------------------------------------------------------------

/// Q(0,0;z) = [zeta13(o2/4) - 3 zeta13(o2/2) + 2 zeta13(3o2/4)
///             + 3 zeta13(o2) - 5 zeta13(5o2/4) + 2 zeta13(3o2/2)] / (2z^2).
double q00_zeta(double z);
double q00_zeta(const UniformizationContext& ctx);

/// Q(0,0;z) = (r_y(7o2/8) - r_y(5o2/8)) / z; the constant c cancels.
double q00_from_ry(const RYContext& rctx);

// ---------------------------------------------------------------------------

struct ResidueEstimate {
    cplx value;
    double direction_spread;  // max pairwise distance of the 4 directional limits
};

/// Residue of f at p by per-direction Richardson extrapolation of
/// (w-p) f(w) along four approach directions (their spread guards against
/// a misclassified pole order).
ResidueEstimate numeric_residue(const std::function<cplx(cplx)>& f, cplx p, double eps);

struct Table1Report {
    struct Entry {
        double k_eighths;  // pole at k * omega2/8
        cplx expected, got;
        double rel_error, direction_spread;
    };
    std::vector<Entry> poles;        // the eight listed poles
    double removable_max;            // residue magnitude at 9/8, 19/8 (expect ~0)
    double offpole_max;              // max |r_y| on a mesh away from the poles
    bool pass;
};

/// Residues of r_y at the eight poles of the fundamental domain
/// omega1[-1/2,1/2) + omega2[1/8, 25/8): k/8 in {1,3,11,13,15,17,21,23}
/// with residues {1,-1,1,-1,-1,2,-2,1}/(2z); 9 omega2/8 and 19 omega2/8
/// are removable.
Table1Report verify_table1(const RYContext& rctx, double rel_tol = 1e-6);

// ---------------------------------------------------------------------------

struct ContinuationReport {
    double shift_residual;      // r_y(w + o3) - r_y(w) - f_y(w)
    double eta_residual;        // r_y(eta w) - r_y(w)
    double period1_residual;    // r_y(w + o1) - r_y(w)
    double rx_shift_residual;   // r_x(w - o3) - r_x(w) - f_x(w)
    double max() const;
};
ContinuationReport check_continuation_identities(const RYContext& rctx, int samples,
                                                 std::uint64_t seed);

// ---------------------------------------------------------------------------

/// g_0 = Q(0,0); g_1 = Q_y(0,0) from the derivative of
/// r_y(w) = z (y(w)+1) Q(0,y(w)) at the double zero w0 = 7 omega2/8 of y.
/// Since y'(w0) = 0 the quotient r_y'/(z y') is evaluated as its limit,
/// r_y''(w0) / (z y''(w0)), with y'' by symmetric differences + Richardson.
double extract_gj(const RYContext& rctx, int j);

// ---------------------------------------------------------------------------

struct SixBranchesReport {
    cplx y0;
    std::vector<cplx> branch_values;  // at the 12 representatives
    int distinct_clusters;            // expected <= 6
    double periodicity_residual;      // |r_y(w + 3 omega2) - r_y(w)|
    double y_consistency;             // max |y(rep) - y0|
    bool pass;
};

/// Branch count of Q(0,y) at a sampled y: solve y(w) = y0, generate the 12
/// representatives (eta-reflections, omega2-shifts, omega1-shifts), cluster
/// r_y/(z(y+1)) at tolerance 1e-6 and verify at most six distinct values.
SixBranchesReport check_six_branches(const RYContext& rctx, cplx y0,
                                     double cluster_tol = 1e-6);

} // namespace gessel

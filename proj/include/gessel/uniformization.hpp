#pragma once

#include "gessel/kernel.hpp"
#include "gessel/lattice.hpp"

#include <array>
#include <cstdint>

namespace gessel {

// ---------------------------------------------------------------------------
// Periods of the kernel curve, by quadrature of
//   omega1 = i * int_{x1}^{x2} dx/sqrt(-d(x)),
//   omega2 =     int_{x2}^{x3} dx/sqrt(d(x)),
//   omega3 =     int_{-inf}^{x1} dx/sqrt(d(x)).
// Endpoint inverse-square-root singularities are removed by the
// x = a + (b-a) sin^2(theta) substitution; the infinite tail is mapped to
// [0,1] by x = cut - (1-t)/t, under which the quartic factors leave a
// smooth integrand.

struct ModelPeriods {
    cplx omega1;    // purely imaginary, omega1/i > 0
    double omega2;  // real positive
    double omega3;  // real positive; omega3/omega2 = 3/4 for this model
    double ratio() const { return omega3 / omega2; }
};

/// Throws std::domain_error outside (0,1/4); std::runtime_error if the
/// quadrature error estimate exceeds 1e-11.
ModelPeriods compute_periods(double z);

// ---------------------------------------------------------------------------

/// Everything needed to evaluate the uniformization maps at a fixed z:
/// periods, branch points, the (omega1, omega2) and (omega1, 3*omega2)
/// lattices, and the discriminant data at x4. Immutable; construction is
/// pure and contexts for different z are independent.
struct UniformizationContext {
    double z;
    ModelPeriods periods;
    BranchPoints bp;
    RectLattice lat;    // periods (omega1, omega2)
    RectLattice lat13;  // periods (omega1, 3*omega2)
    Invariants inv;     // of lat
    double x4, d1x4, d2x4;  // x4, d'(x4), d''(x4)
};

UniformizationContext make_context(double z);

/// x(w) = x4 + d'(x4) / (wp(w) - d''(x4)/6). Pole (infinity result) where
/// wp(w) = d''(x4)/6.
cplx x_of_omega(cplx w, const UniformizationContext& ctx);

/// Second coordinate of the kernel-curve parametrization. Of the two
/// algebraically equal quadratic-root forms (-b+s)/(2a) and 2c/(-b-s),
/// with s = d'(x4) wp'(w) / (2 (wp(w)-d''(x4)/6)^2), the better conditioned
/// one is used, so x(w) = 0 (where a vanishes) is regular.
cplx y_of_omega(cplx w, const UniformizationContext& ctx);

/// Analytic derivatives (no finite differences).
cplx x_prime_of_omega(cplx w, const UniformizationContext& ctx);
cplx y_prime_of_omega(cplx w, const UniformizationContext& ctx);

// ---------------------------------------------------------------------------
// Structure checks.

struct OrderEstimate {
    double fitted_order;  // log-log slope of |f| approaching the point
};

struct PolesZerosReport {
    // x: simple poles at omega2/8, 7 omega2/8; simple zeros at 3 omega2/8,
    // 5 omega2/8. y: double pole at 3 omega2/8, double zero at 7 omega2/8.
    std::array<OrderEstimate, 2> x_poles, x_zeros;
    OrderEstimate y_pole, y_zero;
    double wp_at_eighth_residual;  // |wp(omega2/8) - d''(x4)/6|
    bool pass;
};
PolesZerosReport check_poles_zeros(const UniformizationContext& ctx);

struct GroupLiftReport {
    double xi_residual;     // max |x(-w + o1 + o2) - x(w)|
    double eta_residual;    // max |y(-w + o1 + o2 + o3) - y(w)|
    double shift_residual;  // max |x(w + o3) - x(eta xi w)|
};
GroupLiftReport check_group_lift(const UniformizationContext& ctx, int samples,
                                 std::uint64_t seed);

struct SpecialValuesReport {
    double quarter_residual;  // |wp(omega2/4) - (1+4z^2)/3|
    double half_residual;     // |wp(omega2/2) - (1-8z^2)/3|
    double three_quarter_residual;
};
SpecialValuesReport wp_special_values(const UniformizationContext& ctx);

// ---------------------------------------------------------------------------
// Algebraic data of the index-3 sublattice.

/// Unique positive root of X^4 - 2 g2 X^2 + 8 g3 X - g2^2/3 = 0, with the
/// closed-form invariants of Lemma-level g2, g3 in z. Bracketed bisection +
/// Newton polish; throws std::runtime_error if bracketing fails.
double compute_R(double z);

struct SublatticeData {
    double R;
    double g2_13, g3_13;  // invariants of the (omega1, 3*omega2) lattice
    double T4;            // wp_{1,3}(omega2) = R/6
};
/// Closed forms: g2_13 = -g2/9 + 10R^2/27,
/// g3_13 = -35R^3/729 + 7 g2 R/243 - g3/27, T4 = R/6.
SublatticeData sublattice_invariants(double z);

struct TValues {
    std::array<double, 6> t;  // T1..T6 = wp_{1,3}(l * omega2/4)
    double t3_t5_gap;         // separation of the two close cubic roots
    bool t3_t5_resolved;      // false when the gap is below 1e-6
};

/// T1, T3, T5 are the descending-sorted real roots of the cubic
///   X^3 - (R/3 + E) X^2 + (R E/3 + R^2/108 + g2/18) X
///       + 23R^3/2916 - E R^2/36 + g3/27 - 19 R g2/972 = 0,  E = (1+4z^2)/3.
/// T1 is the largest for all z in (0,1/4), and T3 > T5 throughout (their
/// gap is 4z^6 + O(z^8), positive on the whole interval), so sorting agrees
/// with analytic continuation from small z. When the T3/T5 gap drops below
/// 1e-6 the assignment is flagged unresolved. T6 takes the minus branch of
/// its square root; T2 = (R+1-8z^2)/6 - T6/2.
TValues compute_T(double z);

/// The six T values at z = phi(x), as printed closed forms in x:
///   M = (4x^4+28x^3+30x^2+10x+1) / (3(4x+1)^3),
///   N = 2x(x+1)(2x+1) / (4x+1)^{5/2}.
std::array<double, 6> t_at_phi(double x);

/// R at z = phi(x): 2 (2x^2-2x-1)^2 / (4x+1)^3.
double r_at_phi(double x);

} // namespace gessel

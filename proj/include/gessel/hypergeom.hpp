#pragma once

#include "gessel/rational.hpp"
#include "gessel/series.hpp"
#include "gessel/uniformization.hpp"
#include "gessel/walks.hpp"

#include <array>
#include <complex>
#include <vector>

namespace gessel {

// ---------------------------------------------------------------------------
// Gauss hypergeometric series.

/// 2F1([a,b],[c], zarg) by direct summation, tail below 1e-12. Requires
/// |zarg| < 0.95 and c not a nonpositive integer (std::domain_error
/// otherwise); terminating cases (a or b a nonpositive integer) sum exactly.
cplx gauss_2f1(const Rat& a, const Rat& b, const Rat& c, cplx zarg);

// ---------------------------------------------------------------------------
// The covering substitution z = phi(x) rationalizing the key identities.

/// phi(x) = sqrt(x (x+1)^3 / (4x+1)^3), a diffeomorphism (0,1/2) -> (0,1/4).
double phi_map(double x);
/// psi(x) = 16 phi(x)^2 = 16 x (x+1)^3 / (4x+1)^3.
double psi_map(double x);

// ---------------------------------------------------------------------------
// The four auxiliary algebraic hypergeometric functions. The paper-level K
// clashes with the walk kernel symbol, so it is K_hg throughout.

struct KeyFunctionValues {
    double G, H, K_hg, J;
};

/// Series route: G = 2F1([-1/2,-1/6],[2/3],16z^2),
/// H = 2F1([-1/2,1/6],[1/3],16z^2), K_hg = z G' = 4z^2 2F1([1/2,5/6],[5/3],16z^2),
/// J = (G - K_hg)^2.
KeyFunctionValues key_functions_series(double z);

/// Closed forms at z = phi(x):
/// G = (4x^2+8x+1)/(4x+1)^{3/2}, H = (4x^2+2x+1)/(4x+1)^{3/2},
/// K_hg = 4x(x+1)/(4x+1)^{3/2}, J = 1/(4x+1).
KeyFunctionValues closed_forms_GHJK(double x);

// ---------------------------------------------------------------------------
// zeta_{1,3} values L_k and their three-term combinations.

/// L_k = zeta_{1,3}(k omega2/4), k = 1..6.
std::array<double, 6> L_values(const UniformizationContext& ctx);

/// V_{i,j,k} = L_i + L_j - L_k.
double V(int i, int j, int k, const UniformizationContext& ctx);

/// Closed forms of V145, V246, V156, V123 at z = phi(x):
///   (2x^2+4x+1)/(4x+1)^{3/2}, (2x+1)/(4x+1)^{3/2}, (2x+1)/(4x+1),
///   x/(4x+1) + (x+1)(2x+1)/(4x+1)^{3/2}.
std::array<double, 4> v_closed_forms_at_phi(double x);

struct KeyIdentityReport {
    double v145, v246, v156, v123;  // residuals of the four key identities
    double telescoped;              // L1-3L2+2L3+3L4-5L5+2L6 - (G-1)
    double frobenius;               // V_{1,4,5}^2 - (T1+T4+T5)
    double max() const;
};

/// The four key identities
///   V145 = (2G+H)/3 - K/2,  V246 = (2G+H)/3 - K,
///   V156 = (J+1)/2,         V123 = (2G+2H-J-2K+1)/4
/// at z = phi(x), plus the telescoped combination equal to G - 1.
KeyIdentityReport check_key_identities_at(double x);
std::vector<KeyIdentityReport> check_key_identities(const std::vector<double>& x_grid);

/// |q00_zeta(z) - (2F1([-1/2,-1/6],[2/3],16z^2) - 1)/(2z^2)| per grid z.
std::vector<double> check_gessel_equivalence(const std::vector<double>& z_grid);

// ---------------------------------------------------------------------------
// Exact series identities on the counting data.

struct SeriesIdentityReport {
    bool exact_match;
    int first_mismatch_order;  // -1 when exact
    int order;
};

/// f_0(z) = 1 + 2z sum_n q(0,0;2n) z^n composed with w = z(1+z)^3/(1+4z)^3
/// equals (1+8z+4z^2)/(1+4z)^{3/2}, coefficient-exact through order N.
SeriesIdentityReport check_f0_identity(const CountTable& table, int order);

struct ConjectureReport {
    int j;
    int order;
    bool low_coefficients_positive;   // orders 0..3j+2
    bool high_coefficients_vanish;    // orders 3j+3..N
    std::vector<Rat> p_coefficients;  // p_j, orders 0..3j+2
    bool conjecture_consistent() const {
        return low_coefficients_positive && high_coefficients_vanish;
    }
};

/// For f_j(z) = (-1)^j (2j+1) z^j + 2 z^{j+1} sum_n q(0,j;2n) z^n, reports
/// whether f_j(w(z)) (1+4z)^{3/2+3j} / (-z)^j is a degree-(3j+2) polynomial
/// with positive coefficients through order N. Reported, not asserted:
/// these are open conjectures.
ConjectureReport check_new_conjectures(const CountTable& table, int j, int order);

} // namespace gessel

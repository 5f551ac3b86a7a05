#pragma once

#include "gessel/lattice.hpp"

#include <cstdint>

namespace gessel {

// Numeric verification suite for the classical wp/zeta identities used by
// the model: local expansion, addition theorems, quasi-periodicity,
// Frobenius-Stickelberger, bisection, coset sums, and the ellipticity
// dichotomy for zeta combinations. Each check returns its worst residual;
// callers compare against the stated tolerance.

struct ExpansionFit {
    double max_residual;   // |wp - 1/w^2 - g2 w^2/20 - g3 w^4/28| over the radii
    double fitted_order;   // log-log slope of the residual decay, expect ~6
};

/// Local behaviour wp(w) = 1/w^2 + (g2/20) w^2 + (g3/28) w^4 + O(w^6),
/// verified on a shrinking sequence of radii inside `radius`.
ExpansionFit check_P3_expansion(const RectLattice& lat, double radius);

/// zeta(u+v) = zeta(u) + zeta(v) + (wp'(u)-wp'(v)) / (2(wp(u)-wp(v)))
/// and the wp addition formula, on random non-degenerate pairs.
double check_addition_theorems(const RectLattice& lat, int samples, std::uint64_t seed);

/// zeta(u + P) - zeta(u) - 2 zeta(P/2) for both full periods P.
double check_quasi_periodicity(const RectLattice& lat, int samples, std::uint64_t seed);

/// (zeta(a)+zeta(b)+zeta(c))^2 = wp(a)+wp(b)+wp(c) whenever a+b+c = 0.
double check_frobenius_stickelberger(const RectLattice& lat, int samples, std::uint64_t seed);

/// Bisection formula with nonnegative real square roots. Valid on the real
/// segment (0, omega_hat/2); sampled on (0.05, 0.45) * omega_hat, where all
/// three root arguments are positive for the rectangular lattices used here.
double check_bisection(const RectLattice& lat, int samples, std::uint64_t seed);

/// wp with periods (omega_bar, omega_hat/p) via the coset sum versus direct
/// evaluation on the fine lattice.
double check_sublattice_wp(const RectLattice& lat, int p, int samples, std::uint64_t seed);

struct PeriodicityDichotomy {
    double coefficient_sum_abs;
    double periodicity_residual;  // max over both periods and samples
    double expected_defect;       // |sum r_l| * |2 zeta(P/2)|, min over periods
    bool consistent;              // elliptic iff sum == 0, defect otherwise
};

/// P5/P6 dichotomy: a zeta combination is doubly periodic iff its
/// coefficients sum to zero; otherwise the defect equals
/// (sum r_l) * 2 zeta(P/2) exactly.
PeriodicityDichotomy check_zeta_combination_periodicity(const ZetaCombination& combo,
                                                        int samples, std::uint64_t seed);

} // namespace gessel

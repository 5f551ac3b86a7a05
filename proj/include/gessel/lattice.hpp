#pragma once

#include <complex>
#include <utility>
#include <vector>

namespace gessel {

using cplx = std::complex<double>;

struct Invariants {
    cplx g2, g3;
};

/// Lattice of FULL periods omega_bar Z + omega_hat Z for the Weierstrass
/// functions. Note: many references parametrize by half-periods; here the
/// defining sums run over integer multiples of omega_bar, omega_hat
/// themselves. The name reflects the rectangular lattices of this model
/// (omega_bar purely imaginary, omega_hat real positive); arbitrary complex
/// period pairs are accepted.
///
/// Internally the basis is Gauss-reduced and wp, wp', zeta are evaluated
/// through Jacobi theta-quotient series in the reduced nome, which keeps
/// full accuracy on strongly anisotropic lattices. Invariants come from
/// Eisenstein q-series. Immutable after construction (cached constants
/// included); all evaluators are pure.
class RectLattice {
public:
    RectLattice(cplx omega_bar, cplx omega_hat);

    cplx omega_bar() const { return omega_bar_; }
    cplx omega_hat() const { return omega_hat_; }

    cplx g2() const { return g2_; }
    cplx g3() const { return g3_; }
    Invariants invariants() const { return {g2_, g3_}; }

    /// Quasi-period constants 2 zeta(omega_bar/2), 2 zeta(omega_hat/2).
    cplx eta_bar() const;
    cplx eta_hat() const;

    /// Distance scale: length of the shortest lattice vector.
    double min_period() const { return std::abs(A_); }

    cplx wp(cplx u) const;
    cplx wp_prime(cplx u) const;
    cplx zeta(cplx u) const;

    /// wp'' from the differential equation: 6 wp^2 - g2/2.
    cplx wp_second(cplx u) const;

    /// True if u lies on the lattice (pole of wp/zeta); the evaluators
    /// return complex infinity there rather than throwing.
    bool is_lattice_point(cplx u) const;

    // Reduced basis / nome, exposed for tests.
    cplx reduced_a() const { return A_; }
    cplx reduced_b() const { return B_; }
    cplx tau() const { return tau_; }

private:
    struct ThetaSums {
        cplx s0, s1, s2, s3;  // theta1 and first three v-derivatives, common scale
    };
    ThetaSums theta_sums(cplx v) const;
    cplx reduce(cplx u, long& m, long& n) const;

    cplx omega_bar_, omega_hat_;
    cplx A_, B_;     // reduced basis, Im(B/A) > 0
    cplx tau_;       // B/A
    cplx eta1_;      // zeta(A/2)
    cplx eta3_;      // zeta(B/2)
    cplx g2_, g3_;
    double inv_[4];  // inverse of [Re A, Re B; Im A, Im B]
};

inline cplx wp(cplx omega, const RectLattice& lat) { return lat.wp(omega); }
inline cplx wp_prime(cplx omega, const RectLattice& lat) { return lat.wp_prime(omega); }
inline cplx zeta_fn(cplx omega, const RectLattice& lat) { return lat.zeta(omega); }

inline Invariants invariants_from_lattice(const RectLattice& lat) { return lat.invariants(); }

/// Weierstrass function with periods (omega_bar, omega_hat/p) written as a
/// coset sum over wp of the coarse lattice:
///   wp(u) + sum_{l=1..p-1} [wp(u + l omega_hat/p) - wp(l omega_hat/p)].
cplx sublattice_wp(cplx omega, const RectLattice& lat, int p);

// ---------------------------------------------------------------------------

/// Finite combination c + sum_l coeff_l * zeta(omega - shift_l) on a fixed
/// lattice; elliptic iff the coefficients sum to zero.
struct ZetaCombination {
    RectLattice lattice;
    cplx constant{0.0, 0.0};
    std::vector<std::pair<cplx, cplx>> terms;  // (coefficient, shift)

    cplx eval(cplx omega) const;
    cplx eval_no_constant(cplx omega) const;
    /// Derivative: -sum coeff_l * wp(omega - shift_l).
    cplx eval_derivative(cplx omega) const;
    cplx coefficient_sum() const;
};

} // namespace gessel

#include "gessel/lattice.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace gessel {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

cplx complex_inf() {
    const double inf = std::numeric_limits<double>::infinity();
    return {inf, inf};
}

} // namespace

RectLattice::RectLattice(cplx omega_bar, cplx omega_hat)
    : omega_bar_(omega_bar), omega_hat_(omega_hat) {
    cplx a = omega_bar, b = omega_hat;
    const double scale2 = std::norm(a) + std::norm(b);
    const double cross = a.real() * b.imag() - a.imag() * b.real();
    if (!(scale2 > 0.0) || std::abs(cross) < 1e-14 * scale2)
        throw std::invalid_argument("RectLattice: periods linearly dependent over R");

    // Gauss reduction to a shortest basis.
    for (int it = 0; it < 64; ++it) {
        if (std::norm(a) > std::norm(b)) std::swap(a, b);
        const double mu =
            std::round((b.real() * a.real() + b.imag() * a.imag()) / std::norm(a));
        if (mu == 0.0) break;
        b -= mu * a;
    }
    if ((b / a).imag() < 0.0) b = -b;
    A_ = a;
    B_ = b;
    tau_ = b / a;

    const double det = A_.real() * B_.imag() - A_.imag() * B_.real();
    inv_[0] = B_.imag() / det;
    inv_[1] = -B_.real() / det;
    inv_[2] = -A_.imag() / det;
    inv_[3] = A_.real() / det;

    // zeta(A/2) from the theta constants (third over first derivative at
    // v = 0), then zeta(B/2) directly from the quasi-periodic
    // representation; Legendre's relation is left to tests.
    const ThetaSums t0 = theta_sums(cplx{0.0, 0.0});
    eta1_ = -kPi * kPi * (t0.s3 / t0.s1) / (6.0 * A_);
    {
        const cplx u = B_ / 2.0;
        const cplx v = kPi * u / A_;
        const ThetaSums t = theta_sums(v);
        eta3_ = (2.0 * eta1_ / A_) * u + (kPi / A_) * (t.s1 / t.s0);
    }

    // Invariants from Eisenstein series in the reduced nome Q = e^{2 pi i tau}.
    const cplx Q = std::exp(2.0 * kPi * kI * tau_);
    cplx s3 = 0.0, s5 = 0.0, Qk = 1.0;
    for (int k = 1; k < 200; ++k) {
        Qk *= Q;
        const double k3 = double(k) * k * k;
        const cplx term3 = k3 * Qk / (1.0 - Qk);
        const cplx term5 = k3 * double(k) * k * Qk / (1.0 - Qk);
        s3 += term3;
        s5 += term5;
        if (std::abs(Qk) < 1e-20) break;
    }
    const cplx piA = kPi / A_;
    const cplx piA2 = piA * piA;
    const cplx piA4 = piA2 * piA2;
    g2_ = (4.0 / 3.0) * piA4 * (1.0 + 240.0 * s3);
    g3_ = (8.0 / 27.0) * piA4 * piA2 * (1.0 - 504.0 * s5);
}

cplx RectLattice::eta_bar() const { return 2.0 * zeta(omega_bar_ / 2.0); }
cplx RectLattice::eta_hat() const { return 2.0 * zeta(omega_hat_ / 2.0); }

cplx RectLattice::reduce(cplx u, long& m, long& n) const {
    const double alpha = inv_[0] * u.real() + inv_[1] * u.imag();
    const double beta = inv_[2] * u.real() + inv_[3] * u.imag();
    m = std::lround(alpha);
    n = std::lround(beta);
    return u - double(m) * A_ - double(n) * B_;
}

bool RectLattice::is_lattice_point(cplx u) const {
    long m, n;
    const cplx u0 = reduce(u, m, n);
    return std::abs(u0) < 1e-12 * std::abs(A_);
}

// theta1 and its first three v-derivatives up to a common scale, from
//   theta1(v) = 2 sum_{n>=0} (-1)^n q^{(n+1/2)^2} sin((2n+1) v),
// summed in exponential form, normalized by the leading exponent so that
// strongly anisotropic lattices (large Im tau) cannot overflow.
RectLattice::ThetaSums RectLattice::theta_sums(cplx v) const {
    const cplx ipitau = kI * kPi * tau_;
    const cplx iv = kI * v;
    // normalize by the leading n = 0 exponent
    const cplx p0 = 0.25 * ipitau;
    const double m0 = std::max((p0 + iv).real(), (p0 - iv).real());
    cplx s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    double largest = 0.0;
    for (int n = 0; n < 64; ++n) {
        const double half = n + 0.5;
        const cplx p = ipitau * (half * half);
        const cplx wpos = p + double(2 * n + 1) * iv - m0;
        const cplx wneg = p - double(2 * n + 1) * iv - m0;
        const cplx tp = std::exp(wpos), tm = std::exp(wneg);
        const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
        const double k = 2.0 * n + 1.0;
        s0 += sgn * (-kI) * (tp - tm);
        s1 += sgn * k * (tp + tm);
        s2 += sgn * kI * (k * k) * (tp - tm);
        s3 += sgn * (-(k * k * k)) * (tp + tm);
        const double mag = std::abs(tp) + std::abs(tm);
        largest = std::max(largest, mag);
        if (mag < 1e-22 * largest) break;
    }
    return {s0, s1, s2, s3};
}

cplx RectLattice::zeta(cplx u) const {
    long m, n;
    const cplx u0 = reduce(u, m, n);
    if (std::abs(u0) < 1e-14 * std::abs(A_)) return complex_inf();
    const cplx v = kPi * u0 / A_;
    const ThetaSums t = theta_sums(v);
    if (std::abs(t.s0) < 1e-18 * std::abs(t.s1)) return complex_inf();
    return (2.0 * eta1_ / A_) * u0 + (kPi / A_) * (t.s1 / t.s0) +
           2.0 * double(m) * eta1_ + 2.0 * double(n) * eta3_;
}

cplx RectLattice::wp(cplx u) const {
    long m, n;
    const cplx u0 = reduce(u, m, n);
    if (std::abs(u0) < 1e-14 * std::abs(A_)) return complex_inf();
    const cplx v = kPi * u0 / A_;
    const ThetaSums t = theta_sums(v);
    if (std::abs(t.s0) < 1e-18 * std::abs(t.s1)) return complex_inf();
    const cplx r1 = t.s1 / t.s0, r2 = t.s2 / t.s0;
    const cplx c = kPi / A_;
    return -2.0 * eta1_ / A_ - c * c * (r2 - r1 * r1);
}

cplx RectLattice::wp_prime(cplx u) const {
    long m, n;
    const cplx u0 = reduce(u, m, n);
    if (std::abs(u0) < 1e-14 * std::abs(A_)) return complex_inf();
    const cplx v = kPi * u0 / A_;
    const ThetaSums t = theta_sums(v);
    if (std::abs(t.s0) < 1e-18 * std::abs(t.s1)) return complex_inf();
    const cplx r1 = t.s1 / t.s0, r2 = t.s2 / t.s0, r3 = t.s3 / t.s0;
    const cplx c = kPi / A_;
    return -c * c * c * (r3 - 3.0 * r2 * r1 + 2.0 * r1 * r1 * r1);
}

cplx RectLattice::wp_second(cplx u) const {
    const cplx p = wp(u);
    return 6.0 * p * p - 0.5 * g2_;
}

cplx sublattice_wp(cplx omega, const RectLattice& lat, int p) {
    if (p < 1) throw std::domain_error("sublattice_wp: p must be >= 1");
    cplx s = lat.wp(omega);
    const cplx step = lat.omega_hat() / double(p);
    for (int l = 1; l < p; ++l)
        s += lat.wp(omega + double(l) * step) - lat.wp(double(l) * step);
    return s;
}

cplx ZetaCombination::eval(cplx omega) const { return constant + eval_no_constant(omega); }

cplx ZetaCombination::eval_no_constant(cplx omega) const {
    cplx s = 0.0;
    for (const auto& [coeff, shift] : terms) s += coeff * lattice.zeta(omega - shift);
    return s;
}

cplx ZetaCombination::eval_derivative(cplx omega) const {
    cplx s = 0.0;
    for (const auto& [coeff, shift] : terms) s -= coeff * lattice.wp(omega - shift);
    return s;
}

cplx ZetaCombination::coefficient_sum() const {
    cplx s = 0.0;
    for (const auto& [coeff, shift] : terms) s += coeff;
    return s;
}

} // namespace gessel

#include "gessel/elliptic_checks.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace gessel {

namespace {

// Random points in the fundamental cell, kept away from the lattice and
// from each other's reflections so that denominators in the identities
// stay healthy.
class CellSampler {
public:
    CellSampler(const RectLattice& lat, std::uint64_t seed) : lat_(lat), rng_(seed) {}

    cplx sample(double margin = 0.08) {
        std::uniform_real_distribution<double> d(margin, 1.0 - margin);
        for (int tries = 0; tries < 100; ++tries) {
            const cplx u = d(rng_) * lat_.reduced_a() + d(rng_) * lat_.reduced_b();
            if (!lat_.is_lattice_point(u) && !lat_.is_lattice_point(2.0 * u)) return u;
        }
        return 0.31 * lat_.reduced_a() + 0.17 * lat_.reduced_b();
    }

private:
    const RectLattice& lat_;
    std::mt19937_64 rng_;
};

} // namespace

ExpansionFit check_P3_expansion(const RectLattice& lat, double radius) {
    // Residual of wp(w) - 1/w^2 - g2 w^2/20 - g3 w^4/28 on shrinking radii;
    // expected O(w^6) (the next Laurent coefficient is g2^2/1200).
    const cplx dir = std::polar(1.0, 0.7);
    std::vector<double> logr, logres;
    double max_res = 0.0;
    for (int k = 0; k < 5; ++k) {
        const double r = radius * std::pow(0.7, k);
        const cplx w = r * dir;
        const cplx res =
            lat.wp(w) - 1.0 / (w * w) - lat.g2() / 20.0 * w * w - lat.g3() / 28.0 * w * w * w * w;
        const double ares = std::abs(res);
        max_res = std::max(max_res, ares);
        if (ares > 1e-13) {  // above the double-precision floor
            logr.push_back(std::log(r));
            logres.push_back(std::log(ares));
        }
    }
    double slope = 6.0;  // assume clean decay if everything sat on the floor
    if (logr.size() >= 2) {
        // least-squares slope
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double n = double(logr.size());
        for (std::size_t i = 0; i < logr.size(); ++i) {
            sx += logr[i];
            sy += logres[i];
            sxx += logr[i] * logr[i];
            sxy += logr[i] * logres[i];
        }
        slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    }
    return {max_res, slope};
}

double check_addition_theorems(const RectLattice& lat, int samples, std::uint64_t seed) {
    CellSampler gen(lat, seed);
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        const cplx u = gen.sample(), v = gen.sample();
        if (std::abs(lat.wp(u) - lat.wp(v)) < 1e-3) continue;  // near-degenerate pair
        const cplx quot = (lat.wp_prime(u) - lat.wp_prime(v)) / (lat.wp(u) - lat.wp(v));
        const cplx zres = lat.zeta(u + v) - lat.zeta(u) - lat.zeta(v) - 0.5 * quot;
        const cplx pres = lat.wp(u + v) + lat.wp(u) + lat.wp(v) - 0.25 * quot * quot;
        worst = std::max({worst, std::abs(zres), std::abs(pres)});
    }
    return worst;
}

double check_quasi_periodicity(const RectLattice& lat, int samples, std::uint64_t seed) {
    CellSampler gen(lat, seed);
    const cplx eb = lat.eta_bar(), eh = lat.eta_hat();
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        const cplx u = gen.sample();
        worst = std::max(worst, std::abs(lat.zeta(u + lat.omega_bar()) - lat.zeta(u) - eb));
        worst = std::max(worst, std::abs(lat.zeta(u + lat.omega_hat()) - lat.zeta(u) - eh));
    }
    return worst;
}

double check_frobenius_stickelberger(const RectLattice& lat, int samples, std::uint64_t seed) {
    CellSampler gen(lat, seed);
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        const cplx a = gen.sample(), b = gen.sample();
        const cplx c = -a - b;
        if (lat.is_lattice_point(c) || std::abs(lat.wp(a) - lat.wp(b)) < 1e-3) continue;
        const cplx zs = lat.zeta(a) + lat.zeta(b) + lat.zeta(c);
        const cplx res = zs * zs - (lat.wp(a) + lat.wp(b) + lat.wp(c));
        worst = std::max(worst, std::abs(res));
    }
    return worst;
}

double check_bisection(const RectLattice& lat, int samples, std::uint64_t seed) {
    // Real segment (0.05, 0.45) * omega_hat; there wp(w) dominates all three
    // half-period values, every square-root argument is positive, and the
    // all-plus branch of the formula is the valid one. Beyond omega_hat/2
    // one square root changes sign, so that range is excluded.
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> d(0.05, 0.45);
    const cplx e1 = lat.wp(lat.omega_hat() / 2.0);
    const cplx e2 = lat.wp(lat.omega_bar() / 2.0);
    const cplx e3 = lat.wp((lat.omega_bar() + lat.omega_hat()) / 2.0);
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        const cplx w = d(rng) * lat.omega_hat();
        const cplx p = lat.wp(w);
        const double a1 = ((p - e1) * (p - e2)).real();
        const double a2 = ((p - e1) * (p - e3)).real();
        const double a3 = ((p - e2) * (p - e3)).real();
        if (a1 < 0 || a2 < 0 || a3 < 0) continue;  // outside the documented branch
        const cplx rhs = p + std::sqrt(a1) + std::sqrt(a2) + std::sqrt(a3);
        worst = std::max(worst, std::abs(lat.wp(w / 2.0) - rhs));
    }
    return worst;
}

double check_sublattice_wp(const RectLattice& lat, int p, int samples, std::uint64_t seed) {
    const RectLattice fine(lat.omega_bar(), lat.omega_hat() / double(p));
    CellSampler gen(lat, seed);
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        const cplx u = gen.sample();
        if (fine.is_lattice_point(u)) continue;
        worst = std::max(worst, std::abs(sublattice_wp(u, lat, p) - fine.wp(u)));
    }
    return worst;
}

PeriodicityDichotomy check_zeta_combination_periodicity(const ZetaCombination& combo,
                                                        int samples, std::uint64_t seed) {
    const RectLattice& lat = combo.lattice;
    CellSampler gen(lat, seed);
    PeriodicityDichotomy out{};
    out.coefficient_sum_abs = std::abs(combo.coefficient_sum());
    const double defect_bar = out.coefficient_sum_abs * std::abs(lat.eta_bar());
    const double defect_hat = out.coefficient_sum_abs * std::abs(lat.eta_hat());
    out.expected_defect = std::min(defect_bar, defect_hat);
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        const cplx u = gen.sample();
        bool near_shift = false;
        for (const auto& [coeff, shift] : combo.terms)
            for (const cplx P : {cplx{0.0, 0.0}, lat.omega_bar(), lat.omega_hat()})
                if (std::abs(lat.zeta(u + P - shift)) > 1e8) near_shift = true;
        if (near_shift) continue;
        worst = std::max(worst, std::abs(combo.eval(u + lat.omega_bar()) - combo.eval(u)));
        worst = std::max(worst, std::abs(combo.eval(u + lat.omega_hat()) - combo.eval(u)));
    }
    out.periodicity_residual = worst;
    if (out.coefficient_sum_abs < 1e-14) {
        out.consistent = worst < 1e-8;
    } else {
        out.consistent = worst >= out.expected_defect - 1e-8;
    }
    return out;
}

} // namespace gessel

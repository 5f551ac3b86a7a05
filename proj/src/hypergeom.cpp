#include "gessel/hypergeom.hpp"

#include "gessel/zeta_gf.hpp"

#include <cmath>
#include <stdexcept>

namespace gessel {

namespace {

bool is_nonpositive_integer(const Rat& r) {
    return denominator(r) == 1 && numerator(r) <= 0;
}

} // namespace

cplx gauss_2f1(const Rat& a, const Rat& b, const Rat& c, cplx zarg) {
    if (is_nonpositive_integer(c))
        throw std::domain_error("gauss_2f1: c must not be a nonpositive integer");
    const bool terminating = is_nonpositive_integer(a) || is_nonpositive_integer(b);
    if (!terminating && std::abs(zarg) >= 0.95)
        throw std::domain_error("gauss_2f1: |argument| too close to 1 for direct summation");
    const double ad = to_double(a), bd = to_double(b), cd = to_double(c);
    cplx sum = 1.0, term = 1.0;
    for (int n = 0; n < 100000; ++n) {
        term *= (ad + n) * (bd + n) / ((cd + n) * (n + 1.0)) * zarg;
        sum += term;
        if (term == cplx(0.0)) break;  // terminating series
        if (n > 4 && std::abs(term) < 1e-17 * (std::abs(sum) + 1.0)) {
            // geometric tail bound with ratio -> |zarg|
            const double rho = std::min(0.97, std::abs(zarg) * (1.0 + 4.0 / (n + 1.0)));
            if (std::abs(term) * rho / (1.0 - rho) < 1e-13) break;
        }
    }
    return sum;
}

namespace {

/// 2F1 for real argument in [0.9, 1) through the 1-z connection formula
/// (valid for non-integral c-a-b); direct summation at the boundary would
/// need ~1e9 terms for the accuracy the identity suite runs at.
double gauss_2f1_near_one(const Rat& a, const Rat& b, const Rat& c, double zarg) {
    const double ad = to_double(a), bd = to_double(b), cd = to_double(c);
    const double cab = cd - ad - bd;
    const double u = 1.0 - zarg;
    const double t1 = std::tgamma(cd) * std::tgamma(cab) /
                      (std::tgamma(cd - ad) * std::tgamma(cd - bd)) *
                      gauss_2f1(a, b, Rat(a + b - c + 1), cplx(u)).real();
    const double t2 = std::pow(u, cab) * std::tgamma(cd) * std::tgamma(-cab) /
                      (std::tgamma(ad) * std::tgamma(bd)) *
                      gauss_2f1(Rat(c - a), Rat(c - b), Rat(c - a - b + 1), cplx(u)).real();
    return t1 + t2;
}

double gauss_2f1_real_auto(const Rat& a, const Rat& b, const Rat& c, double zarg) {
    if (zarg >= 0.9 && zarg < 1.0 && denominator(Rat(c - a - b)) != 1)
        return gauss_2f1_near_one(a, b, c, zarg);
    return gauss_2f1(a, b, c, cplx(zarg)).real();
}

} // namespace

double phi_map(double x) {
    if (!(x > 0.0 && x < 0.5)) throw std::domain_error("phi: x must be in (0,1/2)");
    const double q = 4 * x + 1;
    return std::sqrt(x * (x + 1) * (x + 1) * (x + 1) / (q * q * q));
}

double psi_map(double x) {
    if (!(x > 0.0 && x < 0.5)) throw std::domain_error("psi: x must be in (0,1/2)");
    const double q = 4 * x + 1;
    return 16 * x * (x + 1) * (x + 1) * (x + 1) / (q * q * q);
}

KeyFunctionValues key_functions_series(double z) {
    const double u = 16.0 * z * z;
    const double G = gauss_2f1_real_auto(Rat(-1, 2), Rat(-1, 6), Rat(2, 3), u);
    const double H = gauss_2f1_real_auto(Rat(-1, 2), Rat(1, 6), Rat(1, 3), u);
    const double K = 4 * z * z * gauss_2f1_real_auto(Rat(1, 2), Rat(5, 6), Rat(5, 3), u);
    return {G, H, K, (G - K) * (G - K)};
}

KeyFunctionValues closed_forms_GHJK(double x) {
    if (!(x > 0.0 && x < 0.5)) throw std::domain_error("closed_forms_GHJK: x in (0,1/2)");
    const double q = 4 * x + 1;
    const double q32 = q * std::sqrt(q);
    return {(4 * x * x + 8 * x + 1) / q32, (4 * x * x + 2 * x + 1) / q32,
            4 * x * (x + 1) / q32, 1.0 / q};
}

std::array<double, 6> L_values(const UniformizationContext& ctx) {
    std::array<double, 6> L{};
    const double o2 = ctx.periods.omega2;
    for (int k = 1; k <= 6; ++k) {
        const cplx v = ctx.lat13.zeta(cplx(k * o2 / 4.0));
        L[k - 1] = v.real();
    }
    return L;
}

double V(int i, int j, int k, const UniformizationContext& ctx) {
    if (i < 1 || i > 6 || j < 1 || j > 6 || k < 1 || k > 6)
        throw std::domain_error("V: indices must be in 1..6");
    const auto L = L_values(ctx);
    return L[i - 1] + L[j - 1] - L[k - 1];
}

std::array<double, 4> v_closed_forms_at_phi(double x) {
    const double q = 4 * x + 1;
    const double q32 = q * std::sqrt(q);
    return {(2 * x * x + 4 * x + 1) / q32, (2 * x + 1) / q32, (2 * x + 1) / q,
            x / q + (x + 1) * (2 * x + 1) / q32};
}

double KeyIdentityReport::max() const {
    return std::max({v145, v246, v156, v123, telescoped, frobenius});
}

KeyIdentityReport check_key_identities_at(double x) {
    const double z = phi_map(x);
    const UniformizationContext ctx = make_context(z);
    const auto L = L_values(ctx);
    const auto [G, H, K, J] = key_functions_series(z);
    const double v145 = L[0] + L[3] - L[4];
    const double v246 = L[1] + L[3] - L[5];
    const double v156 = L[0] + L[4] - L[5];
    const double v123 = L[0] + L[1] - L[2];
    KeyIdentityReport rep{};
    rep.v145 = std::abs(v145 - ((2 * G + H) / 3 - K / 2));
    rep.v246 = std::abs(v246 - ((2 * G + H) / 3 - K));
    rep.v156 = std::abs(v156 - (J + 1) / 2);
    rep.v123 = std::abs(v123 - (2 * G + 2 * H - J - 2 * K + 1) / 4);
    rep.telescoped =
        std::abs(L[0] - 3 * L[1] + 2 * L[2] + 3 * L[3] - 5 * L[4] + 2 * L[5] - (G - 1));
    const auto T = compute_T(z);
    rep.frobenius = std::abs(v145 * v145 - (T.t[0] + T.t[3] + T.t[4]));
    return rep;
}

std::vector<KeyIdentityReport> check_key_identities(const std::vector<double>& x_grid) {
    std::vector<KeyIdentityReport> out;
    out.reserve(x_grid.size());
    for (const double x : x_grid) out.push_back(check_key_identities_at(x));
    return out;
}

std::vector<double> check_gessel_equivalence(const std::vector<double>& z_grid) {
    std::vector<double> out;
    out.reserve(z_grid.size());
    for (const double z : z_grid) {
        const double lhs = q00_zeta(z);
        const double G = gauss_2f1(Rat(-1, 2), Rat(-1, 6), Rat(2, 3), cplx(16 * z * z)).real();
        out.push_back(std::abs(lhs - (G - 1) / (2 * z * z)));
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

/// w(z) = z (1+z)^3 / (1+4z)^3 as an exact series.
RationalSeries covering_substitution(int N) {
    RationalSeries num(N);
    num[1] = 1;
    if (N >= 2) num[2] = 3;
    if (N >= 3) num[3] = 3;
    if (N >= 4) num[4] = 1;  // z (1+z)^3
    const RationalSeries inv = RationalSeries::monomial(4, 1, N).one_plus_pow(Rat(-3));
    return num * inv;
}

/// f_j(z) = (-1)^j (2j+1) z^j + 2 z^{j+1} sum_n q(0,j;2n) z^n.
RationalSeries f_j_series(const CountTable& t, int j, int N) {
    RationalSeries f(N);
    const int sgn = (j % 2 == 0) ? 1 : -1;
    if (j <= N) f[j] = Rat(sgn * (2 * j + 1));
    for (int n = 0; j + 1 + n <= N; ++n) {
        if (2 * n > t.n_max())
            throw std::domain_error("f_j_series: CountTable too short for requested order");
        f[j + 1 + n] += 2 * Rat(t.count(0, j, 2 * n));
    }
    return f;
}

} // namespace

SeriesIdentityReport check_f0_identity(const CountTable& table, int order) {
    const int N = order;
    const RationalSeries lhs = f_j_series(table, 0, N).compose(covering_substitution(N));
    RationalSeries num(N);
    num[0] = 1;
    if (N >= 1) num[1] = 8;
    if (N >= 2) num[2] = 4;
    const RationalSeries rhs =
        num * RationalSeries::monomial(4, 1, N).one_plus_pow(Rat(-3, 2));
    SeriesIdentityReport rep{true, -1, N};
    for (int k = 0; k <= N; ++k)
        if (lhs[k] != rhs[k]) {
            rep.exact_match = false;
            rep.first_mismatch_order = k;
            break;
        }
    return rep;
}

ConjectureReport check_new_conjectures(const CountTable& table, int j, int order) {
    if (j < 1 || j > 3) throw std::domain_error("check_new_conjectures: j must be 1..3");
    const int N = order;
    const RationalSeries fj = f_j_series(table, j, N);
    RationalSeries S = fj.compose(covering_substitution(N));
    S = S * RationalSeries::monomial(4, 1, N).one_plus_pow(Rat(3, 2) + 3 * j);
    // p_j = S / (-z)^j
    RationalSeries p = S.shift_down(j);
    if (j % 2 == 1) p = p * Rat(-1);
    ConjectureReport rep{};
    rep.j = j;
    rep.order = N;
    rep.low_coefficients_positive = true;
    rep.high_coefficients_vanish = true;
    for (int k = 0; k <= 3 * j + 2 && k <= p.order(); ++k) {
        rep.p_coefficients.push_back(p[k]);
        if (!(p[k] > 0)) rep.low_coefficients_positive = false;
    }
    for (int k = 3 * j + 3; k <= N - j; ++k)
        if (p[k] != 0) rep.high_coefficients_vanish = false;
    return rep;
}

} // namespace gessel

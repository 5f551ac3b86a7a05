#include "gessel/series.hpp"

#include <stdexcept>

namespace gessel {

RationalSeries RationalSeries::constant(const Rat& v, int order) {
    RationalSeries s(order);
    s[0] = v;
    return s;
}

RationalSeries RationalSeries::monomial(const Rat& coeff, int k, int order) {
    RationalSeries s(order);
    if (k <= order) s[k] = coeff;
    return s;
}

RationalSeries RationalSeries::operator+(const RationalSeries& o) const {
    RationalSeries r(order());
    for (int k = 0; k <= order(); ++k) r[k] = c_[k] + o.c_[k];
    return r;
}

RationalSeries RationalSeries::operator-(const RationalSeries& o) const {
    RationalSeries r(order());
    for (int k = 0; k <= order(); ++k) r[k] = c_[k] - o.c_[k];
    return r;
}

RationalSeries RationalSeries::operator*(const RationalSeries& o) const {
    const int N = order();
    RationalSeries r(N);
    for (int i = 0; i <= N; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; i + j <= N; ++j) {
            if (o.c_[j] == 0) continue;
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    return r;
}

RationalSeries RationalSeries::operator*(const Rat& s) const {
    RationalSeries r(order());
    for (int k = 0; k <= order(); ++k) r[k] = c_[k] * s;
    return r;
}

RationalSeries RationalSeries::compose(const RationalSeries& g) const {
    if (g[0] != 0) throw std::domain_error("compose: inner series must have zero constant term");
    const int N = order();
    RationalSeries r(N);  // Horner in g
    for (int k = N; k >= 0; --k) {
        r = r * g;
        r[0] += c_[k];
    }
    return r;
}

RationalSeries RationalSeries::one_plus_pow(const Rat& alpha) const {
    if (c_[0] != 0)
        throw std::domain_error("one_plus_pow: series must have zero constant term");
    const int N = order();
    RationalSeries r = constant(1, N);
    RationalSeries uk = constant(1, N);
    Rat coeff = 1;
    for (int k = 1; k <= N; ++k) {
        coeff *= (alpha - (k - 1));
        coeff /= k;
        uk = uk * *this;
        if (coeff == 0) break;  // integral exponent: series terminates
        for (int i = 0; i <= N; ++i) r[i] += coeff * uk[i];
    }
    return r;
}

RationalSeries RationalSeries::shift_up(int k) const {
    RationalSeries r(order());
    for (int i = 0; i + k <= order(); ++i) r[i + k] = c_[i];
    return r;
}

RationalSeries RationalSeries::shift_down(int k) const {
    for (int i = 0; i < k && i <= order(); ++i)
        if (c_[i] != 0) throw std::domain_error("shift_down: nonzero low coefficient");
    RationalSeries r(order());
    for (int i = k; i <= order(); ++i) r[i - k] = c_[i];
    return r;
}

RationalSeries RationalSeries::derivative() const {
    RationalSeries r(order());
    for (int k = 1; k <= order(); ++k) r[k - 1] = c_[k] * k;
    return r;
}

int RationalSeries::valuation() const {
    for (int k = 0; k <= order(); ++k)
        if (c_[k] != 0) return k;
    return order() + 1;
}

} // namespace gessel

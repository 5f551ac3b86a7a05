#pragma once

#include "gessel/rational.hpp"

#include <vector>

namespace gessel {

/// Univariate power series with exact rational coefficients, truncated at a
/// fixed order N. All arithmetic (sum, product, composition with a series
/// of zero constant term, binomial powers (1+u)^{p/q}) is exact through
/// order N.
class RationalSeries {
public:
    explicit RationalSeries(int order) : c_(order + 1) {}

    static RationalSeries constant(const Rat& v, int order);
    /// The monomial coeff * z^k.
    static RationalSeries monomial(const Rat& coeff, int k, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& operator[](int k) const { return c_[k]; }
    Rat& operator[](int k) { return c_[k]; }

    RationalSeries operator+(const RationalSeries& o) const;
    RationalSeries operator-(const RationalSeries& o) const;
    RationalSeries operator*(const RationalSeries& o) const;
    RationalSeries operator*(const Rat& s) const;

    bool operator==(const RationalSeries& o) const { return c_ == o.c_; }

    /// this(g(z)) for g with g(0) = 0; throws std::domain_error otherwise.
    RationalSeries compose(const RationalSeries& g) const;

    /// (1 + *this)^alpha by the generalized binomial series; requires zero
    /// constant term.
    RationalSeries one_plus_pow(const Rat& alpha) const;

    /// Multiply by z^k (coefficients shift up; overflow truncated).
    RationalSeries shift_up(int k) const;
    /// Divide by z^k; throws std::domain_error if any low coefficient is nonzero.
    RationalSeries shift_down(int k) const;

    RationalSeries derivative() const;

    /// Index of the first nonzero coefficient, or order()+1 if zero.
    int valuation() const;

private:
    std::vector<Rat> c_;
};

} // namespace gessel

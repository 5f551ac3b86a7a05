#pragma once

#include "gessel/rational.hpp"

#include <complex>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace gessel {

using cplx = std::complex<double>;

// A set of small steps (|dx|, |dy| <= 1), no zero step, no duplicates.
struct StepSet {
    std::vector<std::pair<int, int>> steps;

    static StepSet gessel();  // {NE, E, W, SW}
    static StepSet simple();  // {E, W, N, S}

    void validate() const;
};

/// Exact counts q(i,j;n) of quarter-plane walks from the origin, for
/// 0 <= i,j <= n <= n_max. Steps that would leave N^2 are discarded.
/// Immutable after construction; safe to share across threads.
class CountTable {
public:
    CountTable(const StepSet& steps, int n_max);

    int n_max() const { return n_max_; }
    const StepSet& steps() const { return steps_; }

    // Zero outside the stored range.
    const Int& count(int i, int j, int n) const;

    // Total number of walks of length n (any endpoint).
    Int total(int n) const;

    // CSV dump: header "i,j,n,count", one row per nonzero entry.
    void write_csv(std::ostream& os) const;

private:
    StepSet steps_;
    int n_max_;
    std::vector<std::vector<Int>> levels_;  // levels_[n] is (n+1)x(n+1), row-major in i
    static const Int zero_;
};

CountTable count_table(const StepSet& steps, int n_max);

/// 16^n (5/6)_n (1/2)_n / ((2)_n (5/3)_n), evaluated in exact rational
/// arithmetic. Throws std::logic_error if the result is not an integer.
Int gessel_excursions_closed_form(long n);

// ---------------------------------------------------------------------------
// Truncated generating function Q(x,y;z) = sum q(i,j;n) x^i y^j z^n.

/// View of a CountTable as the truncated trivariate series Q(x,y;z).
class TruncatedSeries3 {
public:
    explicit TruncatedSeries3(const CountTable& t) : table_(&t) {}

    const CountTable& table() const { return *table_; }

    /// Numeric evaluation of the triple sum through z-order n_max.
    /// Caller is responsible for |z| small enough that the tail is
    /// negligible; see tail_bound().
    cplx eval(cplx x, cplx y, cplx z, int n_max) const;

    /// Q(0,y;z) through z-order n_max (only i = 0 terms).
    cplx eval_x0(cplx y, cplx z, int n_max) const;

    /// sum_n q(0,j;2n) w^n  (the coefficient series of y^j in Q(0,y),
    /// with w substituted for z^2 when w = z^2).
    cplx q0j_series(int j, cplx w, int n_limit) const;

    /// Geometric tail bound sum_{n>n_max} (S |z| max(1,|x|) max(1,|y|))^n
    /// where S is the step count; infinite if the ratio reaches 1.
    double tail_bound(cplx x, cplx y, cplx z, int n_max) const;

private:
    const CountTable* table_;
};

cplx eval_Q_truncated(const CountTable& t, cplx x, cplx y, cplx z, int n_max);

// ---------------------------------------------------------------------------
// Functional equation K(x,y;z) Q = K(x,0)Q(x,0) + K(0,y)Q(0,y) - K(0,0)Q(0,0) - xy

/// Exact trivariate polynomial residual of the kernel functional equation,
/// checked coefficient-wise through z-order n_max (truncation spill beyond
/// n_max is excluded). Keys are (n, i, j).
using TrivariateResidual = std::map<std::tuple<int, int, int>, Int>;

TrivariateResidual functional_equation_residual(const CountTable& t, int n_max);

// ---------------------------------------------------------------------------
// Classical cross-checks for the simple walk in four regions.

struct CrossCheckReport {
    struct Mismatch {
        std::string model;
        int n;
        Int expected, got;
    };
    bool pass = true;
    std::vector<Mismatch> mismatches;  // empty on success
    int n_max = 0;
};

/// Simple-walk excursion counts in a region of Z^2 given by a membership
/// predicate; exact DP on a bounding box.
std::vector<Int> simple_excursions(int n_max, const std::function<bool(int, int)>& in_region);

/// Compares simple-walk excursions of length 2n against the classical
/// closed forms: plane C(2n,n)^2, half plane C(2n+1,n)Cat(n), quarter
/// plane Cat(n)Cat(n+1), octant (0<=j<=i) Cat(n)Cat(n+2)-Cat(n+1)^2.
CrossCheckReport classical_cross_checks(int n_max);

} // namespace gessel

#pragma once

#include "gessel/rational.hpp"

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace gessel {

using cplx = std::complex<double>;

// ---------------------------------------------------------------------------
// Kernel K(x,y;z) = z x^2 y^2 + z x^2 y + z y + z - x y, always evaluated in
// expanded polynomial form so that x = 0 and y = 0 are regular points.

inline cplx kernel_eval(cplx x, cplx y, cplx z) {
    const cplx x2 = x * x;
    return z * x2 * y * y + z * x2 * y + z * y + z - x * y;
}

// K(x,y) = a(x) y^2 + b(x) y + c(x) as a quadratic in y.
struct KernelCoefficients {
    static cplx a(cplx x, cplx z) { return z * x * x; }
    static cplx b(cplx x, cplx z) { return z * x * x - x + z; }
    static cplx c(cplx /*x*/, cplx z) { return z; }
};

/// d(x) = (zx^2 - x + z)^2 - 4 z^2 x^2, the discriminant of K in y.
inline cplx discriminant_x(cplx x, cplx z) {
    const cplx b = z * x * x - x + z;
    return b * b - 4.0 * z * z * x * x;
}
inline double discriminant_x(double x, double z) {
    const double b = z * x * x - x + z;
    return b * b - 4 * z * z * x * x;
}
inline double discriminant_x_prime(double x, double z) {
    return 2 * (z * x * x - x + z) * (2 * z * x - 1) - 8 * z * z * x;
}
inline double discriminant_x_second(double x, double z) {
    return 2 * (2 * z * x - 1) * (2 * z * x - 1) + 4 * z * (z * x * x - x + z) - 8 * z * z;
}

/// d~(y) = y^2 - 4 z^2 y (y+1)^2, the discriminant of K in x.
inline cplx discriminant_y(cplx y, cplx z) {
    return y * y - 4.0 * z * z * y * (y + 1.0) * (y + 1.0);
}

// ---------------------------------------------------------------------------
// Branch points. All real for z in (0, 1/4); y4 is the point at infinity.

struct BranchPoints {
    double x1, x2, x3, x4;  // x1 < x2 < x3 < x4; x3 = 1/x2, x4 = 1/x1
    double y1, y2, y3, y4;  // y1 = 0, y3 = 1/y2, y4 = +infinity
};

/// Closed-form branch points; throws std::domain_error outside (0, 1/4).
BranchPoints branch_points(double z);

// ---------------------------------------------------------------------------
// The group of the walk: birational involutions of C^2
//   xi(x,y)  = (x, 1/(x^2 y)),   eta(x,y) = (1/(x y), y),
// preserving the step polynomial xy + x + 1/x + 1/(xy).

using RatPoint = std::pair<Rat, Rat>;

RatPoint xi(const RatPoint& p);   // throws std::domain_error on zero denominator
RatPoint eta(const RatPoint& p);

/// Step polynomial sum_{(i,j) in step set} x^i y^j for Gessel's steps.
Rat gessel_step_polynomial(const RatPoint& p);

/// Reduced word over {xi, eta} with its signature (-1)^length.
struct GroupElement {
    std::string word;  // e.g. "", "x", "e", "xe", "exe", ... letters act left to right
    int sign;          // (-1)^{word length}
};

struct SignedPoint {
    GroupElement element;
    RatPoint point;
};

struct Orbit {
    std::vector<SignedPoint> points;  // the 8 group images, identity first
    bool degenerate = false;          // some images coincide (warning, not failure)
    bool closure_exact = false;       // (eta.xi)^4 == id verified exactly
};

/// Orbit of (x,y) under <xi,eta>: the eight reduced words of length <= 4
/// (with xexe == exex). Words act left to right: "xe" means xi first,
/// then eta.
Orbit orbit(const RatPoint& p);

/// Alternating sum of x*y over the orbit; identically 0 for Gessel's group.
Rat orbit_sum(const RatPoint& p);

// Simple-walk analogues (steps E,W,N,S): xi(x,y) = (x,1/y), eta = (1/x,y).
// The group has order 4 and its alternating orbit sum is the nonzero
// rational function (x - 1/x)(y - 1/y).
RatPoint xi_simple(const RatPoint& p);
RatPoint eta_simple(const RatPoint& p);
Rat orbit_sum_simple(const RatPoint& p);

} // namespace gessel

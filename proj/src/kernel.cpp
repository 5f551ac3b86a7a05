#include "gessel/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace gessel {

BranchPoints branch_points(double z) {
    if (!(z > 0.0 && z < 0.25)) throw std::domain_error("branch_points: z must be in (0,1/4)");
    BranchPoints bp{};
    bp.x1 = (1 + 2 * z - std::sqrt(1 + 4 * z)) / (2 * z);
    bp.x2 = (1 - 2 * z - std::sqrt(1 - 4 * z)) / (2 * z);
    bp.x3 = 1 / bp.x2;
    bp.x4 = 1 / bp.x1;
    bp.y1 = 0.0;
    bp.y2 = (1 - 8 * z * z - std::sqrt(1 - 16 * z * z)) / (8 * z * z);
    bp.y3 = 1 / bp.y2;
    bp.y4 = std::numeric_limits<double>::infinity();
    return bp;
}

RatPoint xi(const RatPoint& p) {
    const auto& [x, y] = p;
    if (x == 0 || y == 0) throw std::domain_error("xi: zero coordinate");
    return {x, Rat(1) / (x * x * y)};
}

RatPoint eta(const RatPoint& p) {
    const auto& [x, y] = p;
    if (x == 0 || y == 0) throw std::domain_error("eta: zero coordinate");
    return {Rat(1) / (x * y), y};
}

Rat gessel_step_polynomial(const RatPoint& p) {
    const auto& [x, y] = p;
    if (x == 0 || y == 0) throw std::domain_error("step polynomial: zero coordinate");
    return x * y + x + Rat(1) / x + Rat(1) / (x * y);
}

Orbit orbit(const RatPoint& p) {
    Orbit o;
    // The eight reduced words; letters act left to right, so "xe" applies
    // xi first, then eta. "xexe" and "exex" spell the same element; the
    // first is the stored representative and the equality is checked below.
    const char* words[8] = {"", "x", "e", "xe", "ex", "xex", "exe", "xexe"};
    for (const char* w : words) {
        RatPoint q = p;
        for (const char* c = w; *c; ++c) q = (*c == 'x') ? xi(q) : eta(q);
        const int len = static_cast<int>(std::string(w).size());
        o.points.push_back({{w, (len % 2 == 0) ? 1 : -1}, q});
    }
    // Word-length-8 closure: (eta o xi)^4 = id, checked exactly.
    RatPoint q = p;
    for (int k = 0; k < 4; ++k) q = eta(xi(q));
    o.closure_exact = (q == p);
    // The two spellings of the length-4 element agree.
    RatPoint a = eta(xi(eta(xi(p)))), b = xi(eta(xi(eta(p))));
    o.closure_exact = o.closure_exact && (a == b);
    for (std::size_t i = 0; i < o.points.size() && !o.degenerate; ++i)
        for (std::size_t j = i + 1; j < o.points.size(); ++j)
            if (o.points[i].point == o.points[j].point) {
                o.degenerate = true;
                break;
            }
    return o;
}

Rat orbit_sum(const RatPoint& p) {
    Rat s = 0;
    for (const auto& sp : orbit(p).points) s += sp.element.sign * sp.point.first * sp.point.second;
    return s;
}

RatPoint xi_simple(const RatPoint& p) {
    if (p.second == 0) throw std::domain_error("xi_simple: y = 0");
    return {p.first, Rat(1) / p.second};
}

RatPoint eta_simple(const RatPoint& p) {
    if (p.first == 0) throw std::domain_error("eta_simple: x = 0");
    return {Rat(1) / p.first, p.second};
}

Rat orbit_sum_simple(const RatPoint& p) {
    // Order-4 group {id, xi, eta, xi.eta}; the alternating sum equals
    // (x - 1/x)(y - 1/y), nonzero at generic points.
    const RatPoint a = xi_simple(p), b = eta_simple(p), c = eta_simple(xi_simple(p));
    const auto prod = [](const RatPoint& q) { return q.first * q.second; };
    return prod(p) - prod(a) - prod(b) + prod(c);
}

} // namespace gessel

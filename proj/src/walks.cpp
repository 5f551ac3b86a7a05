#include "gessel/walks.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <set>
#include <stdexcept>

namespace gessel {

const Int CountTable::zero_ = 0;

StepSet StepSet::gessel() { return {{{1, 1}, {1, 0}, {-1, 0}, {-1, -1}}}; }
StepSet StepSet::simple() { return {{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}}; }

void StepSet::validate() const {
    if (steps.empty()) throw std::invalid_argument("StepSet: empty");
    std::set<std::pair<int, int>> seen;
    for (auto [dx, dy] : steps) {
        if (dx == 0 && dy == 0) throw std::invalid_argument("StepSet: zero step");
        if (std::abs(dx) > 1 || std::abs(dy) > 1)
            throw std::invalid_argument("StepSet: step components must be in {-1,0,1}");
        if (!seen.insert({dx, dy}).second)
            throw std::invalid_argument("StepSet: duplicate step");
    }
}

CountTable::CountTable(const StepSet& steps, int n_max) : steps_(steps), n_max_(n_max) {
    if (n_max < 0) throw std::domain_error("count_table: n_max must be >= 0");
    steps_.validate();
    levels_.resize(n_max + 1);
    // Each coordinate changes by at most 1 per step, so level n is (n+1)^2.
    levels_[0].assign(1, Int(1));
    for (int n = 1; n <= n_max; ++n) {
        const int w = n + 1, wp = n;  // widths of level n and n-1
        auto& cur = levels_[n];
        cur.assign(static_cast<std::size_t>(w) * w, Int(0));
        const auto& prev = levels_[n - 1];
        for (int i = 0; i < wp; ++i) {
            for (int j = 0; j < wp; ++j) {
                const Int& v = prev[static_cast<std::size_t>(i) * wp + j];
                if (v == 0) continue;
                for (auto [dx, dy] : steps_.steps) {
                    const int ii = i + dx, jj = j + dy;
                    if (ii < 0 || jj < 0) continue;  // step out of N^2: discarded
                    cur[static_cast<std::size_t>(ii) * w + jj] += v;
                }
            }
        }
    }
}

const Int& CountTable::count(int i, int j, int n) const {
    if (n < 0 || n > n_max_ || i < 0 || j < 0 || i > n || j > n) return zero_;
    return levels_[n][static_cast<std::size_t>(i) * (n + 1) + j];
}

Int CountTable::total(int n) const {
    Int s = 0;
    if (n >= 0 && n <= n_max_)
        for (const Int& v : levels_[n]) s += v;
    return s;
}

void CountTable::write_csv(std::ostream& os) const {
    os << "i,j,n,count\n";
    for (int n = 0; n <= n_max_; ++n)
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                const Int& v = count(i, j, n);
                if (v != 0) os << i << ',' << j << ',' << n << ',' << v << '\n';
            }
}

CountTable count_table(const StepSet& steps, int n_max) { return CountTable(steps, n_max); }

Int gessel_excursions_closed_form(long n) {
    if (n < 0) throw std::domain_error("gessel_excursions_closed_form: n must be >= 0");
    Rat v = pochhammer(Rat(5, 6), n) * pochhammer(Rat(1, 2), n);
    v /= pochhammer(Rat(2), n) * pochhammer(Rat(5, 3), n);
    Int p16 = 1;
    p16 <<= 4 * n;  // 16^n
    v *= p16;
    if (denominator(v) != 1)
        throw std::logic_error("gessel_excursions_closed_form: non-integral value");
    return numerator(v);
}

// ---------------------------------------------------------------------------

cplx TruncatedSeries3::eval(cplx x, cplx y, cplx z, int n_max) const {
    const int N = std::min(n_max, table_->n_max());
    cplx total = 0.0, zn = 1.0;
    std::vector<cplx> xp(N + 2), yp(N + 2);
    xp[0] = yp[0] = 1.0;
    for (int k = 1; k <= N + 1; ++k) {
        xp[k] = xp[k - 1] * x;
        yp[k] = yp[k - 1] * y;
    }
    for (int n = 0; n <= N; ++n) {
        cplx level = 0.0;
        for (int i = 0; i <= n; ++i) {
            cplx row = 0.0;
            for (int j = 0; j <= n; ++j) {
                const Int& v = table_->count(i, j, n);
                if (v != 0) row += v.convert_to<double>() * yp[j];
            }
            level += row * xp[i];
        }
        total += level * zn;
        zn *= z;
    }
    return total;
}

cplx TruncatedSeries3::eval_x0(cplx y, cplx z, int n_max) const {
    const int N = std::min(n_max, table_->n_max());
    cplx total = 0.0, zn = 1.0;
    for (int n = 0; n <= N; ++n) {
        cplx level = 0.0, yj = 1.0;
        for (int j = 0; j <= n; ++j) {
            const Int& v = table_->count(0, j, n);
            if (v != 0) level += v.convert_to<double>() * yj;
            yj *= y;
        }
        total += level * zn;
        zn *= z;
    }
    return total;
}

cplx TruncatedSeries3::q0j_series(int j, cplx w, int n_limit) const {
    cplx total = 0.0, wn = 1.0;
    for (int n = 0; 2 * n <= table_->n_max() && n <= n_limit; ++n) {
        const Int& v = table_->count(0, j, 2 * n);
        if (v != 0) total += v.convert_to<double>() * wn;
        wn *= w;
    }
    return total;
}

double TruncatedSeries3::tail_bound(cplx x, cplx y, cplx z, int n_max) const {
    const double r = table_->steps().steps.size() * std::abs(z) *
                     std::max(1.0, std::abs(x)) * std::max(1.0, std::abs(y));
    if (r >= 1.0) return std::numeric_limits<double>::infinity();
    return std::pow(r, n_max + 1) / (1.0 - r);
}

cplx eval_Q_truncated(const CountTable& t, cplx x, cplx y, cplx z, int n_max) {
    return TruncatedSeries3(t).eval(x, y, z, n_max);
}

// ---------------------------------------------------------------------------

namespace {

void add_term(TrivariateResidual& r, int n, int i, int j, const Int& v) {
    if (v == 0) return;
    auto key = std::make_tuple(n, i, j);
    auto it = r.find(key);
    if (it == r.end()) {
        r.emplace(key, v);
    } else {
        it->second += v;
        if (it->second == 0) r.erase(it);
    }
}

} // namespace

TrivariateResidual functional_equation_residual(const CountTable& t, int n_max) {
    if (n_max < 1) throw std::domain_error("functional_equation_residual: n_max must be >= 1");
    const int N = std::min(n_max, t.n_max());
    TrivariateResidual r;
    // K(x,y;z) = z(x^2 y^2 + x^2 y + y + 1) - xy; K(x,0) = z; K(0,y) = z(y+1);
    // K(0,0) = z. Terms with z-shift land at order m+1 and are kept only
    // through order N.
    for (int m = 0; m <= N; ++m) {
        for (int i = 0; i <= m; ++i) {
            for (int j = 0; j <= m; ++j) {
                const Int& q = t.count(i, j, m);
                if (q == 0) continue;
                if (m + 1 <= N) {
                    add_term(r, m + 1, i + 2, j + 2, q);   // z x^2 y^2 * Q
                    add_term(r, m + 1, i + 2, j + 1, q);   // z x^2 y   * Q
                    add_term(r, m + 1, i, j + 1, q);       // z y       * Q
                    add_term(r, m + 1, i, j, q);           // z         * Q
                }
                add_term(r, m, i + 1, j + 1, -q);          // -xy * Q
            }
        }
        if (m + 1 <= N) {
            for (int i = 0; i <= m; ++i)  // - K(x,0) Q(x,0) = -z Q(x,0)
                add_term(r, m + 1, i, 0, -t.count(i, 0, m));
            for (int j = 0; j <= m; ++j) {  // - K(0,y) Q(0,y) = -z(y+1) Q(0,y)
                const Int& q = t.count(0, j, m);
                add_term(r, m + 1, 0, j + 1, -q);
                add_term(r, m + 1, 0, j, -q);
            }
            add_term(r, m + 1, 0, 0, t.count(0, 0, m));  // + K(0,0) Q(0,0)
        }
    }
    add_term(r, 0, 1, 1, 1);  // + xy
    return r;
}

// ---------------------------------------------------------------------------

std::vector<Int> simple_excursions(int n_max, const std::function<bool(int, int)>& in_region) {
    const int R = n_max + 1, W = 2 * R + 1;  // coordinates offset by R
    const auto idx = [W, R](int i, int j) {
        return static_cast<std::size_t>(i + R) * W + (j + R);
    };
    std::vector<Int> cur(static_cast<std::size_t>(W) * W), nxt(cur.size());
    cur[idx(0, 0)] = 1;
    std::vector<Int> at_origin(n_max + 1);
    at_origin[0] = 1;
    const int steps[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (int n = 1; n <= n_max; ++n) {
        std::fill(nxt.begin(), nxt.end(), Int(0));
        for (int i = -n + 1; i <= n - 1; ++i)
            for (int j = -n + 1; j <= n - 1; ++j) {
                const Int& v = cur[idx(i, j)];
                if (v == 0) continue;
                for (auto& s : steps) {
                    const int ii = i + s[0], jj = j + s[1];
                    if (in_region(ii, jj)) nxt[idx(ii, jj)] += v;
                }
            }
        std::swap(cur, nxt);
        at_origin[n] = cur[idx(0, 0)];
    }
    return at_origin;
}

CrossCheckReport classical_cross_checks(int n_max) {
    if (n_max < 1) throw std::domain_error("classical_cross_checks: n_max must be >= 1");
    CrossCheckReport rep;
    rep.n_max = n_max;
    const int len = 2 * n_max;
    struct Model {
        const char* name;
        std::function<bool(int, int)> region;
        std::function<Int(int)> closed_form;
    };
    const Model models[] = {
        {"plane", [](int, int) { return true; },
         [](int n) { return binomial(2 * n, n) * binomial(2 * n, n); }},
        {"half_plane", [](int, int j) { return j >= 0; },
         [](int n) { return binomial(2 * n + 1, n) * catalan(n); }},
        {"quarter_plane", [](int i, int j) { return i >= 0 && j >= 0; },
         [](int n) { return catalan(n) * catalan(n + 1); }},
        {"octant", [](int i, int j) { return 0 <= j && j <= i; },
         [](int n) { return catalan(n) * catalan(n + 2) - catalan(n + 1) * catalan(n + 1); }},
    };
    for (const auto& m : models) {
        const auto counts = simple_excursions(len, m.region);
        for (int n = 1; n <= n_max; ++n) {
            const Int expect = m.closed_form(n);
            if (counts[2 * n] != expect) {
                rep.pass = false;
                rep.mismatches.push_back({m.name, n, expect, counts[2 * n]});
                break;  // first mismatch per model
            }
        }
    }
    return rep;
}

} // namespace gessel

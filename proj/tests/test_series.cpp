#include "doctest.h"

#include "gessel/series.hpp"

#include <random>

using namespace gessel;

namespace {

RationalSeries random_series(std::mt19937_64& rng, int N, bool zero_constant) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    RationalSeries s(N);
    for (int k = zero_constant ? 1 : 0; k <= N; ++k) s[k] = Rat(num(rng), den(rng));
    return s;
}

} // namespace

TEST_CASE("basic arithmetic") {
    const int N = 8;
    auto z = RationalSeries::monomial(1, 1, N);
    auto one = RationalSeries::constant(1, N);
    auto p = (one + z) * (one - z);
    CHECK(p[0] == 1);
    CHECK(p[1] == 0);
    CHECK(p[2] == -1);
    CHECK((z * Rat(3, 2))[1] == Rat(3, 2));
    CHECK(p.derivative()[1] == -2);
    CHECK(RationalSeries::monomial(5, 3, N).valuation() == 3);
    CHECK(RationalSeries(N).valuation() == N + 1);
}

TEST_CASE("composition is associative") {
    std::mt19937_64 rng(100);
    const int N = 10;
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = random_series(rng, N, false);
        const auto g = random_series(rng, N, true);
        const auto h = random_series(rng, N, true);
        CHECK(f.compose(g).compose(h) == f.compose(g.compose(h)));
    }
}

TEST_CASE("composition requires zero constant term") {
    const int N = 4;
    const auto f = RationalSeries::constant(1, N);
    CHECK_THROWS_AS(f.compose(RationalSeries::constant(1, N)), std::domain_error);
}

TEST_CASE("binomial power round trip") {
    std::mt19937_64 rng(200);
    const int N = 9;
    for (int trial = 0; trial < 12; ++trial) {
        const auto u = random_series(rng, N, true);
        std::uniform_int_distribution<int> pd(-5, 5), qd(1, 4);
        const int p = pd(rng), q = qd(rng);
        // ((1+u)^{p/q})^q == (1+u)^p exactly through order N
        auto root = u.one_plus_pow(Rat(p, q));
        auto powed = RationalSeries::constant(1, N);
        for (int i = 0; i < q; ++i) powed = powed * root;
        const auto direct = u.one_plus_pow(Rat(p));
        CHECK(powed == direct);
    }
}

TEST_CASE("sqrt of 1+z squares back") {
    const int N = 12;
    const auto z = RationalSeries::monomial(1, 1, N);
    const auto r = z.one_plus_pow(Rat(1, 2));
    const auto sq = r * r;
    CHECK(sq[0] == 1);
    CHECK(sq[1] == 1);
    for (int k = 2; k <= N; ++k) CHECK(sq[k] == 0);
    CHECK(r[1] == Rat(1, 2));
    CHECK(r[2] == Rat(-1, 8));
}

TEST_CASE("integral exponents terminate") {
    const int N = 6;
    const auto z = RationalSeries::monomial(1, 1, N);
    const auto cube = z.one_plus_pow(Rat(3));
    CHECK(cube[0] == 1);
    CHECK(cube[1] == 3);
    CHECK(cube[2] == 3);
    CHECK(cube[3] == 1);
    CHECK(cube[4] == 0);
}

TEST_CASE("shifts") {
    const int N = 5;
    const auto z2 = RationalSeries::monomial(7, 2, N);
    CHECK(z2.shift_down(2)[0] == 7);
    CHECK(z2.shift_up(2)[4] == 7);
    CHECK_THROWS_AS(z2.shift_down(3), std::domain_error);
}

TEST_CASE("binomial power requires zero constant term") {
    const auto bad = RationalSeries::constant(2, 4);
    CHECK_THROWS_AS(bad.one_plus_pow(Rat(1, 2)), std::domain_error);
}

#include "doctest.h"

#include "gessel/walks.hpp"

#include <random>
#include <sstream>

using namespace gessel;

TEST_CASE("empty walk") {
    const auto t = count_table(StepSet::gessel(), 0);
    CHECK(t.count(0, 0, 0) == 1);
    CHECK(t.total(0) == 1);
}

TEST_CASE("small Gessel counts") {
    const auto t = count_table(StepSet::gessel(), 4);
    CHECK(t.count(0, 0, 1) == 0);  // no odd excursions
    CHECK(t.count(0, 0, 2) == 2);  // {E,W} and {NE,SW}
    CHECK(t.count(0, 0, 3) == 0);
    CHECK(t.count(1, 1, 1) == 1);  // single NE step
    CHECK(t.count(1, 0, 1) == 1);
    CHECK(t.count(0, 0, 4) == 11);
}

TEST_CASE("rejects negative length") {
    CHECK_THROWS_AS(count_table(StepSet::gessel(), -1), std::domain_error);
}

TEST_CASE("step set validation") {
    CHECK_THROWS_AS(StepSet{{}}.validate(), std::invalid_argument);
    CHECK_THROWS_AS(StepSet{{{0, 0}}}.validate(), std::invalid_argument);
    CHECK_THROWS_AS(StepSet{{{2, 0}}}.validate(), std::invalid_argument);
    StepSet dup{{{1, 0}, {1, 0}}};
    CHECK_THROWS_AS(dup.validate(), std::invalid_argument);
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(Rat(1, 2), 0) == 1);
    CHECK(pochhammer(Rat(1, 2), 2) == Rat(3, 4));
    CHECK(pochhammer(Rat(5, 6), 1) == Rat(5, 6));
    CHECK_THROWS_AS(pochhammer(Rat(1), -1), std::domain_error);
}

TEST_CASE("closed form excursion counts") {
    CHECK(gessel_excursions_closed_form(0) == 1);
    CHECK(gessel_excursions_closed_form(1) == 2);
    CHECK(gessel_excursions_closed_form(2) == 11);
    CHECK(gessel_excursions_closed_form(3) == 85);
    const auto t = count_table(StepSet::gessel(), 24);
    for (long n = 0; n <= 12; ++n)
        CHECK(t.count(0, 0, 2 * n) == gessel_excursions_closed_form(n));
}

TEST_CASE("odd excursions vanish, totals bounded by 4^n") {
    const auto t = count_table(StepSet::gessel(), 15);
    Int pow4 = 1;
    for (int n = 0; n <= 15; ++n) {
        if (n % 2 == 1) CHECK(t.count(0, 0, n) == 0);
        if (n == 0) CHECK(t.total(n) == pow4);
        if (n >= 1) CHECK(t.total(n) < pow4);  // boundary truncation is strict
        pow4 *= 4;
    }
}

TEST_CASE("DP recurrence holds entrywise") {
    const auto t = count_table(StepSet::gessel(), 8);
    const auto steps = StepSet::gessel().steps;
    for (int n = 1; n <= 8; ++n)
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                Int s = 0;
                for (auto [dx, dy] : steps) {
                    const int pi = i - dx, pj = j - dy;
                    if (pi >= 0 && pj >= 0) s += t.count(pi, pj, n - 1);
                }
                CHECK(t.count(i, j, n) == s);
            }
}

TEST_CASE("functional equation residual vanishes") {
    const auto t = count_table(StepSet::gessel(), 21);
    CHECK(functional_equation_residual(t, 1).empty());
    CHECK(functional_equation_residual(t, 5).empty());
    CHECK(functional_equation_residual(t, 20).empty());
    CHECK_THROWS_AS(functional_equation_residual(t, 0), std::domain_error);
}

TEST_CASE("truncated series evaluation") {
    const auto t = count_table(StepSet::gessel(), 40);
    const TruncatedSeries3 Q(t);
    CHECK(Q.eval(0.0, 0.0, 0.0, 40) == cplx(1.0));
    // Q(0,0;0.1) through z^40: compare against a direct re-summation
    cplx direct = 0.0;
    for (int n = 0; n <= 40; ++n)
        direct += t.count(0, 0, n).convert_to<double>() * std::pow(0.1, n);
    CHECK(std::abs(Q.eval(0.0, 0.0, 0.1, 40) - direct) < 1e-14);
    CHECK(std::abs(direct.real() - 1.0211937200) < 1e-9);
    CHECK(Q.tail_bound(0.0, 0.0, 0.1, 40) < 1e-15);
    // full trivariate evaluation vs a direct triple sum at (1,1,0.05)
    cplx triple = 0.0;
    for (int n = 0; n <= 40; ++n) {
        cplx lvl = 0.0;
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) lvl += t.count(i, j, n).convert_to<double>();
        triple += lvl * std::pow(0.05, n);
    }
    CHECK(std::abs(Q.eval(1.0, 1.0, 0.05, 40) - triple) < 1e-12 * std::abs(triple));
}

TEST_CASE("classical cross-checks") {
    const auto rep = classical_cross_checks(8);
    CHECK(rep.pass);
    CHECK(rep.mismatches.empty());
    // the length-2 cases by hand
    const auto plane = simple_excursions(2, [](int, int) { return true; });
    CHECK(plane[2] == 4);
    const auto quarter = simple_excursions(2, [](int i, int j) { return i >= 0 && j >= 0; });
    CHECK(quarter[2] == 2);
    const auto octant = simple_excursions(2, [](int i, int j) { return 0 <= j && j <= i; });
    CHECK(octant[2] == 1);
}

TEST_CASE("csv dump") {
    const auto t = count_table(StepSet::gessel(), 2);
    std::ostringstream os;
    t.write_csv(os);
    const std::string s = os.str();
    CHECK(s.rfind("i,j,n,count\n", 0) == 0);
    CHECK(s.find("0,0,0,1\n") != std::string::npos);
    CHECK(s.find("0,0,2,2\n") != std::string::npos);
    CHECK(s.find("2,2,2,1\n") != std::string::npos);  // NE,NE
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "thetaq/logderiv.hpp"
#include "thetaq/registry.hpp"
#include "thetaq/theta.hpp"

using namespace thetaq;

namespace {
Characteristic ch(long long en, long long ed, long long dn, long long dd) {
    return Characteristic(Rational(en, ed), Rational(dn, dd));
}
} // namespace

TEST_CASE("closed form for [1;1/2]") {
    QSeries f = logderiv_reduced(ch(1, 1, 1, 2), Rational(4));
    CHECK(f.coeff_at(Rational(0)) == CycNum(-1));
    CHECK(f.coeff_at(Rational(1)) == CycNum(-4));
}

TEST_CASE("vanishing branches") {
    CHECK(logderiv_reduced(ch(1, 1, 0, 1), Rational(8)).support_empty());
    CHECK(logderiv_reduced(ch(0, 1, 0, 1), Rational(8)).support_empty());
    CHECK(logderiv_reduced(ch(0, 1, 1, 1), Rational(8)).support_empty());
}

TEST_CASE("[0;1/2] equals the negated odd part of the quad4 series") {
    QSeries f = logderiv_reduced(ch(0, 1, 1, 2), Rational(6));
    QSeries t1 = theta_const(ch(0, 1, 0, 1), Rational(1), Rational(6));
    QSeries t2 = theta_const(ch(0, 1, 0, 1), Rational(2), Rational(6));
    QSeries target = ps_sub(ps_mul(t2, t2), ps_mul(t1, t1)); // theta^2(2tau) - theta^2(tau)
    CHECK(series_equal_below(f, target, Rational(6)));
}

TEST_CASE("closed form equals derivative/constant for sample characteristics") {
    for (auto c : {ch(1, 1, 1, 2), ch(1, 3, 1, 1), ch(1, 2, 1, 4), ch(2, 3, 2, 3)}) {
        QSeries a = logderiv_reduced(c, Rational(8));
        QSeries b = logderiv_oracle(c, Rational(8));
        INFO("characteristic ", c.to_string());
        CHECK(series_equal_below(a, b, Rational(8)));
    }
}

TEST_CASE("every registry characteristic with nonvanishing constant") {
    for (const auto& c : registry_characteristics()) {
        if (c == ch(1, 1, 1, 1)) continue; // the constant vanishes
        QSeries a = logderiv_reduced(c, Rational(8));
        QSeries b = logderiv_oracle(c, Rational(8));
        auto cmp = ps_compare(a, b);
        INFO("characteristic ", c.to_string());
        CHECK(cmp.equal());
        CHECK(*cmp.window == Rational(8));
    }
}

TEST_CASE("error paths") {
    CHECK_THROWS_AS(logderiv_reduced(ch(1, 1, 1, 1), Rational(4)), DomainError);
    CHECK_THROWS_AS(logderiv_oracle(ch(1, 1, 1, 1), Rational(4)), DivisionByZero);
    CHECK_THROWS_AS(logderiv_reduced(ch(0, 1, 1, 2), Rational(0)), DomainError);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "thetaq/numeric.hpp"
#include "thetaq/theta.hpp"

using namespace thetaq;

namespace {
Characteristic ch(long long en, long long ed, long long dn, long long dd) {
    return Characteristic(Rational(en, ed), Rational(dn, dd));
}
} // namespace

TEST_CASE("series evaluation at a point") {
    EvalPoint p{{0, 2}, 1e-12};
    SeriesValue one = ps_eval(QSeries::constant(CycNum(1)), p);
    CHECK(std::abs(one.value - std::complex<double>(1, 0)) < 1e-15);
    CHECK(one.tail_bound == 0); // exact series carry no tail

    QSeries t = theta_const(ch(0, 1, 0, 1), Rational(1), Rational(8));
    CHECK(std::abs(ps_eval(t, p).value - theta_numeric(ch(0, 1, 0, 1), p.tau, 0, 1e-12)) < 1e-10);
    CHECK(ps_eval(t, p).tail_bound < 1e-30);

    EvalPoint pi{{0, 1}, 1e-12};
    QSeries e = eta_series(Rational(1), Rational(10));
    CHECK(std::abs(ps_eval(e, pi).value - eval_expr_numeric(eta_f(Rational(1)), pi.tau, 1e-13)) <
          1e-10);

    CHECK_THROWS_AS(ps_eval(t, EvalPoint{{0, -1}, 1e-9}), DomainError);
}

TEST_CASE("identity cross-checks at sample points") {
    EvalPoint pi{{0, 1}, 1e-12};
    auto r = cross_check_identity("clasder", pi, Rational(8));
    CHECK(r.lhs_rhs_residual < 1e-9);
    CHECK(r.series_vs_direct_residual < 1e-9);

    EvalPoint p2{{0.1, 0.9}, 1e-12};
    auto r2 = cross_check_identity("eq-11/3", p2, Rational(8));
    CHECK(r2.lhs_rhs_residual < 1e-9);
    CHECK(r2.series_vs_direct_residual < 1e-9);

    EvalPoint far{{0, 5}, 1e-15};
    auto r3 = cross_check_identity("clasder", far, Rational(8));
    CHECK(r3.lhs_rhs_residual < 1e-14);
    CHECK(r3.series_vs_direct_residual < 1e-14);
}

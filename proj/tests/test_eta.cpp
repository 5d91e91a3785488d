#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "thetaq/eta.hpp"
#include "thetaq/theta.hpp"

using namespace thetaq;

namespace {

Characteristic ch(long long en, long long ed, long long dn, long long dd) {
    return Characteristic(Rational(en, ed), Rational(dn, dd));
}

// Dense integer oracle for prod_{n<=N} (1 - q^n) up to exponent `bound`.
std::vector<long long> euler_product_oracle(long long bound) {
    std::vector<long long> acc(static_cast<std::size_t>(bound) + 1, 0);
    acc[0] = 1;
    for (long long n = 1; n <= bound; ++n)
        for (long long k = bound; k >= n; --k)
            if (acc[static_cast<std::size_t>(k - n)] != 0)
                acc[static_cast<std::size_t>(k)] -= acc[static_cast<std::size_t>(k - n)];
    return acc;
}

} // namespace

TEST_CASE("eta from the product; the pentagonal pattern falls out") {
    auto oracle = euler_product_oracle(24);
    QSeries e = eta_series(Rational(1), Rational(24));
    for (long long k = 0; k <= 22; ++k)
        CHECK(e.coeff_at(Rational(1, 24) + k) == CycNum(Rational(oracle[k])));
    // pentagonal-number signs
    CHECK(oracle[0] == 1);
    CHECK(oracle[1] == -1);
    CHECK(oracle[2] == -1);
    CHECK(oracle[5] == 1);
    CHECK(oracle[7] == 1);
    CHECK(oracle[12] == -1);
    CHECK(oracle[15] == -1);
    CHECK(oracle[22] == 1);
    for (long long k : {3, 4, 6, 8, 9, 10, 11, 13, 14, 16}) CHECK(oracle[k] == 0);

    CHECK(*eta_series(Rational(4), Rational(2)).valuation() == Rational(1, 6));
    CHECK(*eta_series(Rational(1, 6), Rational(1)).valuation() == Rational(1, 144));
}

TEST_CASE("integral theta constants as eta quotients") {
    Rational cut(10);
    QSeries q10 = eta_quotient({{{Rational(2), 2}, {Rational(1), -1}}}, cut);
    QSeries lhs10 = ps_mul(QSeries::constant(CycNum(2)), q10);
    CHECK(series_equal_below(lhs10, theta_const(ch(1, 1, 0, 1), Rational(1), cut), cut));

    QSeries q01 = eta_quotient({{{Rational(1, 2), 2}, {Rational(1), -1}}}, cut);
    CHECK(series_equal_below(q01, theta_const(ch(0, 1, 1, 1), Rational(1), cut), cut));

    QSeries q00 = eta_quotient({{{Rational(1), 5}, {Rational(2), -2}, {Rational(1, 2), -2}}}, cut);
    CHECK(series_equal_below(q00, theta_const(ch(0, 1, 0, 1), Rational(1), cut), cut));

    // quotient valuation formula on random specs
    std::mt19937 rng(77);
    std::vector<Rational> scales{Rational(1), Rational(2), Rational(3), Rational(1, 2),
                                 Rational(1, 3), Rational(4)};
    for (int trial = 0; trial < 30; ++trial) {
        EtaQuotientSpec spec;
        Rational want(0);
        for (int j = 0; j < 3; ++j) {
            Rational s = scales[rng() % scales.size()];
            int p = static_cast<int>(rng() % 7) - 3;
            spec.factors.emplace_back(s, p);
            want += s * p / 24;
        }
        QSeries q = eta_quotient(spec, Rational(3));
        REQUIRE(q.valuation().has_value());
        CHECK(*q.valuation() == want);
    }

    // empty spec is the constant 1
    QSeries unit = eta_quotient({}, Rational(3));
    CHECK(series_equal_below(unit, QSeries::constant(CycNum(1)), Rational(3)));
}

TEST_CASE("explicit weight-3/2 sums") {
    // (-4/.) with n^2/8 exponents reproduces eta^3
    QSeries s = explicit_weight32_sum(WeightChar::kron_neg4, Rational(1, 8), Rational(20));
    QSeries e3 = ps_pow(eta_series(Rational(1), Rational(20)), 3);
    CHECK(series_equal_below(s, e3, Rational(20)));
    CHECK(s.coeff_at(Rational(1, 8)) == CycNum(1));
    CHECK(s.coeff_at(Rational(9, 8)) == CycNum(-3));
    CHECK(s.coeff_at(Rational(25, 8)) == CycNum(5));
    CHECK(s.coeff_at(Rational(49, 8)) == CycNum(-7));

    // (-2/.) sign pattern +,+,-,- for n = 1,3,5,7 mod 8
    QSeries t = explicit_weight32_sum(WeightChar::kron_neg2, Rational(1, 32), Rational(4));
    CHECK(t.coeff_at(Rational(1, 32)) == CycNum(1));
    CHECK(t.coeff_at(Rational(9, 32)) == CycNum(3));
    CHECK(t.coeff_at(Rational(25, 32)) == CycNum(-5));
    CHECK(t.coeff_at(Rational(49, 32)) == CycNum(-7));
    CHECK(t.coeff_at(Rational(81, 32)) == CycNum(9));

    // (-4/.) on the n^2/2 grid is eta^3 at 4*tau
    QSeries u = explicit_weight32_sum(WeightChar::kron_neg4, Rational(1, 2), Rational(6));
    QSeries e34 = ps_pow(eta_series(Rational(4), Rational(6)), 3);
    CHECK(series_equal_below(u, e34, Rational(6)));
    CHECK(u.coeff_at(Rational(1, 2)) == CycNum(1));
    CHECK(u.coeff_at(Rational(9, 2)) == CycNum(-3));
}

TEST_CASE("eta identities from the parity split") {
    auto parts = verify_etaid_parts(Rational(8));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].pass);
    CHECK(parts[1].pass);
    VerifyReport agg = verify_etaid(Rational(8));
    CHECK(agg.pass);

    // all three expressions start with constant 1
    QSeries lhs = eta_quotient({{{Rational(1), 5}, {Rational(1, 2), -2}, {Rational(2), -2}}},
                               Rational(2));
    CHECK(lhs.coeff_at(Rational(0)) == CycNum(1));

    // mismatch injection: multiplying one side by (1+q) must be detected
    QSeries corrupted = ps_mul(lhs, QSeries::from_terms({{Rational(0), CycNum(1)},
                                                         {Rational(1), CycNum(1)}},
                                                        std::nullopt));
    auto cmp = ps_compare(lhs, corrupted);
    REQUIRE(!cmp.equal());
    CHECK(cmp.first_mismatch->exponent == Rational(1));
}

TEST_CASE("derivative formula at the eta level") {
    QSeries d = theta_deriv_reduced(ch(1, 1, 1, 1), Rational(1), Rational(10));
    QSeries e3 = ps_pow(eta_series(Rational(1), Rational(10)), 3);
    QSeries sum = ps_add(d, ps_mul(QSeries::constant(CycNum(2)), e3));
    CHECK(sum.support_empty());
}

TEST_CASE("eta^9(2tau)/(eta^3(tau) eta^3(4tau)) expands as the (-2/n) sum") {
    // the n^2/32-grid identity rescaled by 4
    QSeries lhs = eta_quotient(
        {{{Rational(2), 9}, {Rational(1), -3}, {Rational(4), -3}}}, Rational(8));
    QSeries rhs = explicit_weight32_sum(WeightChar::kron_neg2, Rational(1, 8), Rational(8));
    CHECK(series_equal_below(lhs, rhs, Rational(8)));
}

TEST_CASE("the two further eta relations hidden in the explicit sums") {
    // first sum-side equals 4*eta^3(4tau), third equals eta^3(tau/4)
    QSeries w1 = ps_mul(QSeries::constant(CycNum(4)),
                        explicit_weight32_sum(WeightChar::kron_neg4, Rational(1, 2), Rational(8)));
    QSeries e34 = ps_mul(QSeries::constant(CycNum(4)),
                         ps_pow(eta_series(Rational(4), Rational(8)), 3));
    CHECK(series_equal_below(w1, e34, Rational(8)));

    QSeries w3 = explicit_weight32_sum(WeightChar::kron_neg4, Rational(1, 32), Rational(8));
    QSeries e14 = ps_pow(eta_series(Rational(1, 4), Rational(8)), 3);
    CHECK(series_equal_below(w3, e14, Rational(8)));
}

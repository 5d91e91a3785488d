#include "thetaq/eta.hpp"

#include "thetaq/kronecker.hpp"

namespace thetaq {

QSeries eta_series(const Rational& scale, const Rational& cutoff) {
    if (scale <= 0) throw DomainError("eta_series: scale must be positive");
    if (cutoff <= 0) throw DomainError("eta_series: cutoff must be positive");
    QSeries acc = QSeries::from_terms({{scale / 24, CycNum(1)}}, cutoff);
    // the factor 1 - q^(s*n) is trivial below the cutoff once s*n exceeds it
    long long nmax = to_long(rational_floor(cutoff / scale)) + 1;
    for (long long n = 1; n <= nmax; ++n) {
        QSeries f = QSeries::from_terms({{Rational(0), CycNum(1)}, {scale * n, CycNum(-1)}},
                                        std::nullopt);
        acc = ps_mul(acc, f);
    }
    return acc.truncated(cutoff);
}

QSeries eta_quotient(const EtaQuotientSpec& spec, const Rational& cutoff) {
    if (cutoff <= 0) throw DomainError("eta_quotient: cutoff must be positive");
    // Numerator and denominator are assembled separately and the denominator
    // inverted once. Window bookkeeping can eat 2*val(denominator), so widen
    // the working cutoff until the contract window is reached.
    Rational work = cutoff;
    for (int attempt = 0; attempt < 16; ++attempt) {
        QSeries num = QSeries::from_terms({{Rational(0), CycNum(1)}}, work);
        QSeries den = QSeries::from_terms({{Rational(0), CycNum(1)}}, work);
        for (const auto& [s, p] : spec.factors) {
            if (p == 0) continue;
            QSeries e = eta_series(s, work);
            for (int j = 0; j < (p > 0 ? p : -p); ++j)
                (p > 0 ? num : den) = ps_mul(p > 0 ? num : den, e);
        }
        QSeries q = ps_mul(num, ps_invert(den));
        if (q.cutoff() && *q.cutoff() < cutoff) {
            work += cutoff - *q.cutoff();
            continue;
        }
        return q.truncated(cutoff);
    }
    throw Error("eta_quotient: window did not converge");
}

QSeries explicit_weight32_sum(WeightChar kind, const Rational& exp_scale, const Rational& cutoff) {
    if (exp_scale <= 0) throw DomainError("explicit_weight32_sum: scale must be positive");
    if (cutoff <= 0) throw DomainError("explicit_weight32_sum: cutoff must be positive");
    long long top = kind == WeightChar::kron_neg4 ? -4 : -2;
    std::vector<std::pair<Rational, CycNum>> terms;
    for (long long n = 0;; ++n) {
        Rational e = exp_scale * n * n;
        if (e >= cutoff) break;
        int chi = kronecker_symbol(top, n);
        if (chi != 0) terms.emplace_back(e, CycNum(Rational(n * chi)));
    }
    return QSeries::from_terms(terms, cutoff, to_long(rat_den(exp_scale)));
}

std::vector<VerifyReport> verify_etaid_parts(const Rational& cutoff) {
    if (cutoff <= 0) throw DomainError("verify_etaid: cutoff must be positive");
    const Rational work = cutoff + 4; // covers the quotients' window loss
    auto eta_pow = [&](long long num, long long den, int p) {
        QSeries e = eta_series(Rational(num, den), work);
        return ps_pow(e, p);
    };

    // eta^5(tau) / (eta^2(tau/2) eta^2(2tau))
    QSeries lhs = ps_div(eta_pow(1, 1, 5), ps_mul(eta_pow(1, 2, 2), eta_pow(2, 1, 2)));

    // (eta^6(4tau) + 2 eta^2(2tau) eta^4(8tau)) / (eta^2(2tau) eta(4tau) eta^2(8tau))
    QSeries num1 = ps_add(eta_pow(4, 1, 6),
                          ps_mul(QSeries::constant(CycNum(2)),
                                 ps_mul(eta_pow(2, 1, 2), eta_pow(8, 1, 4))));
    QSeries den1 = ps_mul(eta_pow(2, 1, 2), ps_mul(eta_pow(4, 1, 1), eta_pow(8, 1, 2)));
    QSeries rhs1 = ps_div(num1, den1);

    // (2 eta(tau) eta^5(4tau) - eta^2(tau/2) eta^2(2tau) eta^2(8tau))
    //   / (eta(tau) eta^2(2tau) eta^2(8tau))
    QSeries num2 = ps_sub(ps_mul(QSeries::constant(CycNum(2)),
                                 ps_mul(eta_pow(1, 1, 1), eta_pow(4, 1, 5))),
                          ps_mul(eta_pow(1, 2, 2), ps_mul(eta_pow(2, 1, 2), eta_pow(8, 1, 2))));
    QSeries den2 = ps_mul(eta_pow(1, 1, 1), ps_mul(eta_pow(2, 1, 2), eta_pow(8, 1, 2)));
    QSeries rhs2 = ps_div(num2, den2);

    std::vector<VerifyReport> out;
    out.push_back(make_report("etaid-1", ps_compare(lhs, rhs1, cutoff)));
    out.push_back(make_report("etaid-2", ps_compare(lhs, rhs2, cutoff)));
    for (const auto& r : out)
        if (r.cutoff && *r.cutoff < cutoff) throw Error("verify_etaid: window fell short");
    return out;
}

VerifyReport verify_etaid(const Rational& cutoff) {
    auto parts = verify_etaid_parts(cutoff);
    VerifyReport agg;
    agg.id = "etaid";
    agg.pass = all_pass(parts);
    agg.cutoff = parts.front().cutoff;
    agg.compared_terms = parts[0].compared_terms + parts[1].compared_terms;
    for (const auto& p : parts)
        if (p.first_mismatch && !agg.first_mismatch) agg.first_mismatch = p.first_mismatch;
    return agg;
}

} // namespace thetaq

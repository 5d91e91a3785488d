#include "thetaq/logderiv.hpp"

#include "thetaq/theta.hpp"

namespace thetaq {

QSeries logderiv_reduced(const Characteristic& ch, const Rational& cutoff) {
    if (cutoff <= 0) throw DomainError("logderiv_reduced: cutoff must be positive");
    const Rational& eps = ch.eps();
    const CycNum two_i = CycNum(2) * CycNum::i();
    const CycNum beta = ch.beta();
    const CycNum beta_bar = beta.conj();
    std::vector<std::pair<Rational, CycNum>> terms;

    if (eps == 1) {
        if (ch.delta() == 1)
            throw DomainError("logderiv_reduced: [1;1] has a vanishing constant (pole)");
        // constant (1+beta)/(2(1-beta)), computed exactly in Q(zeta)
        CycNum c = (CycNum(1) + beta) * ((CycNum(2) * (CycNum(1) - beta)).inverse());
        terms.emplace_back(Rational(0), two_i * c);
        for (long long n = 1; Rational(n) < cutoff; ++n) {
            CycNum bl = CycNum(1), cl = CycNum(1);
            for (long long l = 1; Rational(l * n) < cutoff; ++l) {
                bl = bl * beta;
                cl = cl * beta_bar;
                terms.emplace_back(Rational(l * n), two_i * (bl - cl));
            }
        }
        return QSeries::from_terms(terms, cutoff);
    }

    terms.emplace_back(Rational(0), two_i * CycNum(eps / 2));
    const Rational off_plus = (1 + eps) / 2;  // exponent l*(n - (1+eps)/2), beta^l
    const Rational off_minus = (1 - eps) / 2; // exponent l*(n - (1-eps)/2), -conj(beta)^l
    CycNum bl = CycNum(1), cl = CycNum(1);
    for (long long l = 1;; ++l) {
        Rational min_plus = l * (1 - off_plus);
        Rational min_minus = l * (1 - off_minus);
        if (min_plus >= cutoff && min_minus >= cutoff) break;
        bl = bl * beta;
        cl = cl * beta_bar;
        for (long long n = 1; l * (Rational(n) - off_plus) < cutoff; ++n)
            terms.emplace_back(l * (Rational(n) - off_plus), two_i * bl);
        for (long long n = 1; l * (Rational(n) - off_minus) < cutoff; ++n)
            terms.emplace_back(l * (Rational(n) - off_minus), two_i * (-cl));
    }
    return QSeries::from_terms(terms, cutoff);
}

QSeries logderiv_oracle(const Characteristic& ch, const Rational& cutoff) {
    if (cutoff <= 0) throw DomainError("logderiv_oracle: cutoff must be positive");
    Rational work = cutoff;
    for (int attempt = 0; attempt < 16; ++attempt) {
        QSeries c = theta_const(ch, Rational(1), work);
        QSeries d = theta_deriv_reduced(ch, Rational(1), work);
        QSeries q = ps_mul(d, ps_invert(c)); // DivisionByZero when the constant vanishes
        if (q.cutoff() && *q.cutoff() < cutoff) {
            work += cutoff - *q.cutoff();
            continue;
        }
        return q.truncated(cutoff);
    }
    throw Error("logderiv_oracle: window did not converge");
}

} // namespace thetaq

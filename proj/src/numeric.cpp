#include "thetaq/numeric.hpp"

#include <cmath>

namespace thetaq {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;
}

SeriesValue ps_eval(const QSeries& a, const EvalPoint& p) {
    if (!(p.tau.imag() > 0)) throw DomainError("ps_eval: tau must lie in the upper half-plane");
    std::complex<double> v = 0;
    for (const auto& [k, c] : a.coeffs()) {
        double e = to_double(a.exponent_of(k));
        v += c.to_complex() * std::exp(std::complex<double>(0, kTwoPi) * p.tau * e);
    }
    double qabs = std::exp(-kTwoPi * p.tau.imag());
    double tail = 0;
    if (a.cutoff()) tail = std::pow(qabs, to_double(*a.cutoff())) / (1 - qabs);
    return {v, tail};
}

CrossCheckResult cross_check_identity(const IdentityRecord& rec, const EvalPoint& p,
                                      const Rational& cutoff) {
    QSeries lhs = eval_expr(rec.lhs, cutoff);
    QSeries rhs = eval_expr(rec.rhs, cutoff);
    std::complex<double> lv = ps_eval(lhs, p).value;
    std::complex<double> rv = ps_eval(rhs, p).value;
    std::complex<double> direct = eval_expr_numeric(rec.lhs, p.tau, p.tol);
    return {std::abs(lv - rv), std::abs(lv - direct)};
}

CrossCheckResult cross_check_identity(const std::string& id, const EvalPoint& p,
                                      const Rational& cutoff) {
    return cross_check_identity(registry_find(id), p, cutoff);
}

} // namespace thetaq

#pragma once

#include <utility>
#include <vector>

#include "thetaq/puiseux.hpp"
#include "thetaq/verify_report.hpp"

namespace thetaq {

// eta(s*tau) = q^(s/24) * prod_{n>=1} (1 - q^(s*n)), exact below cutoff.
QSeries eta_series(const Rational& scale, const Rational& cutoff);

// Finite product prod_j eta(scale_j * tau)^power_j. An empty factor list is
// the constant series 1.
struct EtaQuotientSpec {
    std::vector<std::pair<Rational, int>> factors; // (scale, power)
};

QSeries eta_quotient(const EtaQuotientSpec& spec, const Rational& cutoff);

// Weight-3/2 explicit Fourier sums  sum_{n>=0} n * chi(n) * q^(exp_scale*n^2)
// for chi one of the real characters (-4/.) and (-2/.).
enum class WeightChar { kron_neg4, kron_neg2 };

QSeries explicit_weight32_sum(WeightChar kind, const Rational& exp_scale, const Rational& cutoff);

// The two displayed equalities tying eta^5(tau)/(eta^2(tau/2) eta^2(2tau)) to
// quotients in eta(2tau), eta(4tau), eta(8tau); verified exactly below cutoff.
std::vector<VerifyReport> verify_etaid_parts(const Rational& cutoff);
VerifyReport verify_etaid(const Rational& cutoff); // aggregate of the two parts

} // namespace thetaq

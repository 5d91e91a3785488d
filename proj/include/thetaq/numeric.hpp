#pragma once

#include <complex>

#include "thetaq/puiseux.hpp"
#include "thetaq/registry.hpp"

namespace thetaq {

// A point of the upper half-plane together with the accuracy target for
// numeric work at that point.
struct EvalPoint {
    std::complex<double> tau;
    double tol = 1e-12;
};

struct SeriesValue {
    std::complex<double> value;
    double tail_bound; // |q|^cutoff / (1 - |q|) style estimate, 0 for exact series
};

// Evaluate a stored series at q = e(tau): sum of coeff * e(tau * exponent).
SeriesValue ps_eval(const QSeries& a, const EvalPoint& p);

// Cross-validation of one registry identity at a point: the two exact series
// evaluated and subtracted, and the LHS series against an independent direct
// summation of its defining formula.
struct CrossCheckResult {
    double lhs_rhs_residual;
    double series_vs_direct_residual;
};

CrossCheckResult cross_check_identity(const IdentityRecord& rec, const EvalPoint& p,
                                      const Rational& cutoff);
CrossCheckResult cross_check_identity(const std::string& id, const EvalPoint& p,
                                      const Rational& cutoff);

} // namespace thetaq

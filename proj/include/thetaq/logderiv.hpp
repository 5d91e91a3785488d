#pragma once

#include "thetaq/characteristic.hpp"
#include "thetaq/puiseux.hpp"

namespace thetaq {

// Closed form of (theta'/theta)(tau, 0) / pi from the triple-product
// expansion, with beta = -e(-delta/2):
//   eps = 1:      2i * [ (1+beta)/(2(1-beta)) + sum_{n,l>=1} (beta^l - conj(beta)^l) q^(l*n) ]
//   0 <= eps < 1: 2i * [ eps/2 + sum_{n,l>=1} (beta^l q^(l(n-(1+eps)/2))
//                                             - conj(beta)^l q^(l(n-(1-eps)/2))) ]
// The eps = 1, delta = 1 pole is rejected.
QSeries logderiv_reduced(const Characteristic& ch, const Rational& cutoff);

// Independent route: theta_deriv_reduced * theta_const^(-1). Fails with a
// division error when the constant vanishes ([1;1]).
QSeries logderiv_oracle(const Characteristic& ch, const Rational& cutoff);

} // namespace thetaq

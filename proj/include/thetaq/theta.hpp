#pragma once

#include <complex>

#include "thetaq/characteristic.hpp"
#include "thetaq/puiseux.hpp"
#include "thetaq/verify_report.hpp"

namespace thetaq {

// theta[eps;delta](s*tau, 0) as an exact q-series:
//   sum_n e((n+eps/2)*delta/2) * q^(s*(n+eps/2)^2/2),  exponents < cutoff.
QSeries theta_const(const Characteristic& ch, const Rational& scale, const Rational& cutoff);

// theta'[eps;delta](s*tau, 0) / pi, the reduced theta derivative:
//   2i * sum_n (n+eps/2) e((n+eps/2)*delta/2) * q^(s*(n+eps/2)^2/2).
// Dividing by pi keeps every coefficient inside Q(zeta_n).
QSeries theta_deriv_reduced(const Characteristic& ch, const Rational& scale,
                            const Rational& cutoff);

// The same constant through the triple-product expansion at z = 0:
//   e(eps*delta/4) q^(eps^2/8) prod_n (1-q^n)(1+e(delta/2)q^(n-(1-eps)/2))
//                                     (1+e(-delta/2)q^(n-(1+eps)/2)).
QSeries theta_const_product(const Characteristic& ch, const Rational& cutoff);

// Bivariate triple product: compares sum_n x^(n^2/2) y^n against
// prod_n (1-x^n)(1+x^(n-1/2)y)(1+x^(n-1/2)/y) over the Laurent ring in y,
// coefficient by coefficient below x_cutoff.
VerifyReport jacobi_triple_product_check(const Rational& x_cutoff);

// --- numeric two-variable evaluation -------------------------------------

// Partial sum of the defining series with tail bound < tol. eps/delta may be
// arbitrary reals here (the numeric route does not need the window).
std::complex<double> theta_sum_numeric(double eps, double delta, std::complex<double> tau,
                                       std::complex<double> z, double tol);
std::complex<double> theta_deriv_sum_numeric(double eps, double delta, std::complex<double> tau,
                                             std::complex<double> z, double tol);

std::complex<double> theta_numeric(const Characteristic& ch, std::complex<double> tau,
                                   std::complex<double> z, double tol);
std::complex<double> theta_deriv_numeric(const Characteristic& ch, std::complex<double> tau,
                                         std::complex<double> z, double tol);

// Residuals of the classical functional equations, evaluated numerically:
// lattice pseudo-periodicity in z (integral a, b), pseudo-2-periodicity in
// the characteristics (integral a, b), the general characteristic-shift
// relation (real shifts; exercised at a+1/2, b+1/2), and the parity relation
// together with its derivative form.
struct TransformResiduals {
    double pseudo_periodicity = 0;   // z -> z + a*tau + b
    double char_periodicity = 0;     // (eps,delta) -> (eps+2a, delta+2b)
    double char_shift = 0;           // (eps,delta) -> (eps+a, delta+b), real a,b
    double parity_const = 0;         // theta[-eps;-delta](tau,z) vs theta[eps;delta](tau,-z)
    double parity_deriv = 0;
    double max_residual() const;
};

TransformResiduals check_transformations(const Characteristic& ch, std::complex<double> tau,
                                         std::complex<double> z, int a, int b, double tol);

// |LHS - RHS| of the characteristic-shift relation for arbitrary real shifts.
double char_shift_residual(const Characteristic& ch, std::complex<double> tau,
                           std::complex<double> z, double a, double b, double tol);

// |theta[eps;delta](tau, z0)| at the lemma's zero z0 = (1-eps)/2*tau + (1-delta)/2.
double zero_location_residual(const Characteristic& ch, std::complex<double> tau, double tol);

} // namespace thetaq

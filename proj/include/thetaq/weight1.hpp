#pragma once

#include <string>
#include <vector>

#include "thetaq/puiseux.hpp"
#include "thetaq/verify_report.hpp"

namespace thetaq {

// The weight-1 divisor-sum series attached to Q(i), Q(sqrt(-2)) and
// Q(sqrt(-3)), together with the filters, weights and outer twists their
// corollaries need.

enum class DivisorVariant {
    quad4,      // 4*(-1/d) over odd divisors d | N        (Q(i))
    quad8,      // 2*(-2/d) over odd divisors d | N        (Q(sqrt(-2)))
    chi3_zeta3, // -2*sqrt(3)*i*(zeta_3^d - zeta_3^-d), all divisors (Q(sqrt(-3)))
    chi3_zeta6, // same with zeta_6 in place of zeta_3
};

enum class DivisorFilter { all, d_odd, codivisor_odd };

enum class DivisorWeight { one, sign_d, sign_codivisor }; // 1, (-1)^d, (-1)^(N/d)

// Twist applied to the whole coefficient of q^(exp_scale*N); acts on N >= 1
// only (the constant term is pinned explicitly per series).
enum class OuterTwist {
    none,
    keep_odd,          // restrict to odd N
    keep_not_mult3,    // restrict to 3 not dividing N
    alternate,         // multiply by (-1)^N
    kron_neg1_on_odd,  // restrict to odd N and multiply by (-1/N)
};

struct DivisorSeriesSpec {
    DivisorVariant variant = DivisorVariant::quad4;
    DivisorFilter filter = DivisorFilter::all;
    DivisorWeight weight = DivisorWeight::one;
    OuterTwist twist = OuterTwist::none;
    Rational exp_scale = Rational(1, 2); // exponent of the N-th term is exp_scale*N
    Rational constant_term = Rational(1);

    friend bool operator==(const DivisorSeriesSpec& a, const DivisorSeriesSpec& b) {
        return a.variant == b.variant && a.filter == b.filter && a.weight == b.weight &&
               a.twist == b.twist && a.exp_scale == b.exp_scale &&
               a.constant_term == b.constant_term;
    }
};

// Coefficient of the N-th term before the outer twist: the filtered,
// weighted divisor sum of the variant's base values.
CycNum divisor_coeff(const DivisorSeriesSpec& spec, long long n);

// Outer twist factor at index N (0 kills the term).
Rational outer_twist_factor(OuterTwist twist, long long n);

// constant_term + sum_{N>=1} twist(N) * divisor_coeff(N) * q^(exp_scale*N)
QSeries weight1_series(const DivisorSeriesSpec& spec, const Rational& cutoff);

// Theta_3(scale*tau): the Q(sqrt(-3)) series 1 + 6 sum_N (sum_{d|N} (d/3)) q^(N/2)
// with tau multiplied by scale.
QSeries theta3(const Rational& scale, const Rational& cutoff);

// Pairwise agreement of all alternative coefficient formulas (parts i-iv)
// plus invariance under multiplying N by 2^k resp. 3^k.
std::vector<VerifyReport> verify_recogser_equivalences(long long n_max);

// The six restriction/twist assertions for the quad4/quad8 series.
std::vector<VerifyReport> verify_pow2twist(const Rational& cutoff);

// The ten restriction/twist assertions for Theta_3.
std::vector<VerifyReport> verify_pow3twist(const Rational& cutoff);

} // namespace thetaq

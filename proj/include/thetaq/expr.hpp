#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "thetaq/characteristic.hpp"
#include "thetaq/eta.hpp"
#include "thetaq/puiseux.hpp"
#include "thetaq/weight1.hpp"

namespace thetaq {

// Symbolic expression over the series primitives. Identity sides are stored
// as these trees (data, not code) so each one can be reviewed term by term.
class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

class Expr {
public:
    enum class Kind {
        theta_const,    // theta[ch](scale*tau, 0)
        theta_deriv,    // theta'[ch](scale*tau, 0) / pi
        eta,            // eta(scale*tau)
        theta3,         // Theta_3(scale*tau)
        divisor_series, // weight-1 divisor sum with filters/twists
        explicit_sum,   // sum_n n*chi(n) q^(scale*n^2)
        scalar,         // exact cyclotomic constant
        add,
        sub,
        mul,
        div,
        int_pow,
    };

    Kind kind;
    std::optional<Characteristic> ch;
    Rational scale = Rational(1);
    std::optional<DivisorSeriesSpec> dspec;
    WeightChar wkind = WeightChar::kron_neg4;
    CycNum scalar_value;
    int exponent = 0;
    std::vector<ExprPtr> kids;

    explicit Expr(Kind k) : kind(k) {}
};

ExprPtr theta_c(const Characteristic& ch, const Rational& scale = Rational(1));
ExprPtr theta_d(const Characteristic& ch, const Rational& scale = Rational(1));
ExprPtr eta_f(const Rational& scale = Rational(1));
ExprPtr theta3_f(const Rational& scale = Rational(1));
ExprPtr divisor_f(const DivisorSeriesSpec& spec);
ExprPtr wsum_f(WeightChar kind, const Rational& scale);
ExprPtr scalar_f(const CycNum& value);
ExprPtr operator+(const ExprPtr& a, const ExprPtr& b);
ExprPtr operator-(const ExprPtr& a, const ExprPtr& b);
ExprPtr operator*(const ExprPtr& a, const ExprPtr& b);
ExprPtr operator/(const ExprPtr& a, const ExprPtr& b);
ExprPtr pow_f(const ExprPtr& a, int n);

// Exact evaluation with a guaranteed window >= cutoff. Division and window
// loss inside the tree are absorbed by re-evaluating at a widened working
// cutoff; errors are annotated with the offending subexpression.
QSeries eval_expr(const ExprPtr& e, const Rational& cutoff);

// Independent floating-point route: every leaf is evaluated by direct
// summation of its defining formula (no exact series involved).
std::complex<double> eval_expr_numeric(const ExprPtr& e, std::complex<double> tau, double tol);

// ExprText rendering; parse_expr(expr_to_text(e)) evaluates to the same series.
std::string expr_to_text(const ExprPtr& e);

} // namespace thetaq

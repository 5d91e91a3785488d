#include "thetaq/expr.hpp"

#include <cmath>

#include "thetaq/kronecker.hpp"
#include "thetaq/theta.hpp"

namespace thetaq {

namespace {
std::shared_ptr<Expr> node(Expr::Kind k) { return std::make_shared<Expr>(k); }
ExprPtr binary(Expr::Kind k, const ExprPtr& a, const ExprPtr& b) {
    auto e = node(k);
    e->kids = {a, b};
    return e;
}
} // namespace

ExprPtr theta_c(const Characteristic& ch, const Rational& scale) {
    auto e = node(Expr::Kind::theta_const);
    e->ch = ch;
    e->scale = scale;
    return e;
}

ExprPtr theta_d(const Characteristic& ch, const Rational& scale) {
    auto e = node(Expr::Kind::theta_deriv);
    e->ch = ch;
    e->scale = scale;
    return e;
}

ExprPtr eta_f(const Rational& scale) {
    auto e = node(Expr::Kind::eta);
    e->scale = scale;
    return e;
}

ExprPtr theta3_f(const Rational& scale) {
    auto e = node(Expr::Kind::theta3);
    e->scale = scale;
    return e;
}

ExprPtr divisor_f(const DivisorSeriesSpec& spec) {
    auto e = node(Expr::Kind::divisor_series);
    e->dspec = spec;
    return e;
}

ExprPtr wsum_f(WeightChar kind, const Rational& scale) {
    auto e = node(Expr::Kind::explicit_sum);
    e->wkind = kind;
    e->scale = scale;
    return e;
}

ExprPtr scalar_f(const CycNum& value) {
    auto e = node(Expr::Kind::scalar);
    e->scalar_value = value;
    return e;
}

ExprPtr operator+(const ExprPtr& a, const ExprPtr& b) { return binary(Expr::Kind::add, a, b); }
ExprPtr operator-(const ExprPtr& a, const ExprPtr& b) { return binary(Expr::Kind::sub, a, b); }
ExprPtr operator*(const ExprPtr& a, const ExprPtr& b) { return binary(Expr::Kind::mul, a, b); }
ExprPtr operator/(const ExprPtr& a, const ExprPtr& b) { return binary(Expr::Kind::div, a, b); }

ExprPtr pow_f(const ExprPtr& a, int n) {
    auto e = node(Expr::Kind::int_pow);
    e->kids = {a};
    e->exponent = n;
    return e;
}

namespace {

// Raised when a divisor is zero through the current working window: the
// evaluator cannot tell it from a genuine zero without looking further out.
struct WindowDeficit {
    ExprPtr subtree;
};

QSeries eval_at(const ExprPtr& e, const Rational& work) {
    switch (e->kind) {
    case Expr::Kind::theta_const:
        return theta_const(*e->ch, e->scale, work);
    case Expr::Kind::theta_deriv:
        return theta_deriv_reduced(*e->ch, e->scale, work);
    case Expr::Kind::eta:
        return eta_series(e->scale, work);
    case Expr::Kind::theta3:
        return theta3(e->scale, work);
    case Expr::Kind::divisor_series:
        return weight1_series(*e->dspec, work);
    case Expr::Kind::explicit_sum:
        return explicit_weight32_sum(e->wkind, e->scale, work);
    case Expr::Kind::scalar:
        return QSeries::constant(e->scalar_value);
    case Expr::Kind::add:
        return ps_add(eval_at(e->kids[0], work), eval_at(e->kids[1], work));
    case Expr::Kind::sub:
        return ps_sub(eval_at(e->kids[0], work), eval_at(e->kids[1], work));
    case Expr::Kind::mul:
        return ps_mul(eval_at(e->kids[0], work), eval_at(e->kids[1], work));
    case Expr::Kind::div: {
        QSeries den = eval_at(e->kids[1], work);
        if (den.support_empty()) {
            if (den.is_exact_zero())
                throw DivisionByZero("division by the zero series in subexpression " +
                                     expr_to_text(e->kids[1]));
            throw WindowDeficit{e->kids[1]}; // maybe just truncated away; widen and retry
        }
        return ps_mul(eval_at(e->kids[0], work), ps_invert(den, work));
    }
    case Expr::Kind::int_pow:
        return ps_pow(eval_at(e->kids[0], work), e->exponent);
    }
    throw Error("eval_expr: unknown node kind");
}

} // namespace

QSeries eval_expr(const ExprPtr& e, const Rational& cutoff) {
    if (cutoff <= 0) throw DomainError("eval_expr: cutoff must be positive");
    // Window loss along the tree (inversions, negative valuations) is a
    // fixed offset in the working cutoff, so one widened retry normally
    // lands exactly; iterate defensively all the same. A divisor with no
    // terms inside the window forces a doubling until its valuation shows
    // up; one that stays empty far beyond any plausible valuation is zero.
    Rational work = cutoff;
    for (int attempt = 0; attempt < 16; ++attempt) {
        try {
            QSeries r = eval_at(e, work);
            if (r.cutoff() && *r.cutoff() < cutoff) {
                work += cutoff - *r.cutoff();
                continue;
            }
            return r.truncated(cutoff);
        } catch (const WindowDeficit& deficit) {
            if (work > 4096)
                throw DivisionByZero("division by a zero series in subexpression " +
                                     expr_to_text(deficit.subtree));
            work = 2 * work + 1;
        }
    }
    throw Error("eval_expr: window did not converge for " + expr_to_text(e));
}

// --- direct numeric route ---------------------------------------------------

namespace {

constexpr double kPi = 3.14159265358979323846;

std::complex<double> qpow(std::complex<double> tau, double e) {
    return std::exp(std::complex<double>(0, 2 * kPi) * tau * e);
}

std::complex<double> eta_numeric(std::complex<double> tau, double scale) {
    std::complex<double> v = qpow(tau, scale / 24);
    for (long long n = 1;; ++n) {
        std::complex<double> t = qpow(tau, scale * n);
        v *= (1.0 - t);
        if (std::abs(t) < 1e-18) break;
        if (n > 100000) throw DomainError("eta_numeric: |q| too close to 1");
    }
    return v;
}

} // namespace

std::complex<double> eval_expr_numeric(const ExprPtr& e, std::complex<double> tau, double tol) {
    if (!(tau.imag() > 0)) throw DomainError("tau must lie in the upper half-plane");
    double s = to_double(e->scale);
    switch (e->kind) {
    case Expr::Kind::theta_const:
        return theta_sum_numeric(to_double(e->ch->eps()), to_double(e->ch->delta()), s * tau, 0,
                                 tol);
    case Expr::Kind::theta_deriv:
        return theta_deriv_sum_numeric(to_double(e->ch->eps()), to_double(e->ch->delta()),
                                       s * tau, 0, tol) /
               kPi;
    case Expr::Kind::eta:
        return eta_numeric(tau, s);
    case Expr::Kind::theta3: {
        std::complex<double> v = 1;
        for (long long n = 1;; ++n) {
            long long c = 0;
            for (long long d = 1; d <= n; ++d)
                if (n % d == 0) c += kronecker_symbol(d, 3);
            std::complex<double> t = qpow(tau, s * n / 2.0);
            v += 6.0 * double(c) * t;
            if (std::abs(t) * (n + 2) < tol / 100) break;
        }
        return v;
    }
    case Expr::Kind::divisor_series: {
        const DivisorSeriesSpec& spec = *e->dspec;
        std::complex<double> v = to_double(spec.constant_term);
        double es = to_double(spec.exp_scale);
        for (long long n = 1;; ++n) {
            std::complex<double> t = qpow(tau, es * n);
            Rational w = outer_twist_factor(spec.twist, n);
            if (w != 0) v += to_double(w) * cyc_to_complex(divisor_coeff(spec, n)) * t;
            if (std::abs(t) * 8 * (n + 2) < tol / 100) break;
        }
        return v;
    }
    case Expr::Kind::explicit_sum: {
        long long top = e->wkind == WeightChar::kron_neg4 ? -4 : -2;
        std::complex<double> v = 0;
        for (long long n = 1;; ++n) {
            std::complex<double> t = qpow(tau, s * n * n);
            v += double(n * kronecker_symbol(top, n)) * t;
            if (std::abs(t) * (n + 2) < tol / 100) break;
        }
        return v;
    }
    case Expr::Kind::scalar:
        return cyc_to_complex(e->scalar_value);
    case Expr::Kind::add:
        return eval_expr_numeric(e->kids[0], tau, tol) + eval_expr_numeric(e->kids[1], tau, tol);
    case Expr::Kind::sub:
        return eval_expr_numeric(e->kids[0], tau, tol) - eval_expr_numeric(e->kids[1], tau, tol);
    case Expr::Kind::mul:
        return eval_expr_numeric(e->kids[0], tau, tol) * eval_expr_numeric(e->kids[1], tau, tol);
    case Expr::Kind::div: {
        std::complex<double> d = eval_expr_numeric(e->kids[1], tau, tol);
        if (std::abs(d) < 1e-300)
            throw DivisionByZero("numeric division by ~0 in " + expr_to_text(e->kids[1]));
        return eval_expr_numeric(e->kids[0], tau, tol) / d;
    }
    case Expr::Kind::int_pow: {
        std::complex<double> b = eval_expr_numeric(e->kids[0], tau, tol);
        std::complex<double> v = 1;
        for (int j = 0; j < e->exponent; ++j) v *= b;
        return v;
    }
    }
    throw Error("eval_expr_numeric: unknown node kind");
}

// --- printing ----------------------------------------------------------------

namespace {

std::string arg_text(const Rational& scale) {
    if (scale == 1) return "tau";
    return to_string(scale) + "*tau";
}

const char* variant_token(DivisorVariant v) {
    switch (v) {
    case DivisorVariant::quad4: return "quad4";
    case DivisorVariant::quad8: return "quad8";
    case DivisorVariant::chi3_zeta3: return "chi3";
    case DivisorVariant::chi3_zeta6: return "chi6";
    }
    return "?";
}
const char* filter_token(DivisorFilter f) {
    switch (f) {
    case DivisorFilter::all: return "all";
    case DivisorFilter::d_odd: return "dodd";
    case DivisorFilter::codivisor_odd: return "codd";
    }
    return "?";
}
const char* weight_token(DivisorWeight w) {
    switch (w) {
    case DivisorWeight::one: return "one";
    case DivisorWeight::sign_d: return "sgnd";
    case DivisorWeight::sign_codivisor: return "sgncd";
    }
    return "?";
}
const char* twist_token(OuterTwist t) {
    switch (t) {
    case OuterTwist::none: return "none";
    case OuterTwist::keep_odd: return "oddN";
    case OuterTwist::keep_not_mult3: return "no3N";
    case OuterTwist::alternate: return "sgnN";
    case OuterTwist::kron_neg1_on_odd: return "kronN";
    }
    return "?";
}

} // namespace

std::string expr_to_text(const ExprPtr& e) {
    switch (e->kind) {
    case Expr::Kind::theta_const:
        return "theta[" + to_string(e->ch->eps()) + "," + to_string(e->ch->delta()) + "](" +
               arg_text(e->scale) + ")";
    case Expr::Kind::theta_deriv:
        return "dtheta[" + to_string(e->ch->eps()) + "," + to_string(e->ch->delta()) + "](" +
               arg_text(e->scale) + ")";
    case Expr::Kind::eta:
        return "eta(" + arg_text(e->scale) + ")";
    case Expr::Kind::theta3:
        return "Theta3(" + arg_text(e->scale) + ")";
    case Expr::Kind::divisor_series: {
        const DivisorSeriesSpec& s = *e->dspec;
        return std::string("dsum[") + variant_token(s.variant) + "," + filter_token(s.filter) +
               "," + weight_token(s.weight) + "," + twist_token(s.twist) + "," +
               to_string(s.constant_term) + "](" + arg_text(2 * s.exp_scale) + ")";
    }
    case Expr::Kind::explicit_sum:
        return std::string("wsum[") + (e->wkind == WeightChar::kron_neg4 ? "-4" : "-2") + "](" +
               arg_text(e->scale) + ")";
    case Expr::Kind::scalar:
        return "(" + e->scalar_value.to_string() + ")";
    case Expr::Kind::add:
        return "(" + expr_to_text(e->kids[0]) + " + " + expr_to_text(e->kids[1]) + ")";
    case Expr::Kind::sub:
        return "(" + expr_to_text(e->kids[0]) + " - " + expr_to_text(e->kids[1]) + ")";
    case Expr::Kind::mul:
        return "(" + expr_to_text(e->kids[0]) + "*" + expr_to_text(e->kids[1]) + ")";
    case Expr::Kind::div:
        return "(" + expr_to_text(e->kids[0]) + "/" + expr_to_text(e->kids[1]) + ")";
    case Expr::Kind::int_pow:
        return "(" + expr_to_text(e->kids[0]) + "^" + std::to_string(e->exponent) + ")";
    }
    return "?";
}

} // namespace thetaq

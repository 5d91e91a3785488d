#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thetaq/cyclotomic.hpp"
#include "thetaq/rational.hpp"

namespace thetaq {

// Coefficient-ring interface used by PuiseuxSeries. Specialized for CycNum,
// Rational and YLaurent.
template <class R>
struct RingTraits;

template <>
struct RingTraits<CycNum> {
    static CycNum zero() { return CycNum(); }
    static CycNum one() { return CycNum(Rational(1)); }
    static bool is_zero(const CycNum& a) { return a.is_zero(); }
    static CycNum invert(const CycNum& a) { return a.inverse(); }
    static std::string str(const CycNum& a) { return a.to_string(); }
};

template <>
struct RingTraits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& a) { return a == 0; }
    static Rational invert(const Rational& a) {
        if (a == 0) throw DivisionByZero("division by zero rational");
        return Rational(1) / a;
    }
    static std::string str(const Rational& a) { return to_string(a); }
};

// Truncated formal series in q^(1/M) over an abstract coefficient ring.
//
// Exponents are stored as integer numerators over one global denominator M.
// `cutoff` is an exclusive upper bound on exponents up to which the stored
// coefficients are guaranteed to agree with the mathematical series; nullopt
// means the series is known exactly at every order (the zero element, exact
// polynomials, constants). Stored zero coefficients are pruned; absence means
// zero. All values are immutable and operations are pure.
template <class R>
class PuiseuxSeries {
public:
    using Cutoff = std::optional<Rational>; // nullopt = +infinity

    PuiseuxSeries() = default; // exact zero

    static PuiseuxSeries zero() { return PuiseuxSeries(); }

    static PuiseuxSeries constant(R v) {
        PuiseuxSeries s;
        if (!RingTraits<R>::is_zero(v)) s.c_[0] = std::move(v);
        return s;
    }

    static PuiseuxSeries monomial(R v, const Rational& e) {
        PuiseuxSeries s;
        s.denom_ = to_long(rat_den(e));
        if (!RingTraits<R>::is_zero(v)) s.c_[to_long(rat_num(e))] = std::move(v);
        return s;
    }

    // Assemble a series from (exponent, coefficient) terms with a guaranteed
    // window; denominator is the lcm of the term denominators and min_denom.
    static PuiseuxSeries from_terms(const std::vector<std::pair<Rational, R>>& terms,
                                    Cutoff cutoff, long long min_denom = 1) {
        PuiseuxSeries s;
        s.cutoff_ = std::move(cutoff);
        s.denom_ = min_denom;
        for (const auto& [e, c] : terms) s.denom_ = lcm_ll(s.denom_, to_long(rat_den(e)));
        for (const auto& [e, c] : terms) {
            if (RingTraits<R>::is_zero(c)) continue;
            if (s.cutoff_ && e >= *s.cutoff_) continue;
            long long k = to_long(rat_num(e)) * (s.denom_ / to_long(rat_den(e)));
            auto it = s.c_.find(k);
            if (it == s.c_.end()) {
                s.c_.emplace(k, c);
            } else {
                it->second = it->second + c;
                if (RingTraits<R>::is_zero(it->second)) s.c_.erase(it);
            }
        }
        return s;
    }

    long long denom() const { return denom_; }
    const Cutoff& cutoff() const { return cutoff_; }
    const std::map<long long, R>& coeffs() const { return c_; }

    bool support_empty() const { return c_.empty(); }
    bool is_exact_zero() const { return c_.empty() && !cutoff_; }

    Rational exponent_of(long long key) const { return Rational(key, denom_); }

    // Smallest exponent with a nonzero stored coefficient.
    std::optional<Rational> valuation() const {
        if (c_.empty()) return std::nullopt;
        return exponent_of(c_.begin()->first);
    }

    // Lower bound on the true valuation: the valuation when the support is
    // nonempty, otherwise the cutoff (nullopt = the exact zero, bound +inf).
    Cutoff valuation_bound() const {
        if (!c_.empty()) return exponent_of(c_.begin()->first);
        return cutoff_;
    }

    // Exact coefficient of q^e; zero if absent. Querying at or beyond the
    // guaranteed window is a contract violation, not a zero.
    R coeff_at(const Rational& e) const {
        if (cutoff_ && e >= *cutoff_)
            throw WindowError("coefficient query at exponent " + to_string(e) +
                              " is beyond the guaranteed window " + to_string(*cutoff_));
        long long d = to_long(rat_den(e));
        if (denom_ % d != 0) return RingTraits<R>::zero(); // off the exponent grid
        auto it = c_.find(to_long(rat_num(e)) * (denom_ / d));
        return it == c_.end() ? RingTraits<R>::zero() : it->second;
    }

    PuiseuxSeries truncated(const Rational& t) const {
        PuiseuxSeries s;
        s.denom_ = denom_;
        s.cutoff_ = cutoff_ ? std::min(*cutoff_, t) : t;
        for (const auto& [k, c] : c_)
            if (exponent_of(k) < *s.cutoff_) s.c_.emplace(k, c);
        return s;
    }

    // Same series over a denominator that is a multiple of the current one.
    PuiseuxSeries with_denom(long long m) const {
        if (m % denom_ != 0) throw DomainError("with_denom: not a multiple of current denominator");
        if (m == denom_) return *this;
        PuiseuxSeries s;
        s.denom_ = m;
        s.cutoff_ = cutoff_;
        long long f = m / denom_;
        for (const auto& [k, c] : c_) s.c_.emplace(k * f, c);
        return s;
    }

    template <class R2>
    friend PuiseuxSeries<R2> ps_add(const PuiseuxSeries<R2>&, const PuiseuxSeries<R2>&);
    template <class R2>
    friend PuiseuxSeries<R2> ps_mul(const PuiseuxSeries<R2>&, const PuiseuxSeries<R2>&);
    template <class R2>
    friend PuiseuxSeries<R2> ps_invert(const PuiseuxSeries<R2>&,
                                       const std::optional<Rational>&);
    template <class R2>
    friend PuiseuxSeries<R2> ps_rescale(const PuiseuxSeries<R2>&, const Rational&);

private:
    long long denom_ = 1;
    Cutoff cutoff_ = std::nullopt;
    std::map<long long, R> c_;

    void insert_add(long long k, const R& v) {
        if (RingTraits<R>::is_zero(v)) return;
        auto it = c_.find(k);
        if (it == c_.end()) {
            c_.emplace(k, v);
        } else {
            it->second = it->second + v;
            if (RingTraits<R>::is_zero(it->second)) c_.erase(it);
        }
    }
};

namespace detail {
inline std::optional<Rational> opt_min(const std::optional<Rational>& a,
                                       const std::optional<Rational>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}
inline std::optional<Rational> opt_add(const std::optional<Rational>& a,
                                       const std::optional<Rational>& b) {
    if (!a || !b) return std::nullopt;
    return *a + *b;
}
} // namespace detail

template <class R>
PuiseuxSeries<R> ps_neg(const PuiseuxSeries<R>& a) {
    std::vector<std::pair<Rational, R>> terms;
    for (const auto& [k, c] : a.coeffs())
        terms.emplace_back(a.exponent_of(k), RingTraits<R>::zero() - c);
    return PuiseuxSeries<R>::from_terms(terms, a.cutoff(), a.denom());
}

template <class R>
PuiseuxSeries<R> ps_add(const PuiseuxSeries<R>& a, const PuiseuxSeries<R>& b) {
    long long m = lcm_ll(a.denom_, b.denom_);
    PuiseuxSeries<R> ae = a.with_denom(m), be = b.with_denom(m);
    PuiseuxSeries<R> s;
    s.denom_ = m;
    s.cutoff_ = detail::opt_min(a.cutoff_, b.cutoff_);
    for (const auto& [k, c] : ae.c_) s.insert_add(k, c);
    for (const auto& [k, c] : be.c_) s.insert_add(k, c);
    if (s.cutoff_) {
        for (auto it = s.c_.begin(); it != s.c_.end();)
            it = (s.exponent_of(it->first) >= *s.cutoff_) ? s.c_.erase(it) : std::next(it);
    }
    return s;
}

template <class R>
PuiseuxSeries<R> ps_sub(const PuiseuxSeries<R>& a, const PuiseuxSeries<R>& b) {
    return ps_add(a, ps_neg(b));
}

// Convolution. The result window follows the valuation rule
// min(T_a + v_b, T_b + v_a); for an operand whose support is empty its cutoff
// serves as the valuation bound, and the exact zero annihilates everything.
template <class R>
PuiseuxSeries<R> ps_mul(const PuiseuxSeries<R>& a, const PuiseuxSeries<R>& b) {
    if (a.is_exact_zero() || b.is_exact_zero()) return PuiseuxSeries<R>::zero();
    long long m = lcm_ll(a.denom_, b.denom_);
    PuiseuxSeries<R> ae = a.with_denom(m), be = b.with_denom(m);
    PuiseuxSeries<R> s;
    s.denom_ = m;
    s.cutoff_ = detail::opt_min(detail::opt_add(a.cutoff_, b.valuation_bound()),
                                detail::opt_add(b.cutoff_, a.valuation_bound()));
    for (const auto& [ka, ca] : ae.c_) {
        for (const auto& [kb, cb] : be.c_) {
            long long k = ka + kb;
            if (s.cutoff_ && s.exponent_of(k) >= *s.cutoff_) continue;
            s.insert_add(k, ca * cb);
        }
    }
    return s;
}

template <class R>
PuiseuxSeries<R> ps_pow(const PuiseuxSeries<R>& a, int n) {
    if (n < 0) throw DomainError("ps_pow: negative power; invert explicitly");
    PuiseuxSeries<R> r = PuiseuxSeries<R>::constant(RingTraits<R>::one());
    for (int j = 0; j < n; ++j) r = ps_mul(r, a);
    return r;
}

// Multiplicative inverse through the derived window T - 2v (for an exactly
// known series a window must be requested explicitly). The result satisfies
// a * ps_invert(a) = 1 through its cutoff.
template <class R>
PuiseuxSeries<R> ps_invert(const PuiseuxSeries<R>& a,
                           const std::optional<Rational>& window = std::nullopt) {
    if (a.support_empty())
        throw DivisionByZero("cannot invert a series that is zero through its window");
    Rational v = *a.valuation();
    std::optional<Rational> t;
    if (a.cutoff_) t = *a.cutoff_ - 2 * v;
    t = detail::opt_min(t, window);
    if (!t) throw DomainError("ps_invert: exact series needs an explicit window");

    const long long m = a.denom_;
    const long long kv = a.c_.begin()->first;
    R lead_inv = RingTraits<R>::invert(a.c_.begin()->second); // may throw

    // slots: result exponents -v + j/m for j = 0, 1, ... while < t
    // j_max/m < t + v
    Rational span = (*t + v) * m;
    if (span <= 0) {
        PuiseuxSeries<R> s;
        s.denom_ = m;
        s.cutoff_ = t;
        return s;
    }
    long long jmax = to_long(rational_floor(span));
    if (Rational(jmax, 1) == span) --jmax; // exclusive bound
    std::vector<R> b(static_cast<std::size_t>(jmax) + 1, RingTraits<R>::zero());
    b[0] = lead_inv;
    for (long long j = 1; j <= jmax; ++j) {
        R acc = RingTraits<R>::zero();
        for (const auto& [ka, ca] : a.c_) {
            long long tshift = ka - kv;
            if (tshift <= 0 || tshift > j) continue;
            const R& bj = b[static_cast<std::size_t>(j - tshift)];
            if (RingTraits<R>::is_zero(bj)) continue;
            acc = acc + ca * bj;
        }
        if (!RingTraits<R>::is_zero(acc))
            b[static_cast<std::size_t>(j)] = RingTraits<R>::zero() - lead_inv * acc;
    }
    PuiseuxSeries<R> s;
    s.denom_ = m;
    s.cutoff_ = t;
    for (long long j = 0; j <= jmax; ++j)
        if (!RingTraits<R>::is_zero(b[static_cast<std::size_t>(j)]))
            s.c_.emplace(j - kv, std::move(b[static_cast<std::size_t>(j)]));
    return s;
}

template <class R>
PuiseuxSeries<R> ps_div(const PuiseuxSeries<R>& a, const PuiseuxSeries<R>& b,
                        const std::optional<Rational>& window = std::nullopt) {
    return ps_mul(a, ps_invert(b, window));
}

// tau -> s*tau: every exponent is multiplied by s, the cutoff scales with it
// and the denominator is the smallest one carrying the stored exponents.
template <class R>
PuiseuxSeries<R> ps_rescale(const PuiseuxSeries<R>& a, const Rational& s) {
    if (s <= 0) throw DomainError("ps_rescale: scale must be positive");
    long long p = to_long(rat_num(s)), q = to_long(rat_den(s));
    long long qm = q * a.denom_;
    long long g = to_long(boost::multiprecision::gcd(BigInt(p), BigInt(qm)));
    PuiseuxSeries<R> r;
    r.denom_ = qm / g;
    if (a.cutoff_) r.cutoff_ = *a.cutoff_ * s;
    long long keys_gcd = r.denom_;
    for (const auto& [k, c] : a.c_) {
        long long key = k * (p / g);
        r.c_.emplace(key, c);
        keys_gcd = to_long(boost::multiprecision::gcd(BigInt(keys_gcd), BigInt(key)));
    }
    if (keys_gcd > 1 && !r.c_.empty()) {
        PuiseuxSeries<R> shrunk;
        shrunk.denom_ = r.denom_ / keys_gcd;
        shrunk.cutoff_ = r.cutoff_;
        for (auto& [k, c] : r.c_) shrunk.c_.emplace(k / keys_gcd, std::move(c));
        return shrunk;
    }
    return r;
}

// Exact coefficient of q^e (module-level spelling of coeff_at).
template <class R>
R ps_coeff(const PuiseuxSeries<R>& a, const Rational& e) {
    return a.coeff_at(e);
}

// Multiply the coefficient at stored numerator N by w(N); window unchanged.
template <class R>
PuiseuxSeries<R> ps_twist(const PuiseuxSeries<R>& a,
                          const std::function<R(long long)>& w) {
    std::vector<std::pair<Rational, R>> terms;
    for (const auto& [k, c] : a.coeffs()) terms.emplace_back(a.exponent_of(k), w(k) * c);
    return PuiseuxSeries<R>::from_terms(terms, a.cutoff(), a.denom());
}

// Keep the coefficients whose numerator satisfies pred, zero the rest.
template <class R>
PuiseuxSeries<R> ps_restrict(const PuiseuxSeries<R>& a,
                             const std::function<bool(long long)>& pred) {
    std::vector<std::pair<Rational, R>> terms;
    for (const auto& [k, c] : a.coeffs())
        if (pred(k)) terms.emplace_back(a.exponent_of(k), c);
    return PuiseuxSeries<R>::from_terms(terms, a.cutoff(), a.denom());
}

template <class R>
struct SeriesMismatch {
    Rational exponent;
    R lhs, rhs;
};

template <class R>
struct SeriesComparison {
    std::optional<Rational> window;          // exclusive bound actually compared
    std::optional<SeriesMismatch<R>> first_mismatch;
    long long compared_terms = 0;            // nonzero coefficients examined
    bool equal() const { return !first_mismatch; }
};

// Coefficientwise comparison below the joint guaranteed window (optionally
// clipped further by `upto`).
template <class R>
SeriesComparison<R> ps_compare(const PuiseuxSeries<R>& a, const PuiseuxSeries<R>& b,
                               const std::optional<Rational>& upto = std::nullopt) {
    SeriesComparison<R> out;
    out.window = detail::opt_min(detail::opt_min(a.cutoff(), b.cutoff()), upto);
    long long m = lcm_ll(a.denom(), b.denom());
    PuiseuxSeries<R> ae = a.with_denom(m), be = b.with_denom(m);
    auto ia = ae.coeffs().begin(), ib = be.coeffs().begin();
    const auto ea = ae.coeffs().end(), eb = be.coeffs().end();
    auto in_window = [&](long long k) {
        return !out.window || Rational(k, m) < *out.window;
    };
    while (ia != ea || ib != eb) {
        long long k;
        const R* ca = nullptr;
        const R* cb = nullptr;
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
            k = ia->first; ca = &ia->second; ++ia;
        } else if (ia == ea || ib->first < ia->first) {
            k = ib->first; cb = &ib->second; ++ib;
        } else {
            k = ia->first; ca = &ia->second; cb = &ib->second; ++ia; ++ib;
        }
        if (!in_window(k)) continue;
        ++out.compared_terms;
        const R za = ca ? *ca : RingTraits<R>::zero();
        const R zb = cb ? *cb : RingTraits<R>::zero();
        if (!(za == zb) && !out.first_mismatch)
            out.first_mismatch = SeriesMismatch<R>{Rational(k, m), za, zb};
    }
    return out;
}

template <class R>
bool series_equal_below(const PuiseuxSeries<R>& a, const PuiseuxSeries<R>& b,
                        const Rational& t) {
    auto cmp = ps_compare(a, b, t);
    if (cmp.window && *cmp.window < t) return false; // window too small to certify
    return cmp.equal();
}

using QSeries = PuiseuxSeries<CycNum>;

// Coefficientwise complex conjugation (roots of unity: k -> n-k).
inline QSeries conj_series(const QSeries& a) {
    std::vector<std::pair<Rational, CycNum>> terms;
    for (const auto& [k, c] : a.coeffs()) terms.emplace_back(a.exponent_of(k), c.conj());
    return QSeries::from_terms(terms, a.cutoff(), a.denom());
}

} // namespace thetaq

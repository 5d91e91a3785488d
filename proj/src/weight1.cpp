#include "thetaq/weight1.hpp"

#include <array>
#include <functional>

#include "thetaq/characteristic.hpp"
#include "thetaq/kronecker.hpp"
#include "thetaq/theta.hpp"

namespace thetaq {

namespace {

std::vector<long long> divisors_of(long long n) {
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Base contribution of a divisor d, by variant. The chi3 bases are computed
// from the defining root-of-unity expressions (they reduce to +-6 and 0).
const CycNum& chi3_base(long long d, bool zeta6) {
    static const std::array<CycNum, 3> z3 = [] {
        CycNum factor = CycNum(-2) * CycNum::sqrt3() * CycNum::i();
        std::array<CycNum, 3> v;
        for (long long r = 0; r < 3; ++r)
            v[static_cast<std::size_t>(r)] =
                factor * (root_of_unity(3, r) - root_of_unity(3, -r));
        return v;
    }();
    static const std::array<CycNum, 6> z6 = [] {
        CycNum factor = CycNum(-2) * CycNum::sqrt3() * CycNum::i();
        std::array<CycNum, 6> v;
        for (long long r = 0; r < 6; ++r)
            v[static_cast<std::size_t>(r)] =
                factor * (root_of_unity(6, r) - root_of_unity(6, -r));
        return v;
    }();
    return zeta6 ? z6[static_cast<std::size_t>(d % 6)] : z3[static_cast<std::size_t>(d % 3)];
}

} // namespace

CycNum divisor_coeff(const DivisorSeriesSpec& spec, long long n) {
    if (n < 1) throw DomainError("divisor_coeff: index must be positive");
    CycNum sum;
    for (long long d : divisors_of(n)) {
        const long long codivisor = n / d;
        switch (spec.variant) {
        case DivisorVariant::quad4:
        case DivisorVariant::quad8:
            if (d % 2 == 0) continue; // these sums run over odd divisors only
            break;
        default:
            break;
        }
        if (spec.filter == DivisorFilter::d_odd && d % 2 == 0) continue;
        if (spec.filter == DivisorFilter::codivisor_odd && codivisor % 2 == 0) continue;

        CycNum base;
        switch (spec.variant) {
        case DivisorVariant::quad4:
            base = CycNum(Rational(4 * kronecker_symbol(-1, d)));
            break;
        case DivisorVariant::quad8:
            base = CycNum(Rational(2 * kronecker_symbol(-2, d)));
            break;
        case DivisorVariant::chi3_zeta3:
            base = chi3_base(d, false);
            break;
        case DivisorVariant::chi3_zeta6:
            base = chi3_base(d, true);
            break;
        }
        if (spec.weight == DivisorWeight::sign_d && d % 2 != 0) base = -base;
        if (spec.weight == DivisorWeight::sign_codivisor && codivisor % 2 != 0) base = -base;
        sum = sum + base;
    }
    return sum;
}

Rational outer_twist_factor(OuterTwist twist, long long n) {
    switch (twist) {
    case OuterTwist::none:
        return Rational(1);
    case OuterTwist::keep_odd:
        return Rational(n % 2 != 0 ? 1 : 0);
    case OuterTwist::keep_not_mult3:
        return Rational(n % 3 != 0 ? 1 : 0);
    case OuterTwist::alternate:
        return Rational(n % 2 == 0 ? 1 : -1);
    case OuterTwist::kron_neg1_on_odd:
        return Rational(n % 2 != 0 ? kronecker_symbol(-1, n) : 0);
    }
    return Rational(0);
}

QSeries weight1_series(const DivisorSeriesSpec& spec, const Rational& cutoff) {
    if (cutoff <= 0) throw DomainError("weight1_series: cutoff must be positive");
    std::vector<std::pair<Rational, CycNum>> terms;
    terms.emplace_back(Rational(0), CycNum(spec.constant_term));
    for (long long n = 1;; ++n) {
        Rational e = spec.exp_scale * n;
        if (e >= cutoff) break;
        Rational w = outer_twist_factor(spec.twist, n);
        if (w == 0) continue;
        terms.emplace_back(e, CycNum(w) * divisor_coeff(spec, n));
    }
    return QSeries::from_terms(terms, cutoff, to_long(rat_den(spec.exp_scale)));
}

QSeries theta3(const Rational& scale, const Rational& cutoff) {
    if (scale <= 0) throw DomainError("theta3: scale must be positive");
    DivisorSeriesSpec base{DivisorVariant::chi3_zeta3, DivisorFilter::all, DivisorWeight::one,
                           OuterTwist::none, Rational(1, 2), Rational(1)};
    return ps_rescale(weight1_series(base, cutoff / scale), scale);
}

namespace {

using CoeffFn = std::function<CycNum(long long)>;

VerifyReport compare_indexwise(std::string id, long long n_max,
                               const std::vector<CoeffFn>& forms) {
    VerifyReport r;
    r.id = std::move(id);
    r.pass = true;
    r.cutoff = Rational(n_max + 1);
    for (long long n = 1; n <= n_max; ++n) {
        CycNum ref = forms.front()(n);
        for (std::size_t j = 1; j < forms.size(); ++j) {
            ++r.compared_terms;
            CycNum v = forms[j](n);
            if (v != ref) {
                r.pass = false;
                r.first_mismatch = VerifyReport::Mismatch{Rational(n), ref.to_string(), v.to_string()};
                return r;
            }
        }
    }
    return r;
}

CycNum quad_coeff(DivisorVariant variant, long long n) {
    DivisorSeriesSpec s;
    s.variant = variant;
    return divisor_coeff(s, n);
}

} // namespace

std::vector<VerifyReport> verify_recogser_equivalences(long long n_max) {
    if (n_max < 1) throw DomainError("verify_recogser_equivalences: N_max must be >= 1");
    std::vector<VerifyReport> out;
    const CycNum I = CycNum::i();
    const CycNum s2 = CycNum::sqrt2();

    // (i): character form vs -4i sum_{odd d} i^d vs -2i sum_{all d} (i^d - (-i)^d)
    out.push_back(compare_indexwise(
        "recogser-i-alt", n_max,
        {[](long long n) { return quad_coeff(DivisorVariant::quad4, n); },
         [&](long long n) {
             CycNum s;
             for (long long d : divisors_of(n))
                 if (d % 2 != 0) s = s + root_of_unity(4, d);
             return CycNum(-4) * I * s;
         },
         [&](long long n) {
             CycNum s;
             for (long long d : divisors_of(n))
                 s = s + root_of_unity(4, d) - root_of_unity(4, -d);
             return CycNum(-2) * I * s;
         }}));

    // (ii): character form vs the zeta_8 difference and sum forms, t in {1,3}.
    // The sum form needs the (-1/d) weight its own use supplies: without it,
    // sum_{odd d|3}(zeta_8^d + zeta_8^-d) = 0 while the coefficient is 4.
    std::vector<CoeffFn> forms_ii = {
        [](long long n) { return quad_coeff(DivisorVariant::quad8, n); }};
    for (long long t : {1LL, 3LL}) {
        forms_ii.push_back([&, t](long long n) {
            CycNum s;
            for (long long d : divisors_of(n))
                if (d % 2 != 0) s = s + root_of_unity(8, t * d) - root_of_unity(8, -t * d);
            return CycNum(Rational(-kronecker_symbol(-2, t))) * s2 * I * s;
        });
        forms_ii.push_back([&, t](long long n) {
            CycNum s;
            for (long long d : divisors_of(n))
                if (d % 2 != 0)
                    s = s + CycNum(Rational(kronecker_symbol(-1, d))) *
                                (root_of_unity(8, t * d) + root_of_unity(8, -t * d));
            return CycNum(Rational(kronecker_symbol(2, t))) * s2 * s;
        });
    }
    out.push_back(compare_indexwise("recogser-ii-alt", n_max, forms_ii));

    // (iii): sum and difference with half the quad4 coefficient select the
    // divisor classes 1,7 mod 8 resp. 3,5 mod 8
    out.push_back(compare_indexwise(
        "recogser-iii-classes", n_max,
        {[](long long n) {
             return quad_coeff(DivisorVariant::quad8, n) +
                    CycNum(Rational(1, 2)) * quad_coeff(DivisorVariant::quad4, n);
         },
         [](long long n) {
             long long s = 0;
             for (long long d : divisors_of(n)) {
                 if (d % 2 == 0) continue;
                 if (d % 8 == 1) s += 4;
                 if (d % 8 == 7) s -= 4;
             }
             return CycNum(Rational(s));
         }}));
    out.push_back(compare_indexwise(
        "recogser-iii-classes-diff", n_max,
        {[](long long n) {
             return quad_coeff(DivisorVariant::quad8, n) -
                    CycNum(Rational(1, 2)) * quad_coeff(DivisorVariant::quad4, n);
         },
         [](long long n) {
             long long s = 0;
             for (long long d : divisors_of(n)) {
                 if (d % 2 == 0) continue;
                 if (d % 8 == 3) s += 4;
                 if (d % 8 == 5) s -= 4;
             }
             return CycNum(Rational(s));
         }}));

    // (iv): root-of-unity form vs the character form 6*(d/3)
    out.push_back(compare_indexwise(
        "recogser-iv-alt", n_max,
        {[](long long n) { return quad_coeff(DivisorVariant::chi3_zeta3, n); },
         [](long long n) {
             long long s = 0;
             for (long long d : divisors_of(n)) s += 6 * kronecker_symbol(d, 3);
             return CycNum(Rational(s));
         }}));

    // prime-power invariance: xN by 2^k (parts i, ii) and 3^k (part iv), k <= 3
    const long long inv_max = std::min<long long>(n_max, 250);
    auto invariance = [&](std::string id, DivisorVariant v, long long p) {
        VerifyReport r;
        r.id = std::move(id);
        r.pass = true;
        r.cutoff = Rational(inv_max + 1);
        for (long long n = 1; n <= inv_max; ++n) {
            CycNum ref = quad_coeff(v, n);
            long long m = n;
            for (int k = 1; k <= 3; ++k) {
                m *= p;
                ++r.compared_terms;
                CycNum val = quad_coeff(v, m);
                if (val != ref) {
                    r.pass = false;
                    r.first_mismatch =
                        VerifyReport::Mismatch{Rational(m), ref.to_string(), val.to_string()};
                    return r;
                }
            }
        }
        return r;
    };
    out.push_back(invariance("recogser-i-pow2", DivisorVariant::quad4, 2));
    out.push_back(invariance("recogser-ii-pow2", DivisorVariant::quad8, 2));
    out.push_back(invariance("recogser-iv-pow3", DivisorVariant::chi3_zeta3, 3));
    return out;
}

std::vector<VerifyReport> verify_pow2twist(const Rational& cutoff) {
    if (cutoff <= 0) throw DomainError("verify_pow2twist: cutoff must be positive");
    DivisorSeriesSpec q4{DivisorVariant::quad4, DivisorFilter::all, DivisorWeight::one,
                         OuterTwist::none, Rational(1, 2), Rational(1)};
    DivisorSeriesSpec q8 = q4;
    q8.variant = DivisorVariant::quad8;
    QSeries s1 = weight1_series(q4, cutoff);
    QSeries s2 = weight1_series(q8, cutoff);

    auto th = [&](long long num, long long den = 1) {
        return theta_const(Characteristic(Rational(0), Rational(0)), Rational(num, den), cutoff);
    };
    auto th10 = [&](long long num) {
        return theta_const(Characteristic(Rational(1), Rational(0)), Rational(num), cutoff);
    };
    auto th01 = [&](long long num) {
        return theta_const(Characteristic(Rational(0), Rational(1)), Rational(num), cutoff);
    };
    std::function<bool(long long)> odd = [](long long n) { return n % 2 != 0; };
    std::function<CycNum(long long)> alt = [](long long n) {
        return CycNum(Rational(n % 2 == 0 ? 1 : -1));
    };
    std::function<CycNum(long long)> kron = [](long long n) {
        return CycNum(Rational(kronecker_symbol(-1, n)));
    };

    std::vector<VerifyReport> out;
    out.push_back(make_report(
        "pow2twist-i-odd",
        ps_compare(ps_restrict(s1, odd), ps_sub(ps_pow(th(1), 2), ps_pow(th(2), 2)))));
    out.push_back(make_report(
        "pow2twist-i-alt",
        ps_compare(ps_twist(s1, alt),
                   ps_sub(ps_mul(QSeries::constant(CycNum(2)), ps_pow(th(2), 2)),
                          ps_pow(th(1), 2)))));
    out.push_back(make_report("pow2twist-ii-odd",
                              ps_compare(ps_restrict(s2, odd), ps_mul(th(2), th10(4)))));
    out.push_back(make_report("pow2twist-ii-alt",
                              ps_compare(ps_twist(s2, alt), ps_mul(th(2), th01(1)))));
    out.push_back(make_report(
        "pow2twist-iii-kron",
        ps_compare(ps_twist(ps_restrict(s2, odd), kron), ps_mul(th10(4), th01(2)))));
    out.push_back(make_report("pow2twist-iii-fix",
                              ps_compare(ps_twist(ps_restrict(s1, odd), kron),
                                         ps_restrict(s1, odd))));
    return out;
}

std::vector<VerifyReport> verify_pow3twist(const Rational& cutoff) {
    if (cutoff <= 0) throw DomainError("verify_pow3twist: cutoff must be positive");
    DivisorSeriesSpec base{DivisorVariant::chi3_zeta3, DivisorFilter::all, DivisorWeight::one,
                           OuterTwist::none, Rational(1, 2), Rational(1)};
    QSeries t = weight1_series(base, cutoff);
    auto t3 = [&](long long s) { return theta3(Rational(s), cutoff); };
    auto scaled = [&](long long c, const QSeries& a) {
        return ps_mul(QSeries::constant(CycNum(c)), a);
    };
    auto dseries = [&](DivisorVariant v, DivisorFilter f, DivisorWeight w, Rational c0) {
        DivisorSeriesSpec s{v, f, w, OuterTwist::none, Rational(1, 2), std::move(c0)};
        return weight1_series(s, cutoff);
    };
    std::function<bool(long long)> odd = [](long long n) { return n % 2 != 0; };
    std::function<bool(long long)> not3 = [](long long n) { return n % 3 != 0; };
    std::function<CycNum(long long)> alt = [](long long n) {
        return CycNum(Rational(n % 2 == 0 ? 1 : -1));
    };
    using V = DivisorVariant;
    using F = DivisorFilter;
    using W = DivisorWeight;

    std::vector<VerifyReport> out;
    out.push_back(make_report("pow3twist-i-odd",
                              ps_compare(ps_restrict(t, odd), ps_sub(t3(1), t3(4)))));
    out.push_back(make_report("pow3twist-i-alt",
                              ps_compare(ps_twist(t, alt), ps_sub(scaled(2, t3(4)), t3(1)))));
    out.push_back(make_report("pow3twist-i-no3",
                              ps_compare(ps_restrict(t, not3), ps_sub(t3(1), t3(3)))));
    out.push_back(make_report("pow3twist-ii-dodd",
                              ps_compare(dseries(V::chi3_zeta3, F::d_odd, W::one, Rational(2)),
                                         ps_add(t3(1), t3(2)))));
    out.push_back(make_report(
        "pow3twist-ii-codd",
        ps_compare(dseries(V::chi3_zeta3, F::codivisor_odd, W::one, Rational(0)),
                   ps_sub(t3(1), t3(2)))));
    out.push_back(make_report(
        "pow3twist-iii-sgnd",
        ps_compare(dseries(V::chi3_zeta3, F::all, W::sign_d, Rational(-3)),
                   ps_sub(ps_neg(t3(1)), scaled(2, t3(2))))));
    // (-1)^(N/d) weight: subtracting twice the codivisor-odd restriction
    // gives 2*Theta_3(2tau) - Theta_3(tau).
    out.push_back(make_report(
        "pow3twist-iii-sgncd",
        ps_compare(dseries(V::chi3_zeta3, F::all, W::sign_codivisor, Rational(1)),
                   ps_sub(scaled(2, t3(2)), t3(1)))));
    out.push_back(make_report("pow3twist-iii-z6",
                              ps_compare(dseries(V::chi3_zeta6, F::all, W::one, Rational(3)),
                                         ps_add(t3(1), scaled(2, t3(2))))));
    out.push_back(make_report("pow3twist-iv-dodd",
                              ps_compare(dseries(V::chi3_zeta6, F::d_odd, W::one, Rational(2)),
                                         dseries(V::chi3_zeta3, F::d_odd, W::one, Rational(2)))));
    out.push_back(make_report(
        "pow3twist-iv-codd",
        ps_compare(dseries(V::chi3_zeta6, F::codivisor_odd, W::one, Rational(0)),
                   ps_sub(ps_add(t3(1), t3(2)), scaled(2, t3(4))))));
    return out;
}

} // namespace thetaq

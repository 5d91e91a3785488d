#include "thetaq/theta.hpp"

#include <cmath>

#include "thetaq/ylaurent.hpp"

namespace thetaq {

namespace {

void require_upper_half_plane(std::complex<double> tau) {
    if (!(tau.imag() > 0)) throw DomainError("tau must lie in the upper half-plane");
}

} // namespace

QSeries theta_const(const Characteristic& ch, const Rational& scale, const Rational& cutoff) {
    if (scale <= 0) throw DomainError("theta_const: scale must be positive");
    if (cutoff <= 0) throw DomainError("theta_const: cutoff must be positive");
    std::vector<std::pair<Rational, CycNum>> terms;
    auto push = [&](long long n) {
        Rational half_index = Rational(n) + ch.eps() / 2; // n + eps/2
        Rational e = scale * half_index * half_index / 2;
        if (e >= cutoff) return false;
        terms.emplace_back(e, cyc_e(half_index * ch.delta() / 2));
        return true;
    };
    // |n + eps/2| is monotone on each side of n = 0, so scan outward until
    // the exponent leaves the window.
    for (long long n = 0; push(n); ++n) {}
    for (long long n = -1; push(n); --n) {}
    return QSeries::from_terms(terms, cutoff);
}

QSeries theta_deriv_reduced(const Characteristic& ch, const Rational& scale,
                            const Rational& cutoff) {
    if (scale <= 0) throw DomainError("theta_deriv_reduced: scale must be positive");
    if (cutoff <= 0) throw DomainError("theta_deriv_reduced: cutoff must be positive");
    const CycNum two_i = CycNum(Rational(2)) * CycNum::i();
    std::vector<std::pair<Rational, CycNum>> terms;
    auto push = [&](long long n) {
        Rational half_index = Rational(n) + ch.eps() / 2;
        Rational e = scale * half_index * half_index / 2;
        if (e >= cutoff) return false;
        terms.emplace_back(e, two_i * CycNum(half_index) * cyc_e(half_index * ch.delta() / 2));
        return true;
    };
    for (long long n = 0; push(n); ++n) {}
    for (long long n = -1; push(n); --n) {}
    return QSeries::from_terms(terms, cutoff);
}

QSeries theta_const_product(const Characteristic& ch, const Rational& cutoff) {
    if (cutoff <= 0) throw DomainError("theta_const_product: cutoff must be positive");
    const Rational& eps = ch.eps();
    const Rational& delta = ch.delta();
    QSeries acc = QSeries::from_terms(
        {{eps * eps / 8, cyc_e(eps * delta / 4)}}, cutoff);
    CycNum plus = cyc_e(delta / 2);
    CycNum minus = cyc_e(Rational(-delta) / 2);
    // Factors with n > cutoff + 1 only touch exponents >= cutoff.
    long long nmax = to_long(rational_floor(cutoff)) + 1;
    for (long long n = 1; n <= nmax; ++n) {
        QSeries f1 = QSeries::from_terms({{Rational(0), CycNum(1)}, {Rational(n), CycNum(-1)}},
                                         std::nullopt);
        QSeries f2 = QSeries::from_terms({{Rational(0), CycNum(1)}, {Rational(n) - (1 - eps) / 2, plus}},
                                         std::nullopt);
        QSeries f3 = QSeries::from_terms({{Rational(0), CycNum(1)}, {Rational(n) - (1 + eps) / 2, minus}},
                                         std::nullopt);
        acc = ps_mul(ps_mul(acc, f1), ps_mul(f2, f3));
        if (acc.support_empty()) break; // the [1;1]-type vanishing
    }
    return acc.truncated(cutoff);
}

VerifyReport jacobi_triple_product_check(const Rational& x_cutoff) {
    if (x_cutoff <= 0) throw DomainError("triple product check: cutoff must be positive");
    using YSeries = PuiseuxSeries<YLaurent>;

    std::vector<std::pair<Rational, YLaurent>> sum_terms;
    for (long long n = 0;; ++n) {
        Rational e = Rational(n * n, 2);
        if (e >= x_cutoff) break;
        sum_terms.emplace_back(e, YLaurent::y_power(n));
        if (n > 0) sum_terms.emplace_back(e, YLaurent::y_power(-n));
    }
    YSeries lhs = YSeries::from_terms(sum_terms, x_cutoff, 2);

    YSeries rhs = YSeries::from_terms({{Rational(0), YLaurent(1)}}, x_cutoff, 2);
    long long nmax = to_long(rational_floor(x_cutoff)) + 1;
    for (long long n = 1; n <= nmax; ++n) {
        YSeries f1 = YSeries::from_terms(
            {{Rational(0), YLaurent(1)}, {Rational(n), YLaurent(-1)}}, std::nullopt);
        YSeries f2 = YSeries::from_terms(
            {{Rational(0), YLaurent(1)}, {Rational(2 * n - 1, 2), YLaurent::y_power(1)}},
            std::nullopt);
        YSeries f3 = YSeries::from_terms(
            {{Rational(0), YLaurent(1)}, {Rational(2 * n - 1, 2), YLaurent::y_power(-1)}},
            std::nullopt);
        rhs = ps_mul(ps_mul(rhs, f1), ps_mul(f2, f3));
    }
    return make_report("jacobi-triple-product", ps_compare(lhs, rhs.truncated(x_cutoff)));
}

// --- numeric -------------------------------------------------------------
//
// The two-variable sums are accumulated in extended precision: the lattice
// shifts z -> z + a*tau + b blow the comparison factors up to |q|^(-a^2/2),
// and plain doubles would leave roundoff above the 1e-9 residual targets.

namespace {

using CLD = std::complex<long double>;
constexpr long double kPiL = 3.14159265358979323846264338328L;

CLD theta_sum_ld(long double eps, long double delta, CLD tau, CLD z, long double tol,
                 bool derivative) {
    if (!(tol > 0)) throw DomainError("tolerance must be positive");
    const CLD I(0, 1);
    auto term = [&](long long n) {
        long double a = n + eps / 2;
        CLD v = std::exp(kPiL * I * (a * a * tau + 2.0L * a * (z + delta / 2)));
        return derivative ? 2.0L * kPiL * I * a * v : v;
    };
    // Once |n + eps/2| * Im(tau) dominates |Im z| the moduli decay at least
    // geometrically with ratio exp(-pi Im tau), so stopping below tol/20
    // leaves a tail under tol/10 on each side.
    long double safe = std::abs(z.imag()) / tau.imag() + 2.0L;
    CLD s = 0;
    for (long long n = 0;; ++n) {
        CLD t = term(n);
        s += t;
        if (n > safe && std::abs(t) < tol / 20) break;
        if (n > 2000000) throw DomainError("theta numeric sum does not stabilize");
    }
    for (long long n = -1;; --n) {
        CLD t = term(n);
        s += t;
        if (-n > safe && std::abs(t) < tol / 20) break;
        if (n < -2000000) throw DomainError("theta numeric sum does not stabilize");
    }
    return s;
}

CLD to_ld(std::complex<double> v) { return {v.real(), v.imag()}; }

} // namespace

std::complex<double> theta_sum_numeric(double eps, double delta, std::complex<double> tau,
                                       std::complex<double> z, double tol) {
    require_upper_half_plane(tau);
    CLD s = theta_sum_ld(eps, delta, to_ld(tau), to_ld(z), tol / 100, false);
    return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

std::complex<double> theta_deriv_sum_numeric(double eps, double delta, std::complex<double> tau,
                                             std::complex<double> z, double tol) {
    require_upper_half_plane(tau);
    CLD s = theta_sum_ld(eps, delta, to_ld(tau), to_ld(z), tol / 100, true);
    return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

std::complex<double> theta_numeric(const Characteristic& ch, std::complex<double> tau,
                                   std::complex<double> z, double tol) {
    return theta_sum_numeric(to_double(ch.eps()), to_double(ch.delta()), tau, z, tol);
}

std::complex<double> theta_deriv_numeric(const Characteristic& ch, std::complex<double> tau,
                                         std::complex<double> z, double tol) {
    return theta_deriv_sum_numeric(to_double(ch.eps()), to_double(ch.delta()), tau, z, tol);
}

double TransformResiduals::max_residual() const {
    double m = pseudo_periodicity;
    m = std::max(m, char_periodicity);
    m = std::max(m, char_shift);
    m = std::max(m, parity_const);
    return std::max(m, parity_deriv);
}

double char_shift_residual(const Characteristic& ch, std::complex<double> tau,
                           std::complex<double> z, double a, double b, double tol) {
    require_upper_half_plane(tau);
    const CLD I(0, 1);
    const CLD taul = to_ld(tau), zl = to_ld(z);
    const long double al = a, bl = b, toll = tol / 100;
    long double eps = to_double(ch.eps()), delta = to_double(ch.delta());
    CLD lhs = theta_sum_ld(eps + al, delta + bl, taul, zl, toll, false);
    CLD factor = std::exp(2.0L * kPiL * I * (al * (bl + delta) / 4.0L)) *
                 std::exp(kPiL * I * al * zl) * std::exp(kPiL * I * taul * al * al / 4.0L);
    CLD rhs = factor * theta_sum_ld(eps, delta, taul, zl + (al * taul + bl) / 2.0L, toll, false);
    return static_cast<double>(std::abs(lhs - rhs));
}

TransformResiduals check_transformations(const Characteristic& ch, std::complex<double> tau,
                                         std::complex<double> z, int a, int b, double tol) {
    require_upper_half_plane(tau);
    const CLD I(0, 1);
    const CLD taul = to_ld(tau), zl = to_ld(z);
    const long double toll = tol / 100;
    long double eps = to_double(ch.eps()), delta = to_double(ch.delta());
    TransformResiduals r;

    // z -> z + a*tau + b, integral a and b. The comparison multiplies the
    // shifted side by the inverse exponential factor: the identity form is
    // unchanged, but both compared values stay O(1) (the raw sides grow like
    // |q|^(-a^2/2), which would drown a 1e-9 residual in roundoff at a = 2).
    {
        CLD lhs = theta_sum_ld(eps, delta, taul, zl + CLD(a) * taul + CLD(b), toll, false);
        CLD inv_factor = std::exp(-2.0L * kPiL * I * ((b * eps - a * delta) / 2.0L)) *
                         std::exp(2.0L * kPiL * I * CLD(a) * zl) *
                         std::exp(kPiL * I * taul * CLD(a * a));
        r.pseudo_periodicity = static_cast<double>(
            std::abs(inv_factor * lhs - theta_sum_ld(eps, delta, taul, zl, toll, false)));
    }
    // characteristics shifted by even integers
    {
        CLD lhs = theta_sum_ld(eps + 2 * a, delta + 2 * b, taul, zl, toll, false);
        CLD factor = std::exp(2.0L * kPiL * I * (b * eps / 2.0L));
        r.char_periodicity =
            static_cast<double>(std::abs(lhs - factor * theta_sum_ld(eps, delta, taul, zl, toll, false)));
    }
    // the general shift relation with genuinely real shifts
    r.char_shift = std::max(char_shift_residual(ch, tau, z, a + 0.5, b + 0.5, tol),
                            char_shift_residual(ch, tau, z, a, b, tol));
    // parity
    {
        CLD lhs = theta_sum_ld(-eps, -delta, taul, zl, toll, false);
        r.parity_const =
            static_cast<double>(std::abs(lhs - theta_sum_ld(eps, delta, taul, -zl, toll, false)));
        CLD dl = theta_sum_ld(-eps, -delta, taul, zl, toll, true);
        r.parity_deriv =
            static_cast<double>(std::abs(dl + theta_sum_ld(eps, delta, taul, -zl, toll, true)));
    }
    return r;
}

double zero_location_residual(const Characteristic& ch, std::complex<double> tau, double tol) {
    require_upper_half_plane(tau);
    if (ch.delta() > 1)
        throw DomainError("zero_location_residual: needs eps, delta in (-1, 1]");
    std::complex<double> z0 = (1.0 - to_double(ch.eps())) / 2.0 * tau +
                              std::complex<double>((1.0 - to_double(ch.delta())) / 2.0, 0);
    return std::abs(theta_numeric(ch, tau, z0, tol));
}

} // namespace thetaq

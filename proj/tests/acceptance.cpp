// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit code 0 iff everything holds.

#include <chrono>
#include <complex>
#include <cstdio>
#include <random>
#include <set>
#include <vector>

#include "thetaq/eta.hpp"
#include "thetaq/logderiv.hpp"
#include "thetaq/numeric.hpp"
#include "thetaq/parser.hpp"
#include "thetaq/theta.hpp"
#include "thetaq/verify.hpp"
#include "thetaq/weight1.hpp"

using namespace thetaq;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& what) {
    std::printf("criterion %2d: %s  %s\n", criterion, pass ? "PASS" : "FAIL", what.c_str());
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Characteristic ch(long long en, long long ed, long long dn, long long dd) {
    return Characteristic(Rational(en, ed), Rational(dn, dd));
}

// 1. Full registry at cutoffs 8 and 12, with the derivative tally.
void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    VerifySummary s8 = verify_all(Rational(8), 8);
    double t8 = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    VerifySummary s12 = verify_all(Rational(12), 8);
    double t12 = seconds_since(t0);

    int quarter = 0, third = 0;
    std::set<std::pair<std::string, std::string>> chars;
    for (const auto& r : registry()) {
        if (r.lhs->kind != Expr::Kind::theta_deriv) continue;
        chars.insert({to_string(r.lhs->ch->eps()), to_string(r.lhs->ch->delta())});
        if (r.family == Family::quarter) ++quarter;
        if (r.family == Family::third) ++third;
    }
    bool tally = quarter == 22 && third == 16 && chars.size() == 39 && registry().size() >= 75;
    bool pass = s8.all_pass() && s12.all_pass() && tally && t8 < 60 && t12 < 600;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "registry: %d records pass at cutoff 8 (%.2fs) and 12 (%.2fs); "
                  "39 derivative formulas = 1 classical + 22 quarter-family + 16 third-family",
                  s8.passed, t8, t12);
    report(1, pass, buf);
    if (!pass)
        for (const auto& r : s8.records)
            if (!r.pass) std::printf("    %s\n", r.describe().c_str());
}

// 2. The three weight-1 series against theta products and lattice counts,
//    N <= 200, zero tolerance.
void criterion_2() {
    const Rational cut(201, 2);
    bool pass = true;
    auto th00 = [&](long long s) { return theta_const(ch(0, 1, 0, 1), Rational(s), cut); };
    auto th10 = [&](long long s) { return theta_const(ch(1, 1, 0, 1), Rational(s), cut); };
    DivisorSeriesSpec q4, q8, c3;
    q8.variant = DivisorVariant::quad8;
    c3.variant = DivisorVariant::chi3_zeta3;
    QSeries s4 = weight1_series(q4, cut), s8 = weight1_series(q8, cut),
            s3 = weight1_series(c3, cut);
    pass = pass && series_equal_below(s4, ps_mul(th00(1), th00(1)), cut);
    pass = pass && series_equal_below(s8, ps_mul(th00(1), th00(2)), cut);
    pass = pass && series_equal_below(
                       s3, ps_add(ps_mul(th00(1), th00(3)), ps_mul(th10(1), th10(3))), cut);

    auto count = [](long long n, int kind) {
        long long c = 0, r = 1;
        while (r * r <= 4 * n) ++r;
        for (long long a = -r; a <= r; ++a)
            for (long long b = -r; b <= r; ++b) {
                long long v = kind == 0   ? a * a + b * b
                              : kind == 1 ? a * a + 2 * b * b
                                          : a * a - a * b + b * b;
                if (v == n) ++c;
            }
        return c;
    };
    for (long long n = 1; n <= 200 && pass; ++n) {
        pass = pass && divisor_coeff(q4, n) == CycNum(Rational(count(n, 0)));
        pass = pass && divisor_coeff(q8, n) == CycNum(Rational(count(n, 1)));
        pass = pass && divisor_coeff(c3, n) == CycNum(Rational(count(n, 2)));
    }
    report(2, pass, "weight-1 series vs theta products vs lattice counts, N <= 200, exact");
}

// 3. All alternative coefficient formulas for N <= 1000; prime-power invariance.
void criterion_3() {
    auto reports = verify_recogser_equivalences(1000);
    bool pass = all_pass(reports);
    report(3, pass,
           "alternative divisor-sum formulas pairwise agree to N = 1000; x2^k/x3^k invariance");
    if (!pass)
        for (const auto& r : reports)
            if (!r.pass) std::printf("    %s\n", r.describe().c_str());
}

// 4. The 6 + 10 restriction/twist assertions as exact series identities to q^50.
void criterion_4() {
    auto two = verify_pow2twist(Rational(50));
    auto three = verify_pow3twist(Rational(50));
    bool pass = two.size() == 6 && three.size() == 10 && all_pass(two) && all_pass(three);
    for (const auto& r : two)
        if (r.compared_terms == 0) pass = false;
    for (const auto& r : three)
        if (r.compared_terms == 0) pass = false;
    report(4, pass, "6 quad-series and 10 Theta_3 restriction/twist identities below q^50");
    for (const auto& r : two)
        if (!r.pass) std::printf("    %s\n", r.describe().c_str());
    for (const auto& r : three)
        if (!r.pass) std::printf("    %s\n", r.describe().c_str());
}

// 5. Bivariate triple product below x^12.
void criterion_5() {
    auto t0 = std::chrono::steady_clock::now();
    VerifyReport r = jacobi_triple_product_check(Rational(12));
    double dt = seconds_since(t0);
    bool pass = r.pass && r.compared_terms > 0 && dt < 10;
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "bivariate triple product, every y-coefficient below x^12 (%.2fs)", dt);
    report(5, pass, buf);
}

// 6. Series route vs product route for every registry characteristic, cutoff 10.
void criterion_6() {
    bool pass = true;
    for (const auto& c : registry_characteristics()) {
        auto cmp = ps_compare(theta_const(c, Rational(1), Rational(10)),
                              theta_const_product(c, Rational(10)));
        if (!cmp.equal() || !cmp.window || *cmp.window < Rational(10)) {
            pass = false;
            std::printf("    series/product mismatch at %s\n", c.to_string().c_str());
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "defining series = triple product below q^10 for all %zu characteristics",
                  registry_characteristics().size());
    report(6, pass, buf);
}

// 7. Log-derivative closed forms against derivative/constant, cutoff 8.
void criterion_7() {
    bool pass = true;
    Characteristic vanishing = ch(1, 1, 1, 1);
    for (const auto& c : registry_characteristics()) {
        if (c == vanishing) continue;
        auto cmp = ps_compare(logderiv_reduced(c, Rational(8)), logderiv_oracle(c, Rational(8)));
        if (!cmp.equal() || *cmp.window < Rational(8)) {
            pass = false;
            std::printf("    log-derivative mismatch at %s\n", c.to_string().c_str());
        }
    }
    report(7, pass,
           "closed-form log-derivatives equal derivative * constant^(-1) below q^8 "
           "for every characteristic with nonvanishing constant");
}

// 8. The eta layer at cutoff 8, plus the explicit eta^3 Fourier coefficients to n = 21.
void criterion_8() {
    bool pass = true;
    auto need = [&](const char* id) {
        VerifyReport r = verify_id(id, Rational(8));
        if (!r.pass) {
            pass = false;
            std::printf("    %s\n", r.describe().c_str());
        }
    };
    for (const char* id :
         {"intchar-10", "intchar-01", "intchar-00", "clasder-eta", "etaid-1", "etaid-2",
          "foureta-1", "foureta-2", "foureta-3", "const-01/2-eta", "const-1/21-eta",
          "const-1/20-eta", "const-11/2-eta", "const-11/3-eta", "const-01/3-eta",
          "const-1/31-eta", "const-1/30-eta", "const-12/3-eta", "const-02/3-eta",
          "const-2/31-eta", "const-2/30-eta", "theta3-eta", "const-01/2-4tau",
          "const-1/20-tau4", "const-11/2-ratio", "const-11/3-9tau", "eta3-sum"})
        need(id);

    // eta^3 = sum n*(-4/n) q^(n^2/8) through n = 21 (window just past 441/8)
    const Rational cut(56);
    QSeries lhs = ps_pow(eta_series(Rational(1), cut), 3);
    QSeries rhs = explicit_weight32_sum(WeightChar::kron_neg4, Rational(1, 8), cut);
    if (!series_equal_below(lhs, rhs, cut)) pass = false;
    report(8, pass,
           "eta layer: integral constants, -2*eta^3, eta identities, explicit Fourier sums, "
           "constant-level eta expressions; eta^3 coefficients through n = 21");
}

// 9. Numeric cross-validation of all records, transformation laws, zero locations,
//    and pi-consistency of the reduction.
void criterion_9() {
    bool pass = true;
    const double kPi = 3.14159265358979323846;
    std::vector<std::complex<double>> taus{{0, 1}, {0.1, 0.8}, {-0.4, 1.3}};
    for (const auto& rec : registry()) {
        for (auto tau : taus) {
            EvalPoint p{tau, 1e-12};
            auto r = cross_check_identity(rec, p, Rational(8));
            if (r.lhs_rhs_residual >= 1e-9 || r.series_vs_direct_residual >= 1e-9) {
                pass = false;
                std::printf("    numeric residual too large: %s at tau=(%g,%g): %g / %g\n",
                            rec.id.c_str(), tau.real(), tau.imag(), r.lhs_rhs_residual,
                            r.series_vs_direct_residual);
            }
        }
        // pi-reduction consistency at tau = i for derivative records
        if (rec.lhs->kind == Expr::Kind::theta_deriv) {
            std::complex<double> direct =
                theta_deriv_numeric(*rec.lhs->ch, {0, 1}, 0, 1e-12);
            std::complex<double> reduced =
                ps_eval(eval_expr(rec.rhs, Rational(8)), EvalPoint{{0, 1}, 1e-12}).value;
            if (std::abs(direct - kPi * reduced) >= 1e-8) {
                pass = false;
                std::printf("    pi-consistency failed for %s\n", rec.id.c_str());
            }
        }
    }

    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> unif(-2, 2);
    std::uniform_int_distribution<int> ab(-2, 2);
    const auto& chars = registry_characteristics();
    for (int j = 0; j < 100; ++j) {
        const Characteristic& c = chars[rng() % chars.size()];
        std::complex<double> tau(unif(rng) / 4, 0.8 + 0.3 * std::abs(unif(rng)));
        std::complex<double> z(unif(rng) / 4, unif(rng) / 4);
        TransformResiduals tr = check_transformations(c, tau, z, ab(rng), ab(rng), 1e-12);
        double shift = char_shift_residual(c, tau, z, unif(rng), unif(rng), 1e-12);
        if (tr.max_residual() >= 1e-9 || shift >= 1e-9) {
            pass = false;
            std::printf("    transformation residual too large at %s\n", c.to_string().c_str());
        }
    }
    for (int j = 0; j < 20;) {
        const Characteristic& c = chars[rng() % chars.size()];
        if (c.delta() > 1) continue; // the zero-location lemma needs delta in (-1,1]
        ++j;
        std::complex<double> tau(unif(rng) / 4, 0.9 + 0.2 * std::abs(unif(rng)));
        if (zero_location_residual(c, tau, 1e-12) >= 1e-8) {
            pass = false;
            std::printf("    zero-location residual too large at %s\n", c.to_string().c_str());
        }
    }
    report(9, pass,
           "numeric residuals < 1e-9 for all records at three points; transformation laws "
           "over 100 random samples; zero locations; pi-consistency at tau = i");
}

// 10. Byte-identical JSON reports for 1 and 8 workers.
void criterion_10() {
    std::string one = summary_to_json(verify_all(Rational(8), 1));
    std::string eight = summary_to_json(verify_all(Rational(8), 8));
    report(10, one == eight, "verify_all JSON is byte-identical for 1 and 8 workers");
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (g_failures == 0) {
        std::printf("acceptance: all criteria pass\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return 1;
}

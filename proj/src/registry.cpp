#include "thetaq/registry.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace thetaq {

const char* family_name(Family f) {
    switch (f) {
    case Family::classical: return "classical";
    case Family::quarter: return "quarter";
    case Family::third: return "third";
    case Family::constant_level: return "constant-level";
    case Family::series_level: return "series-level";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    for (Family f : {Family::classical, Family::quarter, Family::third, Family::constant_level,
                     Family::series_level})
        if (name == family_name(f)) return f;
    throw DomainError("unknown family tag: " + name);
}

namespace {

Characteristic cc(long long en, long long ed, long long dn, long long dd) {
    return Characteristic(Rational(en, ed), Rational(dn, dd));
}

ExprPtr k(long long v) { return scalar_f(CycNum(Rational(v))); }

std::vector<IdentityRecord> build_registry() {
    std::vector<IdentityRecord> recs;
    const CycNum I = CycNum::i();
    const CycNum S2 = CycNum::sqrt2();
    const CycNum S3 = CycNum::sqrt3();
    const CycNum half(Rational(1, 2));
    const CycNum quarter(Rational(1, 4));
    const CycNum third(Rational(1, 3));
    const CycNum m_s3_over_3 = -(S3 * third.rational_value()); // -1/sqrt(3) = -sqrt(3)/3
    const CycNum i_half = I * half;
    const CycNum i_quarter = I * quarter;
    const CycNum i_third = I * third;
    const CycNum one_plus_i = CycNum(1) + I;
    const CycNum one_minus_i = CycNum(1) - I;

    auto th = [](const Characteristic& ch, Rational s = Rational(1)) { return theta_c(ch, s); };
    auto t3 = [](long long p, long long q = 1) { return theta3_f(Rational(p, q)); };
    auto et = [](long long p, long long q = 1) { return eta_f(Rational(p, q)); };
    auto sq = [](const ExprPtr& e) { return pow_f(e, 2); };

    const Characteristic c00 = cc(0, 1, 0, 1);
    const Characteristic c01 = cc(0, 1, 1, 1);
    const Characteristic c10 = cc(1, 1, 0, 1);

    auto theta00 = [&](long long p, long long q = 1) { return th(c00, Rational(p, q)); };
    auto theta10 = [&](long long p, long long q = 1) { return th(c10, Rational(p, q)); };
    auto theta01 = [&](long long p, long long q = 1) { return th(c01, Rational(p, q)); };

    // A derivative record: theta'[ch](tau,0)/pi = scalar * theta[ch](tau,0) * combo.
    auto drec = [&](const char* id, Family fam, const Characteristic& ch, const CycNum& scalar,
                    const ExprPtr& combo, std::string note = "") {
        ExprPtr rhs = scalar_f(scalar) * (th(ch) * combo);
        recs.push_back({id, fam,
                        "derivative evaluation for theta" + ch.to_string() + "'(tau,0)/pi",
                        theta_d(ch), rhs, std::move(note)});
    };

    // --- classical ---------------------------------------------------------
    recs.push_back({"clasder", Family::classical,
                    "derivative formula: Dtheta[1;1] as the product of the three integral "
                    "theta constants",
                    theta_d(cc(1, 1, 1, 1)),
                    k(-1) * (theta00(1) * theta01(1) * theta10(1)), ""});
    recs.push_back({"clasder-eta", Family::classical,
                    "derivative formula: Dtheta[1;1] = -2*eta(tau)^3",
                    theta_d(cc(1, 1, 1, 1)), k(-2) * pow_f(et(1), 3), ""});

    // --- quarter family (denominators 2 and 4) ------------------------------
    drec("M-thm1", Family::quarter, cc(1, 1, 1, 2), CycNum(-1), sq(theta00(2)));
    drec("M-thm2-plus", Family::quarter, cc(1, 1, 1, 4), CycNum(-1),
         theta00(4) * (scalar_f(S2) * theta00(2) - theta00(4)),
         "the constant pi*i*(1+zeta(8,3))/(1-zeta(8,3)) equals -pi*(sqrt(2)-1), so "
         "delta=1/4 takes the minus sign; statements pairing it with plus have the "
         "two branches swapped");
    drec("M-thm2-minus", Family::quarter, cc(1, 1, 3, 4), CycNum(-1),
         theta00(4) * (scalar_f(S2) * theta00(2) + theta00(4)),
         "delta=3/4 gives beta=zeta(8,1) and constant -pi*(sqrt(2)+1), hence the plus sign");

    drec("eq-01/2", Family::quarter, cc(0, 1, 1, 2), CycNum(-1),
         sq(theta00(1)) - sq(theta00(2)),
         "the log-derivative expansion of theta[0;1/2] starts with -4q^(1/2), fixing the "
         "overall sign at -1; the identity is sometimes printed with the opposite sign");
    drec("eq-1/21", Family::quarter, cc(1, 2, 1, 1), i_half, sq(theta00(1, 2)));
    drec("eq-1/20", Family::quarter, cc(1, 2, 0, 1), i_half,
         k(2) * sq(theta00(1)) - sq(theta00(1, 2)));
    drec("eq-1/21/2", Family::quarter, cc(1, 2, 1, 2), i_half,
         k(2) * sq(theta00(2)) - scalar_f(one_plus_i) * sq(theta00(1)) +
             scalar_f(I) * sq(theta00(1, 2)));
    drec("eq-1/23/2", Family::quarter, cc(1, 2, 3, 2), i_half,
         k(2) * sq(theta00(2)) - scalar_f(one_minus_i) * sq(theta00(1)) -
             scalar_f(I) * sq(theta00(1, 2)));

    drec("eq-01/4", Family::quarter, cc(0, 1, 1, 4), CycNum(-1),
         scalar_f(S2) * (theta00(2) * theta10(4)) - sq(theta00(2)) + sq(theta00(4)));
    drec("eq-03/4", Family::quarter, cc(0, 1, 3, 4), CycNum(-1),
         scalar_f(S2) * (theta00(2) * theta10(4)) + sq(theta00(2)) - sq(theta00(4)));
    drec("eq-1/21/4", Family::quarter, cc(1, 2, 1, 4), i_half,
         k(2) * sq(theta00(4)) - scalar_f(one_minus_i) * sq(theta00(2)) -
             scalar_f(I) * sq(theta00(1)) -
             scalar_f(S2) * (theta10(2) * (theta01(1) - scalar_f(I) * theta00(1))));
    drec("eq-1/23/4", Family::quarter, cc(1, 2, 3, 4), i_half,
         k(2) * sq(theta00(4)) - scalar_f(one_plus_i) * sq(theta00(2)) +
             scalar_f(I) * sq(theta00(1)) +
             scalar_f(S2) * (theta10(2) * (theta01(1) + scalar_f(I) * theta00(1))));
    drec("eq-1/25/4", Family::quarter, cc(1, 2, 5, 4), i_half,
         k(2) * sq(theta00(4)) - scalar_f(one_minus_i) * sq(theta00(2)) -
             scalar_f(I) * sq(theta00(1)) +
             scalar_f(S2) * (theta10(2) * (theta01(1) - scalar_f(I) * theta00(1))));
    drec("eq-1/27/4", Family::quarter, cc(1, 2, 7, 4), i_half,
         k(2) * sq(theta00(4)) - scalar_f(one_plus_i) * sq(theta00(2)) +
             scalar_f(I) * sq(theta00(1)) -
             scalar_f(S2) * (theta10(2) * (theta01(1) + scalar_f(I) * theta00(1))));

    drec("eq-1/41", Family::quarter, cc(1, 4, 1, 1), i_quarter,
         theta00(1, 4) * (k(2) * theta00(1, 2) - theta00(1, 4)));
    drec("eq-3/41", Family::quarter, cc(3, 4, 1, 1), i_quarter,
         theta00(1, 4) * (k(2) * theta00(1, 2) + theta00(1, 4)));
    drec("eq-1/40", Family::quarter, cc(1, 4, 0, 1), i_quarter,
         k(2) * (theta00(1, 2) * theta01(1, 4)) - k(2) * sq(theta00(1, 2)) + sq(theta00(1, 4)));
    drec("eq-3/40", Family::quarter, cc(3, 4, 0, 1), i_quarter,
         k(2) * (theta00(1, 2) * theta01(1, 4)) + k(2) * sq(theta00(1, 2)) - sq(theta00(1, 4)));
    // In these four the crossed product pairs theta[0;1](tau/2) with
    // theta[1;0](tau): a tau/4 argument on the latter would leave the
    // exponent lattice of the left-hand side.
    const std::string quarter_half_note =
        "the crossed term carries theta[1;0](tau), the image of theta[1;0](4tau) under "
        "tau -> tau/4; printings with theta[1;0](tau/4) sit on the wrong exponent lattice";
    drec("eq-1/41/2", Family::quarter, cc(1, 4, 1, 2), i_quarter,
         k(2) * (theta01(1, 2) * (theta00(1) - scalar_f(I) * theta10(1))) -
             k(2) * sq(theta00(1)) + scalar_f(one_minus_i) * sq(theta00(1, 2)) +
             scalar_f(I) * sq(theta00(1, 4)),
         quarter_half_note);
    drec("eq-1/43/2", Family::quarter, cc(1, 4, 3, 2), i_quarter,
         k(2) * (theta01(1, 2) * (theta00(1) + scalar_f(I) * theta10(1))) -
             k(2) * sq(theta00(1)) + scalar_f(one_plus_i) * sq(theta00(1, 2)) -
             scalar_f(I) * sq(theta00(1, 4)),
         quarter_half_note);
    drec("eq-3/41/2", Family::quarter, cc(3, 4, 1, 2), i_quarter,
         k(2) * (theta01(1, 2) * (theta00(1) + scalar_f(I) * theta10(1))) +
             k(2) * sq(theta00(1)) - scalar_f(one_plus_i) * sq(theta00(1, 2)) +
             scalar_f(I) * sq(theta00(1, 4)),
         quarter_half_note);
    drec("eq-3/43/2", Family::quarter, cc(3, 4, 3, 2), i_quarter,
         k(2) * (theta01(1, 2) * (theta00(1) - scalar_f(I) * theta10(1))) +
             k(2) * sq(theta00(1)) - scalar_f(one_minus_i) * sq(theta00(1, 2)) -
             scalar_f(I) * sq(theta00(1, 4)),
         quarter_half_note);

    // --- third family (denominator 3) ---------------------------------------
    drec("eq-11/3", Family::third, cc(1, 1, 1, 3), m_s3_over_3, t3(2));
    drec("eq-01/3", Family::third, cc(0, 1, 1, 3), m_s3_over_3, t3(1) - t3(2));
    drec("eq-1/31", Family::third, cc(1, 3, 1, 1), i_third, t3(2, 3));
    drec("eq-1/30", Family::third, cc(1, 3, 0, 1), i_third, k(2) * t3(4, 3) - t3(2, 3));
    drec("eq-12/3", Family::third, cc(1, 1, 2, 3), m_s3_over_3, k(2) * t3(4) + t3(2));
    drec("eq-02/3", Family::third, cc(0, 1, 2, 3), m_s3_over_3, t3(1) + t3(2) - k(2) * t3(4));
    drec("eq-2/31", Family::third, cc(2, 3, 1, 1), i_third, t3(1, 3) + t3(2, 3));
    drec("eq-2/30", Family::third, cc(2, 3, 0, 1), i_third,
         k(2) * t3(4, 3) - t3(1, 3) + t3(2, 3));

    // For both characteristics in (1/3)Z the bracket coefficients are the
    // sixth roots (1 -+ i*sqrt(3))/2 = zeta_6^(-+1), not the cube roots: the
    // constant terms only come out right (i/3 resp. 2i/3) with zeta_6.
    const std::string sixth_root_note =
        "bracket coefficients are zeta_6-powers: (1 -+ i*sqrt(3))/2 = zeta(6,-+1); the "
        "cube-root spelling found in some statements fails the constant-term check";
    const CycNum m_i_third = -i_third;
    const CycNum Z6 = root_of_unity(6, 1);
    const CycNum Z6B = root_of_unity(6, 5);
    const CycNum i_z6_s3 = I * Z6 * S3;
    const CycNum i_z6b_s3 = I * Z6B * S3;
    drec("eq-1/31/3", Family::third, cc(1, 3, 1, 3), m_i_third,
         scalar_f(Z6B) * t3(2, 3) + scalar_f(i_z6_s3) * t3(2), sixth_root_note);
    drec("eq-1/35/3", Family::third, cc(1, 3, 5, 3), m_i_third,
         scalar_f(Z6) * t3(2, 3) - scalar_f(i_z6b_s3) * t3(2), sixth_root_note);
    drec("eq-1/32/3", Family::third, cc(1, 3, 2, 3), m_i_third,
         scalar_f(CycNum(2) * Z6B) * t3(4, 3) - scalar_f(Z6) * t3(2, 3) +
             scalar_f(CycNum(2) * i_z6_s3) * t3(4) + scalar_f(i_z6b_s3) * t3(2),
         sixth_root_note);
    drec("eq-1/34/3", Family::third, cc(1, 3, 4, 3), m_i_third,
         scalar_f(CycNum(2) * Z6) * t3(4, 3) - scalar_f(Z6B) * t3(2, 3) -
             scalar_f(CycNum(2) * i_z6b_s3) * t3(4) - scalar_f(i_z6_s3) * t3(2),
         sixth_root_note);
    drec("eq-2/31/3", Family::third, cc(2, 3, 1, 3), m_i_third,
         scalar_f(Z6B) * t3(1, 3) + scalar_f(Z6) * t3(2, 3) + scalar_f(i_z6_s3) * t3(1) -
             scalar_f(i_z6b_s3) * t3(2),
         sixth_root_note);
    drec("eq-2/35/3", Family::third, cc(2, 3, 5, 3), m_i_third,
         scalar_f(Z6) * t3(1, 3) + scalar_f(Z6B) * t3(2, 3) - scalar_f(i_z6b_s3) * t3(1) +
             scalar_f(i_z6_s3) * t3(2),
         sixth_root_note);
    drec("eq-2/32/3", Family::third, cc(2, 3, 2, 3), m_i_third,
         scalar_f(CycNum(2) * Z6) * t3(4, 3) - scalar_f(Z6) * t3(1, 3) +
             scalar_f(Z6B) * t3(2, 3) - scalar_f(CycNum(2) * i_z6b_s3) * t3(4) +
             scalar_f(i_z6b_s3) * t3(1) + scalar_f(i_z6_s3) * t3(2),
         sixth_root_note);
    drec("eq-2/34/3", Family::third, cc(2, 3, 4, 3), m_i_third,
         scalar_f(CycNum(2) * Z6B) * t3(4, 3) - scalar_f(Z6B) * t3(1, 3) +
             scalar_f(Z6) * t3(2, 3) + scalar_f(CycNum(2) * i_z6_s3) * t3(4) -
             scalar_f(i_z6_s3) * t3(1) - scalar_f(i_z6b_s3) * t3(2),
         sixth_root_note);

    // --- constant-level ------------------------------------------------------
    auto crec = [&](const char* id, const char* anchor, ExprPtr lhs, ExprPtr rhs,
                    std::string note = "") {
        recs.push_back({id, Family::constant_level, anchor, std::move(lhs), std::move(rhs),
                        std::move(note)});
    };
    crec("intchar-10", "theta[1;0](tau,0) as an eta quotient", th(c10),
         k(2) * (sq(et(2)) / et(1)));
    crec("intchar-01", "theta[0;1](tau,0) as an eta quotient", th(c01), sq(et(1, 2)) / et(1));
    crec("intchar-00", "theta[0;0](tau,0) as an eta quotient", th(c00),
         pow_f(et(1), 5) / (sq(et(2)) * sq(et(1, 2))));
    crec("pardecom-even", "index-parity split of theta[0;0]", th(c00),
         theta00(4) + theta10(4));
    crec("pardecom-twist", "index-parity twist of theta[0;0]", th(c00),
         k(2) * theta00(4) - theta01(1));
    {
        ExprPtr lhs_etaid = pow_f(et(1), 5) / (sq(et(1, 2)) * sq(et(2)));
        crec("etaid-1", "eta identity from the parity split (first form)", lhs_etaid,
             (pow_f(et(4), 6) + k(2) * (sq(et(2)) * pow_f(et(8), 4))) /
                 (sq(et(2)) * et(4) * sq(et(8))));
        crec("etaid-2", "eta identity from the parity split (second form)", lhs_etaid,
             (k(2) * (et(1) * pow_f(et(4), 5)) - sq(et(1, 2)) * sq(et(2)) * sq(et(8))) /
                 (et(1) * sq(et(2)) * sq(et(8))));
    }
    crec("foureta-1", "weight-3/2 eta combination with explicit Fourier series (n^2/2 grid)",
         (pow_f(et(1), 14) * pow_f(et(4), 4) - pow_f(et(2), 14) * pow_f(et(1, 2), 4)) /
             (pow_f(et(1, 2), 4) * pow_f(et(1), 4) * sq(et(2)) * pow_f(et(4), 5)),
         k(4) * wsum_f(WeightChar::kron_neg4, Rational(1, 2)),
         "numerator ordered so the leading term is +4q^(1/2); it inherits the overall "
         "sign of the theta[0;1/2] derivative evaluation");
    crec("foureta-2", "weight-3/2 eta quotient with explicit Fourier series (n^2/32 grid)",
         pow_f(et(1, 2), 9) / (pow_f(et(1, 4), 3) * pow_f(et(1), 3)),
         wsum_f(WeightChar::kron_neg2, Rational(1, 32)));
    crec("foureta-3", "weight-3/2 eta combination with explicit Fourier series (n^2/32 grid)",
         (k(2) * (pow_f(et(1), 14) * pow_f(et(1, 4), 4)) -
          pow_f(et(1, 2), 14) * pow_f(et(2), 4)) /
             (pow_f(et(1, 4), 5) * sq(et(1, 2)) * pow_f(et(1), 4) * pow_f(et(2), 4)),
         wsum_f(WeightChar::kron_neg4, Rational(1, 32)));

    crec("const-01/2-eta", "theta[0;1/2] as an eta quotient", th(cc(0, 1, 1, 2)),
         sq(et(2)) / et(4));
    crec("const-1/21-eta", "theta[1/2;1] as an eta quotient", th(cc(1, 2, 1, 1)),
         scalar_f(root_of_unity(8, 1)) * ((et(1) * et(1, 4)) / et(1, 2)));
    crec("const-1/20-eta", "theta[1/2;0] as an eta quotient", th(cc(1, 2, 0, 1)),
         sq(et(1, 2)) / et(1, 4));
    crec("const-11/2-eta", "theta[1;1/2] as an eta quotient", th(cc(1, 1, 1, 2)),
         scalar_f(S2) * ((et(1) * et(4)) / et(2)));
    crec("const-01/2-4tau", "theta[0;1/2](tau,0) coincides with theta[0;1](4tau,0)",
         th(cc(0, 1, 1, 2)), th(c01, Rational(4)));
    crec("const-1/20-tau4", "theta[1/2;0](tau,0) as half of theta[1;0](tau/4,0)",
         th(cc(1, 2, 0, 1)), scalar_f(CycNum(Rational(1, 2))) * th(c10, Rational(1, 4)),
         "theta[1;0](tau/4) sums over n + 1/2 and counts each odd square twice, so the "
         "ratio is 1/2, not 1");
    crec("const-11/2-ratio", "theta[1;1/2](tau,0) as a multiple of theta[1/2;1](4tau,0)",
         th(cc(1, 1, 1, 2)),
         scalar_f(S2 * root_of_unity(8, 7)) * th(cc(1, 2, 1, 1), Rational(4)),
         "the ratio is sqrt(2)*zeta(8,7); some statements of this relation carry "
         "zeta(8,7)/sqrt(2) instead, off by a factor of 2 from the probe-determined value");

    crec("const-11/3-eta", "theta[1;1/3] as an eta multiple", th(cc(1, 1, 1, 3)),
         scalar_f(S3) * et(3));
    crec("const-01/3-eta", "theta[0;1/3] as an eta quotient", th(cc(0, 1, 1, 3)),
         (sq(et(1)) * et(3, 2)) / (et(1, 2) * et(3)));
    crec("const-1/31-eta", "theta[1/3;1] as an eta multiple", th(cc(1, 3, 1, 1)),
         scalar_f(root_of_unity(12, 1)) * et(1, 3));
    crec("const-1/30-eta", "theta[1/3;0] as an eta quotient", th(cc(1, 3, 0, 1)),
         (sq(et(1)) * et(2, 3)) / (et(2) * et(1, 3)));
    crec("const-12/3-eta", "theta[1;2/3] as an eta quotient", th(cc(1, 1, 2, 3)),
         (sq(et(1)) * et(6)) / (et(2) * et(3)));
    crec("const-02/3-eta", "theta[0;2/3] as an eta quotient", th(cc(0, 1, 2, 3)),
         (sq(et(3)) * et(2) * et(1, 2)) / (et(1) * et(3, 2) * et(6)));
    crec("const-2/31-eta", "theta[2/3;1] as an eta quotient", th(cc(2, 3, 1, 1)),
         scalar_f(root_of_unity(6, 1)) * ((sq(et(1)) * et(1, 6)) / (et(1, 2) * et(1, 3))));
    crec("const-2/30-eta", "theta[2/3;0] as an eta quotient", th(cc(2, 3, 0, 1)),
         (sq(et(1, 3)) * et(2) * et(1, 2)) / (et(1) * et(2, 3) * et(1, 6)));
    crec("const-11/3-9tau", "theta[1;1/3](tau,0) as a multiple of theta[1/3;1](9tau,0)",
         th(cc(1, 1, 1, 3)),
         scalar_f(root_of_unity(12, 11) * S3) * th(cc(1, 3, 1, 1), Rational(9)));
    crec("theta3-eta", "Theta_3 as a sum of two eta quotients", t3(1),
         (pow_f(et(1), 5) * pow_f(et(3), 5)) /
                 (sq(et(1, 2)) * sq(et(2)) * sq(et(3, 2)) * sq(et(6))) +
             k(4) * ((sq(et(2)) * sq(et(6))) / (et(1) * et(3))));

    // --- series-level --------------------------------------------------------
    auto srec = [&](const char* id, const char* anchor, ExprPtr lhs, ExprPtr rhs) {
        recs.push_back({id, Family::series_level, anchor, std::move(lhs), std::move(rhs), ""});
    };
    using V = DivisorVariant;
    using F = DivisorFilter;
    using W = DivisorWeight;
    using O = OuterTwist;
    auto dsum = [](V v, F f, W w, O o, Rational c0) {
        return divisor_f(DivisorSeriesSpec{v, f, w, o, Rational(1, 2), std::move(c0)});
    };

    srec("theta1-i", "quad4 divisor series equals theta[0;0]^2",
         dsum(V::quad4, F::all, W::one, O::none, Rational(1)), sq(theta00(1)));
    srec("theta1-ii", "quad8 divisor series equals theta[0;0](tau)theta[0;0](2tau)",
         dsum(V::quad8, F::all, W::one, O::none, Rational(1)), theta00(1) * theta00(2));
    srec("theta1-iii",
         "chi3 divisor series equals theta[0;0](tau)theta[0;0](3tau) + "
         "theta[1;0](tau)theta[1;0](3tau)",
         dsum(V::chi3_zeta3, F::all, W::one, O::none, Rational(1)),
         theta00(1) * theta00(3) + theta10(1) * theta10(3));
    srec("eta3-sum", "eta(tau)^3 as the explicit (-4/n)-weighted Fourier series",
         pow_f(et(1), 3), wsum_f(WeightChar::kron_neg4, Rational(1, 8)));

    srec("pow2twist-i-odd", "odd-index part of the quad4 series",
         dsum(V::quad4, F::all, W::one, O::keep_odd, Rational(0)),
         sq(theta00(1)) - sq(theta00(2)));
    srec("pow2twist-i-alt", "(-1)^N twist of the quad4 series",
         dsum(V::quad4, F::all, W::one, O::alternate, Rational(1)),
         k(2) * sq(theta00(2)) - sq(theta00(1)));
    srec("pow2twist-ii-odd", "odd-index part of the quad8 series",
         dsum(V::quad8, F::all, W::one, O::keep_odd, Rational(0)), theta00(2) * theta10(4));
    srec("pow2twist-ii-alt", "(-1)^N twist of the quad8 series",
         dsum(V::quad8, F::all, W::one, O::alternate, Rational(1)), theta00(2) * theta01(1));
    srec("pow2twist-iii-kron", "(-1/N) twist of the odd part of the quad8 series",
         dsum(V::quad8, F::all, W::one, O::kron_neg1_on_odd, Rational(0)),
         theta10(4) * theta01(2));
    srec("pow2twist-iii-fix", "(-1/N) acts trivially on the odd part of the quad4 series",
         dsum(V::quad4, F::all, W::one, O::kron_neg1_on_odd, Rational(0)),
         dsum(V::quad4, F::all, W::one, O::keep_odd, Rational(0)));

    srec("pow3twist-i-odd", "odd-index part of Theta_3",
         dsum(V::chi3_zeta3, F::all, W::one, O::keep_odd, Rational(0)), t3(1) - t3(4));
    srec("pow3twist-i-alt", "(-1)^N twist of Theta_3",
         dsum(V::chi3_zeta3, F::all, W::one, O::alternate, Rational(1)),
         k(2) * t3(4) - t3(1));
    srec("pow3twist-i-no3", "indices prime to 3 in Theta_3",
         dsum(V::chi3_zeta3, F::all, W::one, O::keep_not_mult3, Rational(0)), t3(1) - t3(3));
    srec("pow3twist-ii-dodd", "odd divisors only in the chi3 sum",
         dsum(V::chi3_zeta3, F::d_odd, W::one, O::none, Rational(2)), t3(1) + t3(2));
    srec("pow3twist-ii-codd", "odd codivisors only in the chi3 sum",
         dsum(V::chi3_zeta3, F::codivisor_odd, W::one, O::none, Rational(0)), t3(1) - t3(2));
    srec("pow3twist-iii-sgnd", "(-1)^d weight in the chi3 sum",
         dsum(V::chi3_zeta3, F::all, W::sign_d, O::none, Rational(-3)),
         k(-1) * t3(1) - k(2) * t3(2));
    srec("pow3twist-iii-sgncd", "(-1)^(N/d) weight in the chi3 sum",
         dsum(V::chi3_zeta3, F::all, W::sign_codivisor, O::none, Rational(1)),
         k(2) * t3(2) - t3(1));
    srec("pow3twist-iii-z6", "zeta_6 in place of zeta_3 in the chi3 sum",
         dsum(V::chi3_zeta6, F::all, W::one, O::none, Rational(3)), t3(1) + k(2) * t3(2));
    srec("pow3twist-iv-dodd", "zeta_6 sum over odd divisors matches the zeta_3 one",
         dsum(V::chi3_zeta6, F::d_odd, W::one, O::none, Rational(2)),
         dsum(V::chi3_zeta3, F::d_odd, W::one, O::none, Rational(2)));
    srec("pow3twist-iv-codd", "zeta_6 sum over odd codivisors",
         dsum(V::chi3_zeta6, F::codivisor_odd, W::one, O::none, Rational(0)),
         t3(1) + t3(2) - k(2) * t3(4));

    return recs;
}

} // namespace

const std::vector<IdentityRecord>& registry() {
    static const std::vector<IdentityRecord> recs = build_registry();
    return recs;
}

const IdentityRecord& registry_find(const std::string& id) {
    static const std::map<std::string, std::size_t>* index = [] {
        auto* m = new std::map<std::string, std::size_t>;
        const auto& recs = registry();
        for (std::size_t j = 0; j < recs.size(); ++j) (*m)[recs[j].id] = j;
        return m;
    }();
    auto it = index->find(id);
    if (it == index->end()) throw DomainError("unknown identity id: " + id);
    return registry()[it->second];
}

const std::vector<Characteristic>& registry_characteristics() {
    static const std::vector<Characteristic> chars = [] {
        std::vector<Characteristic> v;
        auto add = [&](const Characteristic& c) {
            if (std::find(v.begin(), v.end(), c) == v.end()) v.push_back(c);
        };
        for (const auto& r : registry())
            if (r.lhs->kind == Expr::Kind::theta_deriv) add(*r.lhs->ch);
        add(Characteristic(Rational(0), Rational(0)));
        add(Characteristic(Rational(0), Rational(1)));
        add(Characteristic(Rational(1), Rational(0)));
        return v;
    }();
    return chars;
}

} // namespace thetaq

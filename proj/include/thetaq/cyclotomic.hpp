#pragma once

#include <complex>
#include <map>
#include <string>

#include "thetaq/rational.hpp"

namespace thetaq {

// Exact element of the cyclotomic field Q(zeta_n), stored on the canonical
// basis 1, zeta, ..., zeta^(phi(n)-1) as a sparse coefficient map reduced
// modulo the n-th cyclotomic polynomial. Two elements of equal order are
// equal iff their maps are identical; elements of different orders are
// compared after embedding into Q(zeta_lcm).
//
// Values are immutable after construction. The cyclotomic-polynomial cache
// is the only shared state and is guarded for concurrent use.
class CycNum {
public:
    CycNum() = default;                      // zero (order 1, empty map)
    CycNum(const Rational& r);               // rational constant, order 1
    CycNum(long long v) : CycNum(Rational(v)) {}

    static CycNum root_of_unity(long long n, long long k);
    static CycNum i() { return root_of_unity(4, 1); }
    static CycNum sqrt2();                   // zeta_8 + zeta_8^-1
    static CycNum sqrt3();                   // zeta_12 + zeta_12^-1

    long long order() const { return order_; }
    const std::map<long long, Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_rational() const;
    // Value as a rational; throws DomainError when the element is not one.
    Rational rational_value() const;

    CycNum conj() const;                     // zeta_n^k -> zeta_n^(n-k)
    CycNum embedded(long long m) const;      // same element in Q(zeta_m), order | m
    CycNum inverse() const;                  // throws DivisionByZero on 0

    CycNum operator-() const;
    friend CycNum operator+(const CycNum& a, const CycNum& b);
    friend CycNum operator-(const CycNum& a, const CycNum& b);
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    friend CycNum operator/(const CycNum& a, const CycNum& b);
    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    std::complex<double> to_complex() const;
    std::string to_string() const;

private:
    long long order_ = 1;
    std::map<long long, Rational> coeffs_;   // basis exponent -> coefficient

    CycNum(long long order, std::map<long long, Rational> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {}

    static CycNum from_dense(long long order, std::vector<Rational> v);
};

// Euler phi of the cached order (degree of the cyclotomic polynomial).
long long cyclotomic_degree(long long n);

// Free-function spellings used throughout the library.
inline CycNum root_of_unity(long long n, long long k) { return CycNum::root_of_unity(n, k); }
inline CycNum cyc_conj(const CycNum& a) { return a.conj(); }
inline CycNum cyc_embed(const CycNum& a, long long m) { return a.embedded(m); }

// Numeric embedding; `digits` is the requested decimal accuracy. Summation is
// carried out in extended precision, which covers every tolerance this
// library works at (<= 1e-14); larger requests are rejected rather than
// silently under-delivered.
std::complex<double> cyc_to_complex(const CycNum& a, int digits = 12);

} // namespace thetaq

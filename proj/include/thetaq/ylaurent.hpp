#pragma once

#include <map>
#include <string>

#include "thetaq/puiseux.hpp"
#include "thetaq/rational.hpp"

namespace thetaq {

// Laurent polynomial in the second triple-product variable y, with rational
// coefficients and finite support. Serves as the coefficient ring for the
// bivariate Jacobi triple product check.
class YLaurent {
    std::map<long long, Rational> c_; // y-exponent -> coefficient, zeros pruned

public:
    YLaurent() = default;
    YLaurent(const Rational& r) {
        if (r != 0) c_[0] = r;
    }
    YLaurent(long long v) : YLaurent(Rational(v)) {}

    static YLaurent y_power(long long k, const Rational& coeff = Rational(1)) {
        YLaurent p;
        if (coeff != 0) p.c_[k] = coeff;
        return p;
    }

    const std::map<long long, Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    YLaurent operator-() const {
        YLaurent r;
        for (const auto& [k, c] : c_) r.c_[k] = -c;
        return r;
    }

    friend YLaurent operator+(const YLaurent& a, const YLaurent& b) {
        YLaurent r = a;
        for (const auto& [k, c] : b.c_) {
            Rational& slot = r.c_[k];
            slot += c;
            if (slot == 0) r.c_.erase(k);
        }
        return r;
    }

    friend YLaurent operator-(const YLaurent& a, const YLaurent& b) { return a + (-b); }

    friend YLaurent operator*(const YLaurent& a, const YLaurent& b) {
        YLaurent r;
        for (const auto& [ka, ca] : a.c_)
            for (const auto& [kb, cb] : b.c_) {
                Rational& slot = r.c_[ka + kb];
                slot += ca * cb;
                if (slot == 0) r.c_.erase(ka + kb);
            }
        return r;
    }

    friend bool operator==(const YLaurent& a, const YLaurent& b) { return a.c_ == b.c_; }
    friend bool operator!=(const YLaurent& a, const YLaurent& b) { return !(a == b); }

    // Units of this ring are the monomials c*y^k.
    YLaurent inverse() const {
        if (c_.empty()) throw DivisionByZero("division by zero Laurent polynomial");
        if (c_.size() != 1)
            throw DomainError("YLaurent inverse: only monomials are invertible");
        return y_power(-c_.begin()->first, Rational(1) / c_.begin()->second);
    }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, c] : c_) {
            Rational a = c < 0 ? Rational(-c) : c;
            if (first) {
                if (c < 0) out += "-";
                first = false;
            } else {
                out += c < 0 ? " - " : " + ";
            }
            if (k == 0) {
                out += thetaq::to_string(a);
            } else {
                if (a != 1) out += thetaq::to_string(a) + "*";
                out += k == 1 ? "y" : "y^" + std::to_string(k);
            }
        }
        return out;
    }
};

template <>
struct RingTraits<YLaurent> {
    static YLaurent zero() { return YLaurent(); }
    static YLaurent one() { return YLaurent(Rational(1)); }
    static bool is_zero(const YLaurent& a) { return a.is_zero(); }
    static YLaurent invert(const YLaurent& a) { return a.inverse(); }
    static std::string str(const YLaurent& a) { return a.to_string(); }
};

} // namespace thetaq

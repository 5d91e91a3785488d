#include "thetaq/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace thetaq {

namespace {

struct OrderInfo {
    std::vector<long long> poly; // monic cyclotomic polynomial, ascending coefficients
    long long phi;               // degree
};

// Exact division of integer polynomials, quotient known to be integral.
std::vector<long long> divide_exact(std::vector<long long> num, const std::vector<long long>& den) {
    const std::size_t dn = den.size() - 1;
    std::vector<long long> q(num.size() - dn, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
        long long c = num[k + dn] / den[dn];
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dn; ++j) num[k + j] -= c * den[j];
    }
    return q;
}

const OrderInfo& order_info(long long n) {
    static std::mutex mtx;
    static std::unordered_map<long long, std::unique_ptr<OrderInfo>> cache;

    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;

    // Build Phi_d for every divisor d of n in ascending order, so each step
    // only divides by polynomials already in the cache.
    std::vector<long long> divisors;
    for (long long d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
    for (long long d : divisors) {
        if (cache.count(d)) continue;
        std::vector<long long> p(static_cast<std::size_t>(d) + 1, 0);
        p[0] = -1;
        p[static_cast<std::size_t>(d)] = 1; // x^d - 1
        for (long long e : divisors) {
            if (e >= d || d % e != 0) continue;
            p = divide_exact(std::move(p), cache.at(e)->poly);
        }
        auto info = std::make_unique<OrderInfo>();
        info->phi = static_cast<long long>(p.size()) - 1;
        info->poly = std::move(p);
        cache.emplace(d, std::move(info));
    }
    return *cache.at(n);
}

// In-place reduction of a dense coefficient vector modulo Phi_n.
void reduce_mod_cyclotomic(long long n, std::vector<Rational>& v) {
    const OrderInfo& info = order_info(n);
    const std::size_t phi = static_cast<std::size_t>(info.phi);
    for (std::size_t e = v.size(); e-- > phi;) {
        if (v[e] == 0) continue;
        Rational c = std::move(v[e]);
        v[e] = 0;
        for (std::size_t j = 0; j < phi; ++j)
            if (info.poly[j] != 0) v[e - phi + j] -= c * info.poly[j];
    }
    v.resize(std::max(v.size(), phi)); // keep at least phi slots valid
}

std::size_t poly_degree(const std::vector<Rational>& p) {
    std::size_t d = p.size();
    while (d > 0 && p[d - 1] == 0) --d;
    return d; // number of meaningful coefficients; 0 means zero polynomial
}

} // namespace

long long cyclotomic_degree(long long n) {
    if (n < 1) throw DomainError("cyclotomic order must be positive");
    return order_info(n).phi;
}

CycNum::CycNum(const Rational& r) {
    order_ = 1;
    if (r != 0) coeffs_[0] = r;
}

CycNum CycNum::from_dense(long long order, std::vector<Rational> v) {
    reduce_mod_cyclotomic(order, v);
    std::map<long long, Rational> m;
    const long long phi = order_info(order).phi;
    for (long long k = 0; k < phi && k < static_cast<long long>(v.size()); ++k)
        if (v[static_cast<std::size_t>(k)] != 0) m[k] = std::move(v[static_cast<std::size_t>(k)]);
    return CycNum(order, std::move(m));
}

CycNum CycNum::root_of_unity(long long n, long long k) {
    if (n < 1) throw DomainError("root_of_unity: order must be >= 1");
    k %= n;
    if (k < 0) k += n;
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
    v[static_cast<std::size_t>(k)] = 1;
    return from_dense(n, std::move(v));
}

CycNum CycNum::sqrt2() {
    return root_of_unity(8, 1) + root_of_unity(8, 7);
}

CycNum CycNum::sqrt3() {
    return root_of_unity(12, 1) + root_of_unity(12, 11);
}

bool CycNum::is_rational() const {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

Rational CycNum::rational_value() const {
    if (coeffs_.empty()) return Rational(0);
    if (!is_rational()) throw DomainError("CycNum is not a rational number: " + to_string());
    return coeffs_.begin()->second;
}

CycNum CycNum::conj() const {
    std::vector<Rational> v(static_cast<std::size_t>(order_), Rational(0));
    for (const auto& [k, c] : coeffs_) v[static_cast<std::size_t>((order_ - k) % order_)] += c;
    return from_dense(order_, std::move(v));
}

CycNum CycNum::embedded(long long m) const {
    if (m < 1 || m % order_ != 0)
        throw DomainError("cyc_embed: target order " + std::to_string(m) +
                          " is not a multiple of " + std::to_string(order_));
    if (m == order_) return *this;
    const long long step = m / order_;
    std::vector<Rational> v;
    for (const auto& [k, c] : coeffs_) {
        std::size_t e = static_cast<std::size_t>(k * step);
        if (v.size() <= e) v.resize(e + 1, Rational(0));
        v[e] += c;
    }
    if (v.empty()) v.resize(1, Rational(0));
    return from_dense(m, std::move(v));
}

CycNum CycNum::operator-() const {
    std::map<long long, Rational> m;
    for (const auto& [k, c] : coeffs_) m[k] = -c;
    return CycNum(order_, std::move(m));
}

CycNum operator+(const CycNum& a, const CycNum& b) {
    if (a.order_ != b.order_) {
        long long m = lcm_ll(a.order_, b.order_);
        return a.embedded(m) + b.embedded(m);
    }
    std::map<long long, Rational> m = a.coeffs_;
    for (const auto& [k, c] : b.coeffs_) {
        Rational& slot = m[k];
        slot += c;
        if (slot == 0) m.erase(k);
    }
    return CycNum(a.order_, std::move(m));
}

CycNum operator-(const CycNum& a, const CycNum& b) { return a + (-b); }

CycNum operator*(const CycNum& a, const CycNum& b) {
    if (a.is_zero() || b.is_zero()) return CycNum();
    // rational scaling needs no basis work, whatever the other order is
    if (a.is_rational() || b.is_rational()) {
        const CycNum& num = a.is_rational() ? b : a;
        Rational s = (a.is_rational() ? a : b).rational_value();
        std::map<long long, Rational> m;
        for (const auto& [k, c] : num.coeffs_) m[k] = c * s;
        return CycNum(num.order_, std::move(m));
    }
    if (a.order_ != b.order_) {
        long long m = lcm_ll(a.order_, b.order_);
        return a.embedded(m) * b.embedded(m);
    }
    std::size_t da = static_cast<std::size_t>(a.coeffs_.rbegin()->first);
    std::size_t db = static_cast<std::size_t>(b.coeffs_.rbegin()->first);
    std::vector<Rational> v(da + db + 1, Rational(0));
    for (const auto& [ka, ca] : a.coeffs_)
        for (const auto& [kb, cb] : b.coeffs_)
            v[static_cast<std::size_t>(ka + kb)] += ca * cb;
    return CycNum::from_dense(a.order_, std::move(v));
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw DivisionByZero("division by zero in Q(zeta_n)");
    if (is_rational()) return CycNum(Rational(1) / rational_value());

    // Extended Euclid in Q[x]: u * a + v * Phi_n = gcd = nonzero constant,
    // since Phi_n is irreducible and deg a < phi(n).
    const OrderInfo& info = order_info(order_);
    std::vector<Rational> r0(info.poly.begin(), info.poly.end());
    std::vector<Rational> r1(static_cast<std::size_t>(coeffs_.rbegin()->first) + 1, Rational(0));
    for (const auto& [k, c] : coeffs_) r1[static_cast<std::size_t>(k)] = c;
    std::vector<Rational> u0{Rational(0)}, u1{Rational(1)}; // coefficients of `a`

    while (true) {
        std::size_t d1 = poly_degree(r1);
        if (d1 == 0) throw DomainError("cyclotomic inverse: unexpected zero remainder");
        if (d1 == 1) { // r1 is the constant gcd
            Rational g = r1[0];
            std::vector<Rational> v(u1.size());
            for (std::size_t j = 0; j < u1.size(); ++j) v[j] = u1[j] / g;
            return from_dense(order_, std::move(v));
        }
        // r0 = q * r1 + r2
        std::size_t d0 = poly_degree(r0);
        std::vector<Rational> q(d0 >= d1 ? d0 - d1 + 1 : 1, Rational(0));
        std::vector<Rational> rem = r0;
        for (std::size_t k = poly_degree(rem); k >= d1 && k > 0; k = poly_degree(rem)) {
            Rational c = rem[k - 1] / r1[d1 - 1];
            q[k - d1] = c;
            for (std::size_t j = 0; j < d1; ++j) rem[k - d1 + j] -= c * r1[j];
        }
        // u2 = u0 - q * u1
        std::vector<Rational> u2(std::max(u0.size(), q.size() + u1.size()), Rational(0));
        for (std::size_t j = 0; j < u0.size(); ++j) u2[j] = u0[j];
        for (std::size_t jq = 0; jq < q.size(); ++jq) {
            if (q[jq] == 0) continue;
            for (std::size_t ju = 0; ju < u1.size(); ++ju) u2[jq + ju] -= q[jq] * u1[ju];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        r1.resize(poly_degree(r1) == 0 ? 1 : poly_degree(r1));
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
}

CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

bool operator==(const CycNum& a, const CycNum& b) {
    if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
    long long m = lcm_ll(a.order_, b.order_);
    return a.embedded(m).coeffs_ == b.embedded(m).coeffs_;
}

std::complex<double> CycNum::to_complex() const {
    long double re = 0, im = 0;
    const long double two_pi = 6.283185307179586476925286766559L;
    for (const auto& [k, c] : coeffs_) {
        long double x = static_cast<long double>(to_double(c));
        long double ang = two_pi * static_cast<long double>(k) / static_cast<long double>(order_);
        re += x * std::cos(ang);
        im += x * std::sin(ang);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

std::complex<double> cyc_to_complex(const CycNum& a, int digits) {
    if (digits < 1) throw DomainError("cyc_to_complex: precision must be >= 1");
    if (digits > 14)
        throw DomainError("cyc_to_complex: double-precision embedding supports at most 14 digits");
    return a.to_complex();
}

std::string CycNum::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (k == 0) {
            out += thetaq::to_string(abs_c);
        } else {
            if (abs_c != 1) out += thetaq::to_string(abs_c) + "*";
            out += "zeta(" + std::to_string(order_) + "," + std::to_string(k) + ")";
        }
    }
    return out;
}

} // namespace thetaq

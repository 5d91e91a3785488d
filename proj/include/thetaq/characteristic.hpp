#pragma once

#include <string>

#include "thetaq/cyclotomic.hpp"
#include "thetaq/rational.hpp"

namespace thetaq {

// e(u) = exp(2*pi*i*u) for rational u, as an exact root of unity.
inline CycNum cyc_e(const Rational& u) {
    return CycNum::root_of_unity(to_long(rat_den(u)), to_long(rat_num(u) % rat_den(u)));
}

// The pair [eps; delta] labelling theta[eps; delta], stored in the normalized
// window 0 <= eps <= 1, 0 <= delta < 2.
class Characteristic {
public:
    Characteristic(Rational eps, Rational delta) : eps_(std::move(eps)), delta_(std::move(delta)) {
        if (eps_ < 0 || eps_ > 1 || delta_ < 0 || delta_ >= 2)
            throw DomainError("characteristic " + to_string() + " outside the window [0,1] x [0,2)");
    }

    const Rational& eps() const { return eps_; }
    const Rational& delta() const { return delta_; }

    // beta = -e(-delta/2)
    CycNum beta() const { return -cyc_e(Rational(-delta_) / 2); }

    std::string to_string() const {
        return "[" + thetaq::to_string(eps_) + ";" + thetaq::to_string(delta_) + "]";
    }

    friend bool operator==(const Characteristic& a, const Characteristic& b) {
        return a.eps_ == b.eps_ && a.delta_ == b.delta_;
    }
    friend bool operator<(const Characteristic& a, const Characteristic& b) {
        if (a.eps_ != b.eps_) return a.eps_ < b.eps_;
        return a.delta_ < b.delta_;
    }

private:
    Rational eps_, delta_;
};

// Window reduction of an arbitrary characteristic. The returned data satisfy
//   theta[eps; delta](tau, z) = multiplier * theta[ch](tau, z_flipped ? -z : z),
// so at z = 0 constants pick up `multiplier` and derivatives additionally
// flip sign when z_flipped.
struct NormalizedCharacteristic {
    Characteristic ch;
    CycNum multiplier;
    bool z_flipped;
};

NormalizedCharacteristic normalize_characteristic(const Rational& eps, const Rational& delta);

} // namespace thetaq

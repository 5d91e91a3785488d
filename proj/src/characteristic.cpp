#include "thetaq/characteristic.hpp"

namespace thetaq {

namespace {
// r mod 2 into [0, 2)
Rational mod2(const Rational& r) {
    return r - 2 * rational_floor(r / 2);
}
} // namespace

NormalizedCharacteristic normalize_characteristic(const Rational& eps, const Rational& delta) {
    // Shift both entries by even integers into [0,2)^2. The eps shift is
    // free; shifting delta by 2b multiplies theta by e(b*eps0/2).
    Rational eps0 = mod2(eps);
    Rational delta0 = mod2(delta);
    Rational b = (delta - delta0) / 2;
    CycNum mult = cyc_e(b * eps0 / 2);
    bool flipped = false;

    if (eps0 > 1) {
        // theta[eps0;delta0](tau,z) = theta[-eps0;-delta0](tau,-z)
        //                          = e(b1*eps0/2) * theta[2-eps0; (2-delta0) mod 2](tau,-z)
        Rational b1 = delta0 > 0 ? Rational(1) : Rational(0);
        mult = mult * cyc_e(b1 * eps0 / 2);
        eps0 = 2 - eps0;
        delta0 = delta0 > 0 ? 2 - delta0 : Rational(0);
        flipped = true;
    }
    return NormalizedCharacteristic{Characteristic(eps0, delta0), mult, flipped};
}

} // namespace thetaq

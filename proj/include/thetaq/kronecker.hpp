#pragma once

#include <utility>

namespace thetaq {

// Kronecker symbol (a/n), the standard extension of the Jacobi symbol to
// arbitrary signed arguments. Covers every character this library uses:
// (-1/.), (2/.), (-2/.), (-4/.) and (./3).
inline int kronecker_symbol(long long a, long long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    while (n % 2 == 0) {
        n /= 2;
        if (a % 2 == 0) return 0;
        long long am = ((a % 8) + 8) % 8;
        if (am == 3 || am == 5) result = -result;
    }
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long nm = n % 8;
            if (nm == 3 || nm == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

} // namespace thetaq

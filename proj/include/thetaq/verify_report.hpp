#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thetaq/puiseux.hpp"
#include "thetaq/rational.hpp"

namespace thetaq {

// Outcome of one exact comparison. `cutoff` is the window that was actually
// compared (absent for the rare all-orders comparisons); a report with an
// empty comparison window passes vacuously and says so via compared_terms.
struct VerifyReport {
    struct Mismatch {
        Rational exponent;
        std::string lhs, rhs;
    };

    std::string id;
    bool pass = false;
    std::optional<Rational> cutoff;
    std::optional<Mismatch> first_mismatch;
    long long compared_terms = 0;
    double elapsed_ms = 0.0;

    std::string describe() const {
        std::string s = (pass ? "pass" : "FAIL");
        s += "  " + id;
        if (cutoff) s += "  (window " + to_string(*cutoff) + ")";
        if (first_mismatch)
            s += "  first mismatch at q^" + to_string(first_mismatch->exponent) + ": " +
                 first_mismatch->lhs + " vs " + first_mismatch->rhs;
        if (pass && compared_terms == 0) s += "  [warning: no coefficients compared]";
        return s;
    }
};

template <class R>
VerifyReport make_report(std::string id, const SeriesComparison<R>& cmp, double elapsed_ms = 0.0) {
    VerifyReport r;
    r.id = std::move(id);
    r.pass = cmp.equal();
    r.cutoff = cmp.window;
    r.compared_terms = cmp.compared_terms;
    r.elapsed_ms = elapsed_ms;
    if (cmp.first_mismatch)
        r.first_mismatch = VerifyReport::Mismatch{cmp.first_mismatch->exponent,
                                                  RingTraits<R>::str(cmp.first_mismatch->lhs),
                                                  RingTraits<R>::str(cmp.first_mismatch->rhs)};
    return r;
}

inline bool all_pass(const std::vector<VerifyReport>& v) {
    for (const auto& r : v)
        if (!r.pass) return false;
    return true;
}

} // namespace thetaq

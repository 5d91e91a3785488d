#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thetaq/registry.hpp"
#include "thetaq/verify_report.hpp"

namespace thetaq {

VerifyReport verify_record(const IdentityRecord& rec, const Rational& cutoff);
VerifyReport verify_id(const std::string& id, const Rational& cutoff);

struct VerifySummary {
    std::vector<VerifyReport> records; // registry order, independent of worker count
    Rational cutoff;
    int passed = 0;
    int failed = 0;
    bool all_pass() const { return failed == 0; }
};

// Runs the whole registry (or the given subset) with `jobs` worker threads;
// results are assembled in registry order so reports are deterministic.
VerifySummary verify_all(const Rational& cutoff, int jobs = 1);
VerifySummary verify_records(const std::vector<const IdentityRecord*>& recs,
                             const Rational& cutoff, int jobs);

// Fixed-key-order JSON rendering; per-record wall time is only emitted when
// include_timings is set (it is the one nondeterministic field).
std::string summary_to_json(const VerifySummary& s, bool include_timings = false);

// a/b when the quotient is a constant series below cutoff.
struct RatioProbeResult {
    bool is_constant = false;
    CycNum constant;
    std::optional<Rational> first_nonconstant_exponent;
};

RatioProbeResult ratio_probe(const ExprPtr& a, const ExprPtr& b, const Rational& cutoff);

} // namespace thetaq

#include "thetaq/verify.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include <json.hpp>

namespace thetaq {

VerifyReport verify_record(const IdentityRecord& rec, const Rational& cutoff) {
    auto t0 = std::chrono::steady_clock::now();
    QSeries lhs = eval_expr(rec.lhs, cutoff);
    QSeries rhs = eval_expr(rec.rhs, cutoff);
    auto cmp = ps_compare(lhs, rhs);
    auto t1 = std::chrono::steady_clock::now();
    return make_report(rec.id, cmp, std::chrono::duration<double, std::milli>(t1 - t0).count());
}

VerifyReport verify_id(const std::string& id, const Rational& cutoff) {
    return verify_record(registry_find(id), cutoff);
}

VerifySummary verify_records(const std::vector<const IdentityRecord*>& recs,
                             const Rational& cutoff, int jobs) {
    if (jobs < 1) jobs = 1;
    VerifySummary s;
    s.cutoff = cutoff;
    s.records.resize(recs.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            std::size_t j = next.fetch_add(1);
            if (j >= recs.size() || failed.load()) return;
            try {
                s.records[j] = verify_record(*recs[j], cutoff);
            } catch (const std::exception& ex) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!failed.exchange(true))
                    first_error = std::string(recs[j]->id) + ": " + ex.what();
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failed.load()) throw Error("verification aborted: " + first_error);

    for (const auto& r : s.records) (r.pass ? s.passed : s.failed) += 1;
    return s;
}

VerifySummary verify_all(const Rational& cutoff, int jobs) {
    std::vector<const IdentityRecord*> recs;
    for (const auto& r : registry()) recs.push_back(&r);
    return verify_records(recs, cutoff, jobs);
}

std::string summary_to_json(const VerifySummary& s, bool include_timings) {
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const auto& r : s.records) {
        nlohmann::ordered_json j;
        j["id"] = r.id;
        j["pass"] = r.pass;
        j["cutoff"] = r.cutoff ? to_string(*r.cutoff) : "inf";
        if (r.first_mismatch) {
            j["first_mismatch"] = {{"exponent", to_string(r.first_mismatch->exponent)},
                                   {"lhs", r.first_mismatch->lhs},
                                   {"rhs", r.first_mismatch->rhs}};
        }
        if (include_timings) j["ms"] = r.elapsed_ms;
        records.push_back(std::move(j));
    }
    nlohmann::ordered_json out;
    out["records"] = std::move(records);
    out["summary"] = {{"pass", s.passed}, {"fail", s.failed}};
    return out.dump(2);
}

RatioProbeResult ratio_probe(const ExprPtr& a, const ExprPtr& b, const Rational& cutoff) {
    QSeries q = eval_expr(a / b, cutoff); // DivisionByZero surfaces from here
    RatioProbeResult out;
    for (const auto& [key, c] : q.coeffs()) {
        if (key == 0) {
            out.constant = c;
        } else {
            out.first_nonconstant_exponent = q.exponent_of(key);
            return out;
        }
    }
    out.is_constant = true;
    return out;
}

} // namespace thetaq

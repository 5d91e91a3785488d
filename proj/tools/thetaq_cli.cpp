// Command-line front end: verify the identity registry, expand expressions,
// query exact coefficients, and run numeric spot checks.

#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "thetaq/numeric.hpp"
#include "thetaq/parser.hpp"
#include "thetaq/verify.hpp"

namespace {

using namespace thetaq;

Rational parse_rational_arg(const std::string& s) {
    auto whole = [](const std::string& part) {
        std::size_t used = 0;
        long long v = std::stoll(part, &used);
        if (used != part.size()) throw DomainError("not an integer: " + part);
        return v;
    };
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(whole(s));
        long long den = whole(s.substr(slash + 1));
        if (den == 0) throw DomainError("zero denominator: " + s);
        return Rational(whole(s.substr(0, slash)), den);
    } catch (const std::exception&) {
        throw DomainError("not a rational: " + s);
    }
}

std::complex<double> parse_complex_arg(std::string s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw DomainError("empty complex number");
    if (t.back() != 'i' && t.back() != 'I') return {std::stod(t), 0};
    t.pop_back();
    if (t.empty() || t == "+") return {0, 1};
    if (t == "-") return {0, -1};
    // split at the last sign that separates real and imaginary parts
    for (std::size_t j = t.size(); j-- > 1;) {
        if ((t[j] == '+' || t[j] == '-') && t[j - 1] != 'e' && t[j - 1] != 'E') {
            double re = std::stod(t.substr(0, j));
            std::string im = t.substr(j);
            if (im == "+") return {re, 1};
            if (im == "-") return {re, -1};
            return {re, std::stod(im)};
        }
    }
    return {0, std::stod(t)}; // bare "0.8i"
}

std::string complex_str(std::complex<double> v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", v.real(), v.imag());
    return buf;
}

void write_out(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw DomainError("cannot write to " + path);
    f << content << "\n";
}

int default_jobs() {
    if (const char* env = std::getenv("THETAQ_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

int run_verify(const std::string& id, const std::string& family, const std::string& cutoff_s,
               int jobs, const std::string& format, const std::string& out, bool timings) {
    Rational cutoff = parse_rational_arg(cutoff_s);
    std::vector<const IdentityRecord*> recs;
    if (!id.empty()) {
        recs.push_back(&registry_find(id));
    } else if (!family.empty()) {
        Family f = family_from_name(family);
        for (const auto& r : registry())
            if (r.family == f) recs.push_back(&r);
    } else {
        for (const auto& r : registry()) recs.push_back(&r);
    }
    VerifySummary s = verify_records(recs, cutoff, jobs);
    if (format == "json") {
        write_out(out, summary_to_json(s, timings));
    } else {
        std::string text;
        for (const auto& r : s.records) {
            text += r.describe();
            if (timings) text += "  [" + std::to_string(r.elapsed_ms) + " ms]";
            text += "\n";
        }
        text += "passed " + std::to_string(s.passed) + ", failed " + std::to_string(s.failed) +
                " (cutoff " + to_string(s.cutoff) + ")";
        write_out(out, text);
    }
    return s.all_pass() ? 0 : 1;
}

int run_expand(const std::string& expr_s, const std::string& cutoff_s, const std::string& format,
               const std::string& out) {
    ExprPtr e = parse_expr(expr_s);
    Rational cutoff = parse_rational_arg(cutoff_s);
    QSeries s = eval_expr(e, cutoff);
    if (format == "json") {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& [k, c] : s.coeffs())
            rows.push_back({{"exponent", to_string(s.exponent_of(k))},
                            {"exact", c.to_string()},
                            {"approx", complex_str(c.to_complex())}});
        nlohmann::ordered_json j;
        j["expr"] = expr_to_text(e);
        j["cutoff"] = to_string(cutoff);
        j["terms"] = std::move(rows);
        write_out(out, j.dump(2));
    } else {
        std::string text = "# q-expansion of " + expr_to_text(e) + " below q^" + to_string(cutoff);
        for (const auto& [k, c] : s.coeffs())
            text += "\nq^" + to_string(s.exponent_of(k)) + "\t" + c.to_string() + "\t~ " +
                    complex_str(c.to_complex());
        if (s.coeffs().empty()) text += "\n(zero series)";
        write_out(out, text);
    }
    return 0;
}

int run_coeff(const std::string& expr_s, const std::string& at_s, const std::string& cutoff_s,
              const std::string& out) {
    ExprPtr e = parse_expr(expr_s);
    Rational at = parse_rational_arg(at_s);
    Rational cutoff = parse_rational_arg(cutoff_s);
    QSeries s = eval_expr(e, cutoff);
    CycNum c = s.coeff_at(at); // WindowError if at >= cutoff
    write_out(out, "coefficient of q^" + to_string(at) + " in " + expr_to_text(e) + ": " +
                       c.to_string() + "  ~ " + complex_str(c.to_complex()));
    return 0;
}

int run_numeric(const std::string& id, const std::string& expr_s, const std::string& tau_s,
                double tol, const std::string& out) {
    std::complex<double> tau = parse_complex_arg(tau_s);
    if (!(tau.imag() > 0)) throw DomainError("tau must lie in the upper half-plane");
    double qabs = std::exp(-2 * 3.14159265358979323846 * tau.imag());
    // window such that the series tail sits well below the tolerance
    double need = std::log(tol * 1e-3) / std::log(qabs);
    Rational cutoff(std::min<long long>(64, std::max<long long>(8, llround(need + 2))));
    EvalPoint p{tau, std::min(tol * 1e-3, 1e-12)};

    std::string text;
    bool ok;
    if (!id.empty()) {
        CrossCheckResult r = cross_check_identity(id, p, cutoff);
        ok = r.lhs_rhs_residual < tol && r.series_vs_direct_residual < tol;
        text = id + " at tau=" + complex_str(tau) + " (cutoff " + to_string(cutoff) + ")\n" +
               "|lhs - rhs|            = " + std::to_string(r.lhs_rhs_residual) + "\n" +
               "|series - direct sum|  = " + std::to_string(r.series_vs_direct_residual) + "\n" +
               (ok ? "within tolerance" : "EXCEEDS tolerance");
    } else {
        ExprPtr e = parse_expr(expr_s);
        std::complex<double> via_series = ps_eval(eval_expr(e, cutoff), p).value;
        std::complex<double> direct = eval_expr_numeric(e, tau, p.tol);
        double resid = std::abs(via_series - direct);
        ok = resid < tol;
        text = expr_to_text(e) + " at tau=" + complex_str(tau) + "\n" +
               "series route: " + complex_str(via_series) + "\n" +
               "direct route: " + complex_str(direct) + "\n" +
               "residual = " + std::to_string(resid) + (ok ? " (within tolerance)" : " (EXCEEDS tolerance)");
    }
    write_out(out, text);
    return ok ? 0 : 1;
}

int run_catalog(const std::string& out) {
    nlohmann::ordered_json recs = nlohmann::ordered_json::array();
    for (const auto& r : registry()) {
        nlohmann::ordered_json j;
        j["id"] = r.id;
        j["family"] = family_name(r.family);
        j["anchor"] = r.anchor;
        j["lhs"] = expr_to_text(r.lhs);
        j["rhs"] = expr_to_text(r.rhs);
        if (!r.note.empty()) j["note"] = r.note;
        recs.push_back(std::move(j));
    }
    write_out(out, recs.dump(2));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"thetaq: exact q-series engine for theta constants, theta derivatives,"
                 " eta quotients and weight-1 divisor series"};
    app.require_subcommand(1);

    std::string id, family, expr_s, cutoff_s = "8", format = "text", out, at_s, tau_s = "0+1i";
    int jobs = default_jobs();
    double tol = 1e-9;
    bool all = false, timings = false;

    auto* verify = app.add_subcommand("verify", "verify identity records exactly");
    verify->add_flag("--all", all, "verify the whole registry (default)");
    verify->add_option("--id", id, "verify a single record");
    verify->add_option("--family", family,
                       "verify one family: classical|quarter|third|constant-level|series-level");
    verify->add_option("--cutoff", cutoff_s, "exclusive exponent bound (rational), default 8");
    verify->add_option("--jobs", jobs, "worker threads (default: THETAQ_JOBS or hardware)");
    verify->add_option("--format", format, "text|json");
    verify->add_option("--out", out, "write the report to a file");
    verify->add_flag("--timings", timings, "include per-record wall time");

    auto* expand = app.add_subcommand("expand", "print the q-expansion of an expression");
    expand->add_option("expr", expr_s, "expression, e.g. \"eta(tau)^3\"")->required();
    expand->add_option("--cutoff", cutoff_s, "exclusive exponent bound (rational)");
    expand->add_option("--format", format, "text|json");
    expand->add_option("--out", out, "write to a file");

    auto* coeff = app.add_subcommand("coeff", "print one exact coefficient");
    coeff->add_option("expr", expr_s, "expression")->required();
    coeff->add_option("--at", at_s, "exponent (rational)")->required();
    coeff->add_option("--cutoff", cutoff_s, "guaranteed window (rational)");
    coeff->add_option("--out", out, "write to a file");

    auto* numeric = app.add_subcommand("numeric", "numeric cross-check at a point");
    numeric->add_option("--id", id, "registry record to check");
    numeric->add_option("--expr", expr_s, "expression to check");
    numeric->add_option("--tau", tau_s, "point in the upper half-plane, e.g. 0.1+0.8i");
    numeric->add_option("--tol", tol, "residual tolerance");
    numeric->add_option("--out", out, "write to a file");

    auto* catalog = app.add_subcommand("catalog", "emit the registry as machine-readable JSON");
    catalog->add_option("--out", out, "write to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(verify)) {
            if (!id.empty() && !family.empty())
                throw DomainError("--id and --family are mutually exclusive");
            return run_verify(id, family, cutoff_s, jobs, format, out, timings);
        }
        if (app.got_subcommand(expand)) return run_expand(expr_s, cutoff_s, format, out);
        if (app.got_subcommand(coeff)) return run_coeff(expr_s, at_s, cutoff_s, out);
        if (app.got_subcommand(numeric)) {
            if (id.empty() == expr_s.empty())
                throw DomainError("numeric needs exactly one of --id or --expr");
            return run_numeric(id, expr_s, tau_s, tol, out);
        }
        if (app.got_subcommand(catalog)) return run_catalog(out);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}

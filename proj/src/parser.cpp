#include "thetaq/parser.hpp"

#include <cctype>

namespace thetaq {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    ExprPtr run() {
        ExprPtr e = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool eat_word(const char* w) {
        skip_ws();
        std::size_t n = std::string(w).size();
        if (s_.compare(pos_, n, w) != 0) return false;
        // words must not continue as identifiers
        if (pos_ + n < s_.size() &&
            (std::isalnum(static_cast<unsigned char>(s_[pos_ + n])) || s_[pos_ + n] == '_'))
            return false;
        pos_ += n;
        return true;
    }

    long long integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected an integer");
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::stoll(s_.substr(start, pos_ - start));
    }

    Rational rational() {
        long long num = integer();
        std::size_t save = pos_;
        if (eat('/')) {
            skip_ws();
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                long long den = integer();
                if (den == 0) fail("zero denominator");
                return Rational(num, den);
            }
            pos_ = save; // the '/' belonged to the expression level
        }
        return Rational(num);
    }

    // tau | r*tau | tau/k
    Rational scale_arg() {
        expect('(');
        Rational s(1);
        if (eat_word("tau")) {
            if (eat('/')) {
                long long d = integer();
                if (d <= 0) fail("scale must be positive");
                s = Rational(1, d);
            }
        } else {
            s = rational();
            expect('*');
            if (!eat_word("tau")) fail("expected 'tau'");
            if (eat('/')) {
                long long d = integer();
                if (d <= 0) fail("scale must be positive");
                s /= d;
            }
        }
        if (s <= 0) fail("scale must be positive");
        expect(')');
        return s;
    }

    Characteristic char_arg() {
        expect('[');
        Rational e = rational();
        expect(',');
        Rational d = rational();
        expect(']');
        skip_ws();
        if (e < 0 || e > 1 || d < 0 || d >= 2)
            fail("characteristic outside the window [0,1] x [0,2)");
        return Characteristic(e, d);
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) fail("expected an identifier");
        return s_.substr(start, pos_ - start);
    }

    ExprPtr call() {
        if (eat_word("dtheta")) {
            Characteristic ch = char_arg();
            return theta_d(ch, scale_arg());
        }
        if (eat_word("theta")) {
            Characteristic ch = char_arg();
            return theta_c(ch, scale_arg());
        }
        if (eat_word("eta")) return eta_f(scale_arg());
        if (eat_word("Theta3")) return theta3_f(scale_arg());
        if (eat_word("zeta")) {
            expect('(');
            long long n = integer();
            expect(',');
            long long kk = integer();
            expect(')');
            if (n < 1) fail("zeta order must be positive");
            return scalar_f(root_of_unity(n, kk));
        }
        if (eat_word("wsum")) {
            expect('[');
            long long kind = integer();
            expect(']');
            if (kind != -4 && kind != -2) fail("wsum kind must be -4 or -2");
            return wsum_f(kind == -4 ? WeightChar::kron_neg4 : WeightChar::kron_neg2,
                          scale_arg());
        }
        if (eat_word("dsum")) {
            expect('[');
            DivisorSeriesSpec spec;
            std::string v = ident();
            if (v == "quad4") spec.variant = DivisorVariant::quad4;
            else if (v == "quad8") spec.variant = DivisorVariant::quad8;
            else if (v == "chi3") spec.variant = DivisorVariant::chi3_zeta3;
            else if (v == "chi6") spec.variant = DivisorVariant::chi3_zeta6;
            else fail("unknown dsum variant: " + v);
            expect(',');
            std::string f = ident();
            if (f == "all") spec.filter = DivisorFilter::all;
            else if (f == "dodd") spec.filter = DivisorFilter::d_odd;
            else if (f == "codd") spec.filter = DivisorFilter::codivisor_odd;
            else fail("unknown dsum filter: " + f);
            expect(',');
            std::string w = ident();
            if (w == "one") spec.weight = DivisorWeight::one;
            else if (w == "sgnd") spec.weight = DivisorWeight::sign_d;
            else if (w == "sgncd") spec.weight = DivisorWeight::sign_codivisor;
            else fail("unknown dsum weight: " + w);
            expect(',');
            std::string t = ident();
            if (t == "none") spec.twist = OuterTwist::none;
            else if (t == "oddN") spec.twist = OuterTwist::keep_odd;
            else if (t == "no3N") spec.twist = OuterTwist::keep_not_mult3;
            else if (t == "sgnN") spec.twist = OuterTwist::alternate;
            else if (t == "kronN") spec.twist = OuterTwist::kron_neg1_on_odd;
            else fail("unknown dsum twist: " + t);
            expect(',');
            spec.constant_term = rational();
            expect(']');
            spec.exp_scale = scale_arg() / 2;
            return divisor_f(spec);
        }
        fail("expected a function or number");
    }

    ExprPtr atom() {
        skip_ws();
        if (eat('-')) return scalar_f(CycNum(Rational(-1))) * atom();
        if (peek() == '(') {
            expect('(');
            ExprPtr e = expr();
            expect(')');
            return e;
        }
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return scalar_f(CycNum(rational()));
        return call();
    }

    ExprPtr factor() {
        ExprPtr e = atom();
        if (eat('^')) {
            long long n = integer();
            if (n < 0) fail("negative powers are not supported; use division");
            e = pow_f(e, static_cast<int>(n));
        }
        return e;
    }

    ExprPtr term() {
        ExprPtr e = factor();
        for (;;) {
            if (eat('*')) {
                e = e * factor();
            } else if (eat('/')) {
                e = e / factor();
            } else {
                return e;
            }
        }
    }

    ExprPtr expr() {
        ExprPtr e = term();
        for (;;) {
            if (eat('+')) {
                e = e + term();
            } else if (eat('-')) {
                e = e - term();
            } else {
                return e;
            }
        }
    }
};

} // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).run(); }

} // namespace thetaq

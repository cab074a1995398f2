#include "sexticnet/polytext.hpp"

#include <cctype>
#include <sstream>

namespace sexticnet {

namespace {

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& vars) : vars_(vars) {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) src_.push_back(ch);
    }

    MultiPoly parse() {
        MultiPoly f = expr();
        if (pos_ != src_.size()) fail("trailing input", rest());
        return f;
    }

private:
    MultiPoly expr() {
        bool neg = accept('-');
        if (!neg) accept('+');
        MultiPoly f = term();
        if (neg) f = -f;
        for (;;) {
            if (accept('+')) f += term();
            else if (accept('-')) f -= term();
            else break;
        }
        return f;
    }

    MultiPoly term() {
        MultiPoly f = factor();
        for (;;) {
            if (accept('*')) {
                f *= factor();
            } else if (accept('/')) {
                // division by a numeric literal only, as in "t^3/4"
                if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    fail("expected numeric divisor after '/'", rest());
                mpz_class den = read_uint();
                if (den == 0) fail("zero denominator", "0");
                mpq_class inv(1, den);
                inv.canonicalize();
                f = f.scaled(Scalar::rational(inv));
            } else {
                break;
            }
        }
        return f;
    }

    MultiPoly factor() {
        MultiPoly base = atom();
        if (accept('^')) {
            if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                fail("expected exponent after '^'", rest());
            base = base.pow(static_cast<uint32_t>(read_uint().get_ui()));
        }
        return base;
    }

    MultiPoly atom() {
        int arity = static_cast<int>(vars_.size());
        if (pos_ >= src_.size()) fail("unexpected end of input", "");
        char ch = src_[pos_];
        if (ch == '(') {
            ++pos_;
            MultiPoly f = expr();
            if (!accept(')')) fail("missing ')'", rest());
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            mpz_class num = read_uint();
            mpz_class den = 1;
            if (accept('/')) {
                if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    fail("expected denominator after '/'", rest());
                den = read_uint();
                if (den == 0) fail("zero denominator", "0");
            }
            mpq_class q(num, den);
            q.canonicalize();
            return MultiPoly::constant(arity, Scalar::rational(q));
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::string name = read_ident();
            for (int i = 0; i < arity; ++i) {
                if (vars_[i] == name) return MultiPoly::variable(arity, i);
            }
            fail("unknown variable '" + name + "'", name);
        }
        fail(std::string("unexpected character '") + ch + "'", std::string(1, ch));
        return MultiPoly::zero(arity);  // unreachable
    }

    mpz_class read_uint() {
        size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        return mpz_class(src_.substr(start, pos_ - start));
    }

    std::string read_ident() {
        size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        return src_.substr(start, pos_ - start);
    }

    bool accept(char ch) {
        if (pos_ < src_.size() && src_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string rest() const { return src_.substr(pos_, 12); }

    [[noreturn]] void fail(const std::string& msg, const std::string& tok) {
        throw ParseError(msg + " at position " + std::to_string(pos_), tok);
    }

    std::string src_;
    size_t pos_ = 0;
    const std::vector<std::string>& vars_;
};

}  // namespace

MultiPoly parse_polynomial(const std::string& text, const std::vector<std::string>& vars) {
    return Parser(text, vars).parse();
}

std::string print_polynomial(const MultiPoly& f, const std::vector<std::string>& vars) {
    if (static_cast<int>(vars.size()) != f.arity()) throw ShapeError("print_polynomial: variable list arity mismatch");
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    // map iterates graded-lex ascending; print leading term first
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        std::string coeff_str;
        bool negative = false;
        if (c.is_rational()) {
            mpq_class q = c.rat();
            negative = q < 0;
            coeff_str = (negative ? mpq_class(-q) : q).get_str();
        } else {
            coeff_str = std::to_string(c.residue());
        }
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        bool has_vars = exp_total(e) > 0;
        bool unit = coeff_str == "1";
        if (!unit || !has_vars) out << coeff_str;
        bool need_star = !unit && has_vars;
        for (int i = 0; i < f.arity(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) out << "*";
            need_star = true;
            out << vars[i];
            if (e[i] > 1) out << "^" << e[i];
        }
    }
    return out.str();
}

namespace {
std::vector<std::string> prefixed(const std::string& prefix, int n) {
    std::vector<std::string> v;
    v.reserve(n);
    for (int i = 0; i < n; ++i) v.push_back(prefix + std::to_string(i));
    return v;
}
}  // namespace

std::vector<std::string> x_vars(int n) { return prefixed("x", n); }
std::vector<std::string> y_vars(int n) { return prefixed("y", n); }
std::vector<std::string> l_vars(int n) { return prefixed("l", n); }

std::vector<std::string> with_t(std::vector<std::string> vars) {
    vars.push_back("t");
    return vars;
}

}  // namespace sexticnet

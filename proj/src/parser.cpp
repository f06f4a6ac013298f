#include "ncforms/parser.hpp"

#include "ncforms/rewrite.hpp"

#include <cctype>

namespace ncforms {

namespace {

struct Parser {
    const std::string &s;
    size_t i = 0;
    SignaturePtr sig;
    const RewriteSystem *sys;
    bool allow_ext;

    Parser(const std::string &text, SignaturePtr sg, const RewriteSystem *rs, bool ext)
        : s(text), sig(std::move(sg)), sys(rs), allow_ext(ext) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }

    [[noreturn]] void fail(const std::string &msg) { throw ParseError(msg, i); }

    long parse_int() {
        skip_ws();
        size_t start = i;
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            neg = s[i] == '-';
            ++i;
        }
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            fail("expected integer");
        long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            ++i;
        }
        (void)start;
        return neg ? -v : v;
    }

    // identifier with optional [..] or @group suffix, e.g. e[1,2], x1@(0,1)
    std::string parse_name() {
        skip_ws();
        size_t start = i;
        if (i >= s.size() || !std::isalpha(static_cast<unsigned char>(s[i])))
            fail("expected name");
        while (i < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
            ++i;
        if (i < s.size() && s[i] == '[') {
            while (i < s.size() && s[i] != ']') ++i;
            if (i >= s.size()) fail("unterminated '['");
            ++i;
        }
        if (i < s.size() && s[i] == '@') {
            ++i;
            if (i < s.size() && s[i] == '(') {
                while (i < s.size() && s[i] != ')') ++i;
                if (i >= s.size()) fail("unterminated group index");
                ++i;
            } else {
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            }
        }
        return s.substr(start, i - start);
    }

    ExtendedForm one() {
        return ExtendedForm::from_form(Form::one(sig));
    }

    ExtendedForm atom() {
        skip_ws();
        if (i >= s.size()) fail("unexpected end of input");
        char c = s[i];
        if (c == '(') {
            ++i;
            ExtendedForm e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = parse_int();
            Rational q(num);
            if (peek() == '/') {
                ++i;
                long den = parse_int();
                if (den == 0) fail("zero denominator");
                q = Rational(num, den);
            }
            return ExtendedForm::from_form(
                Form::scalar(sig, Scalar::rational(sig->params(), q)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t save = i;
            std::string name = parse_name();
            if (name == "d" && peek() == '(') {
                ++i;
                ExtendedForm inner = expr();
                if (!eat(')')) fail("expected ')'");
                return differential_ext(inner, sys ? &sys->d_images() : nullptr);
            }
            if (allow_ext && name == "t")
                return ExtendedForm::from_form(Form::one(sig), 1, false);
            if (allow_ext && name == "tau")
                return ExtendedForm::from_form(Form::one(sig), 0, true);
            int slot = sig->slot(name);
            if (slot < 0 && name.size() > 1 && name[0] == 'd') {
                int base = sig->slot(name.substr(1));
                if (base >= 0 && sig->gen(base).d_partner >= 0)
                    slot = sig->gen(base).d_partner;
            }
            if (slot >= 0)
                return ExtendedForm::from_form(Form::letter(sig, slot));
            if (sig->params()->resolve(name))
                return ExtendedForm::from_form(
                    Form::scalar(sig, Scalar::param(sig->params(), name)));
            i = save;
            fail("unknown generator or parameter: " + name);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    ExtendedForm power() {
        if (peek() == '-') {
            ++i;
            return -power();
        }
        ExtendedForm base = atom();
        if (peek() == '^') {
            ++i;
            long e = parse_int();
            if (e < 0) {
                // only monomial scalars are invertible
                if (!base.minus().empty() || base.plus().size() != 1 ||
                    base.plus().begin()->first != 0 ||
                    base.plus().begin()->second.term_count() != 1 ||
                    !base.plus().begin()->second.terms().begin()->first.empty())
                    fail("negative powers are defined for scalar monomials only");
                Scalar c = base.plus().begin()->second.scalar_part();
                Scalar inv = c.monomial_inverse();
                Scalar r = Scalar::rational(sig->params(), 1);
                for (long k = 0; k < -e; ++k) r *= inv;
                return ExtendedForm::from_form(Form::scalar(sig, r));
            }
            ExtendedForm r = one();
            for (long k = 0; k < e; ++k) r = r * base;
            return r;
        }
        return base;
    }

    ExtendedForm term() {
        ExtendedForm r = power();
        while (peek() == '*') {
            ++i;
            r = r * power();
        }
        return r;
    }

    ExtendedForm expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            ++i;
            neg = true;
        } else if (peek() == '+') {
            ++i;
        }
        ExtendedForm r = term();
        if (neg) r = -r;
        while (true) {
            char c = peek();
            if (c == '+') {
                ++i;
                r = r + term();
            } else if (c == '-') {
                ++i;
                r = r - term();
            } else {
                break;
            }
        }
        return r;
    }

    ExtendedForm run() {
        ExtendedForm r = expr();
        skip_ws();
        if (i != s.size()) fail("trailing input");
        return r;
    }
};

} // namespace

ExtendedForm parse_extended(const std::string &text, const SignaturePtr &sig,
                            const RewriteSystem *sys) {
    Parser p(text, sig, sys, true);
    return p.run();
}

Form parse_form(const std::string &text, const SignaturePtr &sig,
                const RewriteSystem *sys) {
    Parser p(text, sig, sys, false);
    ExtendedForm e = p.run();
    if (!e.minus().empty()) throw ParseError("tau not allowed here", 0);
    for (const auto &[m, f] : e.plus())
        if (m != 0) throw ParseError("t not allowed here", 0);
    auto it = e.plus().find(0);
    return it == e.plus().end() ? Form::zero(sig) : it->second;
}

Scalar parse_scalar(const std::string &text, const ParamTablePtr &params) {
    std::vector<GeneratorInfo> none;
    none.push_back({"__unit__", 0, 0, -1, -1}); // placeholder, never referenced
    auto sig = std::make_shared<const Signature>(std::move(none), params);
    Form f = parse_form(text, sig);
    if (f.term_count() > 1 || (f.term_count() == 1 && !f.terms().begin()->first.empty()))
        throw ParseError("expected a scalar expression", 0);
    return f.scalar_part();
}

} // namespace ncforms

// Recursive-descent parser for the fixture polynomial syntax:
//   3/5*u3^2*u_m1 - u1*u_m3
#include <cctype>

#include "mu/poly.hpp"

namespace mu {

namespace {

struct Parser {
    std::string_view s;
    size_t p = 0;
    const Ring& ring;

    [[noreturn]] void fail(const std::string& msg) const {
        throw MuError("parse error at " + std::to_string(p) + " in '" + std::string(s) + "': " + msg);
    }
    void ws() {
        while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    }
    bool eat(char c) {
        ws();
        if (p < s.size() && s[p] == c) {
            ++p;
            return true;
        }
        return false;
    }

    MultiPoly expr() {
        MultiPoly acc(ring);
        bool neg = false;
        ws();
        if (eat('-'))
            neg = true;
        else
            eat('+');
        MultiPoly t = term();
        acc = neg ? -t : t;
        while (true) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                break;
        }
        return acc;
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        while (true) {
            if (eat('*'))
                acc = acc * factor();
            else if (eat('/')) {
                MultiPoly d = factor();
                if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
                acc = acc * (Rational(1) / d.constant_term());
            } else
                break;
        }
        return acc;
    }

    MultiPoly factor() {
        if (eat('-')) return -factor();
        MultiPoly b = atom();
        if (eat('^')) {
            ws();
            size_t q = p;
            while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
            if (q == p) fail("expected exponent");
            b = b.pow(std::stoi(std::string(s.substr(q, p - q))));
        }
        return b;
    }

    MultiPoly atom() {
        ws();
        if (p >= s.size()) fail("unexpected end");
        char c = s[p];
        if (c == '(') {
            ++p;
            MultiPoly e = expr();
            if (!eat(')')) fail("expected )");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t q = p;
            while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
            return MultiPoly::constant(ring, Rational(mpz_class(std::string(s.substr(q, p - q)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t q = p;
            while (p < s.size() && (std::isalnum(static_cast<unsigned char>(s[p])) || s[p] == '_')) ++p;
            std::string_view name = s.substr(q, p - q);
            auto i = ring->index(name);
            if (!i) fail("unknown variable '" + std::string(name) + "'");
            return MultiPoly::var(ring, *i);
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const Ring& ring) {
    Parser ps{text, 0, ring};
    MultiPoly r = ps.expr();
    ps.ws();
    if (ps.p != text.size()) ps.fail("trailing input");
    return r;
}

}  // namespace mu

#include "stabcsa/expr_parser.hpp"

#include <cctype>

#include "stabcsa/errors.hpp"

namespace stabcsa {

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    explicit Lexer(const std::string& t) : text(t) {}

    void advance() {
        if (pos < text.size()) {
            if (text[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++pos;
        }
    }

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) advance();
    }

    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) { throw ParseError(what, line, col); }
};

class Parser {
public:
    explicit Parser(const std::string& text) : lx_(text) {}

    RatFunc parse() {
        RatFunc r = expression();
        if (lx_.peek() != '\0') lx_.fail("unexpected trailing input");
        return r;
    }

private:
    Lexer lx_;

    RatFunc expression() {
        RatFunc acc;
        char c = lx_.peek();
        bool neg = false;
        if (c == '+' || c == '-') {
            neg = c == '-';
            lx_.advance();
        }
        acc = term();
        if (neg) acc = -acc;
        while (true) {
            c = lx_.peek();
            if (c == '+') {
                lx_.advance();
                acc += term();
            } else if (c == '-') {
                lx_.advance();
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    RatFunc term() {
        RatFunc acc = factor();
        while (true) {
            char c = lx_.peek();
            if (c == '*') {
                lx_.advance();
                acc *= factor();
            } else if (c == '/') {
                lx_.advance();
                RatFunc d = factor();
                if (d.is_zero()) lx_.fail("division by zero");
                acc /= d;
            } else {
                return acc;
            }
        }
    }

    RatFunc factor() {
        char c = lx_.peek();
        if (c == '-') {
            lx_.advance();
            return -factor();
        }
        if (c == '+') {
            lx_.advance();
            return factor();
        }
        RatFunc base = atom();
        if (lx_.peek() == '^') {
            lx_.advance();
            long e = integer_literal();
            if (e < 0) lx_.fail("negative exponents are not allowed; use division");
            RatFunc out(1);
            for (long k = 0; k < e; ++k) out *= base;
            return out;
        }
        return base;
    }

    long integer_literal() {
        lx_.skip_space();
        bool neg = false;
        if (lx_.peek() == '-') {
            neg = true;
            lx_.advance();
        }
        char c = lx_.peek();
        if (!std::isdigit(static_cast<unsigned char>(c))) lx_.fail("expected integer");
        long v = 0;
        while (lx_.pos < lx_.text.size() &&
               std::isdigit(static_cast<unsigned char>(lx_.text[lx_.pos]))) {
            v = v * 10 + (lx_.text[lx_.pos] - '0');
            if (v > 1000000000L) lx_.fail("integer literal too large");
            lx_.advance();
        }
        return neg ? -v : v;
    }

    RatFunc atom() {
        char c = lx_.peek();
        if (c == '(') {
            lx_.advance();
            RatFunc r = expression();
            if (lx_.peek() != ')') lx_.fail("expected ')'");
            lx_.advance();
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return RatFunc(MultiPoly(integer_literal()));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (lx_.pos < lx_.text.size() &&
                   (std::isalnum(static_cast<unsigned char>(lx_.text[lx_.pos])))) {
                name += lx_.text[lx_.pos];
                lx_.advance();
            }
            if (name == "i") return RatFunc(MultiPoly(Gaussian::i()));
            if (name.size() >= 2 &&
                (name[0] == 'x' || name[0] == 'y' || name[0] == 't' || name[0] == 'l')) {
                std::uint32_t idx = 0;
                for (std::size_t k = 1; k < name.size(); ++k) {
                    if (!std::isdigit(static_cast<unsigned char>(name[k])))
                        lx_.fail("unknown identifier '" + name + "'");
                    idx = idx * 10 + static_cast<std::uint32_t>(name[k] - '0');
                }
                if (idx == 0 || idx > 0xFFFFFF) lx_.fail("variable index out of range");
                VarKind kind = name[0] == 'x'   ? VarKind::X
                               : name[0] == 'y' ? VarKind::Y
                               : name[0] == 't' ? VarKind::T
                                                : VarKind::Lambda;
                return RatFunc::variable(make_var(kind, idx));
            }
            lx_.fail("unknown identifier '" + name + "'");
        }
        lx_.fail(c == '\0' ? "unexpected end of input"
                           : std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

RatFunc parse_ratfunc(const std::string& text) { return Parser(text).parse(); }

MultiPoly parse_poly(const std::string& text) {
    RatFunc r = parse_ratfunc(text);
    if (!r.is_polynomial())
        throw ParseError("expected a polynomial, got a nontrivial denominator", 1, 1);
    return r.num();
}

}  // namespace stabcsa

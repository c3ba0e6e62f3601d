#include "rigid/parse.hpp"

#include <cctype>

namespace rigid {

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    explicit Lexer(const std::string& text) : s(text) {}

    void skipWs() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skipWs();
        return pos < s.size() ? s[pos] : '\0';
    }
    char get() {
        char c = peek();
        if (pos < s.size()) ++pos;
        return c;
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

int varIndexAt(Lexer& lx) {
    // Returns 1-based variable index if the next token is a variable, else 0.
    char c = lx.peek();
    if (c == 'x') return 1;
    if (c == 'y') return 2;
    if (c == 'z') return 3;
    if (c == 'u') {
        size_t p = lx.pos + 1;
        if (p < lx.s.size() && lx.s[p] >= '1' && lx.s[p] <= '9') return lx.s[p] - '0';
    }
    return 0;
}

struct Parser {
    Lexer lx;
    int d;

    Parser(const std::string& text, int dim) : lx(text), d(dim) {}

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, lx.pos); }

    Int parseInt() {
        lx.skipWs();
        size_t start = lx.pos;
        while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
            ++lx.pos;
        if (lx.pos == start) fail("expected integer");
        return Int(lx.s.substr(start, lx.pos - start));
    }

    int parseExponent() {
        bool neg = lx.eat('-');
        Int v = parseInt();
        if (!v.fits_sint_p()) fail("exponent too large");
        int e = static_cast<int>(v.get_si());
        return neg ? -e : e;
    }

    LaurentPoly parseFactor() {
        char c = lx.peek();
        if (c == '-') {
            lx.get();
            return -parseFactor();
        }
        LaurentPoly base(d);
        bool isMonomialBase = false;
        if (c == '(') {
            lx.get();
            base = parseExpr();
            if (!lx.eat(')')) fail("expected ')'");
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            base = LaurentPoly::constant(d, parseInt());
        } else if (int vi = varIndexAt(lx); vi > 0) {
            if (vi > d) fail("variable u" + std::to_string(vi) + " exceeds dimension");
            lx.get();
            if (lx.s[lx.pos - 1] == 'u') lx.get();  // consume the digit
            base = LaurentPoly::variable(d, vi - 1);
            isMonomialBase = true;
        } else {
            fail("unexpected character");
        }
        if (lx.eat('^')) {
            int e = parseExponent();
            if (e < 0 && !isMonomialBase && base.termCount() != 1)
                fail("negative exponent requires a monomial base");
            try {
                base = base.pow(e);
            } catch (const std::invalid_argument& ex) {
                fail(ex.what());
            }
        }
        // Implicit multiplication (a variable or '(' right after) is rejected.
        char nxt = lx.peek();
        if (nxt == '(' || varIndexAt(lx) > 0 || std::isdigit(static_cast<unsigned char>(nxt)))
            fail("implicit multiplication is not allowed");
        return base;
    }

    LaurentPoly parseTerm() {
        LaurentPoly f = parseFactor();
        while (lx.eat('*')) f = f * parseFactor();
        return f;
    }

    LaurentPoly parseExpr() {
        LaurentPoly f = parseTerm();
        for (;;) {
            char c = lx.peek();
            if (c == '+') {
                lx.get();
                f = f + parseTerm();
            } else if (c == '-') {
                lx.get();
                f = f - parseTerm();
            } else {
                break;
            }
        }
        return f;
    }
};

int scanMaxVarIndex(const std::string& text) {
    int mx = 0;
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == 'x') mx = std::max(mx, 1);
        else if (c == 'y') mx = std::max(mx, 2);
        else if (c == 'z') mx = std::max(mx, 3);
        else if (c == 'u' && i + 1 < text.size() && text[i + 1] >= '1' && text[i + 1] <= '9')
            mx = std::max(mx, text[i + 1] - '0');
    }
    return mx;
}

}  // namespace

LaurentPoly parsePoly(const std::string& text, int expectedDim) {
    int used = scanMaxVarIndex(text);
    int d = expectedDim > 0 ? expectedDim : std::max(used, 1);
    if (expectedDim > 0 && used > expectedDim)
        throw ParseError("dimension conflict: variable u" + std::to_string(used) +
                             " but d=" + std::to_string(expectedDim),
                         0);
    Parser p(text, d);
    LaurentPoly f = p.parseExpr();
    p.lx.skipWs();
    if (p.lx.pos != text.size()) p.fail("trailing input");
    return f;
}

}  // namespace rigid

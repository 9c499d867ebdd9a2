#include "qsd/parse.hpp"

#include <cctype>

namespace qsd {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    IntPoly run() {
        IntPoly e = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    IntPoly expr() {
        IntPoly acc = term();
        for (;;) {
            skip_ws();
            if (accept('+'))
                acc = acc + term();
            else if (accept('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    IntPoly term() {
        IntPoly acc = factor();
        for (;;) {
            skip_ws();
            if (accept('*'))
                acc = acc * factor();
            else
                return acc;
        }
    }

    IntPoly factor() {
        IntPoly b = base();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '-') fail("negative exponent");
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("expected nonnegative integer exponent");
            unsigned long e = natural_ul();
            return b.pow(static_cast<unsigned>(e));
        }
        return b;
    }

    IntPoly base() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            IntPoly e = expr();
            skip_ws();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (c == 'q') {
            ++pos_;
            return IntPoly::q();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return IntPoly(natural());
        fail("expected number, 'q', '(' or '-'");
    }

    Int natural() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return Int(s_.substr(start, pos_ - start));
    }

    unsigned long natural_ul() {
        Int n = natural();
        if (!n.fits_ulong_p()) fail("exponent too large");
        return n.get_ui();
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

IntPoly parse_poly(const std::string& text) { return Parser(text).run(); }

std::string print_poly(const IntPoly& p) { return p.str(); }

}  // namespace qsd

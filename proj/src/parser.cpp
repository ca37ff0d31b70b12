#include <cctype>
#include <string>

#include "sweb/errors.hpp"
#include "sweb/expr.hpp"

namespace sweb {

namespace {

// Recursive descent over the grammar (loosest to tightest):
//   expression := '-' expression | addsub
//   addsub     := muldiv (('+'|'-') muldiv)*
//   muldiv     := power (('*'|'/') power)*
//   power      := primary ('^' power)?
//   primary    := NUMBER | IDENT '(' expression ')' | IDENT | '(' expression ')'
class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    Expr run() {
        Expr e = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(pos_, msg); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (peek_is(c)) { ++pos_; return true; }
        return false;
    }

    void expect(char c, const std::string& what) {
        if (!accept(c)) fail("expected '" + std::string(1, c) + "' " + what);
    }

    Expr expression() {
        if (accept('-')) return neg(expression());
        return addsub();
    }

    Expr addsub() {
        Expr e = muldiv();
        while (true) {
            if (accept('+')) e = add(e, muldiv());
            else if (accept('-')) e = sub(e, muldiv());
            else return e;
        }
    }

    Expr muldiv() {
        Expr e = power();
        while (true) {
            if (accept('*')) e = mul(e, power());
            else if (accept('/')) e = div(e, power());
            else return e;
        }
    }

    Expr power() {
        Expr base = primary();
        if (accept('^')) return pow(base, power());
        return base;
    }

    Expr primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (c >= 'a' && c <= 'z') return identifier();
        if (c == '(') {
            ++pos_;
            Expr e = expression();
            expect(')', "to close group");
            return e;
        }
        fail("expected a number, identifier, or '('");
    }

    Expr number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            std::size_t frac = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ == frac) fail("expected digits after decimal point");
        }
        return num(Rational::from_string(text_.substr(start, pos_ - start)));
    }

    Expr identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] >= 'a' && text_[pos_] <= 'z') ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        if (name == "x") return var('x');
        if (name == "y") return var('y');
        Func fn;
        if (name == "exp") fn = Func::Exp;
        else if (name == "log") fn = Func::Log;
        else if (name == "sin") fn = Func::Sin;
        else if (name == "cos") fn = Func::Cos;
        else if (name == "sqrt") fn = Func::Sqrt;
        else throw UnknownIdentifier(start, name);
        expect('(', "after function name");
        Expr arg = expression();
        expect(')', "to close call");
        return call(fn, arg);
    }
};

}  // namespace

Expr parse(const std::string& text) {
    if (text.empty()) throw SyntaxError(0, "empty input");
    return Parser(text).run();
}

}  // namespace sweb

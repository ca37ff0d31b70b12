#include <string>

#include "sweb/expr.hpp"

namespace sweb {

namespace {

// Precedence levels for parenthesization; higher binds tighter.
// Unary minus is the loosest operator in the grammar.
constexpr int kPrecNeg = 0;
constexpr int kPrecAddSub = 1;
constexpr int kPrecMulDiv = 2;
constexpr int kPrecPow = 3;
constexpr int kPrecAtom = 4;

int precedence(const Expr& e) {
    switch (e->kind) {
        case NodeKind::Unary: return kPrecNeg;
        case NodeKind::Binary:
            switch (e->bop) {
                case BinOp::Add:
                case BinOp::Sub: return kPrecAddSub;
                case BinOp::Mul:
                case BinOp::Div: return kPrecMulDiv;
                case BinOp::Pow: return kPrecPow;
            }
            return kPrecAtom;
        case NodeKind::Literal:
            // "p/q" fallback prints as a division.
            if (!e->value.is_integer() && e->value.to_decimal_string().empty()) return kPrecMulDiv;
            if (e->value.sign() < 0) return kPrecNeg;
            return kPrecAtom;
        default: return kPrecAtom;
    }
}

std::string render(const Expr& e);

std::string child(const Expr& c, int min_prec) {
    std::string s = render(c);
    if (precedence(c) < min_prec) return "(" + s + ")";
    return s;
}

std::string literal_text(const Rational& v) {
    if (v.is_integer()) return v.to_string();
    std::string dec = v.to_decimal_string();
    if (!dec.empty()) return dec;
    return v.to_string();  // "p/q"
}

std::string render(const Expr& e) {
    switch (e->kind) {
        case NodeKind::Literal: return literal_text(e->value);
        case NodeKind::Variable: return std::string(1, e->var);
        case NodeKind::WSym: return "W" + std::to_string(e->worder);
        case NodeKind::Unary: return "-" + child(e->lhs, kPrecNeg);
        case NodeKind::Binary: {
            switch (e->bop) {
                case BinOp::Add:
                    return child(e->lhs, kPrecAddSub) + " + " + child(e->rhs, kPrecAddSub + 1);
                case BinOp::Sub:
                    return child(e->lhs, kPrecAddSub) + " - " + child(e->rhs, kPrecAddSub + 1);
                case BinOp::Mul:
                    return child(e->lhs, kPrecMulDiv) + "*" + child(e->rhs, kPrecMulDiv + 1);
                case BinOp::Div:
                    return child(e->lhs, kPrecMulDiv) + "/" + child(e->rhs, kPrecMulDiv + 1);
                case BinOp::Pow:
                    return child(e->lhs, kPrecPow + 1) + "^" + child(e->rhs, kPrecPow);
            }
            return {};
        }
        case NodeKind::Call: {
            const char* name = "";
            switch (e->fn) {
                case Func::Exp: name = "exp"; break;
                case Func::Log: name = "log"; break;
                case Func::Sin: name = "sin"; break;
                case Func::Cos: name = "cos"; break;
                case Func::Sqrt: name = "sqrt"; break;
            }
            return std::string(name) + "(" + render(e->lhs) + ")";
        }
    }
    return {};
}

}  // namespace

std::string format(const Expr& e) { return render(e); }

}  // namespace sweb

#include <cmath>
#include <string>

#include "sweb/errors.hpp"
#include "sweb/expr.hpp"

namespace sweb {

namespace {

std::string key_of(const Expr& e) {
    if (e->kind == NodeKind::Variable) return std::string(1, e->var);
    return "W" + std::to_string(e->worder);
}

// Exact square root of a nonnegative rational, or ExactnessError.
Rational exact_sqrt(const Rational& q) {
    if (q.sign() < 0) throw DomainError("sqrt of negative value");
    mpz_class num = q.raw().get_num(), den = q.raw().get_den();
    mpz_class rn, rd;
    if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), 2) == 0 && num != 0)
        throw ExactnessError("sqrt argument is not a rational square");
    if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), 2) == 0)
        throw ExactnessError("sqrt argument is not a rational square");
    return Rational(mpq_class(rn, rd));
}

}  // namespace

Rational evaluate_exact(const Expr& e, const Bindings& env) {
    switch (e->kind) {
        case NodeKind::Literal: return e->value;
        case NodeKind::Variable:
        case NodeKind::WSym: {
            auto it = env.find(key_of(e));
            if (it == env.end()) throw UnboundVariable(key_of(e));
            return it->second;
        }
        case NodeKind::Unary: return -evaluate_exact(e->lhs, env);
        case NodeKind::Binary: {
            Rational a = evaluate_exact(e->lhs, env);
            if (e->bop == BinOp::Pow) {
                Rational n = evaluate_exact(e->rhs, env);
                if (!n.fits_long()) throw ExactnessError("non-integer exponent in exact mode");
                return a.pow(n.to_long());
            }
            Rational b = evaluate_exact(e->rhs, env);
            switch (e->bop) {
                case BinOp::Add: return a + b;
                case BinOp::Sub: return a - b;
                case BinOp::Mul: return a * b;
                case BinOp::Div: return a / b;  // throws DivisionByZero
                default: break;
            }
            return Rational();
        }
        case NodeKind::Call: {
            Rational a = evaluate_exact(e->lhs, env);
            switch (e->fn) {
                case Func::Exp:
                    if (a.is_zero()) return Rational(1);
                    throw ExactnessError("exp without exact image");
                case Func::Log:
                    if (a.sign() <= 0) throw DomainError("log of nonpositive value");
                    if (a.is_one()) return Rational(0);
                    throw ExactnessError("log without exact image");
                case Func::Sin:
                    if (a.is_zero()) return Rational(0);
                    throw ExactnessError("sin without exact image");
                case Func::Cos:
                    if (a.is_zero()) return Rational(1);
                    throw ExactnessError("cos without exact image");
                case Func::Sqrt:
                    return exact_sqrt(a);
            }
            return Rational();
        }
    }
    return Rational();
}

double evaluate_double(const Expr& e, const Bindings& env) {
    switch (e->kind) {
        case NodeKind::Literal: return e->value.to_double();
        case NodeKind::Variable:
        case NodeKind::WSym: {
            auto it = env.find(key_of(e));
            if (it == env.end()) throw UnboundVariable(key_of(e));
            return it->second.to_double();
        }
        case NodeKind::Unary: return -evaluate_double(e->lhs, env);
        case NodeKind::Binary: {
            double a = evaluate_double(e->lhs, env);
            double b = evaluate_double(e->rhs, env);
            switch (e->bop) {
                case BinOp::Add: return a + b;
                case BinOp::Sub: return a - b;
                case BinOp::Mul: return a * b;
                case BinOp::Div:
                    if (b == 0.0) throw DivisionByZero();
                    return a / b;
                case BinOp::Pow: {
                    if (b == std::floor(b) && std::abs(b) < 1e9) {
                        if (a == 0.0 && b < 0) throw DivisionByZero();
                        return std::pow(a, b);
                    }
                    if (a <= 0.0) throw DomainError("non-integer power of nonpositive base");
                    return std::exp(b * std::log(a));
                }
            }
            return 0.0;
        }
        case NodeKind::Call: {
            double a = evaluate_double(e->lhs, env);
            switch (e->fn) {
                case Func::Exp: return std::exp(a);
                case Func::Log:
                    if (a <= 0.0) throw DomainError("log of nonpositive value");
                    return std::log(a);
                case Func::Sin: return std::sin(a);
                case Func::Cos: return std::cos(a);
                case Func::Sqrt:
                    if (a < 0.0) throw DomainError("sqrt of negative value");
                    return std::sqrt(a);
            }
            return 0.0;
        }
    }
    return 0.0;
}

}  // namespace sweb

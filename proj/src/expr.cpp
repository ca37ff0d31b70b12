#include "sweb/expr.hpp"

#include <cassert>

#include "sweb/errors.hpp"

namespace sweb {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

ExprNode::ExprNode(NodeKind k, Rational v, char c, int w, BinOp b, Func f, Expr l, Expr r)
    : kind(k), value(std::move(v)), var(c), worder(w), bop(b), fn(f),
      lhs(std::move(l)), rhs(std::move(r)) {
    std::size_t h = static_cast<std::size_t>(kind) * 1099511628211ULL;
    switch (kind) {
        case NodeKind::Literal: h = mix(h, value.hash()); break;
        case NodeKind::Variable: h = mix(h, static_cast<std::size_t>(var)); break;
        case NodeKind::WSym: h = mix(h, static_cast<std::size_t>(worder) + 17); break;
        case NodeKind::Unary: h = mix(h, lhs->hash()); break;
        case NodeKind::Binary:
            h = mix(h, static_cast<std::size_t>(bop) + 31);
            h = mix(h, lhs->hash());
            h = mix(h, rhs->hash());
            break;
        case NodeKind::Call:
            h = mix(h, static_cast<std::size_t>(fn) + 53);
            h = mix(h, lhs->hash());
            break;
    }
    hash_ = h;
}

Expr num(Rational v) {
    return std::make_shared<ExprNode>(NodeKind::Literal, std::move(v), 0, 0,
                                      BinOp::Add, Func::Exp, nullptr, nullptr);
}

Expr num(long v) { return num(Rational(v)); }

Expr var(char name) {
    assert(name == 'x' || name == 'y');
    return std::make_shared<ExprNode>(NodeKind::Variable, Rational(), name, 0,
                                      BinOp::Add, Func::Exp, nullptr, nullptr);
}

Expr wsym(int order) {
    if (order < 0 || order > kMaxWOrder) throw WOrderOverflow(order);
    return std::make_shared<ExprNode>(NodeKind::WSym, Rational(), 0, order,
                                      BinOp::Add, Func::Exp, nullptr, nullptr);
}

Expr neg(Expr e) {
    return std::make_shared<ExprNode>(NodeKind::Unary, Rational(), 0, 0,
                                      BinOp::Add, Func::Exp, std::move(e), nullptr);
}

static Expr binary(BinOp op, Expr a, Expr b) {
    return std::make_shared<ExprNode>(NodeKind::Binary, Rational(), 0, 0,
                                      op, Func::Exp, std::move(a), std::move(b));
}

Expr add(Expr a, Expr b) { return binary(BinOp::Add, std::move(a), std::move(b)); }
Expr sub(Expr a, Expr b) { return binary(BinOp::Sub, std::move(a), std::move(b)); }
Expr mul(Expr a, Expr b) { return binary(BinOp::Mul, std::move(a), std::move(b)); }
Expr div(Expr a, Expr b) { return binary(BinOp::Div, std::move(a), std::move(b)); }
Expr pow(Expr base, Expr exp) { return binary(BinOp::Pow, std::move(base), std::move(exp)); }
Expr pow(Expr base, long exp) { return pow(std::move(base), num(exp)); }

Expr call(Func f, Expr arg) {
    return std::make_shared<ExprNode>(NodeKind::Call, Rational(), 0, 0,
                                      BinOp::Add, f, std::move(arg), nullptr);
}

bool equal(const Expr& a, const Expr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    if (a->hash() != b->hash() || a->kind != b->kind) return false;
    switch (a->kind) {
        case NodeKind::Literal: return a->value == b->value;
        case NodeKind::Variable: return a->var == b->var;
        case NodeKind::WSym: return a->worder == b->worder;
        case NodeKind::Unary: return equal(a->lhs, b->lhs);
        case NodeKind::Binary:
            return a->bop == b->bop && equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
        case NodeKind::Call: return a->fn == b->fn && equal(a->lhs, b->lhs);
    }
    return false;
}

bool contains_w(const Expr& e) {
    if (!e) return false;
    if (e->kind == NodeKind::WSym) return true;
    return contains_w(e->lhs) || contains_w(e->rhs);
}

bool contains_var(const Expr& e, char name) {
    if (!e) return false;
    if (e->kind == NodeKind::Variable && e->var == name) return true;
    return contains_var(e->lhs, name) || contains_var(e->rhs, name);
}

Expr substitute(const Expr& e, const Expr& target, const Expr& replacement) {
    if (equal(e, target)) return replacement;
    switch (e->kind) {
        case NodeKind::Literal:
        case NodeKind::Variable:
        case NodeKind::WSym:
            return e;
        case NodeKind::Unary: {
            Expr c = substitute(e->lhs, target, replacement);
            return c.get() == e->lhs.get() ? e : neg(c);
        }
        case NodeKind::Binary: {
            Expr l = substitute(e->lhs, target, replacement);
            Expr r = substitute(e->rhs, target, replacement);
            if (l.get() == e->lhs.get() && r.get() == e->rhs.get()) return e;
            return std::make_shared<ExprNode>(NodeKind::Binary, Rational(), 0, 0,
                                              e->bop, Func::Exp, std::move(l), std::move(r));
        }
        case NodeKind::Call: {
            Expr c = substitute(e->lhs, target, replacement);
            return c.get() == e->lhs.get() ? e : call(e->fn, c);
        }
    }
    return e;
}

}  // namespace sweb

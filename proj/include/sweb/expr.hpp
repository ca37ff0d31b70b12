#pragma once

#include <map>
#include <memory>
#include <string>

#include "sweb/rational.hpp"

namespace sweb {

// Expression trees are immutable and shared; Expr is a handle to a node.
class ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

enum class NodeKind { Literal, Variable, WSym, Unary, Binary, Call };
enum class BinOp { Add, Sub, Mul, Div, Pow };
enum class Func { Exp, Log, Sin, Cos, Sqrt };

/// Highest admissible W-indeterminate order (W0..W6).
inline constexpr int kMaxWOrder = 6;

class ExprNode {
public:
    NodeKind kind;
    Rational value;   // Literal
    char var = 0;     // Variable: 'x' or 'y'
    int worder = 0;   // WSym: 0..kMaxWOrder
    BinOp bop = BinOp::Add;
    Func fn = Func::Exp;
    Expr lhs, rhs;    // Binary: both; Unary/Call: lhs only

    std::size_t hash() const { return hash_; }

    ExprNode(NodeKind k, Rational v, char c, int w, BinOp b, Func f, Expr l, Expr r);

private:
    std::size_t hash_;
};

// ---------------------------------------------------------------------------
// Construction (raw: no folding, trees stored exactly as built)
// ---------------------------------------------------------------------------

Expr num(Rational v);
Expr num(long v);
Expr var(char name);  // 'x' or 'y'
Expr wsym(int order);
Expr neg(Expr e);
Expr add(Expr a, Expr b);
Expr sub(Expr a, Expr b);
Expr mul(Expr a, Expr b);
Expr div(Expr a, Expr b);
Expr pow(Expr base, Expr exp);
Expr pow(Expr base, long exp);
Expr call(Func f, Expr arg);

/// Structural equality (hash-accelerated).
bool equal(const Expr& a, const Expr& b);

/// True if the tree contains any W-indeterminate.
bool contains_w(const Expr& e);
/// True if the tree contains the given variable.
bool contains_var(const Expr& e, char name);

// ---------------------------------------------------------------------------
// Parse / print
// ---------------------------------------------------------------------------

/// Parses the expression grammar (precedence, loosest to tightest:
/// unary minus, add/sub, mul/div, pow; pow right-associative).
/// Throws SyntaxError / UnknownIdentifier.
Expr parse(const std::string& text);

/// Canonical text form; parse(format(e)) is structurally equal to e for
/// W-free e whose literals are integers or finite decimals.
std::string format(const Expr& e);

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

enum class EvalMode { Exact, Float };

/// Variable bindings; keys "x", "y", "W0".."W6". Values held exactly.
using Bindings = std::map<std::string, Rational>;

/// Exact evaluation. Transcendental nodes are admitted only when the argument
/// has an exact image (exp(0), log(1), sqrt of a rational square, sin(0),
/// cos(0)); otherwise ExactnessError.
Rational evaluate_exact(const Expr& e, const Bindings& env);

/// Bottom-up double evaluation.
double evaluate_double(const Expr& e, const Bindings& env);

/// Replaces every occurrence of target (a Variable or WSym node) by
/// replacement. No folding.
Expr substitute(const Expr& e, const Expr& target, const Expr& replacement);

}  // namespace sweb

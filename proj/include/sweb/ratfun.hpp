#pragma once

#include <utility>
#include <vector>

#include "sweb/expr.hpp"
#include "sweb/polynomial.hpp"

namespace sweb {

/// Registry mapping transcendental subtrees (atoms) to polynomial variables.
/// Atom ids start at kFirstAtomVar. Atoms are compared structurally.
class AtomTable {
public:
    /// Returns the variable id for the atom, registering it if new.
    VarId id_for(const Expr& atom);
    /// Looks up without registering; -1 if absent.
    VarId find(const Expr& atom) const;
    const Expr& expr_of(VarId id) const;
    std::size_t size() const { return atoms_.size(); }
    bool empty() const { return atoms_.empty(); }

private:
    std::vector<Expr> atoms_;
};

/// Rational function with a factored denominator: num / prod(factor_i^k_i).
/// Factors are monic (leading graded-lex coefficient 1), nonconstant, sorted;
/// the numerator absorbs all scalars. Trial division keeps the numerator
/// reduced against the factors opportunistically; canonicalized() performs
/// the full gcd reduction.
class RationalFunction {
public:
    using Factor = std::pair<Polynomial, int>;

    RationalFunction() = default;  // zero
    static RationalFunction constant(Rational c);
    static RationalFunction constant(long c) { return constant(Rational(c)); }
    static RationalFunction variable(VarId v);
    static RationalFunction from_polynomial(Polynomial p);
    static RationalFunction make(Polynomial num, std::vector<Factor> den);
    static RationalFunction quotient(Polynomial num, Polynomial den);

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.empty(); }
    Rational constant_value() const { return num_.constant_value(); }

    const Polynomial& num() const { return num_; }
    const std::vector<Factor>& den_factors() const { return den_; }
    Polynomial expanded_den() const;

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction pow(int e) const;
    RationalFunction reciprocal() const;

    /// Fully reduced form: single coprime (num, den) pair, den monic.
    RationalFunction canonicalized() const;

    /// True when this and o denote the same function (cross-multiplied).
    bool equals(const RationalFunction& o) const;

    /// Largest variable id present, or -1.
    VarId max_var() const;
    bool contains(VarId v) const;

    /// point is indexed by VarId and must cover every variable present.
    Rational evaluate(const std::vector<Rational>& point) const;   // throws DivisionByZero
    double evaluate_double(const std::vector<double>& point) const;
    /// Abs-sum magnitude proxy at the point (denominator taken at its value).
    double magnitude_double(const std::vector<double>& point) const;

private:
    Polynomial num_;
    std::vector<Factor> den_;
};

}  // namespace sweb

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sweb/rational.hpp"

namespace sweb {

// Variable ids used by the polynomial layer.
// 0 = x, 1 = y, 2..8 = W0..W6, 9+ = transcendental atoms.
using VarId = int;
inline constexpr VarId kVarX = 0;
inline constexpr VarId kVarY = 1;
inline constexpr VarId kVarW0 = 2;
inline constexpr VarId kFirstAtomVar = 9;
inline VarId wvar(int order) { return kVarW0 + order; }

/// Sparse exponent vector, sorted by variable id, all exponents positive.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(VarId v, int exp = 1);

    const std::vector<std::pair<VarId, int>>& factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }
    int total_degree() const;
    int degree_in(VarId v) const;
    bool contains(VarId v) const { return degree_in(v) > 0; }

    Monomial times(const Monomial& o) const;
    /// Removes v^k; requires degree_in(v) >= k.
    Monomial without(VarId v, int k) const;
    /// Componentwise divisibility.
    bool divides(const Monomial& o) const;
    /// o / this (requires divides(o)).
    Monomial divide_into(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }

private:
    std::vector<std::pair<VarId, int>> factors_;
    friend struct MonomialGreater;
};

/// Graded lex, descending: higher total degree first, ties by lex with
/// smaller var ids more significant.
struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over Rational. Terms are kept in
/// descending graded-lex order; begin() is the leading term.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialGreater>;

    Polynomial() = default;
    explicit Polynomial(Rational c);
    explicit Polynomial(long c) : Polynomial(Rational(c)) {}
    static Polynomial variable(VarId v);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && leading_monomial().is_unit()); }
    Rational constant_value() const;  // requires is_constant()

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    const Monomial& leading_monomial() const { return terms_.begin()->first; }
    const Rational& leading_coefficient() const { return terms_.begin()->second; }

    int total_degree() const;
    int degree_in(VarId v) const;
    /// Largest variable id present, or -1.
    VarId max_var() const;
    std::vector<VarId> variables() const;
    bool contains(VarId v) const { return degree_in(v) > 0; }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);

    Polynomial scaled(const Rational& c) const;
    Polynomial times_monomial(const Monomial& m, const Rational& c) const;
    Polynomial pow(int e) const;  // e >= 0

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    /// Partial derivative; atoms and W symbols are treated as opaque variables.
    Polynomial derivative(VarId v) const;

    /// Coefficients as polynomials in the remaining variables, dense by
    /// degree in v (size degree_in(v)+1).
    std::vector<Polynomial> coefficients_in(VarId v) const;
    /// Rebuild from coefficients_in output.
    static Polynomial from_coefficients(VarId v, const std::vector<Polynomial>& coeffs);

    /// Substitute a rational value for one variable.
    Polynomial evaluate_partial(VarId v, const Rational& value) const;

    Rational evaluate(const std::vector<Rational>& point_by_var) const;
    double evaluate_double(const std::vector<double>& point_by_var) const;
    /// Same shape with |coefficients| and |point|: a magnitude proxy.
    double magnitude_double(const std::vector<double>& point_by_var) const;

    /// Exact quotient; requires divisor | this (throws EngineError otherwise).
    Polynomial divide_exact(const Polynomial& divisor) const;

    void add_term(const Monomial& m, const Rational& c);

    std::string to_string() const;  // debugging aid

private:
    TermMap terms_;
};

/// GCD over Q[vars], normalized so the leading graded-lex coefficient is 1.
/// gcd(0,0) = 0; any constant argument yields 1 (units are absorbed).
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

}  // namespace sweb

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <string>

namespace sweb {

/// Arbitrary-precision rational, a thin value wrapper over GMP's mpq_class.
/// Always kept in canonical form (coprime, positive denominator).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design
    Rational(long num, long den) : v_(num, den) { v_.canonicalize(); }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "n", "n/d", or a decimal literal like "1.25" (exact by place value).
    static Rational from_string(const std::string& text);
    /// Exact conversion from a finite double.
    static Rational from_double(double d);

    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// Fits in long? (used for integer exponents)
    bool fits_long() const { return is_integer() && v_.get_num().fits_slong_p(); }
    long to_long() const { return v_.get_num().get_si(); }

    double to_double() const { return v_.get_d(); }

    /// Canonical text: "3", "-2/5".
    std::string to_string() const;
    /// Decimal text when the denominator is 2^a*5^b (e.g. "1.5"), else empty.
    std::string to_decimal_string() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// Integer power; exp may be negative (throws DivisionByZero on 0^-n).
    Rational pow(long exp) const;

    std::size_t hash() const;

private:
    mpq_class v_;
};

}  // namespace sweb

template <>
struct std::hash<sweb::Rational> {
    std::size_t operator()(const sweb::Rational& r) const { return r.hash(); }
};

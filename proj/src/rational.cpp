#include "sweb/rational.hpp"

#include <cmath>
#include <stdexcept>

#include "sweb/errors.hpp"

namespace sweb {

Rational Rational::from_string(const std::string& text) {
    auto dot = text.find('.');
    if (dot == std::string::npos) {
        return Rational(mpq_class(text));
    }
    // Decimal literal: value by place value, e.g. "1.25" -> 125/100.
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac_len = text.size() - dot - 1;
    if (digits.empty() || frac_len == 0) throw std::invalid_argument("bad decimal: " + text);
    mpz_class num(digits);
    mpz_class den(1);
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    return Rational(mpq_class(num, den));
}

Rational Rational::from_double(double d) {
    if (!std::isfinite(d)) throw DomainError("non-finite value has no rational image");
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), d);
    return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
}

std::string Rational::to_string() const {
    return v_.get_str();
}

std::string Rational::to_decimal_string() const {
    if (is_integer()) return v_.get_num().get_str();
    mpz_class den = v_.get_den();
    int pow2 = 0, pow5 = 0;
    while (den % 2 == 0) { den /= 2; ++pow2; }
    while (den % 5 == 0) { den /= 5; ++pow5; }
    if (den != 1) return {};  // infinite decimal expansion
    int digits = std::max(pow2, pow5);
    if (digits > 18) return {};
    mpz_class scale(1);
    for (int i = 0; i < digits; ++i) scale *= 10;
    mpz_class scaled = v_.get_num() * scale / v_.get_den();
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    std::string s = scaled.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    return (neg ? "-" : "") + s;
}

Rational Rational::pow(long exp) const {
    if (exp == 0) return Rational(1);
    if (is_zero() && exp < 0) throw DivisionByZero();
    bool invert = exp < 0;
    unsigned long e = invert ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    mpq_class r = invert ? mpq_class(den, num) : mpq_class(num, den);
    return Rational(r);
}

std::size_t Rational::hash() const {
    // Cheap stable hash from the double image plus integer fast path.
    std::size_t h = std::hash<double>{}(v_.get_d());
    if (v_.get_num().fits_slong_p()) {
        h ^= std::hash<long>{}(v_.get_num().get_si()) + 0x9e3779b97f4a7c15ULL + (h << 6);
    }
    return h;
}

}  // namespace sweb

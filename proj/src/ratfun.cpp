#include "sweb/ratfun.hpp"

#include <algorithm>
#include <cassert>

#include "sweb/errors.hpp"

namespace sweb {

// ---------------------------------------------------------------------------
// AtomTable
// ---------------------------------------------------------------------------

VarId AtomTable::id_for(const Expr& atom) {
    VarId found = find(atom);
    if (found >= 0) return found;
    atoms_.push_back(atom);
    return kFirstAtomVar + static_cast<VarId>(atoms_.size()) - 1;
}

VarId AtomTable::find(const Expr& atom) const {
    for (std::size_t i = 0; i < atoms_.size(); ++i)
        if (equal(atoms_[i], atom)) return kFirstAtomVar + static_cast<VarId>(i);
    return -1;
}

const Expr& AtomTable::expr_of(VarId id) const {
    assert(id >= kFirstAtomVar && id < kFirstAtomVar + static_cast<VarId>(atoms_.size()));
    return atoms_[static_cast<std::size_t>(id - kFirstAtomVar)];
}

// ---------------------------------------------------------------------------
// RationalFunction
// ---------------------------------------------------------------------------

namespace {

// Deterministic total order on polynomials for factor sorting.
int poly_compare(const Polynomial& a, const Polynomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    auto i = a.terms().begin(), j = b.terms().begin();
    MonomialGreater gt;
    while (i != a.terms().end() && j != b.terms().end()) {
        if (!(i->first == j->first)) return gt(i->first, j->first) ? 1 : -1;
        if (i->second != j->second) return i->second < j->second ? -1 : 1;
        ++i; ++j;
    }
    if (i != a.terms().end()) return 1;
    if (j != b.terms().end()) return -1;
    return 0;
}

}  // namespace

RationalFunction RationalFunction::constant(Rational c) {
    RationalFunction r;
    return make(Polynomial(std::move(c)), {});
}

RationalFunction RationalFunction::variable(VarId v) {
    return make(Polynomial::variable(v), {});
}

RationalFunction RationalFunction::from_polynomial(Polynomial p) {
    return make(std::move(p), {});
}

RationalFunction RationalFunction::quotient(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw DivisionByZero();
    return make(std::move(num), {{std::move(den), 1}});
}

RationalFunction RationalFunction::make(Polynomial num, std::vector<Factor> den) {
    RationalFunction r;
    if (num.is_zero()) return r;

    Rational scale(1);
    std::vector<Factor> kept;
    for (auto& [f, k] : den) {
        if (f.is_zero()) throw DivisionByZero();
        if (k == 0) continue;
        assert(k > 0);
        if (f.is_constant()) {
            scale /= f.constant_value().pow(k);
            continue;
        }
        Polynomial g = f;
        Rational lc = g.leading_coefficient();
        if (!lc.is_one()) {
            g = g.scaled(Rational(1) / lc);
            scale /= lc.pow(k);
        }
        kept.push_back({std::move(g), k});
    }
    if (!scale.is_one()) num = num.scaled(scale);

    // Merge equal factors.
    std::sort(kept.begin(), kept.end(),
              [](const Factor& a, const Factor& b) { return poly_compare(a.first, b.first) < 0; });
    std::vector<Factor> merged;
    for (auto& fk : kept) {
        if (!merged.empty() && poly_compare(merged.back().first, fk.first) == 0)
            merged.back().second += fk.second;
        else
            merged.push_back(std::move(fk));
    }

    // Opportunistic reduction: divide the numerator by whole factors.
    for (auto& [f, k] : merged) {
        while (k > 0) {
            try {
                Polynomial q = num.divide_exact(f);
                num = std::move(q);
                --k;
            } catch (const EngineError&) {
                break;
            }
        }
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const Factor& fk) { return fk.second == 0; }),
                 merged.end());

    r.num_ = std::move(num);
    r.den_ = std::move(merged);
    return r;
}

Polynomial RationalFunction::expanded_den() const {
    Polynomial d{Rational(1)};
    for (auto& [f, k] : den_) d = d * f.pow(k);
    return d;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    // Common denominator via the factor union.
    std::vector<Factor> common;
    auto a = den_.begin(); auto b = o.den_.begin();
    std::vector<Factor> lift_a, lift_b;  // what each side is missing
    while (a != den_.end() || b != o.den_.end()) {
        int cmp;
        if (a == den_.end()) cmp = 1;
        else if (b == o.den_.end()) cmp = -1;
        else cmp = poly_compare(a->first, b->first);
        if (cmp < 0) {
            common.push_back(*a);
            lift_b.push_back(*a);
            ++a;
        } else if (cmp > 0) {
            common.push_back(*b);
            lift_a.push_back(*b);
            ++b;
        } else {
            int k = std::max(a->second, b->second);
            common.push_back({a->first, k});
            if (k > a->second) lift_a.push_back({a->first, k - a->second});
            if (k > b->second) lift_b.push_back({b->first, k - b->second});
            ++a; ++b;
        }
    }
    Polynomial na = num_;
    for (auto& [f, k] : lift_a) na = na * f.pow(k);
    Polynomial nb = o.num_;
    for (auto& [f, k] : lift_b) nb = nb * f.pow(k);
    return make(na + nb, std::move(common));
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Factor> den = den_;
    den.insert(den.end(), o.den_.begin(), o.den_.end());
    return make(num_ * o.num_, std::move(den));
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw DivisionByZero();
    if (is_zero()) return {};
    // (n1/D1) / (n2/D2) = n1 * D2 / (D1 * n2)
    Polynomial n = num_;
    for (auto& [f, k] : o.den_) n = n * f.pow(k);
    std::vector<Factor> den = den_;
    den.push_back({o.num_, 1});
    return make(std::move(n), std::move(den));
}

RationalFunction RationalFunction::reciprocal() const {
    return constant(Rational(1)) / *this;
}

RationalFunction RationalFunction::pow(int e) const {
    if (e == 0) return constant(Rational(1));
    if (e < 0) return reciprocal().pow(-e);
    RationalFunction r = constant(Rational(1));
    RationalFunction base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

RationalFunction RationalFunction::canonicalized() const {
    if (is_zero()) return {};
    if (den_.empty()) return *this;
    Polynomial den = expanded_den();
    Polynomial g = poly_gcd(num_, den);
    Polynomial n = num_, d = den;
    if (!g.is_constant()) {
        n = n.divide_exact(g);
        d = d.divide_exact(g);
    }
    if (d.is_constant()) {
        return make(n.scaled(Rational(1) / d.constant_value()), {});
    }
    return make(std::move(n), {{std::move(d), 1}});
}

bool RationalFunction::equals(const RationalFunction& o) const {
    return (num_ * o.expanded_den() - o.num_ * expanded_den()).is_zero();
}

VarId RationalFunction::max_var() const {
    VarId r = num_.max_var();
    for (auto& [f, k] : den_) r = std::max(r, f.max_var());
    return r;
}

bool RationalFunction::contains(VarId v) const {
    if (num_.contains(v)) return true;
    for (auto& [f, k] : den_)
        if (f.contains(v)) return true;
    return false;
}

Rational RationalFunction::evaluate(const std::vector<Rational>& point) const {
    Rational n = num_.evaluate(point);
    Rational d(1);
    for (auto& [f, k] : den_) d *= f.evaluate(point).pow(k);
    return n / d;  // throws DivisionByZero on a pole
}

double RationalFunction::evaluate_double(const std::vector<double>& point) const {
    double n = num_.evaluate_double(point);
    double d = 1;
    for (auto& [f, k] : den_) {
        double v = f.evaluate_double(point);
        for (int i = 0; i < k; ++i) d *= v;
    }
    if (d == 0.0) throw DivisionByZero();
    return n / d;
}

double RationalFunction::magnitude_double(const std::vector<double>& point) const {
    double n = num_.magnitude_double(point);
    double d = 1;
    for (auto& [f, k] : den_) {
        double v = f.evaluate_double(point);
        for (int i = 0; i < k; ++i) d *= v;
    }
    if (d == 0.0) return n > 0 ? 1e300 : 0.0;
    return std::abs(n / d);
}

}  // namespace sweb

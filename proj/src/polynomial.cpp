#include "sweb/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "sweb/errors.hpp"

namespace sweb {

// ---------------------------------------------------------------------------
// Monomial
// ---------------------------------------------------------------------------

Monomial::Monomial(VarId v, int exp) {
    if (exp > 0) factors_.push_back({v, exp});
}

int Monomial::total_degree() const {
    int d = 0;
    for (auto& [v, e] : factors_) d += e;
    return d;
}

int Monomial::degree_in(VarId v) const {
    for (auto& [w, e] : factors_)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r;
    auto a = factors_.begin(), b = o.factors_.begin();
    while (a != factors_.end() || b != o.factors_.end()) {
        if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            r.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            r.factors_.push_back(*b++);
        } else {
            r.factors_.push_back({a->first, a->second + b->second});
            ++a; ++b;
        }
    }
    return r;
}

Monomial Monomial::without(VarId v, int k) const {
    Monomial r;
    for (auto& [w, e] : factors_) {
        if (w == v) {
            assert(e >= k);
            if (e > k) r.factors_.push_back({w, e - k});
        } else {
            r.factors_.push_back({w, e});
        }
    }
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (auto& [v, e] : factors_)
        if (o.degree_in(v) < e) return false;
    return true;
}

Monomial Monomial::divide_into(const Monomial& o) const {
    Monomial r;
    auto b = factors_.begin();
    for (auto& [v, e] : o.factors_) {
        int sub = 0;
        while (b != factors_.end() && b->first < v) ++b;
        if (b != factors_.end() && b->first == v) sub = b->second;
        if (e - sub > 0) r.factors_.push_back({v, e - sub});
    }
    return r;
}

bool MonomialGreater::operator()(const Monomial& a, const Monomial& b) const {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    // Lex: smaller var id more significant, higher exponent first.
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (i->first != j->first) return i->first < j->first;
        if (i->second != j->second) return i->second > j->second;
        ++i; ++j;
    }
    return i != a.factors_.end();
}

// ---------------------------------------------------------------------------
// Polynomial basics
// ---------------------------------------------------------------------------

Polynomial::Polynomial(Rational c) {
    if (!c.is_zero()) terms_.emplace(Monomial(), std::move(c));
}

Polynomial Polynomial::variable(VarId v) {
    Polynomial p;
    p.terms_.emplace(Monomial(v), Rational(1));
    return p;
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    return terms_.begin()->second;
}

int Polynomial::total_degree() const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

int Polynomial::degree_in(VarId v) const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree_in(v));
    return d;
}

VarId Polynomial::max_var() const {
    VarId r = -1;
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m.factors()) r = std::max(r, v);
    return r;
}

std::vector<VarId> Polynomial::variables() const {
    std::vector<VarId> vars;
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m.factors())
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    return vars;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_) r.add_term(m1.times(m2), c1 * c2);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r;
    if (c.is_zero()) return r;
    for (auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
    Polynomial r;
    if (c.is_zero()) return r;
    for (auto& [mm, k] : terms_) r.terms_.emplace(mm.times(m), k * c);
    return r;
}

Polynomial Polynomial::pow(int e) const {
    assert(e >= 0);
    Polynomial r{Rational(1)};
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

Polynomial Polynomial::derivative(VarId v) const {
    Polynomial r;
    for (auto& [m, c] : terms_) {
        int e = m.degree_in(v);
        if (e == 0) continue;
        r.add_term(m.without(v, 1), c * Rational(e));
    }
    return r;
}

std::vector<Polynomial> Polynomial::coefficients_in(VarId v) const {
    std::vector<Polynomial> coeffs(static_cast<std::size_t>(degree_in(v)) + 1);
    for (auto& [m, c] : terms_) {
        int e = m.degree_in(v);
        coeffs[e].add_term(m.without(v, e), c);
    }
    return coeffs;
}

Polynomial Polynomial::from_coefficients(VarId v, const std::vector<Polynomial>& coeffs) {
    Polynomial r;
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        Monomial ve(v, static_cast<int>(e));
        for (auto& [m, c] : coeffs[e].terms()) r.add_term(m.times(ve), c);
    }
    return r;
}

Polynomial Polynomial::evaluate_partial(VarId v, const Rational& value) const {
    Polynomial r;
    for (auto& [m, c] : terms_) {
        int e = m.degree_in(v);
        r.add_term(m.without(v, e), e == 0 ? c : c * value.pow(e));
    }
    return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    Rational sum(0);
    for (auto& [m, c] : terms_) {
        Rational t = c;
        for (auto& [v, e] : m.factors()) {
            assert(v < static_cast<VarId>(point.size()));
            t *= point[v].pow(e);
        }
        sum += t;
    }
    return sum;
}

double Polynomial::evaluate_double(const std::vector<double>& point) const {
    double sum = 0;
    for (auto& [m, c] : terms_) {
        double t = c.to_double();
        for (auto& [v, e] : m.factors()) {
            double p = point[v];
            for (int i = 0; i < e; ++i) t *= p;
        }
        sum += t;
    }
    return sum;
}

double Polynomial::magnitude_double(const std::vector<double>& point) const {
    double sum = 0;
    for (auto& [m, c] : terms_) {
        double t = std::abs(c.to_double());
        for (auto& [v, e] : m.factors()) {
            double p = std::abs(point[v]);
            for (int i = 0; i < e; ++i) t *= p;
        }
        sum += t;
    }
    return sum;
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero();
    Polynomial q;
    Polynomial r = *this;
    const Monomial& dm = divisor.leading_monomial();
    const Rational& dc = divisor.leading_coefficient();
    while (!r.is_zero()) {
        const Monomial& lm = r.leading_monomial();
        if (!dm.divides(lm)) throw EngineError("divide_exact: not divisible");
        Monomial qm = dm.divide_into(lm);
        Rational qc = r.leading_coefficient() / dc;
        q.add_term(qm, qc);
        r -= divisor.times_monomial(qm, qc);
    }
    return q;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.to_string();
        for (auto& [v, e] : m.factors()) {
            os << "*v" << v;
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// GCD (primitive PRS with univariate-image fast path)
// ---------------------------------------------------------------------------

namespace {

Polynomial make_monic(Polynomial p) {
    if (p.is_zero()) return p;
    Rational lc = p.leading_coefficient();
    if (lc.is_one()) return p;
    Rational inv = Rational(1) / lc;
    return p.scaled(inv);
}

// Univariate gcd over Q in variable v; inputs must involve v only.
Polynomial gcd_univariate(Polynomial a, Polynomial b, VarId v) {
    while (!b.is_zero()) {
        // a mod b by leading-term elimination in v.
        int db = b.degree_in(v);
        Polynomial r = a;
        auto blead = b.coefficients_in(v)[db].constant_value();
        while (!r.is_zero() && r.degree_in(v) >= db) {
            int dr = r.degree_in(v);
            Rational rlead = r.coefficients_in(v)[dr].constant_value();
            r -= b.times_monomial(Monomial(v, dr - db), rlead / blead);
        }
        a = b;
        b = make_monic(r);
    }
    return make_monic(a);
}

Polynomial content_in(const Polynomial& p, VarId v);

// Pseudo-remainder of a by b in v (up to content, which the caller strips).
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, VarId v) {
    int db = b.degree_in(v);
    Polynomial blead = b.coefficients_in(v)[db];
    Polynomial r = a;
    while (!r.is_zero() && r.degree_in(v) >= db) {
        int dr = r.degree_in(v);
        Polynomial rlead = r.coefficients_in(v)[dr];
        Monomial shift(v, dr - db);
        r = r * blead - (b * rlead).times_monomial(shift, Rational(1));
    }
    return r;
}

Polynomial primitive_part(const Polynomial& p, VarId v) {
    if (p.is_zero()) return p;
    Polynomial cont = content_in(p, v);
    if (cont.is_constant()) return make_monic(p);
    return make_monic(p.divide_exact(cont));
}

Polynomial content_in(const Polynomial& p, VarId v) {
    auto coeffs = p.coefficients_in(v);
    Polynomial g;
    for (auto& c : coeffs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? make_monic(c) : poly_gcd(g, c);
        if (g.is_constant()) return Polynomial(Rational(1));
    }
    return g;
}

// Deterministic evaluation points for the image test.
const long kProbeValues[2][8] = {{3, 5, 7, 11, 13, 17, 19, 23},
                                 {-2, 9, -4, 15, 6, -8, 21, 10}};

// Tries to certify deg_v(gcd) = 0 via a univariate image. Sound: returns true
// only when neither leading coefficient vanishes under the evaluation.
bool image_says_coprime_in(const Polynomial& a, const Polynomial& b, VarId v) {
    std::vector<VarId> vars;
    for (VarId w : a.variables()) if (w != v) vars.push_back(w);
    for (VarId w : b.variables())
        if (w != v && std::find(vars.begin(), vars.end(), w) == vars.end()) vars.push_back(w);
    if (vars.empty()) return false;  // already univariate; PRS is the cheap path
    for (int attempt = 0; attempt < 2; ++attempt) {
        Polynomial ia = a, ib = b;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            Rational val(kProbeValues[attempt][i % 8] + static_cast<long>(i / 8));
            ia = ia.evaluate_partial(vars[i], val);
            ib = ib.evaluate_partial(vars[i], val);
        }
        if (ia.degree_in(v) != a.degree_in(v)) continue;  // leading coeff vanished
        if (ib.degree_in(v) != b.degree_in(v)) continue;
        Polynomial g = gcd_univariate(ia, ib, v);
        if (g.degree_in(v) == 0) return true;
        return false;  // image shows a candidate common factor; run the PRS
    }
    return false;
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    if (a.is_constant() || b.is_constant()) return Polynomial(Rational(1));

    std::vector<VarId> va = a.variables(), vb = b.variables();
    std::vector<VarId> shared;
    for (VarId v : va)
        if (std::find(vb.begin(), vb.end(), v) != vb.end()) shared.push_back(v);
    if (shared.empty()) return Polynomial(Rational(1));

    // Main variable: smallest min-degree keeps the PRS short.
    VarId v = shared[0];
    int best = std::min(a.degree_in(v), b.degree_in(v));
    for (VarId w : shared) {
        int d = std::min(a.degree_in(w), b.degree_in(w));
        if (d < best) { best = d; v = w; }
    }

    Polynomial ca = content_in(a, v), cb = content_in(b, v);
    Polynomial ppa = ca.is_constant() ? a : a.divide_exact(ca);
    Polynomial ppb = cb.is_constant() ? b : b.divide_exact(cb);
    Polynomial cg = poly_gcd(ca, cb);

    if (image_says_coprime_in(ppa, ppb, v)) return make_monic(cg);

    Polynomial g1 = ppa, g2 = ppb;
    if (g1.degree_in(v) < g2.degree_in(v)) std::swap(g1, g2);
    while (!g2.is_zero() && g2.degree_in(v) > 0) {
        Polynomial r = pseudo_remainder(g1, g2, v);
        g1 = g2;
        g2 = r.is_zero() ? r : primitive_part(r, v);
    }
    Polynomial vpart = g2.is_zero() ? primitive_part(g1, v) : Polynomial(Rational(1));
    if (vpart.degree_in(v) == 0) vpart = Polynomial(Rational(1));
    return make_monic(cg * vpart);
}

}  // namespace sweb

#include "g2cayley/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace g2cayley {

std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(Var v, std::uint32_t exp) {
    if (exp > 0) factors_.push_back({v.id(), exp});
}

std::uint64_t Monomial::total_degree() const {
    std::uint64_t d = 0;
    for (auto& [_, e] : factors_) d += e;
    return d;
}

std::uint32_t Monomial::degree_in(Var v) const {
    for (auto& [id, e] : factors_)
        if (id == v.id()) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.factors_.reserve(factors_.size() + o.factors_.size());
    auto a = factors_.begin(), b = o.factors_.begin();
    while (a != factors_.end() && b != o.factors_.end()) {
        if (a->first < b->first)
            r.factors_.push_back(*a++);
        else if (b->first < a->first)
            r.factors_.push_back(*b++);
        else {
            r.factors_.push_back({a->first, a->second + b->second});
            ++a, ++b;
        }
    }
    r.factors_.insert(r.factors_.end(), a, factors_.end());
    r.factors_.insert(r.factors_.end(), b, o.factors_.end());
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    auto b = o.factors_.begin();
    for (auto& [id, e] : factors_) {
        while (b != o.factors_.end() && b->first < id) ++b;
        if (b == o.factors_.end() || b->first != id || b->second < e) return false;
    }
    return true;
}

Monomial Monomial::divide_into(const Monomial& o) const {
    Monomial r;
    auto a = factors_.begin();
    for (auto& [id, e] : o.factors_) {
        std::uint32_t sub = 0;
        while (a != factors_.end() && a->first < id) {
            throw std::domain_error("Monomial::divide_into: does not divide");
        }
        if (a != factors_.end() && a->first == id) {
            sub = a->second;
            ++a;
        }
        if (sub > e) throw std::domain_error("Monomial::divide_into: does not divide");
        if (e > sub) r.factors_.push_back({id, e - sub});
    }
    if (a != factors_.end()) throw std::domain_error("Monomial::divide_into: does not divide");
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (i->first < j->first)
            ++i;
        else if (j->first < i->first)
            ++j;
        else {
            r.factors_.push_back({i->first, std::min(i->second, j->second)});
            ++i, ++j;
        }
    }
    return r;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
    std::uint64_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    // same degree: lexicographic with lower var id more significant
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (i->first != j->first) return i->first < j->first ? 1 : -1;
        if (i->second != j->second) return i->second > j->second ? 1 : -1;
        ++i, ++j;
    }
    if (i != a.factors_.end()) return 1;
    if (j != b.factors_.end()) return -1;
    return 0;
}

std::string Monomial::str() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto& [id, e] : factors_) {
        if (!first) os << "*";
        first = false;
        os << var_by_id(id).name();
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(const Rational& q) {
    if (q != 0) terms_.emplace(Monomial(), q);
}

Poly::Poly(Var v) { terms_.emplace(Monomial(v), Rational(1)); }

Poly Poly::monomial(const Monomial& m, const Rational& coeff) {
    Poly p;
    if (coeff != 0) p.terms_.emplace(m, coeff);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::domain_error("Poly::constant_value: not constant");
    return terms_.begin()->second;
}

std::uint64_t Poly::total_degree() const {
    std::uint64_t d = 0;
    for (auto& [m, _] : terms_) d = std::max(d, m.total_degree());
    return d;
}

std::uint32_t Poly::degree_in(Var v) const {
    std::uint32_t d = 0;
    for (auto& [m, _] : terms_) d = std::max(d, m.degree_in(v));
    return d;
}

std::vector<Var> Poly::variables() const {
    std::set<std::uint32_t> ids;
    for (auto& [m, _] : terms_)
        for (auto& [id, e] : m.factors()) {
            (void)e;
            ids.insert(id);
        }
    std::vector<Var> out;
    for (auto id : ids) out.push_back(var_by_id(id));
    return out;
}

const Monomial& Poly::leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("Poly::leading_monomial: zero polynomial");
    return terms_.begin()->first;
}

const Rational& Poly::leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("Poly::leading_coeff: zero polynomial");
    return terms_.begin()->second;
}

void Poly::add_term(const Monomial& m, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Poly Poly::scaled(const Rational& q) const {
    Poly r;
    if (q == 0) return r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, c * q);
    return r;
}

Poly Poly::mul_monomial(const Monomial& m, const Rational& coeff) const {
    Poly r;
    if (coeff == 0) return r;
    for (auto& [mm, c] : terms_) r.terms_.emplace(mm * m, c * coeff);
    return r;
}

Poly Poly::pow(std::uint32_t e) const {
    Poly r = Poly::one();
    Poly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

std::vector<Poly> Poly::coefficients_in(Var v) const {
    std::vector<Poly> coeffs(degree_in(v) + 1);
    for (auto& [m, c] : terms_) {
        std::uint32_t e = m.degree_in(v);
        Monomial rest;
        for (auto& [id, ex] : m.factors())
            if (id != v.id()) rest = rest * Monomial(var_by_id(id), ex);
        coeffs[e].add_term(rest, c);
    }
    return coeffs;
}

Poly Poly::from_coefficients(Var v, const std::vector<Poly>& coeffs) {
    Poly r;
    Poly vp(v);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        r += coeffs[i] * vp.pow(static_cast<std::uint32_t>(i));
    return r;
}

Poly Poly::substituted(Var v, const Poly& value) const {
    auto coeffs = coefficients_in(v);
    Poly r;
    for (std::size_t i = coeffs.size(); i-- > 0;) r = r * value + coeffs[i];
    return r;
}

Rational Poly::evaluate(const std::map<std::uint32_t, Rational>& assignment) const {
    Rational total = 0;
    for (auto& [m, c] : terms_) {
        Rational term = c;
        for (auto& [id, e] : m.factors()) {
            auto it = assignment.find(id);
            if (it == assignment.end())
                throw std::domain_error("Poly::evaluate: unassigned variable");
            Rational p = 1;
            for (std::uint32_t k = 0; k < e; ++k) p *= it->second;
            term *= p;
        }
        total += term;
    }
    return total;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        Rational cc = c;
        if (first) {
            if (cc < 0) {
                os << "-";
                cc = -cc;
            }
        } else {
            os << (cc < 0 ? " - " : " + ");
            if (cc < 0) cc = -cc;
        }
        first = false;
        if (m.is_one()) {
            os << cc;
        } else {
            if (cc != 1) os << cc << "*";
            os << m.str();
        }
    }
    return os.str();
}

} // namespace g2cayley

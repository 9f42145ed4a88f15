#include "g2cayley/ratfunc.hpp"

#include <stdexcept>

namespace g2cayley {

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
    if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::one();
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!(g == Poly::one())) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }
    auto split = content_split(den_);
    den_ = split.primitive;
    num_ = num_.scaled(Rational(1) / split.content);
}

Rational RatFunc::constant_value() const {
    if (!is_constant()) throw std::domain_error("RatFunc::constant_value: not constant");
    if (num_.is_zero()) return Rational(0);
    return num_.constant_value() / den_.constant_value();
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("RatFunc::inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc r(1);
    RatFunc base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

RatFunc RatFunc::substituted(const std::map<Var, RatFunc>& bindings) const {
    auto substitute_poly = [&](const Poly& p) {
        RatFunc acc(0);
        for (auto& [m, c] : p.terms()) {
            RatFunc term{c};
            for (auto& [id, e] : m.factors()) {
                Var v = var_by_id(id);
                auto it = bindings.find(v);
                RatFunc base = (it != bindings.end()) ? it->second : RatFunc(v);
                term *= base.pow(static_cast<int>(e));
            }
            acc += term;
        }
        return acc;
    };
    RatFunc n = substitute_poly(num_);
    RatFunc d = substitute_poly(den_);
    if (d.is_zero())
        throw std::domain_error("RatFunc::substituted: denominator vanishes identically");
    return n / d;
}

Rational RatFunc::evaluate(const std::map<Var, Rational>& assignment) const {
    std::map<std::uint32_t, Rational> by_id;
    for (auto& [v, q] : assignment) by_id.emplace(v.id(), q);
    Rational d = den_.evaluate(by_id);
    if (d == 0) throw std::domain_error("RatFunc::evaluate: denominator vanishes");
    return num_.evaluate(by_id) / d;
}

std::string RatFunc::str() const {
    if (den_ == Poly::one()) return num_.str();
    std::string n = num_.str();
    if (num_.term_count() > 1) n = "(" + n + ")";
    std::string d = den_.str();
    if (den_.term_count() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

RatFunc normalized(const Poly& num, const Poly& den) { return RatFunc(num, den); }

} // namespace g2cayley

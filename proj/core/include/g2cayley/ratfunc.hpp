#pragma once

#include "g2cayley/poly.hpp"

#include <map>
#include <string>

namespace g2cayley {

/// Element of the rational-function field Q(vars), kept in canonical form:
/// gcd(num, den) = 1, den has coprime integer coefficients with positive
/// leading coefficient. Equality is therefore structural comparison.
class RatFunc {
public:
    RatFunc() : num_(Poly::zero()), den_(Poly::one()) {}
    RatFunc(int n) : num_(Poly(n)), den_(Poly::one()) {}
    RatFunc(const Rational& q) : num_(Poly(q)), den_(Poly::one()) {}
    RatFunc(Var v) : num_(Poly(v)), den_(Poly::one()) {}
    RatFunc(const Poly& p) : num_(p), den_(Poly::one()) {}
    RatFunc(const Poly& num, const Poly& den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == Poly::one() && den_ == Poly::one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const;
    bool is_polynomial() const { return den_ == Poly::one(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inverse() const;
    RatFunc pow(int e) const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    /// Simultaneous substitution, then renormalization. Throws if any
    /// denominator vanishes identically along the way.
    RatFunc substituted(const std::map<Var, RatFunc>& bindings) const;
    Rational evaluate(const std::map<Var, Rational>& assignment) const;

    bool depends_on(Var v) const { return num_.depends_on(v) || den_.depends_on(v); }

    std::string str() const;

private:
    void normalize();
    Poly num_, den_;
};

RatFunc normalized(const Poly& num, const Poly& den);

} // namespace g2cayley

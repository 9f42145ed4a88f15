#pragma once

#include "g2cayley/var.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace g2cayley {

/// Exact arbitrary-precision rational scalar.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

std::string to_string(const Rational& q);

/// Finitely supported exponent vector, stored as sorted (var id, exp > 0) pairs.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(Var v, std::uint32_t exp = 1);

    bool is_one() const { return factors_.empty(); }
    std::uint64_t total_degree() const;
    std::uint32_t degree_in(Var v) const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// Requires this->divides(o).
    Monomial divide_into(const Monomial& o) const;
    static Monomial gcd(const Monomial& a, const Monomial& b);

    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& factors() const {
        return factors_;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.factors_ == b.factors_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    /// Graded lexicographic order (total degree first, then var ids).
    static int compare(const Monomial& a, const Monomial& b);

    std::string str() const;

private:
    std::vector<std::pair<std::uint32_t, std::uint32_t>> factors_;
};

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::compare(a, b) > 0;
    }
};

/// Multivariate polynomial with exact rational coefficients.
/// Invariant: no zero coefficient is ever stored; terms are kept in
/// descending graded-lex order so leading_term() is begin().
class Poly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    Poly() = default;
    Poly(int n) : Poly(Rational(n)) {}
    Poly(const Rational& q);
    Poly(Var v);

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Rational(1)); }
    static Poly monomial(const Monomial& m, const Rational& coeff);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value when is_constant(); throws otherwise.
    Rational constant_value() const;

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    std::uint64_t total_degree() const;
    std::uint32_t degree_in(Var v) const;
    bool depends_on(Var v) const { return degree_in(v) > 0; }
    std::vector<Var> variables() const;

    const Monomial& leading_monomial() const;
    const Rational& leading_coeff() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scaled(const Rational& q) const;
    Poly mul_monomial(const Monomial& m, const Rational& coeff) const;
    Poly pow(std::uint32_t e) const;

    /// Coefficient polynomials of v^0..v^deg; result does not mention v.
    std::vector<Poly> coefficients_in(Var v) const;
    static Poly from_coefficients(Var v, const std::vector<Poly>& coeffs);

    /// Substitute v -> value (a polynomial) everywhere.
    Poly substituted(Var v, const Poly& value) const;
    Rational evaluate(const std::map<std::uint32_t, Rational>& assignment) const;

    void add_term(const Monomial& m, const Rational& coeff);

    std::string str() const;

private:
    TermMap terms_;
};

/// Exact multivariate division; throws std::domain_error unless d divides p.
Poly divide_exact(const Poly& p, const Poly& d);

/// Primitive gcd: integer coefficients, coprime, positive leading coefficient.
/// gcd(0,0) = 0; the gcd of coprime polynomials is 1.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Writes p = content * primitive with primitive having coprime integer
/// coefficients and positive leading coefficient. content carries the sign.
struct ContentSplit {
    Rational content;
    Poly primitive;
};
ContentSplit content_split(const Poly& p);

} // namespace g2cayley

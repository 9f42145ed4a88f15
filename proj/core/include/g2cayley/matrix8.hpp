#pragma once

#include "g2cayley/cayley.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>

namespace g2cayley {

/// Dense 8x8 matrix over the rational-function field, acting on Cayley
/// coordinates as column vectors: entry (i, j) is the coefficient of basis
/// element i in the image of basis element j.
class Matrix8 {
public:
    Matrix8();
    static Matrix8 identity();
    static Matrix8 zero();
    static Matrix8 diagonal(const std::array<RatFunc, 8>& d);

    RatFunc& at(int row, int col) { return e_[row * 8 + col]; }
    const RatFunc& at(int row, int col) const { return e_[row * 8 + col]; }

    friend Matrix8 operator*(const Matrix8& a, const Matrix8& b);
    friend Matrix8 operator+(const Matrix8& a, const Matrix8& b);
    friend Matrix8 operator-(const Matrix8& a, const Matrix8& b);
    friend bool operator==(const Matrix8& a, const Matrix8& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Matrix8& a, const Matrix8& b) { return !(a == b); }

    Matrix8 scaled(const RatFunc& s) const;
    CayleyElt apply(const CayleyElt& c) const;

    bool is_diagonal() const;
    bool is_zero() const;
    RatFunc det() const;
    Matrix8 inverse() const; // throws std::domain_error if singular

    Matrix8 substituted(const std::map<Var, RatFunc>& bindings) const;
    /// Entry-wise evaluation at a rational point.
    std::array<Rational, 64> evaluate(const std::map<Var, Rational>& assignment) const;

    bool depends_on(Var v) const;

    std::string str() const;

private:
    std::array<RatFunc, 64> e_;
};

/// Matrix of a linear map in the fixed Cayley basis; column j is the
/// coordinate vector of f(basis[j]).
Matrix8 linear_map_to_matrix8(const std::function<CayleyElt(const CayleyElt&)>& f);

/// Exact symbolic check that g preserves the algebra product on two fully
/// generic elements and fixes the identity.
bool is_automorphism(const Matrix8& g);

/// Exact symbolic Leibniz check D(cd) = D(c)d + cD(d) on generic elements.
bool is_derivation(const Matrix8& D);

} // namespace g2cayley

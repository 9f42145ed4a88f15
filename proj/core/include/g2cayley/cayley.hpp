#pragma once

#include "g2cayley/ratfunc.hpp"

#include <array>
#include <functional>

namespace g2cayley {

/// 2x2 matrix over the rational-function field.
struct Mat2 {
    RatFunc a, b, c, d; // [[a, b], [c, d]]

    static Mat2 zero() { return {RatFunc(0), RatFunc(0), RatFunc(0), RatFunc(0)}; }
    static Mat2 identity() { return {RatFunc(1), RatFunc(0), RatFunc(0), RatFunc(1)}; }

    Mat2 adj() const { return {d, -b, -c, a}; }
    RatFunc det() const { return a * d - b * c; }
    RatFunc tr() const { return a + d; }

    friend Mat2 operator+(const Mat2& x, const Mat2& y) {
        return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    }
    friend Mat2 operator-(const Mat2& x, const Mat2& y) {
        return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    }
    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    Mat2 scaled(const RatFunc& s) const { return {a * s, b * s, c * s, d * s}; }
    Mat2 operator-() const { return {-a, -b, -c, -d}; }
    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
};

/// Element of the split Cayley algebra, written (x | y) with x, y in Mat2.
/// Coordinates in the fixed ordered basis are
/// (x1, x2, x3, x4, y1, y2, y3, y4) for x = [[x1,x2],[x3,x4]], y likewise.
struct CayleyElt {
    Mat2 x, y;

    static CayleyElt zero() { return {Mat2::zero(), Mat2::zero()}; }
    /// The algebra identity e = (I2 | 0).
    static CayleyElt one() { return {Mat2::identity(), Mat2::zero()}; }

    friend CayleyElt operator+(const CayleyElt& c, const CayleyElt& d) {
        return {c.x + d.x, c.y + d.y};
    }
    friend CayleyElt operator-(const CayleyElt& c, const CayleyElt& d) {
        return {c.x - d.x, c.y - d.y};
    }
    CayleyElt scaled(const RatFunc& s) const { return {x.scaled(s), y.scaled(s)}; }
    friend bool operator==(const CayleyElt& c, const CayleyElt& d) {
        return c.x == d.x && c.y == d.y;
    }

    std::array<RatFunc, 8> coords() const;
    static CayleyElt from_coords(const std::array<RatFunc, 8>& v);
};

/// (x|y)(x'|y') = (xx' + adj(y') y | y' x + y adj(x'))
CayleyElt cayley_mul(const CayleyElt& a, const CayleyElt& b);
/// conj(x|y) = (adj x | -y)
CayleyElt cayley_conj(const CayleyElt& c);
/// N(x|y) = det x - det y
RatFunc cayley_norm(const CayleyElt& c);
/// tr(x|y) = tr(x), the scalar with c + conj(c) = tr(c) e
RatFunc cayley_trace(const CayleyElt& c);
/// <c,d> = N(c+d) - N(c) - N(d)
RatFunc cayley_pairing(const CayleyElt& c, const CayleyElt& d);
/// L_{a,b}(c) = <c,a> b - <c,b> a
CayleyElt l_map(const CayleyElt& a, const CayleyElt& b, const CayleyElt& c);

/// The ordered basis e11, e21, e31, e41, e12, e22, e32, e42.
const std::array<CayleyElt, 8>& cayley_basis();

} // namespace g2cayley

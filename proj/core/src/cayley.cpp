#include "g2cayley/cayley.hpp"

namespace g2cayley {

std::array<RatFunc, 8> CayleyElt::coords() const {
    return {x.a, x.b, x.c, x.d, y.a, y.b, y.c, y.d};
}

CayleyElt CayleyElt::from_coords(const std::array<RatFunc, 8>& v) {
    return {{v[0], v[1], v[2], v[3]}, {v[4], v[5], v[6], v[7]}};
}

CayleyElt cayley_mul(const CayleyElt& a, const CayleyElt& b) {
    return {a.x * b.x + b.y.adj() * a.y, b.y * a.x + a.y * b.x.adj()};
}

CayleyElt cayley_conj(const CayleyElt& c) { return {c.x.adj(), -c.y}; }

RatFunc cayley_norm(const CayleyElt& c) { return c.x.det() - c.y.det(); }

RatFunc cayley_trace(const CayleyElt& c) { return c.x.tr(); }

RatFunc cayley_pairing(const CayleyElt& c, const CayleyElt& d) {
    return cayley_norm(c + d) - cayley_norm(c) - cayley_norm(d);
}

CayleyElt l_map(const CayleyElt& a, const CayleyElt& b, const CayleyElt& c) {
    return b.scaled(cayley_pairing(c, a)) - a.scaled(cayley_pairing(c, b));
}

const std::array<CayleyElt, 8>& cayley_basis() {
    static const std::array<CayleyElt, 8> basis = [] {
        std::array<CayleyElt, 8> b;
        for (int i = 0; i < 8; ++i) {
            std::array<RatFunc, 8> v;
            v.fill(RatFunc(0));
            v[i] = RatFunc(1);
            b[i] = CayleyElt::from_coords(v);
        }
        return b;
    }();
    return basis;
}

} // namespace g2cayley

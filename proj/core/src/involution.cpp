#include "g2cayley/involution.hpp"

#include <stdexcept>

namespace g2cayley {

GroupElt Involution::apply(const GroupElt& g) const {
    GroupElt r;
    r.mat = apply(g.mat);
    // the conjugated word is not expressible atom-by-atom in general
    r.word = {};
    return r;
}

namespace {

Matrix8 sign_diag(std::array<int, 8> signs) {
    std::array<RatFunc, 8> d;
    for (int i = 0; i < 8; ++i) d[i] = RatFunc(Rational(signs[i]));
    return Matrix8::diagonal(d);
}

} // namespace

const std::array<Involution, 3>& involutions(InvolutionSet set) {
    static const std::array<Involution, 3> tabulated = {
        Involution{0, sign_diag({1, -1, 1, -1, 1, -1, 1, -1}), "t0"},
        Involution{1, sign_diag({1, 1, 1, 1, -1, -1, -1, -1}), "t1"},
        Involution{2, sign_diag({1, -1, -1, 1, -1, 1, 1, -1}), "t2"},
    };
    static const std::array<Involution, 3> torus2 = {
        Involution{0, torus_embed(RatFunc(1), RatFunc(-1)).mat, "t0"},
        Involution{1, torus_embed(RatFunc(-1), RatFunc(1)).mat, "t1"},
        Involution{2, torus_embed(RatFunc(-1), RatFunc(-1)).mat, "t2"},
    };
    return set == InvolutionSet::Tabulated ? tabulated : torus2;
}

const Involution& involution(InvolutionSet set, int index) {
    if (index < 0 || index > 2) throw std::out_of_range("involution: index must be 0..2");
    return involutions(set)[index];
}

bool is_theta_split(const Involution& th, const Matrix8& g) {
    return g * th.apply(g) == Matrix8::identity();
}

} // namespace g2cayley

#pragma once

#include "g2cayley/generators.hpp"

#include <array>

namespace g2cayley {

/// Conjugation by an order-two diagonal element; fixed points of each are a
/// copy of SO4 inside the group.
struct Involution {
    int index = 0; // 0, 1, 2
    Matrix8 t;
    std::string label;

    Matrix8 apply(const Matrix8& g) const { return t * g * t; }
    GroupElt apply(const GroupElt& g) const;
};

/// Which concrete triple (t0, t1, t2) to use.
///  Tabulated    — the three sign matrices exactly as tabulated in the source
///                 data for this construction.
///  TorusOrderTwo — the three nontrivial order-two elements of the diagonal
///                 torus: t0 = gamma(1,-1), t1 = gamma(-1,1), t2 = gamma(-1,-1).
enum class InvolutionSet { Tabulated, TorusOrderTwo };

const std::array<Involution, 3>& involutions(InvolutionSet set);
const Involution& involution(InvolutionSet set, int index);

/// g * theta(g) = identity.
bool is_theta_split(const Involution& th, const Matrix8& g);

} // namespace g2cayley

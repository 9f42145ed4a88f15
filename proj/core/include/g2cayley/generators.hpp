#pragma once

#include "g2cayley/matrix8.hpp"
#include "g2cayley/roots.hpp"

#include <string>
#include <vector>

namespace g2cayley {

/// One factor of a group word. Torus and unipotent atoms carry exact
/// parameters, so a word can always be inverted atom by atom.
struct Gen {
    enum class Kind { Torus, Unipotent, WeylAlpha, WeylBeta, LongestWeyl };
    Kind kind = Kind::Torus;
    RatFunc p1, p2; // Torus: (l1, l2); Unipotent: parameter in p1
    Root root{};    // Unipotent only

    std::string str() const;
};

/// Group element of the automorphism group realized in GL8, together with
/// the word of named generators it was built from.
struct GroupElt {
    Matrix8 mat;
    std::vector<Gen> word;

    std::string word_str() const;
};

GroupElt group_mul(const GroupElt& a, const GroupElt& b);
GroupElt group_inverse(const GroupElt& g);
/// Re-multiplies the stored word; used to validate provenance.
Matrix8 evaluate_word(const std::vector<Gen>& word);

/// gamma(l1, l2): the maximal torus, diagonal
/// (1, l1/l2, l2/l1, 1, l2, l1, 1/l1, 1/l2) in the Cayley basis.
GroupElt torus_embed(const RatFunc& l1, const RatFunc& l2);

/// The torus action as a map on Cayley elements (used for cross-checks).
CayleyElt torus_action(const RatFunc& l1, const RatFunc& l2, const CayleyElt& c);

/// One-parameter root map u_gamma(t) for gamma in the supported set.
/// Throws std::invalid_argument for unsupported roots.
GroupElt root_unipotent(Root gamma, const RatFunc& t);

/// Weyl representatives n_alpha = u_a(1) u_-a(-1) u_a(1) and
/// n_beta = u_b(1) u_-b(-1) u_b(1), and the torus-inverting element w_G.
GroupElt weyl_alpha();
GroupElt weyl_beta();
GroupElt longest_weyl();

/// The four order-two torus values {I, gamma(-1,-1), gamma(1,-1), gamma(-1,1)}.
const std::array<Matrix8, 4>& order2_torus();
bool in_order2_torus(const Matrix8& m);
/// g and h agree modulo the diagonal torus, i.e. g h^-1 is diagonal.
bool equal_mod_torus(const Matrix8& g, const Matrix8& h);

} // namespace g2cayley

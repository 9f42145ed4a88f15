#pragma once

#include "g2cayley/weyl.hpp"

#include <map>
#include <optional>
#include <vector>

namespace g2cayley {

/// Coordinates of an element of the full positive unipotent group in the
/// fixed factorization order alpha, beta, a+b, 2a+b, 3a+b, 3a+2b.
struct UnipotentCoordinates {
    bool ok = false;
    std::vector<std::pair<Root, RatFunc>> coords;
    std::string failure; // set when ok == false
};

/// Peels X as an ordered product of positive one-parameter elements.
UnipotentCoordinates unipotent_coordinates(const Matrix8& X);

GroupElt commutator(const GroupElt& g, const GroupElt& h);

/// Result of decomposing one commutator [u_g1(x), u_g2(y)].
struct CommutatorRelation {
    Root g1, g2;
    bool commutes = false;
    bool structural_match = false;        // decomposition succeeded
    std::vector<std::pair<Root, RatFunc>> factors; // nonzero parameters only
    /// Parameters expected from the classical table, for the five listed
    /// pairs; empty for pairs expected to commute.
    std::vector<std::pair<Root, RatFunc>> expected;
    bool matches_table_exactly = false;
    bool matches_table_up_to_sign = false;
};

struct CommutatorReport {
    std::vector<CommutatorRelation> relations;
    int structural_mismatches = 0;
    int sign_deviations = 0;
    bool all_unlisted_commute = true;
};

/// Verifies every ordered pair from the classical positive-root commutator
/// table against the realized matrices (symbolic parameters x, y).
CommutatorReport check_relations();

/// Exponents (p, q) with gamma(l1,l2) u_r(c) gamma(l1,l2)^-1 = u_r(l1^p l2^q c),
/// verified symbolically.
std::pair<int, int> torus_scaling(Root r);

} // namespace g2cayley

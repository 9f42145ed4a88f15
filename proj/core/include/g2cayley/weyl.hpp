#pragma once

#include "g2cayley/generators.hpp"

#include <optional>
#include <vector>

namespace g2cayley {

enum class SimpleRef { Alpha, Beta };

/// Word in the simple reflections; evaluation uses n_alpha, n_beta.
using WeylWord = std::vector<SimpleRef>;

std::string weyl_word_str(const WeylWord& w);
GroupElt weyl_rep(const WeylWord& w);

/// Reflection action on roots (exact, from the realized conjugation).
Root simple_reflection(SimpleRef s, Root r);
/// Action of a word, rightmost letter acting first (matching matrix products).
Root weyl_action(const WeylWord& w, Root r);

struct WeylClass {
    WeylWord word;
    GroupElt rep;
    bool squares_to_torus = false; // order <= 2 in the Weyl group, rep^2 diagonal
};

struct WeylEnumeration {
    std::vector<WeylClass> classes;       // exactly 12
    int involution_count = 0;             // elements != e with square in the torus
    bool pairwise_distinct_mod_torus = false;
};

/// The twelve Weyl classes with representative matrices.
WeylEnumeration enumerate_weyl();

/// n_w u_gamma(t) n_w^-1 = u_delta(c t): returns (delta, c), verified
/// symbolically against the realized matrices.
struct RootActionResult {
    Root image;
    Rational scalar;
};
RootActionResult root_action(SimpleRef s, Root gamma);

/// Identifies m as u_delta(p) for some supported delta and nonzero p.
struct FamilyMatch {
    Root image;
    RatFunc parameter;
};
std::optional<FamilyMatch> match_one_parameter_family(const Matrix8& m);

} // namespace g2cayley

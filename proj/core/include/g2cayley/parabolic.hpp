#pragma once

#include "g2cayley/commutators.hpp"

#include <string>
#include <vector>

namespace g2cayley {

enum class StandardParabolic { Borel, PAlpha, PBeta };

struct ParabolicData {
    StandardParabolic name;
    std::vector<Root> levi_roots;    // plus-minus pairs inside the Levi
    std::vector<Root> radical_roots; // positive roots of the unipotent radical
    std::string str() const;
};

const ParabolicData& parabolic(StandardParabolic which);

/// Zero pattern of a generic Levi element of P_beta: free diagonal slots and
/// the two 2x2 cross blocks (2,5),(5,2) and (3,8),(8,3), with corners
/// (1,1) = (4,4) = 1 and the constraint entry(7,7) = 1/entry(6,6).
bool is_levi_pattern(const Matrix8& m);
/// Positions allowed to be nonzero in the Levi pattern (0-based, row*8+col).
const std::vector<std::pair<int, int>>& levi_pattern_positions();

/// Generic Levi element on the reserved slot symbols T,a,c,v,u,b,d,w,X.
Matrix8 levi_generic();
/// The slot variables of levi_generic, in a fixed order.
const std::vector<Var>& levi_slots();

enum class BruhatCell { Small, Big };

/// The two Bruhat cells of the Levi of P_beta:
///   Small: gamma(t,s) u_beta(b) u_-beta(x)
///   Big:   u_beta(b) gamma(t,s) u_-beta(x) n_beta
/// with nonvanishing cell parameters s, t.
GroupElt levi_cell(BruhatCell cell, const RatFunc& s, const RatFunc& t,
                   const RatFunc& b, const RatFunc& x);

/// Ordered product of root maps over the radical of P (height order); the
/// coordinate count must match the radical size.
GroupElt generic_unipotent(const ParabolicData& p, const std::vector<RatFunc>& coords);

/// Generic element of the full positive unipotent group on given symbols.
GroupElt generic_unipotent_full(const std::vector<RatFunc>& coords);

/// Pattern of P_beta: Levi pattern plus the radical positions (the support
/// closure of M * U products).
bool is_pbeta_pattern(const Matrix8& m);
const std::vector<std::pair<int, int>>& pbeta_pattern_positions();
/// Pattern of the full Borel (support closure of T * U products).
bool is_borel_pattern(const Matrix8& m);
const std::vector<std::pair<int, int>>& borel_pattern_positions();

struct ModularCharacter {
    int p = 0, q = 0;                   // delta on gamma(l1,l2) is l1^p l2^q
    bool oracle_agrees = false;         // symbolic-conjugation cross-check
};

/// Sum of the radical root characters, cross-checked by conjugating the
/// generic radical element by a generic torus and re-reading coordinates.
ModularCharacter modular_character(const ParabolicData& p);

} // namespace g2cayley

#pragma once

#include "g2cayley/involution.hpp"
#include "g2cayley/linsolve.hpp"
#include "g2cayley/parabolic.hpp"

#include <optional>

namespace g2cayley {

/// One of the eleven double-coset representatives of P_beta \ G / SO4.
struct OrbitRep {
    int k = 1; // 1..11
    GroupElt eta;
    std::optional<RatFunc> r3; // representative 11 carries a square-class slot
};

/// Representative k, with r3 defaulting to the symbolic variable for k = 11.
OrbitRep orbit_rep(int k, std::optional<RatFunc> r3 = std::nullopt);

/// x = eta * theta(eta)^-1, the theta-split element of the orbit.
GroupElt x_of(int k, const Involution& th, std::optional<RatFunc> r3 = std::nullopt);

// ---------------------------------------------------------------------------
// strict admissibility: M = x theta(M) x^-1 on the generic Levi element

struct AdmissibilityResult {
    /// theta_x maps the generic Levi instance to a Levi instance (and back).
    bool set_stable = false;
    /// theta_x fixes the generic Levi element identically (M_x = M).
    bool pointwise_fixed = false;
    /// Off-pattern residual entries (set-stability trace), canonical strings.
    std::vector<std::string> constraint_trace;
};

AdmissibilityResult strict_admissible(int k, const Involution& th,
                                      std::optional<RatFunc> r3 = std::nullopt);

// ---------------------------------------------------------------------------
// orbit geometry: structure of theta_x on P_beta

struct OrbitGeometry {
    enum class Kind { Closed, Open, Neither, Unresolved };
    Kind kind = Kind::Unresolved;

    bool p_pattern_stable = false;   // theta_x(P) inside the P pattern, both ways
    bool levi_fixed_pointwise = false;
    /// Radical directions on which theta_x acts as the identity.
    std::vector<Root> surviving_radical;
    /// Radical directions mapped inside their own one-parameter family with
    /// a non-unit scalar (they die in the fixed-point set).
    std::vector<Root> scaled_radical;
    /// Radical directions whose image leaves the one-parameter family.
    std::vector<Root> broken_radical;
    std::vector<std::string> constraints;

    std::string kind_str() const;
};

OrbitGeometry orbit_geometry(int k, const Involution& th,
                             std::optional<RatFunc> r3 = std::nullopt);

// ---------------------------------------------------------------------------
// coarse admissibility at the level of Weyl double cosets

/// The four classes of W_beta \ W / W_beta.
const std::array<WeylWord, 4>& wbeta_double_cosets();

struct WeylAdmissibility {
    bool set_stable = false;
    bool pointwise_fixed = false;
};
WeylAdmissibility weyl_admissible(const WeylWord& w, const Involution& th);

// ---------------------------------------------------------------------------
// Levi intersections L = M ∩ w M w^-1

struct LeviIntersection {
    enum class Kind { FullLevi, TorusOnly } kind;
    /// whether n_w m n_w^-1 = n_w^-1 m n_w identically on the generic Levi
    bool conjugation_symmetric = false;
};
LeviIntersection levi_L(const WeylWord& w);

// ---------------------------------------------------------------------------
// SO4 generator fixedness

struct So4Generator {
    std::string name;
    bool supported = true; // u_-(2a+b) is reported unsupported
    bool theta_fixed = false;
};
std::vector<So4Generator> so4_generators(const Involution& th);

// ---------------------------------------------------------------------------
// identities used by the double-coset reduction and the open orbit

struct CheckLine {
    std::string id;
    bool verified = false;
    std::string detail;
};

/// (a) per-radical-root rescaling by a torus element reduces to a monomial
///     equation; (b) conjugation by u_beta(m) with the solved m clears the
///     3a+2b coordinate of w0[0,1,r3,r4]; (c) the torus commuting with
///     u_{a+b}(1) scales the 3a+b coordinate by a square.
std::vector<CheckLine> coset_reduction_checks();

/// Torus-branch stabilizer facts of the open-orbit representative: the
/// gamma(s,1) branch fixes u_{a+b}(1), the torus stabilizer of x11 has
/// dimension one, and r3 -> r3 c^2 gives a torus-conjugate representative.
std::vector<CheckLine> open_orbit_checks(const Involution& th);

} // namespace g2cayley

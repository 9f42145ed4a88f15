#pragma once

#include "g2cayley/ratfunc.hpp"

#include <vector>

namespace g2cayley {

/// A system of equations, each affine in the designated unknowns with
/// polynomial coefficients in the remaining (parameter) variables.
struct LinearSystem {
    std::vector<Poly> equations; // each asserted = 0
    std::vector<Var> unknowns;
};

struct LinearSolution {
    enum class Kind { Inconsistent, Solved };
    Kind kind = Kind::Solved;

    /// Pivot unknowns with their expressions in parameters and free unknowns.
    std::vector<std::pair<Var, RatFunc>> assignments;
    std::vector<Var> free_unknowns;
    /// Parameter expressions assumed nonzero during elimination.
    std::vector<RatFunc> branch_conditions;
    /// For Inconsistent: the contradictory residuals (nonzero, unknown-free).
    std::vector<RatFunc> residuals;

    bool solved() const { return kind == Kind::Solved; }
    std::size_t dimension() const { return free_unknowns.size(); }
};

/// Gaussian elimination over the rational-function field. Pivots that are
/// nonzero constants are preferred; a parameter-dependent pivot is recorded
/// as a branch condition. Throws std::invalid_argument if an equation is not
/// affine in the unknowns.
LinearSolution solve_linear(const LinearSystem& sys);

} // namespace g2cayley

#include "g2cayley/linsolve.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace g2cayley {
namespace {

struct Row {
    std::vector<RatFunc> coeff; // one per unknown
    RatFunc rhs;                // constant moved to the right-hand side
};

Row split_equation(const Poly& eq, const std::vector<Var>& unknowns) {
    std::set<std::uint32_t> unknown_ids;
    for (Var u : unknowns) unknown_ids.insert(u.id());

    Row row;
    row.coeff.assign(unknowns.size(), RatFunc(0));
    Poly constant;
    std::vector<Poly> coeff_polys(unknowns.size());

    for (auto& [mono, c] : eq.terms()) {
        int unknown_slot = -1;
        std::uint32_t unknown_total = 0;
        Monomial rest;
        for (auto& [id, e] : mono.factors()) {
            if (unknown_ids.count(id)) {
                unknown_total += e;
                for (std::size_t i = 0; i < unknowns.size(); ++i)
                    if (unknowns[i].id() == id) unknown_slot = static_cast<int>(i);
            } else {
                rest = rest * Monomial(var_by_id(id), e);
            }
        }
        if (unknown_total == 0) {
            constant.add_term(mono, c);
        } else if (unknown_total == 1) {
            coeff_polys[unknown_slot].add_term(rest, c);
        } else {
            throw std::invalid_argument("solve_linear: equation nonlinear in an unknown");
        }
    }
    for (std::size_t i = 0; i < unknowns.size(); ++i) row.coeff[i] = RatFunc(coeff_polys[i]);
    row.rhs = -RatFunc(constant);
    return row;
}

} // namespace

LinearSolution solve_linear(const LinearSystem& sys) {
    const std::size_t n = sys.unknowns.size();
    std::vector<Row> rows;
    rows.reserve(sys.equations.size());
    for (const Poly& eq : sys.equations) rows.push_back(split_equation(eq, sys.unknowns));

    LinearSolution sol;
    std::vector<int> pivot_row_of(n, -1);
    std::size_t next_row = 0;

    for (std::size_t col = 0; col < n; ++col) {
        // prefer a constant-coefficient pivot, then any nonzero one
        std::size_t pick = rows.size();
        for (std::size_t r = next_row; r < rows.size(); ++r) {
            if (rows[r].coeff[col].is_zero()) continue;
            if (rows[r].coeff[col].is_constant()) {
                pick = r;
                break;
            }
            if (pick == rows.size()) pick = r;
        }
        if (pick == rows.size()) continue;

        std::swap(rows[pick], rows[next_row]);
        Row& prow = rows[next_row];
        const RatFunc pivot = prow.coeff[col];
        if (!pivot.is_constant()) sol.branch_conditions.push_back(pivot);

        for (std::size_t c = 0; c < n; ++c) prow.coeff[c] = prow.coeff[c] / pivot;
        prow.rhs = prow.rhs / pivot;

        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next_row) continue;
            RatFunc f = rows[r].coeff[col];
            if (f.is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c)
                rows[r].coeff[c] = rows[r].coeff[c] - f * prow.coeff[c];
            rows[r].rhs = rows[r].rhs - f * prow.rhs;
        }
        pivot_row_of[col] = static_cast<int>(next_row);
        ++next_row;
    }

    // any all-zero row with nonzero rhs is a contradiction
    for (std::size_t r = next_row; r < rows.size(); ++r) {
        bool all_zero = true;
        for (std::size_t c = 0; c < n; ++c)
            if (!rows[r].coeff[c].is_zero()) all_zero = false;
        if (all_zero && !rows[r].rhs.is_zero()) {
            sol.kind = LinearSolution::Kind::Inconsistent;
            sol.residuals.push_back(rows[r].rhs);
        }
    }
    if (sol.kind == LinearSolution::Kind::Inconsistent) return sol;

    for (std::size_t col = 0; col < n; ++col) {
        if (pivot_row_of[col] < 0) {
            sol.free_unknowns.push_back(sys.unknowns[col]);
            continue;
        }
        const Row& prow = rows[pivot_row_of[col]];
        RatFunc expr = prow.rhs;
        for (std::size_t c = 0; c < n; ++c) {
            if (c == col || prow.coeff[c].is_zero()) continue;
            expr = expr - prow.coeff[c] * RatFunc(sys.unknowns[c]);
        }
        sol.assignments.push_back({sys.unknowns[col], expr});
    }
    return sol;
}

} // namespace g2cayley

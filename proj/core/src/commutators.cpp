#include "g2cayley/commutators.hpp"

#include <stdexcept>

namespace g2cayley {
namespace {

// Readout entries valid during the left-to-right peel in the order
// alpha, beta, a+b, 2a+b, 3a+b, 3a+2b (0-based indices, u(t) entry = sign*t).
struct PeelStep {
    Root root;
    int row, col, sign;
};

const std::vector<PeelStep>& peel_order() {
    static const std::vector<PeelStep> steps = {
        {kAlpha, 3, 2, -1},          {kBeta, 4, 1, 1},
        {kAlphaBeta, 2, 6, 1},       {kTwoAlphaBeta, 3, 6, 1},
        {kThreeAlphaBeta, 5, 2, -1}, {kThreeAlphaTwoBeta, 4, 6, -1},
    };
    return steps;
}

} // namespace

UnipotentCoordinates unipotent_coordinates(const Matrix8& X) {
    UnipotentCoordinates out;
    Matrix8 rest = X;
    for (const PeelStep& step : peel_order()) {
        RatFunc param = rest.at(step.row, step.col) * RatFunc(Rational(step.sign));
        out.coords.push_back({step.root, param});
        if (!param.is_zero())
            rest = root_unipotent(step.root, -param).mat * rest;
    }
    if (rest == Matrix8::identity()) {
        out.ok = true;
    } else {
        out.failure = "residual after peeling is not the identity";
    }
    return out;
}

GroupElt commutator(const GroupElt& g, const GroupElt& h) {
    return group_mul(group_mul(group_inverse(g), group_inverse(h)), group_mul(g, h));
}

namespace {

std::vector<std::pair<Root, RatFunc>> table_entry(Root g1, Root g2, const RatFunc& x,
                                                  const RatFunc& y) {
    // the classical relations for positive pairs; all other pairs commute
    if (g1 == kAlpha && g2 == kBeta)
        return {{kAlphaBeta, -(x * y)},
                {kTwoAlphaBeta, -(x * x * y)},
                {kThreeAlphaBeta, x * x * x * y},
                {kThreeAlphaTwoBeta, RatFunc(-2) * x * x * x * y * y}};
    if (g1 == kAlpha && g2 == kAlphaBeta)
        return {{kTwoAlphaBeta, RatFunc(-2) * x * y},
                {kThreeAlphaBeta, RatFunc(3) * x * x * y},
                {kThreeAlphaTwoBeta, RatFunc(3) * x * y * y}};
    if (g1 == kAlpha && g2 == kTwoAlphaBeta)
        return {{kThreeAlphaBeta, RatFunc(3) * x * y}};
    if (g1 == kBeta && g2 == kThreeAlphaBeta) return {{kThreeAlphaTwoBeta, x * y}};
    if (g1 == kAlphaBeta && g2 == kTwoAlphaBeta)
        return {{kThreeAlphaTwoBeta, RatFunc(3) * x * y}};
    return {};
}

} // namespace

CommutatorReport check_relations() {
    const RatFunc x{Var::intern("x")};
    const RatFunc y{Var::intern("y")};
    CommutatorReport report;

    const auto& pos = positive_roots();
    for (std::size_t i = 0; i < pos.size(); ++i) {
        for (std::size_t j = 0; j < pos.size(); ++j) {
            if (i == j) continue;
            Root g1 = pos[i], g2 = pos[j];
            auto expected = table_entry(g1, g2, x, y);
            if (expected.empty() && i > j) continue; // unordered is enough when trivial

            CommutatorRelation rel;
            rel.g1 = g1;
            rel.g2 = g2;
            rel.expected = expected;

            GroupElt c = commutator(root_unipotent(g1, x), root_unipotent(g2, y));
            if (c.mat == Matrix8::identity()) {
                rel.commutes = true;
                rel.structural_match = expected.empty();
                rel.matches_table_exactly = expected.empty();
                rel.matches_table_up_to_sign = expected.empty();
            } else {
                auto peel = unipotent_coordinates(c.mat);
                rel.structural_match = peel.ok;
                if (peel.ok) {
                    for (auto& [r, p] : peel.coords)
                        if (!p.is_zero()) rel.factors.push_back({r, p});

                    // compare against the table entry factor by factor
                    bool exact = peel.ok, upto = peel.ok;
                    std::map<Root, RatFunc> got;
                    for (auto& [r, p] : rel.factors) got.emplace(r, p);
                    std::map<Root, RatFunc> want;
                    for (auto& [r, p] : expected)
                        if (!p.is_zero()) want.emplace(r, p);
                    if (got.size() != want.size()) exact = upto = false;
                    for (auto& [r, p] : want) {
                        auto it = got.find(r);
                        if (it == got.end()) {
                            exact = upto = false;
                            break;
                        }
                        if (!(it->second == p)) exact = false;
                        if (!(it->second == p) && !(it->second == -p)) upto = false;
                    }
                    rel.matches_table_exactly = exact;
                    rel.matches_table_up_to_sign = upto;
                }
            }

            if (!rel.structural_match) ++report.structural_mismatches;
            if (rel.structural_match && !rel.matches_table_exactly &&
                rel.matches_table_up_to_sign)
                ++report.sign_deviations;
            if (expected.empty() && !rel.commutes) report.all_unlisted_commute = false;
            report.relations.push_back(std::move(rel));
        }
    }
    return report;
}

std::pair<int, int> torus_scaling(Root r) {
    if (!is_supported_root(r))
        throw std::invalid_argument("torus_scaling: unsupported root " + r.str());
    auto [p, q] = root_character_exponents(r);

    const RatFunc l1{Var::intern("l1")};
    const RatFunc l2{Var::intern("l2")};
    const RatFunc c{Var::intern("c")};
    GroupElt t = torus_embed(l1, l2);
    Matrix8 conj = t.mat * root_unipotent(r, c).mat * t.mat.inverse();
    RatFunc scaled = l1.pow(p) * l2.pow(q) * c;
    if (!(conj == root_unipotent(r, scaled).mat))
        throw std::logic_error("torus_scaling: realized scaling disagrees for " + r.str());
    return {p, q};
}

} // namespace g2cayley

#include "g2cayley/parabolic.hpp"

#include <set>
#include <stdexcept>

namespace g2cayley {

std::string ParabolicData::str() const {
    switch (name) {
        case StandardParabolic::Borel: return "B";
        case StandardParabolic::PAlpha: return "P_a";
        case StandardParabolic::PBeta: return "P_b";
    }
    return "?";
}

const ParabolicData& parabolic(StandardParabolic which) {
    static const ParabolicData borel{
        StandardParabolic::Borel,
        {},
        {kAlpha, kBeta, kAlphaBeta, kTwoAlphaBeta, kThreeAlphaBeta, kThreeAlphaTwoBeta}};
    static const ParabolicData palpha{
        StandardParabolic::PAlpha,
        {kAlpha, -kAlpha},
        {kBeta, kAlphaBeta, kTwoAlphaBeta, kThreeAlphaBeta, kThreeAlphaTwoBeta}};
    static const ParabolicData pbeta{
        StandardParabolic::PBeta,
        {kBeta, -kBeta},
        {kAlpha, kAlphaBeta, kTwoAlphaBeta, kThreeAlphaBeta, kThreeAlphaTwoBeta}};
    switch (which) {
        case StandardParabolic::Borel: return borel;
        case StandardParabolic::PAlpha: return palpha;
        case StandardParabolic::PBeta: return pbeta;
    }
    throw std::logic_error("parabolic: bad selector");
}

const std::vector<std::pair<int, int>>& levi_pattern_positions() {
    static const std::vector<std::pair<int, int>> pos = {
        {0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}, {6, 6}, {7, 7},
        {1, 4}, {4, 1}, {2, 7}, {7, 2}};
    return pos;
}

bool is_levi_pattern(const Matrix8& m) {
    static const std::set<std::pair<int, int>> allowed(levi_pattern_positions().begin(),
                                                       levi_pattern_positions().end());
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if (!allowed.count({i, j}) && !m.at(i, j).is_zero()) return false;
    if (!(m.at(0, 0) == RatFunc(1)) || !(m.at(3, 3) == RatFunc(1))) return false;
    if (!(m.at(5, 5) * m.at(6, 6) == RatFunc(1))) return false;
    return true;
}

const std::vector<Var>& levi_slots() {
    static const std::vector<Var> slots = {
        Var::intern("T"), Var::intern("a"), Var::intern("c"), Var::intern("v"),
        Var::intern("u"), Var::intern("b"), Var::intern("d"), Var::intern("w"),
        Var::intern("X")};
    return slots;
}

Matrix8 levi_generic() {
    const auto& s = levi_slots();
    Matrix8 m;
    m.at(0, 0) = RatFunc(1);
    m.at(3, 3) = RatFunc(1);
    m.at(1, 1) = RatFunc(s[0]); // T
    m.at(1, 4) = RatFunc(s[1]); // a
    m.at(4, 1) = RatFunc(s[2]); // c
    m.at(4, 4) = RatFunc(s[3]); // v
    m.at(2, 2) = RatFunc(s[4]); // u
    m.at(2, 7) = RatFunc(s[5]); // b
    m.at(7, 2) = RatFunc(s[6]); // d
    m.at(5, 5) = RatFunc(s[7]); // w
    m.at(6, 6) = RatFunc(s[7]).inverse();
    m.at(7, 7) = RatFunc(s[8]); // X
    return m;
}

GroupElt levi_cell(BruhatCell cell, const RatFunc& s, const RatFunc& t,
                   const RatFunc& b, const RatFunc& x) {
    if (s.is_zero() || t.is_zero())
        throw std::domain_error("levi_cell: torus parameters must be nonzero");
    GroupElt torus = torus_embed(t, s);
    GroupElt ub = root_unipotent(kBeta, b);
    GroupElt um = root_unipotent(-kBeta, x);
    if (cell == BruhatCell::Small) return group_mul(group_mul(torus, ub), um);
    return group_mul(group_mul(group_mul(ub, torus), um), weyl_beta());
}

GroupElt generic_unipotent(const ParabolicData& p, const std::vector<RatFunc>& coords) {
    if (coords.size() != p.radical_roots.size())
        throw std::invalid_argument("generic_unipotent: coordinate count mismatch");
    GroupElt g;
    g.mat = Matrix8::identity();
    for (std::size_t i = 0; i < coords.size(); ++i)
        g = group_mul(g, root_unipotent(p.radical_roots[i], coords[i]));
    return g;
}

GroupElt generic_unipotent_full(const std::vector<RatFunc>& coords) {
    return generic_unipotent(parabolic(StandardParabolic::Borel), coords);
}

namespace {

std::vector<std::pair<int, int>> support_closure(const Matrix8& m) {
    std::vector<std::pair<int, int>> pos;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if (!m.at(i, j).is_zero()) pos.push_back({i, j});
    return pos;
}

Matrix8 pbeta_generic_product() {
    // generic Levi times generic radical, on disjoint fresh symbols
    std::vector<RatFunc> r;
    for (int i = 1; i <= 5; ++i) r.push_back(RatFunc(Var::intern("q" + std::to_string(i))));
    return levi_generic() * generic_unipotent(parabolic(StandardParabolic::PBeta), r).mat;
}

Matrix8 borel_generic_product() {
    std::vector<RatFunc> r;
    for (int i = 1; i <= 6; ++i) r.push_back(RatFunc(Var::intern("q" + std::to_string(i))));
    RatFunc l1(Var::intern("l1")), l2(Var::intern("l2"));
    return torus_embed(l1, l2).mat * generic_unipotent_full(r).mat;
}

} // namespace

const std::vector<std::pair<int, int>>& pbeta_pattern_positions() {
    static const std::vector<std::pair<int, int>> pos = support_closure(pbeta_generic_product());
    return pos;
}

const std::vector<std::pair<int, int>>& borel_pattern_positions() {
    static const std::vector<std::pair<int, int>> pos = support_closure(borel_generic_product());
    return pos;
}

namespace {

bool matches_pattern(const Matrix8& m, const std::vector<std::pair<int, int>>& allowed) {
    std::set<std::pair<int, int>> ok(allowed.begin(), allowed.end());
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if (!ok.count({i, j}) && !m.at(i, j).is_zero()) return false;
    return true;
}

} // namespace

bool is_pbeta_pattern(const Matrix8& m) { return matches_pattern(m, pbeta_pattern_positions()); }
bool is_borel_pattern(const Matrix8& m) { return matches_pattern(m, borel_pattern_positions()); }

ModularCharacter modular_character(const ParabolicData& p) {
    ModularCharacter out;
    for (Root r : p.radical_roots) {
        auto [e1, e2] = torus_scaling(r);
        out.p += e1;
        out.q += e2;
    }

    // oracle: conjugate the generic radical element by a generic torus and
    // re-read the coordinates; the product of the per-coordinate scalings is
    // the determinant of the adjoint action on the radical.
    RatFunc l1(Var::intern("l1")), l2(Var::intern("l2"));
    std::vector<RatFunc> r;
    for (std::size_t i = 1; i <= p.radical_roots.size(); ++i)
        r.push_back(RatFunc(Var::intern("q" + std::to_string(i))));
    GroupElt u = generic_unipotent(p, r);
    Matrix8 conj = torus_embed(l1, l2).mat * u.mat * torus_embed(l1, l2).mat.inverse();

    RatFunc det(1);
    bool ok = true;
    auto peel = unipotent_coordinates(conj);
    if (!peel.ok) {
        out.oracle_agrees = false;
        return out;
    }
    std::map<Root, RatFunc> got;
    for (auto& [root, val] : peel.coords) got.emplace(root, val);
    for (std::size_t i = 0; i < p.radical_roots.size(); ++i) {
        auto it = got.find(p.radical_roots[i]);
        if (it == got.end() || r[i].is_zero()) {
            ok = false;
            break;
        }
        det *= it->second / r[i]; // the scaling monomial on this coordinate
    }
    // roots not in the radical must not appear
    for (auto& [root, val] : got) {
        bool in_radical = false;
        for (Root rr : p.radical_roots) in_radical |= (rr == root);
        if (!in_radical && !val.is_zero()) ok = false;
    }
    out.oracle_agrees = ok && (det == RatFunc(l1).pow(out.p) * RatFunc(l2).pow(out.q));
    return out;
}

} // namespace g2cayley

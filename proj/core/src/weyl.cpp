#include "g2cayley/weyl.hpp"

#include <sstream>
#include <stdexcept>

namespace g2cayley {

std::string weyl_word_str(const WeylWord& w) {
    if (w.empty()) return "e";
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ".";
        os << (w[i] == SimpleRef::Alpha ? "wa" : "wb");
    }
    return os.str();
}

GroupElt weyl_rep(const WeylWord& w) {
    GroupElt g;
    g.mat = Matrix8::identity();
    for (SimpleRef s : w)
        g = group_mul(g, s == SimpleRef::Alpha ? weyl_alpha() : weyl_beta());
    return g;
}

Root simple_reflection(SimpleRef s, Root r) {
    // s_alpha: (a,b) -> (-a + 3b... derived from the pairing matrix of G2:
    // s_alpha(alpha) = -alpha, s_alpha(beta) = 3 alpha + beta,
    // s_beta(alpha) = alpha + beta, s_beta(beta) = -beta.
    if (s == SimpleRef::Alpha) return {-r.a + 3 * r.b, r.b};
    return {r.a, r.a - r.b};
}

Root weyl_action(const WeylWord& w, Root r) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = simple_reflection(*it, r);
    return r;
}

namespace {

// (row, col, sign) with u_gamma(t) having sign*t at that entry, chosen so the
// readout is uncontaminated within the supported family. 0-based indices.
struct Readout {
    Root root;
    int row, col;
    int sign;
};

const std::vector<Readout>& readouts() {
    static const std::vector<Readout> r = {
        {kAlpha, 3, 2, -1},        {-kAlpha, 3, 1, 1},
        {kBeta, 4, 1, 1},          {-kBeta, 1, 4, 1},
        {kAlphaBeta, 2, 6, 1},     {kTwoAlphaBeta, 3, 6, 1},
        {kThreeAlphaBeta, 5, 2, -1}, {kThreeAlphaTwoBeta, 4, 6, -1},
    };
    return r;
}

} // namespace

std::optional<FamilyMatch> match_one_parameter_family(const Matrix8& m) {
    for (const Readout& ro : readouts()) {
        RatFunc param = m.at(ro.row, ro.col) * RatFunc(Rational(ro.sign));
        if (param.is_zero()) continue;
        if (!(m == root_unipotent(ro.root, param).mat)) continue;
        return FamilyMatch{ro.root, param};
    }
    return std::nullopt;
}

RootActionResult root_action(SimpleRef s, Root gamma) {
    if (!is_supported_root(gamma))
        throw std::invalid_argument("root_action: unsupported root " + gamma.str());
    const RatFunc t{Var::intern("t")};
    GroupElt n = (s == SimpleRef::Alpha) ? weyl_alpha() : weyl_beta();
    Matrix8 conj = n.mat * root_unipotent(gamma, t).mat * n.mat.inverse();
    auto res = match_one_parameter_family(conj);
    if (!res)
        throw std::logic_error("root_action: conjugate of " + gamma.str() +
                               " is not of one-parameter form");
    RatFunc ratio = res->parameter / t;
    if (!ratio.is_constant())
        throw std::logic_error("root_action: non-scalar parameter for " + gamma.str());
    Root expected = simple_reflection(s, gamma);
    if (res->image != expected)
        throw std::logic_error("root_action: realized image disagrees with the "
                               "reflection table for " + gamma.str());
    return RootActionResult{res->image, ratio.constant_value()};
}

WeylEnumeration enumerate_weyl() {
    using S = SimpleRef;
    const S A = S::Alpha, B = S::Beta;
    std::vector<WeylWord> words = {
        {},           {A},          {B},          {A, B},          {B, A},
        {B, A, B},    {A, B, A},    {B, A, B, A}, {A, B, A, B},
        {A, B, A, B, A}, {B, A, B, A, B}, {A, B, A, B, A, B},
    };

    WeylEnumeration out;
    for (auto& w : words) {
        WeylClass cls;
        cls.word = w;
        cls.rep = weyl_rep(w);
        Matrix8 sq = cls.rep.mat * cls.rep.mat;
        cls.squares_to_torus = sq.is_diagonal();
        out.classes.push_back(std::move(cls));
    }

    out.pairwise_distinct_mod_torus = true;
    for (std::size_t i = 0; i < out.classes.size(); ++i)
        for (std::size_t j = i + 1; j < out.classes.size(); ++j)
            if (equal_mod_torus(out.classes[i].rep.mat, out.classes[j].rep.mat))
                out.pairwise_distinct_mod_torus = false;

    for (std::size_t i = 1; i < out.classes.size(); ++i)
        if (out.classes[i].squares_to_torus) ++out.involution_count;
    return out;
}

} // namespace g2cayley

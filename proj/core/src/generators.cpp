#include "g2cayley/generators.hpp"

#include <sstream>
#include <stdexcept>

namespace g2cayley {

std::string Root::str() const {
    auto part = [](int k, const char* name) -> std::string {
        if (k == 0) return "";
        std::string s;
        if (k == 1)
            s = name;
        else if (k == -1)
            s = std::string("-") + name;
        else
            s = std::to_string(k) + name;
        return s;
    };
    std::string s1 = part(a, "a");
    std::string s2 = part(b, "b");
    if (s1.empty() && s2.empty()) return "0";
    if (s1.empty()) return s2;
    if (s2.empty()) return s1;
    if (b > 0) return s1 + "+" + s2;
    return s1 + s2;
}

const std::array<Root, 6>& positive_roots() {
    static const std::array<Root, 6> roots = {kAlpha,         kBeta,           kAlphaBeta,
                                              kTwoAlphaBeta,  kThreeAlphaBeta, kThreeAlphaTwoBeta};
    return roots;
}

bool is_positive_root(Root r) {
    for (Root p : positive_roots())
        if (p == r) return true;
    return false;
}

bool is_supported_root(Root r) {
    return is_positive_root(r) || r == -kAlpha || r == -kBeta;
}

std::pair<int, int> root_character_exponents(Root r) {
    // alpha -> l1/l2, beta -> l2^2/l1; the rest are sums.
    int p = r.a - r.b;
    int q = 2 * r.b - r.a;
    return {p, q};
}

std::string Gen::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Torus: os << "g(" << p1.str() << "," << p2.str() << ")"; break;
        case Kind::Unipotent: os << "u[" << root.str() << "](" << p1.str() << ")"; break;
        case Kind::WeylAlpha: os << "na"; break;
        case Kind::WeylBeta: os << "nb"; break;
        case Kind::LongestWeyl: os << "wG"; break;
    }
    return os.str();
}

std::string GroupElt::word_str() const {
    if (word.empty()) return "e";
    std::ostringstream os;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) os << "*";
        os << word[i].str();
    }
    return os.str();
}

GroupElt group_mul(const GroupElt& a, const GroupElt& b) {
    GroupElt r;
    r.mat = a.mat * b.mat;
    r.word = a.word;
    r.word.insert(r.word.end(), b.word.begin(), b.word.end());
    return r;
}

namespace {

GroupElt atom(Gen g, Matrix8 m) {
    GroupElt e;
    e.mat = std::move(m);
    e.word = {std::move(g)};
    return e;
}

std::vector<Gen> invert_word(const std::vector<Gen>& word) {
    std::vector<Gen> out;
    out.reserve(word.size() + 4);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const Gen& g = *it;
        switch (g.kind) {
            case Gen::Kind::Torus:
                out.push_back({Gen::Kind::Torus, g.p1.inverse(), g.p2.inverse(), {}});
                break;
            case Gen::Kind::Unipotent:
                out.push_back({Gen::Kind::Unipotent, -g.p1, RatFunc(0), g.root});
                break;
            case Gen::Kind::WeylAlpha:
                // n_a^-1 = gamma(-1,-1) n_a
                out.push_back({Gen::Kind::Torus, RatFunc(-1), RatFunc(-1), {}});
                out.push_back({Gen::Kind::WeylAlpha, RatFunc(0), RatFunc(0), {}});
                break;
            case Gen::Kind::WeylBeta:
                // n_b^-1 = gamma(1,-1) n_b
                out.push_back({Gen::Kind::Torus, RatFunc(1), RatFunc(-1), {}});
                out.push_back({Gen::Kind::WeylBeta, RatFunc(0), RatFunc(0), {}});
                break;
            case Gen::Kind::LongestWeyl:
                out.push_back(g); // w_G is an involution
                break;
        }
    }
    return out;
}

} // namespace

GroupElt group_inverse(const GroupElt& g) {
    GroupElt r;
    r.mat = g.mat.inverse();
    r.word = invert_word(g.word);
    return r;
}

Matrix8 evaluate_word(const std::vector<Gen>& word) {
    Matrix8 m = Matrix8::identity();
    for (const Gen& g : word) {
        switch (g.kind) {
            case Gen::Kind::Torus: m = m * torus_embed(g.p1, g.p2).mat; break;
            case Gen::Kind::Unipotent: m = m * root_unipotent(g.root, g.p1).mat; break;
            case Gen::Kind::WeylAlpha: m = m * weyl_alpha().mat; break;
            case Gen::Kind::WeylBeta: m = m * weyl_beta().mat; break;
            case Gen::Kind::LongestWeyl: m = m * longest_weyl().mat; break;
        }
    }
    return m;
}

CayleyElt torus_action(const RatFunc& l1, const RatFunc& l2, const CayleyElt& c) {
    Mat2 a{l1, RatFunc(0), RatFunc(0), l2};
    Mat2 a_inv{l1.inverse(), RatFunc(0), RatFunc(0), l2.inverse()};
    Mat2 b{l2, RatFunc(0), RatFunc(0), l2.inverse()};
    return {a * c.x * a_inv, b * (a * c.y * a_inv)};
}

GroupElt torus_embed(const RatFunc& l1, const RatFunc& l2) {
    if (l1.is_zero() || l2.is_zero())
        throw std::domain_error("torus_embed: zero parameter");
    std::array<RatFunc, 8> d = {RatFunc(1), l1 / l2,       l2 / l1,       RatFunc(1),
                                l2,         l1,            l1.inverse(),  l2.inverse()};
    return atom({Gen::Kind::Torus, l1, l2, {}}, Matrix8::diagonal(d));
}

namespace {

// Constants of the beta root maps: x0 = e31, w0 = e12, x0' = -e21, w0' = e42.
const CayleyElt& beta_x0() {
    static const CayleyElt v = cayley_basis()[2];
    return v;
}
const CayleyElt& beta_w0() {
    static const CayleyElt v = cayley_basis()[4];
    return v;
}
const CayleyElt& beta_x0p() {
    static const CayleyElt v = cayley_basis()[1].scaled(RatFunc(-1));
    return v;
}
const CayleyElt& beta_w0p() {
    static const CayleyElt v = cayley_basis()[7];
    return v;
}

Mat2 upper_unipotent(const RatFunc& t) {
    return {RatFunc(1), t, RatFunc(0), RatFunc(1)};
}
Mat2 lower_unipotent(const RatFunc& t) {
    return {RatFunc(1), RatFunc(0), t, RatFunc(1)};
}

CayleyElt apply_root_map(Root gamma, const RatFunc& t, const CayleyElt& c) {
    const RatFunc& x1 = c.x.a;
    const RatFunc& x2 = c.x.b;
    const RatFunc& x3 = c.x.c;
    const RatFunc& x4 = c.x.d;
    const RatFunc& y1 = c.y.a;
    const RatFunc& y2 = c.y.b;
    const RatFunc& y3 = c.y.c;
    const RatFunc& y4 = c.y.d;

    if (gamma == kAlpha) {
        Mat2 v = upper_unipotent(t), vinv = upper_unipotent(-t);
        return {v * c.x * vinv, c.y * vinv};
    }
    if (gamma == -kAlpha) {
        Mat2 v = lower_unipotent(t), vinv = lower_unipotent(-t);
        return {v * c.x * vinv, c.y * vinv};
    }
    if (gamma == kBeta) return c + l_map(beta_w0(), beta_x0(), c).scaled(t);
    if (gamma == -kBeta) return c + l_map(beta_w0p(), beta_x0p(), c).scaled(t);
    if (gamma == kAlphaBeta) {
        return CayleyElt::from_coords({x1 + t * y4, x2, x3 + t * y3, x4 - t * y4,
                                       y1 + t * (x4 - x1) - t * t * y4, y2 + t * x2, y3, y4});
    }
    if (gamma == kTwoAlphaBeta) {
        return CayleyElt::from_coords({x1 - t * y3, x2 + t * y4, x3, x4 + t * y3, y1 - t * x3,
                                       y2 + t * (x4 - x1) + t * t * y3, y3, y4});
    }
    if (gamma == kThreeAlphaBeta) {
        return CayleyElt::from_coords(
            {x1, x2 - t * y3, x3, x4, y1, y2 - t * x3, y3, y4});
    }
    if (gamma == kThreeAlphaTwoBeta) {
        return CayleyElt::from_coords(
            {x1, x2, x3, x4, y1 - t * y3, y2 - t * y4, y3, y4});
    }
    throw std::invalid_argument("root_unipotent: unsupported root " + gamma.str());
}

} // namespace

GroupElt root_unipotent(Root gamma, const RatFunc& t) {
    if (!is_supported_root(gamma))
        throw std::invalid_argument("root_unipotent: unsupported root " + gamma.str());
    Matrix8 m = linear_map_to_matrix8(
        [&](const CayleyElt& c) { return apply_root_map(gamma, t, c); });
    return atom({Gen::Kind::Unipotent, t, RatFunc(0), gamma}, std::move(m));
}

GroupElt weyl_alpha() {
    static const Matrix8 m = [] {
        Matrix8 r = root_unipotent(kAlpha, RatFunc(1)).mat *
                    root_unipotent(-kAlpha, RatFunc(-1)).mat *
                    root_unipotent(kAlpha, RatFunc(1)).mat;
        return r;
    }();
    return atom({Gen::Kind::WeylAlpha, RatFunc(0), RatFunc(0), {}}, m);
}

GroupElt weyl_beta() {
    static const Matrix8 m = [] {
        Matrix8 r = root_unipotent(kBeta, RatFunc(1)).mat *
                    root_unipotent(-kBeta, RatFunc(-1)).mat *
                    root_unipotent(kBeta, RatFunc(1)).mat;
        return r;
    }();
    return atom({Gen::Kind::WeylBeta, RatFunc(0), RatFunc(0), {}}, m);
}

GroupElt longest_weyl() {
    static const Matrix8 m = [] {
        Mat2 s{RatFunc(0), RatFunc(-1), RatFunc(1), RatFunc(0)};
        Mat2 sinv{RatFunc(0), RatFunc(1), RatFunc(-1), RatFunc(0)};
        return linear_map_to_matrix8([&](const CayleyElt& c) {
            return CayleyElt{s * c.x * sinv, s * c.y * sinv};
        });
    }();
    return atom({Gen::Kind::LongestWeyl, RatFunc(0), RatFunc(0), {}}, m);
}

const std::array<Matrix8, 4>& order2_torus() {
    static const std::array<Matrix8, 4> t = {
        Matrix8::identity(),
        torus_embed(RatFunc(-1), RatFunc(-1)).mat,
        torus_embed(RatFunc(1), RatFunc(-1)).mat,
        torus_embed(RatFunc(-1), RatFunc(1)).mat,
    };
    return t;
}

bool in_order2_torus(const Matrix8& m) {
    for (const Matrix8& t : order2_torus())
        if (m == t) return true;
    return false;
}

bool equal_mod_torus(const Matrix8& g, const Matrix8& h) {
    return (g * h.inverse()).is_diagonal();
}

} // namespace g2cayley

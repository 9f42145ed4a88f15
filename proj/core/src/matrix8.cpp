#include "g2cayley/matrix8.hpp"

#include <sstream>
#include <stdexcept>

namespace g2cayley {

Matrix8::Matrix8() { e_.fill(RatFunc(0)); }

Matrix8 Matrix8::identity() {
    Matrix8 m;
    for (int i = 0; i < 8; ++i) m.at(i, i) = RatFunc(1);
    return m;
}

Matrix8 Matrix8::zero() { return Matrix8(); }

Matrix8 Matrix8::diagonal(const std::array<RatFunc, 8>& d) {
    Matrix8 m;
    for (int i = 0; i < 8; ++i) m.at(i, i) = d[i];
    return m;
}

Matrix8 operator*(const Matrix8& a, const Matrix8& b) {
    Matrix8 r;
    for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k) {
            const RatFunc& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < 8; ++j) {
                const RatFunc& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

Matrix8 operator+(const Matrix8& a, const Matrix8& b) {
    Matrix8 r;
    for (int i = 0; i < 64; ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
}

Matrix8 operator-(const Matrix8& a, const Matrix8& b) {
    Matrix8 r;
    for (int i = 0; i < 64; ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
}

Matrix8 Matrix8::scaled(const RatFunc& s) const {
    Matrix8 r;
    for (int i = 0; i < 64; ++i) r.e_[i] = e_[i] * s;
    return r;
}

CayleyElt Matrix8::apply(const CayleyElt& c) const {
    auto v = c.coords();
    std::array<RatFunc, 8> out;
    out.fill(RatFunc(0));
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            const RatFunc& m = at(i, j);
            if (!m.is_zero() && !v[j].is_zero()) out[i] += m * v[j];
        }
    return CayleyElt::from_coords(out);
}

bool Matrix8::is_diagonal() const {
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

bool Matrix8::is_zero() const {
    for (auto& v : e_)
        if (!v.is_zero()) return false;
    return true;
}

namespace {

// Gauss-Jordan over the fraction field; pivot preference: nonzero constants.
// aug has 8 rows and `cols` columns; returns false if a pivot is missing.
bool eliminate(std::vector<std::vector<RatFunc>>& aug, int cols, RatFunc* det_out) {
    RatFunc det(1);
    for (int col = 0; col < 8; ++col) {
        int pick = -1;
        for (int r = col; r < 8; ++r) {
            if (aug[r][col].is_zero()) continue;
            if (aug[r][col].is_constant()) {
                pick = r;
                break;
            }
            if (pick < 0) pick = r;
        }
        if (pick < 0) return false;
        if (pick != col) {
            std::swap(aug[pick], aug[col]);
            det = -det;
        }
        RatFunc p = aug[col][col];
        det *= p;
        for (int c = col; c < cols; ++c) aug[col][c] = aug[col][c] / p;
        for (int r = 0; r < 8; ++r) {
            if (r == col) continue;
            RatFunc f = aug[r][col];
            if (f.is_zero()) continue;
            for (int c = col; c < cols; ++c) aug[r][c] = aug[r][c] - f * aug[col][c];
        }
    }
    if (det_out) *det_out = det;
    return true;
}

} // namespace

RatFunc Matrix8::det() const {
    std::vector<std::vector<RatFunc>> aug(8, std::vector<RatFunc>(8, RatFunc(0)));
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) aug[i][j] = at(i, j);
    RatFunc d;
    if (!eliminate(aug, 8, &d)) return RatFunc(0);
    return d;
}

Matrix8 Matrix8::inverse() const {
    std::vector<std::vector<RatFunc>> aug(8, std::vector<RatFunc>(16, RatFunc(0)));
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) aug[i][j] = at(i, j);
        aug[i][8 + i] = RatFunc(1);
    }
    if (!eliminate(aug, 16, nullptr))
        throw std::domain_error("Matrix8::inverse: singular matrix");
    Matrix8 r;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) r.at(i, j) = aug[i][8 + j];
    return r;
}

Matrix8 Matrix8::substituted(const std::map<Var, RatFunc>& bindings) const {
    Matrix8 r;
    for (int i = 0; i < 64; ++i) r.e_[i] = e_[i].substituted(bindings);
    return r;
}

std::array<Rational, 64> Matrix8::evaluate(const std::map<Var, Rational>& assignment) const {
    std::array<Rational, 64> out;
    for (int i = 0; i < 64; ++i) out[i] = e_[i].evaluate(assignment);
    return out;
}

bool Matrix8::depends_on(Var v) const {
    for (auto& x : e_)
        if (x.depends_on(v)) return true;
    return false;
}

std::string Matrix8::str() const {
    std::ostringstream os;
    for (int i = 0; i < 8; ++i) {
        os << "[";
        for (int j = 0; j < 8; ++j) {
            if (j) os << ", ";
            os << at(i, j).str();
        }
        os << "]\n";
    }
    return os.str();
}

Matrix8 linear_map_to_matrix8(const std::function<CayleyElt(const CayleyElt&)>& f) {
    Matrix8 m;
    const auto& basis = cayley_basis();
    for (int j = 0; j < 8; ++j) {
        auto img = f(basis[j]).coords();
        for (int i = 0; i < 8; ++i) m.at(i, j) = img[i];
    }
    return m;
}

namespace {

// Two generic Cayley elements on reserved coordinate symbols. The bare
// registry names c, d stay available to callers; these use c1..c8, d1..d8.
std::pair<CayleyElt, CayleyElt> generic_pair() {
    std::array<RatFunc, 8> cv, dv;
    for (int i = 0; i < 8; ++i) {
        cv[i] = RatFunc(Var::intern("c" + std::to_string(i + 1)));
        dv[i] = RatFunc(Var::intern("d" + std::to_string(i + 1)));
    }
    return {CayleyElt::from_coords(cv), CayleyElt::from_coords(dv)};
}

void require_no_generic_collision(const Matrix8& g) {
    for (int i = 1; i <= 8; ++i) {
        if (g.depends_on(Var::intern("c" + std::to_string(i))) ||
            g.depends_on(Var::intern("d" + std::to_string(i))))
            throw std::invalid_argument(
                "matrix under test uses the reserved generic symbols c1..c8/d1..d8");
    }
}

} // namespace

bool is_automorphism(const Matrix8& g) {
    require_no_generic_collision(g);
    if (!(g.apply(CayleyElt::one()) == CayleyElt::one())) return false;
    auto [c, d] = generic_pair();
    CayleyElt lhs = g.apply(cayley_mul(c, d));
    CayleyElt rhs = cayley_mul(g.apply(c), g.apply(d));
    return lhs == rhs;
}

bool is_derivation(const Matrix8& D) {
    require_no_generic_collision(D);
    auto [c, d] = generic_pair();
    CayleyElt lhs = D.apply(cayley_mul(c, d));
    CayleyElt rhs = cayley_mul(D.apply(c), d) + cayley_mul(c, D.apply(d));
    return lhs == rhs;
}

} // namespace g2cayley

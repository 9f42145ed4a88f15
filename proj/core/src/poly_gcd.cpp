#include "g2cayley/poly.hpp"

#include <stdexcept>

namespace g2cayley {
namespace {

Integer gcd_int(Integer a, Integer b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Integer r = a % b;
        a = b;
        b = r;
    }
    return a;
}

Integer lcm_int(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_int(a, b) * b;
}

// Lowest-id variable occurring in p; throws on constants.
Var main_variable(const Poly& p, const Poly& q) {
    std::uint32_t best = UINT32_MAX;
    for (const Poly* r : {&p, &q})
        for (auto& [m, c] : r->terms()) {
            (void)c;
            for (auto& [id, e] : m.factors()) {
                (void)e;
                best = std::min(best, id);
            }
        }
    if (best == UINT32_MAX) throw std::domain_error("main_variable: constant polynomials");
    return var_by_id(best);
}

// Pseudo-remainder of f by g in variable v (g must depend on v, so its
// leading v-coefficient is v-free and each step strictly drops the degree).
Poly pseudo_remainder(const Poly& f, const Poly& g, Var v) {
    std::uint32_t n = g.degree_in(v);
    Poly lg = g.coefficients_in(v)[n];
    Poly r = f;
    while (!r.is_zero() && r.degree_in(v) >= n) {
        std::uint32_t dr = r.degree_in(v);
        Poly lr = r.coefficients_in(v)[dr];
        Poly shift = Poly::monomial(Monomial(v, dr - n), Rational(1));
        r = lg * r - lr * shift * g;
    }
    return r;
}

} // namespace

ContentSplit content_split(const Poly& p) {
    if (p.is_zero()) return {Rational(0), Poly::zero()};
    // Scale so all coefficients become coprime integers.
    Integer den_lcm = 1, num_gcd = 0;
    for (auto& [m, c] : p.terms()) {
        (void)m;
        den_lcm = lcm_int(den_lcm, denominator(c));
        num_gcd = gcd_int(num_gcd, numerator(c));
    }
    Rational content(num_gcd, den_lcm);
    if (p.leading_coeff() < 0) content = -content;
    return {content, p.scaled(Rational(1) / content)};
}

Poly divide_exact(const Poly& p, const Poly& d) {
    if (d.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
    Poly r = p;
    Poly q;
    while (!r.is_zero()) {
        const Monomial& lm = r.leading_monomial();
        if (!d.leading_monomial().divides(lm))
            throw std::domain_error("divide_exact: not divisible");
        Monomial qm = d.leading_monomial().divide_into(lm);
        Rational qc = r.leading_coeff() / d.leading_coeff();
        q.add_term(qm, qc);
        r -= d.mul_monomial(qm, qc);
    }
    return q;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return Poly::zero();
    if (a.is_zero()) return content_split(b).primitive;
    if (b.is_zero()) return content_split(a).primitive;

    Poly f = content_split(a).primitive;
    Poly g = content_split(b).primitive;
    if (f.is_constant() || g.is_constant()) return Poly::one();

    Var v = main_variable(f, g);
    if (!f.depends_on(v) || !g.depends_on(v)) {
        // v occurs in only one of them: recurse on contents w.r.t. v.
        const Poly& with = f.depends_on(v) ? f : g;
        const Poly& without = f.depends_on(v) ? g : f;
        auto coeffs = with.coefficients_in(v);
        Poly cont = Poly::zero();
        for (auto& c : coeffs) cont = poly_gcd(cont, c);
        return poly_gcd(cont, without);
    }

    // contents w.r.t. v
    auto cont_of = [&](const Poly& p) {
        Poly c = Poly::zero();
        for (auto& q : p.coefficients_in(v)) c = poly_gcd(c, q);
        return c;
    };
    Poly cf = cont_of(f), cg = cont_of(g);
    Poly fp = divide_exact(f, cf), gp = divide_exact(g, cg);
    Poly cont_gcd = poly_gcd(cf, cg);

    // primitive PRS on the primitive parts
    if (fp.degree_in(v) < gp.degree_in(v)) std::swap(fp, gp);
    while (!gp.is_zero()) {
        Poly r = pseudo_remainder(fp, gp, v);
        fp = gp;
        if (r.is_zero()) {
            gp = Poly::zero();
        } else {
            Poly rc = cont_of(r);
            gp = divide_exact(r, rc);
        }
    }
    Poly result = cont_gcd * fp;
    return content_split(result).primitive;
}

} // namespace g2cayley

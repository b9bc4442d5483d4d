#ifndef MONO3_RESULTANT_HPP
#define MONO3_RESULTANT_HPP

#include "mono3/gcd.hpp"

namespace mono3 {

struct not_univariate_ready : std::runtime_error {
    not_univariate_ready() : std::runtime_error("NotUnivariateReady") {}
};

// Resultant with respect to v via the subresultant PRS (Cohen, Alg. 3.3.7).
// Operates in the free ring; inputs are expected in canonical (adjunct-
// reduced) form, which free pseudo-division preserves soundly.
inline Poly resultant(const Poly& pin, const Poly& qin, Sym v) {
    if (pin.is_zero() || qin.is_zero()) return Poly();
    int32_t dp = pin.deg(v), dq = qin.deg(v);
    if (dp == 0 && dq == 0) throw not_univariate_ready();
    if (dp == 0) return Poly::reduce_adjuncts(gcdx::pow_free(pin, dq));
    if (dq == 0) return Poly::reduce_adjuncts(gcdx::pow_free(qin, dp));

    Poly A = pin, B = qin;
    int s = 1;
    if (dp < dq) {
        std::swap(A, B);
        if ((dp & 1) && (dq & 1)) s = -s;
    }
    Poly ca = gcdx::content_v(A, v), cb = gcdx::content_v(B, v);
    Poly pa, pb;
    if (!gcdx::div_exact_free(A, ca, pa) || !gcdx::div_exact_free(B, cb, pb))
        throw std::runtime_error("resultant: content division failed");
    A = pa;
    B = pb;
    Poly t = Poly::mul_free(gcdx::pow_free(ca, B.deg(v)), gcdx::pow_free(cb, A.deg(v)));
    Poly g(Q(1)), h(Q(1));
    while (true) {
        int32_t da = A.deg(v), db = B.deg(v);
        int32_t delta = da - db;
        if ((da & 1) && (db & 1)) s = -s;
        Poly R = gcdx::prem(A, B, v);
        A = B;
        // B = R / (g * h^delta)
        Poly divisor = Poly::mul_free(g, gcdx::pow_free(h, delta));
        if (R.is_zero()) {
            B = Poly();
        } else {
            Poly nb;
            if (!gcdx::div_exact_free(R, divisor, nb))
                throw std::runtime_error("resultant: prs division failed");
            B = nb;
        }
        g = gcdx::ucoeff(A, v, A.deg(v));
        if (delta >= 1) {
            // h = g^delta / h^(delta-1)
            Poly num = gcdx::pow_free(g, delta);
            Poly nh;
            if (delta == 1)
                nh = num;
            else if (!gcdx::div_exact_free(num, gcdx::pow_free(h, delta - 1), nh))
                throw std::runtime_error("resultant: h update failed");
            h = nh;
        }
        if (B.is_zero()) return Poly();  // common factor of positive degree
        if (B.deg(v) == 0) {
            int32_t dA = A.deg(v);
            // h' = lc(B)^degA / h^(degA - 1)
            Poly num = gcdx::pow_free(B, dA);
            Poly hfinal;
            if (dA == 0)
                hfinal = Poly(Q(1));
            else if (dA == 1)
                hfinal = num;
            else if (!gcdx::div_exact_free(num, gcdx::pow_free(h, dA - 1), hfinal))
                throw std::runtime_error("resultant: final division failed");
            Poly r = Poly::mul_free(t, hfinal);
            if (s < 0) r = -r;
            return Poly::reduce_adjuncts(r);
        }
    }
}

inline Poly resultant(const RatFn& p, const RatFn& q, Sym v) {
    if (!(p.den() == Poly(Q(1))) || !(q.den() == Poly(Q(1))))
        throw std::runtime_error("resultant expects polynomials");
    return resultant(p.num(), q.num(), v);
}

}  // namespace mono3

#endif

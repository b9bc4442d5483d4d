#ifndef MONO3_GCD_HPP
#define MONO3_GCD_HPP

#include <cstdio>
#include <cstdlib>

#include "mono3/modgcd.hpp"
#include "mono3/poly.hpp"

namespace mono3 {

// Multivariate gcd over Q in the *free* polynomial ring (adjunct symbols are
// treated as ordinary variables; no relation is applied).  Since canonical
// inputs carry every adjunct with exponent < 2, a free-ring common divisor
// and its cofactors descend to the quotient ring, which is all
// canonicalization needs.  Primitive PRS with recursive contents.
namespace gcdx {

// ---- univariate view helpers: treat p as element of Q[rest][v] ----

inline int32_t udeg(const Poly& p, Sym v) { return p.deg(v); }

inline Poly ucoeff(const Poly& p, Sym v, int32_t k) {
    Poly r;
    for (auto& kv : p.t) {
        if (kv.first.deg(v) != k) continue;
        Mono m = k ? kv.first.div(Mono::of(v, k)) : kv.first;
        r.add_term(m, kv.second);
    }
    return r;
}

inline Poly shift_v(const Poly& p, Sym v, int32_t k) {  // p * v^k, free
    if (k == 0) return p;
    Poly r;
    Mono vm = Mono::of(v, k);
    for (auto& kv : p.t) r.add_term(kv.first.mul(vm), kv.second);
    return r;
}

inline Poly pow_free(const Poly& p, long n) {
    Poly r(Q(1));
    Poly base = p;
    while (n) {
        if (n & 1) r = Poly::mul_free(r, base);
        n >>= 1;
        if (n) base = Poly::mul_free(base, base);
    }
    return r;
}

// Exact division in the free ring; returns false if not divisible.
inline bool div_exact_free(const Poly& a, const Poly& b, Poly& q) {
    if (b.is_zero()) return false;
    q = Poly();
    Poly r = a;
    const Mono& lb = b.leading_mono();
    const Q& cb = b.leading_coef();
    while (!r.is_zero()) {
        const Mono& lr = r.leading_mono();
        if (!lb.divides(lr)) return false;
        Mono m = lr.div(lb);
        Q c = r.leading_coef() / cb;
        q.add_term(m, c);
        // r -= c * m * b
        for (auto& kv : b.t) r.add_term(kv.first.mul(m), -c * kv.second);
    }
    return true;
}

inline Poly pow_free_fwd(const Poly& p, long n);

// free pseudo-remainder of a by b wrt v:  lc(b)^(da-db+1) * a = q*b + rem,
// with the exponent held exactly at da-db+1 (subresultant theory needs it)
inline Poly prem(const Poly& a, const Poly& b, Sym v) {
    int32_t db = udeg(b, v);
    Poly r = a;
    Poly lcb = ucoeff(b, v, db);
    int32_t dr = udeg(r, v);
    long want = long(dr) - db + 1, steps = 0;
    while (!r.is_zero() && dr >= db) {
        Poly lcr = ucoeff(r, v, dr);
        r = Poly::mul_free(lcb, r) - Poly::mul_free(shift_v(lcr, v, dr - db), b);
        ++steps;
        int32_t nd = udeg(r, v);
        if (!r.is_zero() && nd >= dr)
            throw std::runtime_error("prem: degree did not drop");
        dr = nd;
    }
    for (; steps < want; ++steps) r = Poly::mul_free(lcb, r);
    return r;
}

Poly gcd(const Poly& a, const Poly& b);

// content of p wrt v (gcd of Q[rest] coefficients), and primitive part
inline Poly content_v(const Poly& p, Sym v) {
    Poly c;
    for (int32_t k = udeg(p, v); k >= 0; --k) {
        Poly ck = ucoeff(p, v, k);
        if (ck.is_zero()) continue;
        c = c.is_zero() ? ck : gcd(c, ck);
        if (c.is_constant() && !c.is_zero()) break;
    }
    return c;
}

inline Poly monic_normalize(const Poly& p) {
    if (p.is_zero()) return p;
    Poly r = p;
    Q lc = p.leading_coef();
    for (auto& kv : r.t) kv.second /= lc;
    return r;
}

// common monomial factor of all terms
inline Mono mono_content(const Poly& p) {
    Mono g = p.t.begin()->first;
    for (auto& kv : p.t) {
        if (g.empty()) break;
        Mono n;
        size_t i = 0, j = 0;
        while (i < g.e.size() && j < kv.first.e.size()) {
            if (g.e[i].first < kv.first.e[j].first)
                ++i;
            else if (g.e[i].first > kv.first.e[j].first)
                ++j;
            else {
                n.e.push_back({g.e[i].first, std::min(g.e[i].second, kv.first.e[j].second)});
                ++i, ++j;
            }
        }
        g = n;
    }
    return g;
}

inline Poly strip_mono(const Poly& p, const Mono& m) {
    if (m.empty()) return p;
    Poly r;
    for (auto& kv : p.t) r.add_term(kv.first.div(m), kv.second);
    return r;
}

// deterministic per-symbol evaluation points for the "likely coprime" probe
inline Q probe_point(Sym s) {
    static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43};
    int idx = (s & 0xFFFFF) % 14;
    int kind = s >> 20;
    return Q(primes[idx] + 4 * kind + 1);
}

inline Poly eval_except(const Poly& p, Sym keep) {
    Poly r;
    for (auto& kv : p.t) {
        Q c = kv.second;
        int32_t kd = 0;
        for (auto& pr : kv.first.e) {
            if (pr.first == keep) {
                kd = pr.second;
                continue;
            }
            Q b = probe_point(pr.first);
            for (int32_t i = 0; i < pr.second; ++i) c *= b;
        }
        r.add_term(Mono::of(keep, kd), c);
    }
    return r;
}

inline int32_t univar_gcd_deg(Poly a, Poly b, Sym v) {
    // plain monic euclid over Q
    while (!b.is_zero()) {
        int32_t da = udeg(a, v), db = udeg(b, v);
        if (da < db) {
            std::swap(a, b);
            continue;
        }
        Poly r = a;
        while (!r.is_zero() && udeg(r, v) >= db) {
            int32_t dr = udeg(r, v);
            Q c = ucoeff(r, v, dr).constant_value() / ucoeff(b, v, db).constant_value();
            Poly sub = shift_v(b, v, dr - db);
            for (auto& kv : sub.t) r.add_term(kv.first, -c * kv.second);
        }
        a = b;
        b = r;
    }
    return a.is_zero() ? -1 : udeg(a, v);
}

inline Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return monic_normalize(b);
    if (b.is_zero()) return monic_normalize(a);
    if (a.is_constant() || b.is_constant()) return Poly(Q(1));

    // common monomial factor first (cheap and frequent)
    Mono ma = mono_content(a), mb = mono_content(b);
    Mono mg;
    {
        size_t i = 0, j = 0;
        while (i < ma.e.size() && j < mb.e.size()) {
            if (ma.e[i].first < mb.e[j].first)
                ++i;
            else if (ma.e[i].first > mb.e[j].first)
                ++j;
            else {
                mg.e.push_back({ma.e[i].first, std::min(ma.e[i].second, mb.e[j].second)});
                ++i, ++j;
            }
        }
    }
    Poly A = strip_mono(a, ma), B = strip_mono(b, mb);
    Poly monopart;
    monopart.add_term(mg, Q(1));

    if (A == B) return monic_normalize(Poly::mul_free(monopart, A));

    std::vector<Sym> syms;
    A.collect_syms(syms);
    std::vector<Sym> symsB;
    B.collect_syms(symsB);
    std::vector<Sym> common;
    for (Sym s : syms)
        if (std::find(symsB.begin(), symsB.end(), s) != symsB.end()) common.push_back(s);
    if (common.empty()) return monic_normalize(monopart);

    // probe: if the univariate images along every common symbol are coprime,
    // skip the PRS.  Deterministic points keep canonicalization reproducible.
    bool maybe_common = false;
    for (Sym v : common) {
        Poly ea = eval_except(A, v), eb = eval_except(B, v);
        if (ea.is_zero() || eb.is_zero() || univar_gcd_deg(ea, eb, v) > 0) {
            maybe_common = true;
            break;
        }
    }
    if (!maybe_common) return monic_normalize(monopart);

    // big instances: modular gcd with trial-division soundness gate
    {
        std::vector<Sym> all = syms;
        for (Sym s : symsB)
            if (std::find(all.begin(), all.end(), s) == all.end()) all.push_back(s);
        int64_t work = 1;
        for (Sym s : common) work *= 1 + std::min(A.deg(s), B.deg(s));
        bool big = (all.size() >= 2) &&
                   (work >= 64 || A.total_degree() + B.total_degree() >= 16 ||
                    A.t.size() + B.t.size() >= 60);
        if (big) {
            auto g = modgcd::gcd_over_q(A, B);
            if (g) return monic_normalize(Poly::mul_free(monopart, *g));
            if (std::getenv("MONO3_GCD_DEBUG"))
                std::fprintf(stderr, "modgcd fallback: deg %ld/%ld terms %zu/%zu syms %zu\n",
                             (long)A.total_degree(), (long)B.total_degree(), A.t.size(),
                             B.t.size(), all.size());
        }
    }

    // main variable: smallest combined degree among common symbols
    Sym v = common.front();
    int64_t best = int64_t(A.deg(v)) + B.deg(v);
    for (Sym s : common) {
        int64_t d = int64_t(A.deg(s)) + B.deg(s);
        if (d < best) {
            best = d;
            v = s;
        }
    }

    Poly ca = content_v(A, v), cb = content_v(B, v);
    Poly pa, pb;
    if (!div_exact_free(A, ca, pa) || !div_exact_free(B, cb, pb))
        throw std::runtime_error("gcd: content division failed");
    Poly cg = gcd(ca, cb);

    // subresultant PRS: no gcd calls inside the loop, the step divisors are
    // the known factors g*h^delta
    Poly f = pa, g = pb;
    if (udeg(f, v) < udeg(g, v)) std::swap(f, g);
    Poly gg(Q(1)), h(Q(1));
    Poly cand;
    while (true) {
        int32_t df = udeg(f, v), dg = udeg(g, v);
        int32_t delta = df - dg;
        Poly r = prem(f, g, v);
        if (r.is_zero()) {
            cand = g;
            break;
        }
        if (udeg(r, v) == 0) {
            cand = Poly(Q(1));
            break;
        }
        Poly divisor = Poly::mul_free(gg, pow_free(h, delta));
        Poly nr;
        if (!div_exact_free(r, divisor, nr)) throw std::runtime_error("gcd: prs step failed");
        f = g;
        g = nr;
        gg = ucoeff(f, v, udeg(f, v));
        if (delta >= 1) {
            Poly num = pow_free(gg, delta);
            if (delta == 1)
                h = num;
            else {
                Poly nh;
                if (!div_exact_free(num, pow_free(h, delta - 1), nh))
                    throw std::runtime_error("gcd: h update failed");
                h = nh;
            }
        }
    }
    if (!cand.is_constant()) {
        Poly cc = content_v(cand, v);
        Poly pp;
        if (!div_exact_free(cand, cc, pp)) throw std::runtime_error("gcd: pp failed");
        cand = pp;
    } else {
        cand = Poly(Q(1));
    }
    Poly result = Poly::mul_free(Poly::mul_free(monopart, cg), cand);
    return monic_normalize(result);
}

}  // namespace gcdx

}  // namespace mono3

#endif

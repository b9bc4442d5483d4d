#ifndef MONO3_MODGCD_HPP
#define MONO3_MODGCD_HPP

#include "mono3/poly.hpp"

#include <cstdint>
#include <optional>

namespace mono3 {

// Modular multivariate gcd (dense Newton interpolation, the classical
// Brown/GCL scheme): images mod word-sized primes, per-variable evaluation
// and interpolation, leading-coefficient scaling, CRT across primes, exact
// trial division as the final soundness gate.  Used by gcdx::gcd for inputs
// the subresultant PRS cannot handle; everything here treats the ring as
// free (no adjunct reduction), matching the PRS path.
namespace modgcd {

using std::int64_t;
using std::uint64_t;

struct PolyP {  // sparse polynomial with Z_p coefficients
    std::map<Mono, int64_t, MonoGrlexGreater> t;
    bool is_zero() const { return t.empty(); }
    bool is_constant() const { return t.empty() || (t.size() == 1 && t.begin()->first.empty()); }
    int32_t deg(Sym s) const {
        int32_t d = 0;
        for (auto& kv : t) d = std::max(d, kv.first.deg(s));
        return d;
    }
    int64_t lc() const { return t.empty() ? 0 : t.begin()->second; }
};

inline int64_t mulmod(int64_t a, int64_t b, int64_t p) { return (__int128)a * b % p; }
inline int64_t powmod(int64_t a, int64_t e, int64_t p) {
    int64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}
inline int64_t invmod(int64_t a, int64_t p) { return powmod((a % p + p) % p, p - 2, p); }

inline void addterm(PolyP& r, const Mono& m, int64_t c, int64_t p) {
    c %= p;
    if (c < 0) c += p;
    if (c == 0) return;
    auto it = r.t.find(m);
    if (it == r.t.end())
        r.t.emplace(m, c);
    else {
        it->second = (it->second + c) % p;
        if (it->second == 0) r.t.erase(it);
    }
}

inline PolyP mul(const PolyP& a, const PolyP& b, int64_t p) {
    PolyP r;
    for (auto& ka : a.t)
        for (auto& kb : b.t) addterm(r, ka.first.mul(kb.first), mulmod(ka.second, kb.second, p), p);
    return r;
}
inline PolyP sub(const PolyP& a, const PolyP& b, int64_t p) {
    PolyP r = a;
    for (auto& kv : b.t) addterm(r, kv.first, p - kv.second, p);
    return r;
}
inline PolyP scale(const PolyP& a, int64_t c, int64_t p) {
    PolyP r;
    c = ((c % p) + p) % p;
    if (c == 0) return r;
    for (auto& kv : a.t) r.t.emplace(kv.first, mulmod(kv.second, c, p));
    return r;
}

// reduce an integer polynomial mod p (nullopt if the leading coefficient of
// either input dies, handled by the caller)
inline PolyP reduce_modp(const Poly& a, int64_t p) {
    PolyP r;
    for (auto& kv : a.t) {
        // coefficients must be integers here
        int64_t c = int64_t(mpz_fdiv_ui(kv.second.get_num_mpz_t(), (unsigned long)p));
        addterm(r, kv.first, c, p);
    }
    return r;
}

inline PolyP eval_sym(const PolyP& a, Sym s, int64_t c, int64_t p) {
    PolyP r;
    for (auto& kv : a.t) {
        int32_t d = kv.first.deg(s);
        Mono m = d ? kv.first.div(Mono::of(s, d)) : kv.first;
        addterm(r, m, mulmod(kv.second, powmod(c, d, p), p), p);
    }
    return r;
}

inline PolyP ucoeff(const PolyP& a, Sym s, int32_t k) {
    PolyP r;
    for (auto& kv : a.t) {
        if (kv.first.deg(s) != k) continue;
        Mono m = k ? kv.first.div(Mono::of(s, k)) : kv.first;
        r.t.emplace(m, kv.second);
    }
    return r;
}

// exact division (returns false if not divisible)
inline bool divides(const PolyP& a, const PolyP& b, int64_t p, PolyP* quot = nullptr) {
    // b / a
    if (a.is_zero()) return false;
    PolyP r = b, q;
    int64_t linv = invmod(a.lc(), p);
    const Mono& lm = a.t.begin()->first;
    while (!r.is_zero()) {
        const Mono& rm = r.t.begin()->first;
        if (!lm.divides(rm)) return false;
        Mono m = rm.div(lm);
        int64_t c = mulmod(r.lc(), linv, p);
        q.t.emplace(m, c);
        for (auto& kv : a.t) addterm(r, kv.first.mul(m), p - mulmod(kv.second, c, p), p);
    }
    if (quot) *quot = q;
    return true;
}

// univariate gcd mod p via dense vectors, monic
inline PolyP gcd_univar(const PolyP& pa, const PolyP& pb, Sym v, int64_t p) {
    auto todense = [&](const PolyP& q) {
        std::vector<int64_t> d(q.deg(v) + 1, 0);
        for (auto& kv : q.t) d[kv.first.deg(v)] = kv.second;
        return d;
    };
    auto degof = [](const std::vector<int64_t>& d) {
        for (int i = int(d.size()) - 1; i >= 0; --i)
            if (d[i]) return i;
        return -1;
    };
    std::vector<int64_t> a = todense(pa), b = todense(pb);
    int da = degof(a), db = degof(b);
    while (db >= 0) {
        if (da < db) {
            std::swap(a, b);
            std::swap(da, db);
        }
        int64_t linv = invmod(b[db], p);
        while (da >= db) {
            int64_t c = mulmod(a[da], linv, p);
            int sh = da - db;
            for (int i = 0; i <= db; ++i) {
                if (!b[i]) continue;
                a[i + sh] = (a[i + sh] - mulmod(b[i], c, p)) % p;
                if (a[i + sh] < 0) a[i + sh] += p;
            }
            while (da >= 0 && a[da] == 0) --da;
            if (da < 0) break;
        }
        std::swap(a, b);
        std::swap(da, db);
    }
    PolyP r;
    if (da < 0) return r;
    int64_t linv = invmod(a[da], p);
    for (int i = 0; i <= da; ++i)
        if (a[i]) r.t.emplace(Mono::of(v, i), mulmod(a[i], linv, p));
    return r;
}

struct EvalSeq {  // deterministic evaluation points
    int64_t next = 1;
    int64_t get(int64_t p) {
        int64_t c = next++;
        return (c % (p - 1)) + 1;  // in 1..p-1
    }
};

PolyP gcd_modp(const PolyP& a, const PolyP& b, int64_t p, EvalSeq& seq, int depth);

inline PolyP content_wrt(const PolyP& a, Sym X, int64_t p, EvalSeq& seq, int depth) {
    PolyP c;
    for (int32_t k = a.deg(X); k >= 0; --k) {
        PolyP ck = ucoeff(a, X, k);
        if (ck.is_zero()) continue;
        if (c.is_zero())
            c = ck;
        else
            c = gcd_modp(c, ck, p, seq, depth + 1);
        if (c.is_constant()) break;
    }
    if (c.is_constant() && !c.is_zero()) {
        PolyP one;
        one.t.emplace(Mono::one(), 1);
        return one;
    }
    return c;
}

// Dense Newton interpolation of H := gamma * G / lc_x1(G) where G is the
// gcd of a and b (both x1-primitive).  x1 is kept through the recursion;
// the variables in `evalvars` are evaluated one by one, scalar
// normalization happens only at the univariate base.  Throws on failure.
inline PolyP interp_gcd(const PolyP& a, const PolyP& b, const PolyP& gamma, Sym x1,
                        std::vector<Sym> evalvars, int64_t p, EvalSeq& seq, int depth) {
    if (depth > 24) throw std::runtime_error("modgcd: depth");
    // drop evaluation variables that no longer occur
    while (!evalvars.empty() && a.deg(evalvars.back()) == 0 && b.deg(evalvars.back()) == 0 &&
           gamma.deg(evalvars.back()) == 0)
        evalvars.pop_back();
    if (evalvars.empty()) {
        PolyP g = gcd_univar(a, b, x1, p);  // monic
        if (g.is_zero()) throw std::runtime_error("modgcd: zero base gcd");
        if (!gamma.is_constant()) throw std::runtime_error("modgcd: gamma not scalar at base");
        return scale(g, gamma.is_zero() ? 1 : gamma.lc(), p);
    }
    Sym X = evalvars.back();
    std::vector<Sym> rest(evalvars.begin(), evalvars.end() - 1);
    int32_t da = a.deg(x1), db = b.deg(x1);
    int64_t bound = std::min(a.deg(X), b.deg(X)) + gamma.deg(X) + 2;
    int32_t m = -1;  // x1-degree of the images (minimal = lucky)
    PolyP res, modpoly, oldres;
    modpoly.t.emplace(Mono::one(), 1);
    bool have = false;
    int points = 0;
    for (int iter = 0; iter < 8 * bound + 64; ++iter) {
        int64_t c = seq.get(p);
        PolyP ac = eval_sym(a, X, c, p);
        PolyP bc = eval_sym(b, X, c, p);
        if (ac.deg(x1) != da || bc.deg(x1) != db) continue;  // lc died
        PolyP gc = eval_sym(gamma, X, c, p);
        if (gc.is_zero()) continue;
        PolyP hc;
        try {
            hc = interp_gcd(ac, bc, gc, x1, rest, p, seq, depth + 1);
        } catch (const std::exception&) {
            continue;
        }
        int32_t n = hc.deg(x1);
        if (m >= 0 && n > m) continue;  // unlucky point
        if (m < 0 || n < m) {
            m = n;
            res = hc;
            modpoly = PolyP();
            addterm(modpoly, Mono::of(X, 1), 1, p);
            addterm(modpoly, Mono::one(), p - (c % p), p);
            have = false;
            points = 1;
            continue;
        }
        // Newton step
        oldres = res;
        have = true;
        PolyP modc = eval_sym(modpoly, X, c, p);
        PolyP diff = sub(hc, eval_sym(res, X, c, p), p);
        if (!diff.is_zero()) {
            int64_t corr = invmod(modc.lc(), p);
            res = sub(res, scale(mul(modpoly, diff, p), p - corr, p), p);
        }
        {
            PolyP simple;
            addterm(simple, Mono::of(X, 1), 1, p);
            addterm(simple, Mono::one(), p - (c % p), p);
            modpoly = mul(modpoly, simple, p);
        }
        ++points;
        if (have && res.t == oldres.t && points >= 2) return res;
        if (points > bound + 1) return res;  // degree bound reached
    }
    throw std::runtime_error("modgcd: no stable image");
}

// dense modular gcd over Z_p, monic-normalized (grlex lc == 1)
inline PolyP gcd_modp(const PolyP& a, const PolyP& b, int64_t p, EvalSeq& seq, int depth) {
    if (depth > 24) throw std::runtime_error("modgcd: depth");
    PolyP one;
    one.t.emplace(Mono::one(), 1);
    if (a.is_zero()) return b.is_zero() ? b : scale(b, invmod(b.lc(), p), p);
    if (b.is_zero()) return scale(a, invmod(a.lc(), p), p);
    if (a.is_constant() || b.is_constant()) return one;
    std::vector<Sym> sa, sb, common, uni;
    for (auto& kv : a.t)
        for (auto& pr : kv.first.e)
            if (std::find(sa.begin(), sa.end(), pr.first) == sa.end()) sa.push_back(pr.first);
    for (auto& kv : b.t)
        for (auto& pr : kv.first.e)
            if (std::find(sb.begin(), sb.end(), pr.first) == sb.end()) sb.push_back(pr.first);
    for (Sym s : sa)
        if (std::find(sb.begin(), sb.end(), s) != sb.end()) common.push_back(s);
    uni = sa;
    for (Sym s : sb)
        if (std::find(uni.begin(), uni.end(), s) == uni.end()) uni.push_back(s);
    if (common.empty()) return one;
    std::sort(common.begin(), common.end());
    std::sort(uni.begin(), uni.end());

    if (uni.size() == 1) {
        PolyP g = gcd_univar(a, b, uni[0], p);
        return g.is_zero() ? one : g;
    }

    // main variable: a common symbol of least combined degree
    Sym x1 = common.front();
    {
        int64_t best = INT64_MAX;
        for (Sym s : common) {
            int64_t d = int64_t(a.deg(s)) + b.deg(s);
            if (d < best) {
                best = d;
                x1 = s;
            }
        }
    }

    // split off x1-contents (gcd of x1-coefficient polys, recursively)
    PolyP conta = content_wrt(a, x1, p, seq, depth);
    PolyP contb = content_wrt(b, x1, p, seq, depth);
    PolyP gcdconts = gcd_modp(conta, contb, p, seq, depth + 1);
    PolyP ppa = a, ppb = b;
    if (!conta.is_constant()) {
        if (!divides(conta, a, p, &ppa)) throw std::runtime_error("modgcd: content div");
    }
    if (!contb.is_constant()) {
        if (!divides(contb, b, p, &ppb)) throw std::runtime_error("modgcd: content div");
    }

    PolyP gamma = gcd_modp(ucoeff(ppa, x1, ppa.deg(x1)), ucoeff(ppb, x1, ppb.deg(x1)), p, seq,
                           depth + 1);
    std::vector<Sym> evalvars;
    for (Sym s : uni)
        if (s != x1) evalvars.push_back(s);

    PolyP H = interp_gcd(ppa, ppb, gamma, x1, evalvars, p, seq, depth + 1);
    // primitive part wrt x1
    PolyP ch = content_wrt(H, x1, p, seq, depth);
    PolyP G = H;
    if (!ch.is_constant()) {
        if (!divides(ch, H, p, &G)) throw std::runtime_error("modgcd: pp div");
    }
    if (!(divides(G, ppa, p) && divides(G, ppb, p)))
        throw std::runtime_error("modgcd: candidate fails trial division");
    PolyP out = mul(gcdconts, G, p);
    return scale(out, invmod(out.lc(), p), p);
}

// ---- lift to Q ----------------------------------------------------------------

inline Poly clear_denominators(const Poly& a) {
    mpz_class l = 1;
    for (auto& kv : a.t) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), kv.second.get_den_mpz_t());
    Poly r = a * Q(l);
    mpz_class g = 0;
    for (auto& kv : r.t) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), kv.second.get_num_mpz_t());
    if (g > 1) r = r * Q(mpq_class(1, g));
    return r;
}

// gcd over Q via modular images; returns nullopt when the scheme fails
// (caller falls back to the subresultant PRS)
std::optional<Poly> gcd_over_q(const Poly& pa, const Poly& pb);

}  // namespace modgcd

}  // namespace mono3

#endif

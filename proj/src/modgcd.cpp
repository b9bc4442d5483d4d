#include "mono3/modgcd.hpp"

#include "mono3/gcd.hpp"

namespace mono3 {
namespace modgcd {

namespace {

const std::vector<int64_t>& prime_list() {
    // fixed word-sized primes (deterministic runs)
    static const std::vector<int64_t> v = {
        1073741789, 1073741783, 1073741741, 1073741723, 1073741719, 1073741717,
        1073741689, 1073741671, 1073741663, 1073741651, 1073741621, 1073741567,
        1073741561, 1073741527, 1073741503, 1073741477, 1073741467, 1073741441,
        1073741419, 1073741399, 1073741387, 1073741381, 1073741371, 1073741329,
    };
    return v;
}

// symmetric representative in (-p/2, p/2]
mpz_class sym_lift(int64_t c, int64_t p) {
    if (c > p / 2) return mpz_class((long)(c - p));
    return mpz_class((long)c);
}

}  // namespace

std::optional<Poly> gcd_over_q(const Poly& pa, const Poly& pb) {
    Poly A = clear_denominators(pa);
    Poly B = clear_denominators(pb);
    std::vector<Sym> vars;
    A.collect_syms(vars);
    B.collect_syms(vars);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

    mpz_class gamma;
    mpz_gcd(gamma.get_mpz_t(), Q(A.leading_coef()).get_num_mpz_t(),
            Q(B.leading_coef()).get_num_mpz_t());

    std::map<Mono, mpz_class, MonoGrlexGreater> acc;  // CRT accumulation
    mpz_class modulus = 0;
    int64_t best_deg = -1;
    int stable = 0;

    for (int64_t p : prime_list()) {
        if (mpz_divisible_ui_p(Q(A.leading_coef()).get_num_mpz_t(), (unsigned long)p) ||
            mpz_divisible_ui_p(Q(B.leading_coef()).get_num_mpz_t(), (unsigned long)p))
            continue;
        PolyP ap = reduce_modp(A, p), bp = reduce_modp(B, p);
        if (ap.is_zero() || bp.is_zero()) continue;
        PolyP gp;
        try {
            EvalSeq seq;
            gp = gcd_modp(ap, bp, p, seq, 0);
        } catch (const std::exception&) {
            continue;
        }
        if (gp.is_zero()) continue;
        if (gp.is_constant()) return Poly(Q(1));
        int64_t dp = 0;
        for (auto& kv : gp.t) dp = std::max<int64_t>(dp, kv.first.total_degree());
        if (best_deg >= 0 && dp > best_deg) continue;  // unlucky prime
        // scale to leading coefficient gamma mod p
        int64_t gmod = int64_t(mpz_fdiv_ui(gamma.get_mpz_t(), (unsigned long)p));
        gp = scale(gp, mulmod(gmod % p, invmod(gp.lc(), p), p), p);
        if (best_deg < 0 || dp < best_deg) {
            best_deg = dp;
            acc.clear();
            modulus = 0;
            stable = 0;
        }
        if (modulus == 0) {
            for (auto& kv : gp.t) acc.emplace(kv.first, sym_lift(kv.second, p));
            modulus = p;
        } else {
            // monomial sets must agree, else restart from this prime
            bool same = acc.size() == gp.t.size();
            if (same) {
                auto it = acc.begin();
                for (auto& kv : gp.t) {
                    if (!(it->first == kv.first)) {
                        same = false;
                        break;
                    }
                    ++it;
                }
            }
            if (!same) {
                acc.clear();
                for (auto& kv : gp.t) acc.emplace(kv.first, sym_lift(kv.second, p));
                modulus = p;
                stable = 0;
            } else {
                bool changed = false;
                mpz_class pinv;
                mpz_class pz((long)p);
                mpz_invert(pinv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
                mpz_class newmod = modulus * p;
                auto it = acc.begin();
                for (auto& kv : gp.t) {
                    // c = old + modulus * ((cp - old) * modulus^-1 mod p)
                    mpz_class diff = sym_lift(kv.second, p) - it->second;
                    mpz_class k = (diff * pinv) % pz;
                    mpz_class c = it->second + modulus * k;
                    // symmetric range
                    mpz_class half = newmod / 2;
                    mpz_class cm = c % newmod;
                    if (cm > half) cm -= newmod;
                    if (cm < -half) cm += newmod;
                    if (cm != it->second) changed = true;
                    it->second = cm;
                    ++it;
                }
                modulus = newmod;
                stable = changed ? 0 : stable + 1;
            }
        }
        if (stable >= 1) {
            // candidate: primitive part, then exact trial division
            Poly cand;
            mpz_class cont = 0;
            for (auto& kv : acc) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), kv.second.get_mpz_t());
            if (cont == 0) cont = 1;
            for (auto& kv : acc) cand.add_term(kv.first, Q(mpz_class(kv.second / cont)));
            if (cand.is_zero()) continue;
            Poly q1, q2;
            if (gcdx::div_exact_free(A, cand, q1) && gcdx::div_exact_free(B, cand, q2)) return cand;
            stable = 0;  // need more primes
        }
    }
    return std::nullopt;
}

}  // namespace modgcd
}  // namespace mono3

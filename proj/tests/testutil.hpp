#ifndef MONO3_TESTUTIL_HPP
#define MONO3_TESTUTIL_HPP

#include <random>

#include "mono3/parse.hpp"
#include "mono3/ratfun.hpp"

namespace testutil {

using namespace mono3;

struct Rng {
    std::mt19937_64 g;
    explicit Rng(uint64_t seed) : g(seed) {}
    long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }
};

// random sparse polynomial over the given symbols
inline Poly random_poly(Rng& rng, const std::vector<Sym>& syms, int terms, int maxdeg,
                        long cmax = 5) {
    Poly p;
    for (int t = 0; t < terms; ++t) {
        Mono m;
        for (Sym s : syms) {
            int e = (int)rng.pick(0, maxdeg);
            if (e) m.e.push_back({s, e});
        }
        std::sort(m.e.begin(), m.e.end());
        long c = rng.pick(-cmax, cmax);
        if (c) p.add_term(m, Q(c));
    }
    return p;
}

inline RatFn random_ratfn(Rng& rng, const std::vector<Sym>& syms, int terms = 3, int maxdeg = 2) {
    Poly n = random_poly(rng, syms, terms, maxdeg);
    Poly d;
    while (d.is_zero()) d = random_poly(rng, syms, terms, maxdeg);
    return RatFn(n, d);
}

}  // namespace testutil

#endif

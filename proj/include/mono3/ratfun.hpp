#ifndef MONO3_RATFUN_HPP
#define MONO3_RATFUN_HPP

#include <functional>
#include <map>
#include <optional>

#include "mono3/gcd.hpp"
#include "mono3/poly.hpp"

namespace mono3 {

struct zero_denominator : std::runtime_error {
    zero_denominator() : std::runtime_error("ZeroDenominator") {}
};

// Rational function: canonical fraction num/den of reduced polynomials.
// Canonical form: gcd-free (free-ring gcd), common monomial factors removed,
// leading coefficient of the denominator (graded-lex) equal to 1.
// Equality testing is by cross-multiplication and does not require gcds.
class RatFn {
  public:
    RatFn() : num_(), den_(Q(1)) {}
    explicit RatFn(const Q& c) : num_(c), den_(Q(1)) {}
    explicit RatFn(long c) : num_(Q(c)), den_(Q(1)) {}
    RatFn(Poly n, Poly d, bool canonical = false) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw zero_denominator();
        if (!canonical) canonicalize();
    }
    static RatFn sym(Sym s) { return RatFn(Poly::sym(s), Poly(Q(1)), true); }
    static RatFn sym(const std::string& name) {
        return sym(SymbolTable::instance().lookup(name));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Q constant_value() const { return num_.constant_value() / den_.constant_value(); }

    bool has_sym(Sym s) const { return num_.has_sym(s) || den_.has_sym(s); }
    void collect_syms(std::vector<Sym>& out) const {
        num_.collect_syms(out);
        den_.collect_syms(out);
    }

    // Henrici-style arithmetic: operands are canonical, cross-cancellations
    // keep results canonical with small gcd calls; a*b, a/b and powers never
    // need a full fraction gcd.
    friend RatFn operator+(const RatFn& a, const RatFn& b) { return add_sub(a, b, false); }
    friend RatFn operator-(const RatFn& a, const RatFn& b) { return add_sub(a, b, true); }
    RatFn operator-() const { return RatFn(-num_, den_, true); }
    friend RatFn operator*(const RatFn& a, const RatFn& b) {
        if (a.num_.is_zero() || b.num_.is_zero()) return RatFn();
        Poly n1 = a.num_, d2 = b.den_, n2 = b.num_, d1 = a.den_;
        cross_cancel(n1, d2);
        cross_cancel(n2, d1);
        RatFn r(n1 * n2, d1 * d2, true);
        r.scale_lc();
        return r;
    }
    friend RatFn operator/(const RatFn& a, const RatFn& b) {
        if (b.num_.is_zero()) throw zero_denominator();
        return a * RatFn(b.den_, b.num_, true);
    }
    RatFn pow(long k) const {
        if (k == 0) return RatFn(Q(1));
        if (k > 0) {
            RatFn r(num_.pow(k), den_.pow(k), true);
            r.scale_lc();
            return r;
        }
        if (num_.is_zero()) throw zero_denominator();
        RatFn r(den_.pow(-k), num_.pow(-k), true);
        r.scale_lc();
        return r;
    }

    bool operator==(const RatFn& o) const { return (num_ * o.den_ - o.num_ * den_).is_zero(); }
    bool operator!=(const RatFn& o) const { return !(*this == o); }

    // Simultaneous substitution; symbols not in the map stay put.
    RatFn substitute(const std::map<Sym, RatFn>& m) const {
        RatFn n = substitute_poly(num_, m);
        RatFn d = substitute_poly(den_, m);
        if (d.is_zero()) throw zero_denominator();
        return n / d;
    }

    // Quotient-rule derivative.  Adjunct symbols whose defining square
    // depends on s differentiate via d(adj)/ds = square'(s)/(2 adj).
    RatFn derivative(Sym s) const {
        RatFn n = poly_derivative_full(num_, s);
        RatFn d = poly_derivative_full(den_, s);
        RatFn denf(den_, Poly(Q(1)), true);
        RatFn numf(num_, Poly(Q(1)), true);
        return (n * denf - numf * d) / (denf * denf);
    }

    void canonicalize() {
        if (den_.is_zero()) throw zero_denominator();
        if (num_.is_zero()) {
            den_ = Poly(Q(1));
            return;
        }
        Mono mc_n = gcdx::mono_content(num_), mc_d = gcdx::mono_content(den_);
        Mono mg;
        {
            size_t i = 0, j = 0;
            while (i < mc_n.e.size() && j < mc_d.e.size()) {
                if (mc_n.e[i].first < mc_d.e[j].first)
                    ++i;
                else if (mc_n.e[i].first > mc_d.e[j].first)
                    ++j;
                else {
                    mg.e.push_back(
                        {mc_n.e[i].first, std::min(mc_n.e[i].second, mc_d.e[j].second)});
                    ++i, ++j;
                }
            }
        }
        if (!mg.empty()) {
            num_ = gcdx::strip_mono(num_, mg);
            den_ = gcdx::strip_mono(den_, mg);
        }
        if (!den_.is_constant() || !num_.is_constant()) {
            Poly g = gcdx::gcd(num_, den_);
            if (!g.is_constant()) {
                Poly qn, qd;
                if (gcdx::div_exact_free(num_, g, qn) && gcdx::div_exact_free(den_, g, qd)) {
                    num_ = qn;
                    den_ = qd;
                }
            }
        }
        Q lc = den_.leading_coef();
        if (lc != 1) {
            for (auto& kv : num_.t) kv.second /= lc;
            for (auto& kv : den_.t) kv.second /= lc;
        }
    }

    std::string str() const {
        if (den_ == Poly(Q(1))) return num_.str();
        std::string n = num_.str(), d = den_.str();
        bool npar = num_.t.size() > 1;
        bool dpar = den_.t.size() > 1 || (den_.t.size() == 1 && !den_.t.begin()->first.empty() &&
                                          den_.leading_coef() != 1) ||
                    (den_.t.size() == 1 && den_.t.begin()->first.e.size() > 1);
        std::string r = npar ? "(" + n + ")" : n;
        r += "/";
        r += dpar ? "(" + d + ")" : d;
        return r;
    }

  private:
    // divides common factors out of n and d in place
    static void cross_cancel(Poly& n, Poly& d) {
        if (d.is_constant() || n.is_constant() || n.is_zero()) return;
        Poly q;
        if (gcdx::div_exact_free(n, d, q)) {  // d | n
            n = q;
            d = Poly(Q(1));
            return;
        }
        if (gcdx::div_exact_free(d, n, q)) {  // n | d
            d = q;
            n = Poly(Q(1));
            return;
        }
        Poly g = gcdx::gcd(n, d);
        if (g.is_constant()) return;
        Poly qn, qd;
        if (gcdx::div_exact_free(n, g, qn) && gcdx::div_exact_free(d, g, qd)) {
            n = qn;
            d = qd;
        }
    }
    void scale_lc() {
        if (num_.is_zero()) {
            den_ = Poly(Q(1));
            return;
        }
        Q lc = den_.leading_coef();
        if (lc != 1) {
            for (auto& kv : num_.t) kv.second /= lc;
            for (auto& kv : den_.t) kv.second /= lc;
        }
    }
    static RatFn add_sub(const RatFn& a, const RatFn& b, bool sub) {
        if (a.num_.is_zero()) return sub ? -b : b;
        if (b.num_.is_zero()) return a;
        Poly g, da, db;  // a.den = g*da, b.den = g*db
        bool split = false;
        if (a.den_ == b.den_) {
            g = a.den_;
            da = Poly(Q(1));
            db = da;
            split = true;
        } else if (!a.den_.is_constant() && !b.den_.is_constant()) {
            Poly q;
            if (gcdx::div_exact_free(b.den_, a.den_, q)) {  // a.den | b.den
                g = a.den_;
                da = Poly(Q(1));
                db = q;
                split = true;
            } else if (gcdx::div_exact_free(a.den_, b.den_, q)) {
                g = b.den_;
                db = Poly(Q(1));
                da = q;
                split = true;
            }
        }
        if (!split) {
            g = gcdx::gcd(a.den_, b.den_);
            if (!g.is_constant()) {
                Poly qa, qb;
                if (gcdx::div_exact_free(a.den_, g, qa) && gcdx::div_exact_free(b.den_, g, qb)) {
                    da = qa;
                    db = qb;
                    split = true;
                }
            }
            if (!split) {
                g = Poly(Q(1));
                da = a.den_;
                db = b.den_;
            }
        }
        Poly t = sub ? a.num_ * db - b.num_ * da : a.num_ * db + b.num_ * da;
        if (t.is_zero()) return RatFn();
        Poly den = (da * db) * g;
        // the only possible new common factor divides g
        if (!g.is_constant()) {
            Poly h = gcdx::gcd(t, g);
            if (!h.is_constant()) {
                Poly qt, qd;
                if (gcdx::div_exact_free(t, h, qt) && gcdx::div_exact_free(den, h, qd)) {
                    t = qt;
                    den = qd;
                }
            }
        }
        RatFn r(std::move(t), std::move(den), true);
        r.scale_lc();
        return r;
    }

    static RatFn substitute_poly(const Poly& p, const std::map<Sym, RatFn>& m) {
        // cache powers of substituted symbols
        std::map<Sym, std::vector<RatFn>> pows;
        RatFn acc(Q(0));
        for (auto& kv : p.t) {
            RatFn term(kv.second);
            Poly keep(Q(1));
            for (auto& pr : kv.first.e) {
                auto it = m.find(pr.first);
                if (it == m.end()) {
                    keep = keep * Poly::sym(pr.first, pr.second);
                } else {
                    auto& cache = pows[pr.first];
                    if (cache.empty()) cache.push_back(RatFn(Q(1)));
                    while ((int32_t)cache.size() <= pr.second)
                        cache.push_back(cache.back() * it->second);
                    term = term * cache[pr.second];
                }
            }
            if (!(keep == Poly(Q(1)))) term = term * RatFn(keep, Poly(Q(1)), true);
            acc = acc + term;
        }
        return acc;
    }

    // full derivative of a Poly wrt s including var-dependent adjuncts
    static RatFn poly_derivative_full(const Poly& p, Sym s) {
        RatFn r(p.derivative(s), Poly(Q(1)), true);
        // chain rule through adjuncts
        std::vector<Sym> syms;
        p.collect_syms(syms);
        for (Sym adj : syms) {
            if (sym_kind(adj) != SymKind::Adjunct) continue;
            auto sq = SymbolTable::instance().adjunct_square(adj);
            if (!sq || !sq->has_sym(s)) continue;
            // d p/d adj  *  square'(s) / (2 adj)
            Poly dpadj;
            for (auto& kv : p.t) {
                int32_t d = kv.first.deg(adj);
                if (d == 0) continue;
                Mono m = kv.first.div(Mono::of(adj, 1));
                dpadj.add_term(m, kv.second * d);
            }
            if (dpadj.is_zero()) continue;
            RatFn chain(sq->derivative(s) * dpadj, Poly::sym(adj) * Poly(Q(2)));
            r = r + chain;
        }
        return r;
    }

    Poly num_, den_;
};

inline RatFn operator+(const RatFn& a, long b) { return a + RatFn(b); }
inline RatFn operator-(const RatFn& a, long b) { return a - RatFn(b); }
inline RatFn operator*(const RatFn& a, long b) { return a * RatFn(b); }

}  // namespace mono3

#endif

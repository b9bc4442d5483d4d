#ifndef MONO3_POLY_HPP
#define MONO3_POLY_HPP

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "mono3/symbols.hpp"

namespace mono3 {

using Q = mpq_class;

struct exponent_overflow : std::runtime_error {
    exponent_overflow() : std::runtime_error("exponent overflow") {}
};

// A monomial: sorted (symbol, exponent>0) pairs.  Symbols sort ascending by
// id; since ids encode (kind, registration index), variables precede
// adjuncts precede parameters.
struct Mono {
    std::vector<std::pair<Sym, int32_t>> e;

    int64_t total_degree() const {
        int64_t d = 0;
        for (auto& p : e) d += p.second;
        return d;
    }
    int32_t deg(Sym s) const {
        for (auto& p : e)
            if (p.first == s) return p.second;
        return 0;
    }
    bool empty() const { return e.empty(); }
    bool operator==(const Mono& o) const { return e == o.e; }

    static Mono one() { return Mono{}; }
    static Mono of(Sym s, int32_t k = 1) {
        Mono m;
        if (k != 0) m.e.push_back({s, k});
        return m;
    }

    Mono mul(const Mono& o) const {
        Mono r;
        r.e.reserve(e.size() + o.e.size());
        size_t i = 0, j = 0;
        while (i < e.size() && j < o.e.size()) {
            if (e[i].first < o.e[j].first)
                r.e.push_back(e[i++]);
            else if (e[i].first > o.e[j].first)
                r.e.push_back(o.e[j++]);
            else {
                int64_t s = int64_t(e[i].second) + o.e[j].second;
                if (s > INT32_MAX) throw exponent_overflow();
                if (s != 0) r.e.push_back({e[i].first, int32_t(s)});
                ++i, ++j;
            }
        }
        for (; i < e.size(); ++i) r.e.push_back(e[i]);
        for (; j < o.e.size(); ++j) r.e.push_back(o.e[j]);
        return r;
    }

    // Whether `this` divides o (componentwise <=).
    bool divides(const Mono& o) const {
        size_t j = 0;
        for (auto& p : e) {
            while (j < o.e.size() && o.e[j].first < p.first) ++j;
            if (j == o.e.size() || o.e[j].first != p.first || o.e[j].second < p.second)
                return false;
        }
        return true;
    }
    Mono div(const Mono& o) const {  // this / o, assumes o.divides(this)
        Mono r;
        size_t j = 0;
        for (auto& p : e) {
            int32_t sub = 0;
            while (j < o.e.size() && o.e[j].first < p.first) ++j;
            if (j < o.e.size() && o.e[j].first == p.first) sub = o.e[j].second;
            if (p.second - sub != 0) r.e.push_back({p.first, p.second - sub});
        }
        return r;
    }
};

// Graded lex: higher total degree first; ties broken lexicographically by
// symbol priority (smaller id = higher priority).  This ordering is used both
// as the map order (reversed so .begin() is the leading term) and for the
// deterministic printed form.
struct MonoGrlexGreater {
    bool operator()(const Mono& a, const Mono& b) const {
        int64_t da = a.total_degree(), db = b.total_degree();
        if (da != db) return da > db;
        size_t i = 0, j = 0;
        while (i < a.e.size() && j < b.e.size()) {
            if (a.e[i].first != b.e[j].first)
                // the monomial owning the higher-priority symbol is larger
                return a.e[i].first < b.e[j].first;
            if (a.e[i].second != b.e[j].second) return a.e[i].second > b.e[j].second;
            ++i, ++j;
        }
        return i < a.e.size();
    }
};

// Sparse multivariate polynomial over Q.  Multiplication reduces adjunct
// symbols modulo their defining quadratic relation, so canonical polynomials
// carry every adjunct with exponent < 2.  The gcd/resultant layer uses the
// *_free operations instead, which treat all symbols as free variables.
class Poly {
  public:
    using Map = std::map<Mono, Q, MonoGrlexGreater>;
    Map t;

    Poly() = default;
    explicit Poly(const Q& c) {
        if (c != 0) t.emplace(Mono::one(), c);
    }
    explicit Poly(long c) : Poly(Q(c)) {}
    static Poly sym(Sym s, int32_t k = 1) {
        Poly p;
        p.t.emplace(Mono::of(s, k), Q(1));
        return reduce_adjuncts(p);
    }

    bool is_zero() const { return t.empty(); }
    bool is_constant() const { return t.empty() || (t.size() == 1 && t.begin()->first.empty()); }
    Q constant_value() const {
        if (t.empty()) return Q(0);
        if (!is_constant()) throw std::runtime_error("Poly not constant");
        return t.begin()->second;
    }

    const Mono& leading_mono() const { return t.begin()->first; }
    const Q& leading_coef() const { return t.begin()->second; }

    int64_t total_degree() const {
        int64_t d = -1;
        for (auto& kv : t) d = std::max(d, kv.first.total_degree());
        return d;
    }
    int32_t deg(Sym s) const {
        int32_t d = 0;
        for (auto& kv : t) d = std::max(d, kv.first.deg(s));
        return d;
    }
    bool has_sym(Sym s) const {
        for (auto& kv : t)
            if (kv.first.deg(s) > 0) return true;
        return false;
    }
    void collect_syms(std::vector<Sym>& out) const {
        for (auto& kv : t)
            for (auto& p : kv.first.e)
                if (std::find(out.begin(), out.end(), p.first) == out.end())
                    out.push_back(p.first);
    }

    void add_term(const Mono& m, const Q& c) {
        if (c == 0) return;
        auto it = t.find(m);
        if (it == t.end())
            t.emplace(m, c);
        else {
            it->second += c;
            if (it->second == 0) t.erase(it);
        }
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r = a;
        for (auto& kv : b.t) r.add_term(kv.first, kv.second);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r = a;
        for (auto& kv : b.t) r.add_term(kv.first, -kv.second);
        return r;
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& kv : r.t) kv.second = -kv.second;
        return r;
    }
    friend Poly operator*(const Poly& a, const Q& c) {
        Poly r;
        if (c == 0) return r;
        for (auto& kv : a.t) r.t.emplace(kv.first, kv.second * c);
        return r;
    }

    bool operator==(const Poly& o) const { return t == o.t; }
    bool operator!=(const Poly& o) const { return !(t == o.t); }

    // Reduced product: adjunct exponents >= 2 are rewritten via s^2 = square(s).
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (auto& ka : a.t)
            for (auto& kb : b.t) mul_term_reduced(r, ka.first.mul(kb.first), ka.second * kb.second);
        return r;
    }

    Poly pow(long n) const {
        if (n < 0) throw std::runtime_error("Poly::pow negative");
        Poly r(Q(1));
        Poly base = *this;
        while (n) {
            if (n & 1) r = r * base;
            base = (n >>= 1) ? base * base : base;
        }
        return r;
    }

    // Free-ring product: no adjunct reduction.
    static Poly mul_free(const Poly& a, const Poly& b) {
        Poly r;
        for (auto& ka : a.t)
            for (auto& kb : b.t) r.add_term(ka.first.mul(kb.first), ka.second * kb.second);
        return r;
    }

    // d/ds.  Adjuncts whose defining square involves s differentiate via
    // d(adj)/ds = (d square/ds) / (2 adj); that case is handled one level up
    // (RatFn), here adjunct symbols are treated as constants unless s itself.
    Poly derivative(Sym s) const {
        Poly r;
        for (auto& kv : t) {
            int32_t d = kv.first.deg(s);
            if (d == 0) continue;
            Mono m = kv.first.div(Mono::of(s, 1));
            r.add_term(m, kv.second * d);
        }
        return r;
    }

    static Poly reduce_adjuncts(const Poly& p) {
        Poly r;
        for (auto& kv : p.t) mul_term_reduced(r, kv.first, kv.second);
        return r;
    }

    std::string str() const;

  private:
    static void mul_term_reduced(Poly& dest, const Mono& m, const Q& c) {
        if (c == 0) return;
        // find an adjunct with exponent >= 2
        for (size_t i = 0; i < m.e.size(); ++i) {
            Sym s = m.e[i].first;
            if (sym_kind(s) != SymKind::Adjunct || m.e[i].second < 2) continue;
            auto sq = SymbolTable::instance().adjunct_square(s);
            if (!sq) throw std::runtime_error("adjunct without square relation: " + sym_name(s));
            int32_t k = m.e[i].second / 2, rem = m.e[i].second % 2;
            Mono base = m;
            if (rem == 0) {
                base.e.erase(base.e.begin() + i);
            } else {
                base.e[i].second = 1;
            }
            Poly factor = sq->pow(k);  // reduced power of the square
            for (auto& kf : factor.t) mul_term_reduced(dest, base.mul(kf.first), c * kf.second);
            return;
        }
        dest.add_term(m, c);
    }
};

inline std::string q_str(const Q& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

inline std::string Poly::str() const {
    if (t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& kv : t) {
        Q c = kv.second;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool coef_one = (c == 1) && !kv.first.empty();
        if (!coef_one) os << q_str(c);
        bool lead = coef_one;
        for (auto& p : kv.first.e) {
            if (!lead || &p != &kv.first.e.front()) os << "*";
            lead = false;
            os << sym_name(p.first);
            if (p.second != 1) os << "^" << p.second;
        }
    }
    return os.str();
}

}  // namespace mono3

#endif

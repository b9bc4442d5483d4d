#ifndef MONO3_TOWER_HPP
#define MONO3_TOWER_HPP

#include <optional>
#include <set>

#include "mono3/parse.hpp"
#include "mono3/ratfun.hpp"

namespace mono3 {

struct duplicate_adjunct : std::runtime_error {
    explicit duplicate_adjunct(const std::string& n)
        : std::runtime_error("DuplicateAdjunct: " + n) {}
};
struct unknown_adjunct : std::runtime_error {
    explicit unknown_adjunct(const std::string& n)
        : std::runtime_error("UnknownAdjunct: " + n) {}
};
struct inadmissible_adjunct : std::runtime_error {
    explicit inadmissible_adjunct(const std::string& m)
        : std::runtime_error("InadmissibleAdjunct: " + m) {}
};

// Base field Q, named transcendental parameters, and a tower of quadratic
// or cyclotomic adjuncts with their conjugation maps.  Adjunct relations are
// registered globally (a symbol means the same thing everywhere); the tower
// records which symbols are in scope and checks admissibility when adjoining.
class FieldTower {
  public:
    FieldTower() = default;
    explicit FieldTower(const std::vector<std::string>& params) {
        for (auto& p : params) add_parameter(p);
    }

    Sym add_parameter(const std::string& name) {
        Sym s = param(name);
        if (std::find(params_.begin(), params_.end(), s) == params_.end()) params_.push_back(s);
        return s;
    }

    // sqrt of a prior tower element (given as a polynomial in parameters and
    // earlier adjuncts, or a rational constant)
    Sym adjoin_sqrt(const RatFn& p) {
        if (p.is_zero()) throw inadmissible_adjunct("sqrt of zero");
        if (!(p.den() == Poly(Q(1))))
            throw inadmissible_adjunct("sqrt argument must be polynomial");
        std::string nm = "sqrt(" + p.num().str() + ")";
        if (SymbolTable::instance().known(nm)) {
            Sym s = SymbolTable::instance().lookup(nm);
            if (has_adjunct(s)) throw duplicate_adjunct(nm);
            check_not_square(p);
            adjuncts_.push_back(s);
            return s;
        }
        check_not_square(p);
        Sym s = SymbolTable::instance().intern(nm, SymKind::Adjunct);
        auto sq = std::make_shared<const Poly>(p.num());
        auto cj = std::make_shared<const Poly>(-Poly::sym(s));
        SymbolTable::instance().set_adjunct_data(s, sq, cj);
        adjuncts_.push_back(s);
        return s;
    }

    Sym adjoin_i() {
        Sym s = SymbolTable::instance().intern("i", SymKind::Adjunct);
        if (has_adjunct(s)) throw duplicate_adjunct("i");
        SymbolTable::instance().set_adjunct_data(s, std::make_shared<const Poly>(Poly(Q(-1))),
                                                 std::make_shared<const Poly>(-Poly::sym(s)));
        adjuncts_.push_back(s);
        return s;
    }

    // primitive cube root of unity: w^2 + w + 1 = 0, conjugation w -> w^2 = -1-w
    Sym adjoin_omega() {
        Sym s = SymbolTable::instance().intern("w", SymKind::Adjunct);
        if (has_adjunct(s)) throw duplicate_adjunct("w");
        Poly sq = Poly(Q(-1)) - Poly::sym(s);
        SymbolTable::instance().set_adjunct_data(s, std::make_shared<const Poly>(sq),
                                                 std::make_shared<const Poly>(sq));
        adjuncts_.push_back(s);
        return s;
    }

    // Relational adjunct for staged computations: v satisfies v^2 = square.
    Sym adjoin_relational(const std::string& name, const Poly& square) {
        if (SymbolTable::instance().known(name)) {
            Sym s = SymbolTable::instance().lookup(name);
            if (has_adjunct(s)) throw duplicate_adjunct(name);
            adjuncts_.push_back(s);
            return s;
        }
        Sym s = SymbolTable::instance().intern(name, SymKind::Adjunct);
        SymbolTable::instance().set_adjunct_data(s, std::make_shared<const Poly>(square),
                                                 std::make_shared<const Poly>(-Poly::sym(s)));
        adjuncts_.push_back(s);
        return s;
    }

    bool has_adjunct(Sym s) const {
        return std::find(adjuncts_.begin(), adjuncts_.end(), s) != adjuncts_.end();
    }
    const std::vector<Sym>& adjuncts() const { return adjuncts_; }
    const std::vector<Sym>& parameters() const { return params_; }

    // Applies the registered conjugation of one adjunct, leaving the rest fixed.
    RatFn conjugate(const RatFn& e, Sym adjunct) const {
        if (!has_adjunct(adjunct)) throw unknown_adjunct(sym_name(adjunct));
        auto cj = SymbolTable::instance().adjunct_conj(adjunct);
        std::map<Sym, RatFn> m;
        m.emplace(adjunct, RatFn(*cj, Poly(Q(1))));
        return e.substitute(m);
    }

    // Multiplies num and den by denominator conjugates until the denominator
    // is free of adjunct symbols ("polynomial in the adjuncts with
    // coefficients in the parameter fraction field").
    RatFn rationalize(const RatFn& e) const {
        RatFn r = e;
        for (Sym s : adjuncts_) {
            if (!r.den().has_sym(s)) continue;
            auto cj = SymbolTable::instance().adjunct_conj(s);
            std::map<Sym, RatFn> m;
            m.emplace(s, RatFn(*cj, Poly(Q(1))));
            Poly cden = r.den();
            RatFn cd = RatFn(cden, Poly(Q(1)), true).substitute(m);
            // cd is polynomial (conjugation maps polys to polys)
            r = RatFn(r.num() * cd.num(), r.den() * cd.num());
            if (r.den().has_sym(s))
                throw std::runtime_error("rationalize failed for " + sym_name(s));
        }
        return r;
    }

    // Multiplicative inverse of a nonzero tower element, denominator made
    // adjunct-free first so 1/e is again in canonical tower form.
    RatFn invert(const RatFn& e) const {
        if (e.is_zero()) throw zero_denominator();
        return rationalize(RatFn(Q(1)) / e);
    }

  private:
    // Admissibility: p must not be a square in the tower so far.  Parameters
    // are independent transcendentals: constants use an exact rational square
    // test, and products of existing adjunct squares are checked so that e.g.
    // sqrt(-a) is rejected once sqrt(a) and i are present.
    void check_not_square(const RatFn& p) const {
        size_t n = adjuncts_.size();
        for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
            RatFn prod(Q(1));
            for (size_t k = 0; k < n; ++k)
                if (mask & (size_t(1) << k)) {
                    auto sq = SymbolTable::instance().adjunct_square(adjuncts_[k]);
                    prod = prod * RatFn(*sq, Poly(Q(1)));
                }
            if (prod.is_zero()) continue;
            RatFn ratio = p / prod;
            if (ratio.is_constant()) {
                Q v = ratio.constant_value();
                if (v > 0 && mpz_perfect_square_p(v.get_num_mpz_t()) &&
                    mpz_perfect_square_p(v.get_den_mpz_t()))
                    throw inadmissible_adjunct(p.str() + " is a square in the tower");
            } else if (is_poly_square(ratio)) {
                throw inadmissible_adjunct(p.str() + " is a square in the tower");
            }
        }
    }

    // crude but sound-for-our-use square test: monomials with even exponents
    // and square coefficient
    static bool is_poly_square(const RatFn& r) {
        if (!(r.den() == Poly(Q(1)))) return false;
        const Poly& p = r.num();
        if (p.t.size() != 1) return false;
        const auto& [m, c] = *p.t.begin();
        if (!(c > 0) || !mpz_perfect_square_p(Q(c).get_num_mpz_t()) ||
            !mpz_perfect_square_p(Q(c).get_den_mpz_t()))
            return false;
        for (auto& pr : m.e)
            if (pr.second % 2) return false;
        return true;
    }

    std::vector<Sym> params_;
    std::vector<Sym> adjuncts_;
};

// Specializes parameters to rational values.  Adjuncts whose defining square
// involves a specialized parameter are remapped to fresh numeric adjuncts
// (sqrt(a) with a=3 becomes the symbol sqrt(3) with square 3), keeping the
// global relations consistent.  Returns nullopt if a defining square
// specializes to a rational square or zero (inadmissible point) or a
// denominator vanishes.
std::optional<RatFn> specialize(const RatFn& f, const FieldTower& tower,
                                const std::map<Sym, Q>& values);

}  // namespace mono3

#endif

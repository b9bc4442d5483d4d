#include "mono3/tower.hpp"

namespace mono3 {

std::optional<RatFn> specialize(const RatFn& f, const FieldTower& tower,
                                const std::map<Sym, Q>& values) {
    std::map<Sym, RatFn> sub;
    for (auto& [s, v] : values) sub.emplace(s, RatFn(v));

    std::vector<Sym> syms;
    f.collect_syms(syms);
    for (Sym s : tower.adjuncts())
        if (std::find(syms.begin(), syms.end(), s) == syms.end()) syms.push_back(s);

    for (Sym s : syms) {
        if (sym_kind(s) != SymKind::Adjunct) continue;
        auto sq = SymbolTable::instance().adjunct_square(s);
        if (!sq) continue;
        bool touched = false;
        for (auto& [p, v] : values)
            if (sq->has_sym(p)) touched = true;
        if (!touched) continue;
        RatFn sv = RatFn(*sq, Poly(Q(1)), true).substitute(sub);
        if (!sv.is_constant()) return std::nullopt;
        Q q = sv.constant_value();
        if (q == 0) return std::nullopt;
        if (q > 0 && mpz_perfect_square_p(q.get_num_mpz_t()) &&
            mpz_perfect_square_p(q.get_den_mpz_t()))
            return std::nullopt;  // inadmissible: the square root became rational
        std::string nm = "sqrt(" + q_str(q) + ")";
        Sym fresh = SymbolTable::instance().intern(nm, SymKind::Adjunct);
        SymbolTable::instance().set_adjunct_data(
            fresh, std::make_shared<const Poly>(Poly(q)),
            std::make_shared<const Poly>(-Poly::sym(fresh)));
        sub.emplace(s, RatFn::sym(fresh));
    }

    try {
        return f.substitute(sub);
    } catch (const zero_denominator&) {
        return std::nullopt;
    }
}

}  // namespace mono3

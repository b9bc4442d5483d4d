#include "mono3/verifier.hpp"

#include <algorithm>
#include <sstream>

namespace mono3 {

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (auto& o : obligations) {
        nlohmann::ordered_json e;
        e["desc"] = o.desc;
        e["anchor"] = o.anchor;
        e["pass"] = o.pass;
        if (!o.detail.empty()) e["detail"] = o.detail;
        arr.push_back(e);
    }
    nlohmann::ordered_json r;
    r["aggregate"] = aggregate() ? "pass" : "fail";
    r["obligations"] = arr;
    return r;
}

nlohmann::ordered_json FiberCount::to_json() const {
    nlohmann::ordered_json r;
    nlohmann::ordered_json bp = nlohmann::ordered_json::array();
    for (auto& q : base_point) bp.push_back(q_str(q));
    r["base_point"] = bp;
    nlohmann::ordered_json sp;
    for (auto& [k, v] : specialization) sp[k] = q_str(v);
    r["specialization"] = sp;
    r["separating_coeffs"] = separating_coeffs;
    r["elim_degree"] = elim_degree;
    r["sqfree_degree"] = sqfree_degree;
    r["retries"] = retries;
    return r;
}

Obligation check_invariance(const RatFn& f, const std::vector<FieldAuto>& autos,
                            const std::string& anchor) {
    for (auto& s : autos) {
        RatFn img = s.apply(f);
        if (!(img == f)) {
            RatFn diff = img - f;
            return {"invariance of " + f.str(), anchor, false,
                    "counterexample: sigma(f) - f = " + diff.str() + " under " + s.str()};
        }
    }
    return {"invariance of " + f.str(), anchor, true, ""};
}

Obligation check_induced_action(const std::vector<RatFn>& new_vars, const FieldAuto& sigma,
                                const std::vector<Sym>& stage_vars,
                                const std::vector<RatFn>& claimed_images,
                                const std::string& anchor) {
    if (new_vars.size() != claimed_images.size() || stage_vars.size() != new_vars.size())
        return {"induced action", anchor, false, "length mismatch"};
    std::map<Sym, RatFn> plug;
    for (size_t i = 0; i < stage_vars.size(); ++i) plug.emplace(stage_vars[i], new_vars[i]);
    for (size_t i = 0; i < new_vars.size(); ++i) {
        RatFn lhs = claimed_images[i].substitute(plug);
        RatFn rhs = sigma.apply(new_vars[i]);
        if (!(lhs == rhs))
            return {"induced action", anchor, false,
                    "coordinate " + std::to_string(i + 1) + ": claimed " +
                        claimed_images[i].str() + " evaluates to " + lhs.str() +
                        " but sigma gives " + rhs.str()};
    }
    return {"induced action (" + std::to_string(new_vars.size()) + " coords)", anchor, true, ""};
}

Obligation check_independence(const std::vector<RatFn>& gens, const std::vector<Sym>& vars,
                              uint64_t seed, const std::string& anchor) {
    size_t n = gens.size();
    if (n != vars.size()) return {"independence", anchor, false, "arity mismatch"};
    // The Jacobian row for g_i = num_i/den_i has common denominator den_i^2;
    // its polynomial part is N_ij = (d num_i) den_i - num_i (d den_i).  The
    // determinant of [N_ij] vanishes iff the Jacobian determinant does, so
    // everything stays polynomial.  Rows involving a relational adjunct fall
    // back to the rational quotient rule.
    bool poly_rows = true;
    for (auto& g : gens) {
        std::vector<Sym> syms;
        g.collect_syms(syms);
        for (Sym s : syms)
            if (sym_kind(s) == SymKind::Adjunct) {
                auto sq = SymbolTable::instance().adjunct_square(s);
                if (sq)
                    for (Sym v : vars)
                        if (sq->has_sym(v)) poly_rows = false;
            }
    }
    RatFn d;
    if (poly_rows) {
        std::vector<std::vector<Poly>> N(n, std::vector<Poly>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                N[i][j] = gens[i].num().derivative(vars[j]) * gens[i].den() -
                          gens[i].num() * gens[i].den().derivative(vars[j]);
        std::function<Poly(const std::vector<size_t>&, size_t)> pdet =
            [&](const std::vector<size_t>& cols, size_t row) -> Poly {
            if (cols.size() == 1) return N[row][cols[0]];
            Poly acc;
            for (size_t k = 0; k < cols.size(); ++k) {
                std::vector<size_t> rest;
                for (size_t t = 0; t < cols.size(); ++t)
                    if (t != k) rest.push_back(cols[t]);
                Poly term = N[row][cols[k]] * pdet(rest, row + 1);
                acc = (k % 2 == 0) ? acc + term : acc - term;
            }
            return acc;
        };
        std::vector<size_t> cols(n);
        for (size_t i = 0; i < n; ++i) cols[i] = i;
        d = RatFn(pdet(cols, 0), Poly(Q(1)), true);
    } else {
        std::vector<std::vector<RatFn>> J(n, std::vector<RatFn>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) J[i][j] = gens[i].derivative(vars[j]);
        std::function<RatFn(const std::vector<size_t>&, size_t)> det =
            [&](const std::vector<size_t>& cols, size_t row) -> RatFn {
            if (cols.size() == 1) return J[row][cols[0]];
            RatFn acc(Q(0));
            for (size_t k = 0; k < cols.size(); ++k) {
                std::vector<size_t> rest;
                for (size_t t = 0; t < cols.size(); ++t)
                    if (t != k) rest.push_back(cols[t]);
                RatFn term = J[row][cols[k]] * det(rest, row + 1);
                acc = (k % 2 == 0) ? acc + term : acc - term;
            }
            return acc;
        };
        std::vector<size_t> cols(n);
        for (size_t i = 0; i < n; ++i) cols[i] = i;
        d = det(cols, 0);
    }
    if (d.is_zero()) return {"independence (Jacobian)", anchor, false, "IdenticallyZeroJacobian"};
    // exhibit a rational point where the determinant is nonzero
    DetRng rng(seed ^ 0x1acULL);
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::map<Sym, RatFn> m;
        std::string ptdesc;
        for (Sym v : vars) {
            Q q(rng.pick(2, 97));
            m.emplace(v, RatFn(q));
            ptdesc += (ptdesc.empty() ? "" : ",") + q_str(q);
        }
        // remaining parameters at small values so the witness is fully numeric
        std::vector<Sym> syms;
        d.collect_syms(syms);
        for (Sym s : syms)
            if (sym_kind(s) == SymKind::Param && !m.count(s)) {
                Q q(rng.pick(2, 23));
                m.emplace(s, RatFn(q));
            }
        try {
            bool pole = false;
            for (auto& g : gens)
                if (RatFn(g.den(), Poly(Q(1)), true).substitute(m).is_zero()) pole = true;
            if (pole) continue;
            RatFn val = d.substitute(m);
            if (!val.is_zero())
                return {"independence (Jacobian)", anchor, true,
                        "nonzero at (" + ptdesc + ")"};
        } catch (const zero_denominator&) {
        }
    }
    // determinant is nonzero as a function; point search exhausted its draws
    return {"independence (Jacobian)", anchor, true, "nonzero symbolically"};
}

Obligation check_witness(const RatFn& lhs, const RatFn& rhs, const std::string& anchor) {
    if (lhs == rhs) return {"witness identity", anchor, true, ""};
    return {"witness identity", anchor, false,
            "lhs = " + lhs.str() + " differs from rhs = " + rhs.str()};
}

// ---- constants: rationalization and inversion --------------------------------

RatFn rationalize_const(const RatFn& e) {
    RatFn r = e;
    for (int guard = 0; guard < 8; ++guard) {
        Sym adj = -1;
        std::vector<Sym> syms;
        r.den().collect_syms(syms);
        for (Sym s : syms)
            if (sym_kind(s) == SymKind::Adjunct) {
                adj = s;
                break;
            }
        if (adj < 0) return r;
        auto cj = SymbolTable::instance().adjunct_conj(adj);
        if (!cj) throw unknown_adjunct(sym_name(adj));
        std::map<Sym, RatFn> m;
        m.emplace(adj, RatFn(*cj, Poly(Q(1)), true));
        RatFn cd = RatFn(r.den(), Poly(Q(1)), true).substitute(m);
        r = RatFn(r.num() * cd.num(), r.den() * cd.num());
    }
    throw std::runtime_error("rationalize_const did not terminate");
}

RatFn invert_const(const RatFn& e) {
    if (e.is_zero()) throw zero_denominator();
    return rationalize_const(RatFn(Q(1)) / e);
}

// ---- univariate squarefree degree --------------------------------------------

namespace {

bool has_adjunct_syms(const Poly& p) {
    std::vector<Sym> syms;
    p.collect_syms(syms);
    for (Sym s : syms)
        if (sym_kind(s) == SymKind::Adjunct) return true;
    return false;
}

// monic euclid over the tower field for univariate polys in u
Poly gcd_univ_tower(Poly a, Poly b, Sym u) {
    auto lead = [&](const Poly& p) { return gcdx::ucoeff(p, u, p.deg(u)); };
    while (!b.is_zero()) {
        if (a.deg(u) < b.deg(u)) std::swap(a, b);
        // a -= (lc_a / lc_b) * u^(da-db) * b, repeatedly
        while (!a.is_zero() && a.deg(u) >= b.deg(u)) {
            RatFn c = RatFn(lead(a), Poly(Q(1))) * invert_const(RatFn(lead(b), Poly(Q(1))));
            RatFn cr = rationalize_const(c);
            int32_t sh = a.deg(u) - b.deg(u);
            // a = a*den(cr) - num(cr)*u^sh*b, keeping it polynomial
            Poly scaled_b = gcdx::shift_v(b, u, sh) * cr.num();
            a = a * cr.den() - scaled_b;
        }
        std::swap(a, b);
    }
    return a;
}

}  // namespace

long squarefree_degree(const Poly& T, Sym u) {
    if (T.is_zero()) return -1;
    if (T.deg(u) == 0) return 0;
    Poly dT = T.derivative(u);
    Poly g = has_adjunct_syms(T) ? gcd_univ_tower(T, dT, u) : gcdx::gcd(T, dT);
    return T.deg(u) - g.deg(u);
}

// ---- fiber oracle -------------------------------------------------------------

namespace {

// evaluates f at stage point (vars -> rational constants), tower constants pass through
std::optional<RatFn> eval_at(const RatFn& f, const std::vector<Sym>& vars,
                             const std::vector<Q>& pt) {
    std::map<Sym, RatFn> m;
    for (size_t i = 0; i < vars.size(); ++i) m.emplace(vars[i], RatFn(pt[i]));
    try {
        return f.substitute(m);
    } catch (const zero_denominator&) {
        return std::nullopt;
    }
}

Poly clear_numeric_content(const Poly& p) {
    if (p.is_zero()) return p;
    mpz_class lcm_den = 1, gcd_num = 0;
    for (auto& kv : p.t) {
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), kv.second.get_den_mpz_t());
    }
    Poly r = p * Q(lcm_den);
    for (auto& kv : r.t)
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), kv.second.get_num_mpz_t());
    if (gcd_num > 1) r = r * Q(mpq_class(1, gcd_num));
    return r;
}

Poly gcd_univ(const Poly& a, const Poly& b, Sym u) {
    if (has_adjunct_syms(a) || has_adjunct_syms(b)) return gcd_univ_tower(a, b, u);
    return gcdx::gcd(a, b);
}

// exact univariate division T / g (g must divide T)
Poly univ_divide_exact(const Poly& T, const Poly& g, Sym u) {
    if (!has_adjunct_syms(T) && !has_adjunct_syms(g)) {
        Poly q;
        if (gcdx::div_exact_free(T, g, q)) return q;
        // fall through to coefficient-field division on failure
    }
    Poly rem = T, quot;
    Poly lg = gcdx::ucoeff(g, u, g.deg(u));
    RatFn lginv = invert_const(RatFn(lg, Poly(Q(1))));
    while (!rem.is_zero() && rem.deg(u) >= g.deg(u)) {
        int32_t sh = rem.deg(u) - g.deg(u);
        RatFn c = rationalize_const(RatFn(gcdx::ucoeff(rem, u, rem.deg(u)), Poly(Q(1))) * lginv);
        Poly cq;
        cq.add_term(Mono::of(u, sh), Q(1));
        Poly term = (c.num() * cq);
        // quot scaled by c.den would break exactness; c must be polynomial
        if (!(c.den() == Poly(Q(1))))
            throw std::runtime_error("univ_divide_exact: non-polynomial quotient step");
        quot = quot + term;
        rem = rem - term * g;
    }
    if (!rem.is_zero()) throw std::runtime_error("univ_divide_exact: not divisible");
    return quot;
}

// Full pairwise elimination of one variable: all resultants of pairs that
// contain it, plus the polynomials that never did.
std::vector<Poly> eliminate_var(const std::vector<Poly>& polys, Sym w) {
    std::vector<Poly> with, out;
    for (auto& p : polys) {
        if (p.is_zero()) continue;
        (p.deg(w) > 0 ? with : out).push_back(p);
    }
    for (size_t i = 0; i < with.size(); ++i)
        for (size_t j = i + 1; j < with.size(); ++j) {
            Poly r = resultant(with[i], with[j], w);
            if (!r.is_zero()) out.push_back(clear_numeric_content(r));
        }
    return out;
}

// Eliminates the variables in `order`, then combines the surviving
// univariates by gcd.  Returns zero on degeneration.
Poly cascade(std::vector<Poly> polys, const std::vector<Sym>& order, Sym usym) {
    for (Sym w : order) {
        polys = eliminate_var(polys, w);
        if (polys.empty()) return Poly();
    }
    Poly T;
    bool first = true;
    for (auto& p : polys) {
        if (p.deg(usym) == 0) continue;
        if (first) {
            T = p;
            first = false;
        } else if (T.deg(usym) > 0) {
            T = gcd_univ(T, p, usym);
        }
    }
    if (first) return Poly();
    return clear_numeric_content(T);
}

// Removes from T every root coming from `bad` (to all multiplicities).
Poly saturate_univ(Poly T, const Poly& bad, Sym usym) {
    if (bad.is_zero() || bad.deg(usym) == 0) return T;
    while (T.deg(usym) > 0) {
        Poly g = gcd_univ(T, bad, usym);
        if (g.is_zero() || g.deg(usym) == 0) break;
        T = clear_numeric_content(univ_divide_exact(T, g, usym));
    }
    return T;
}

}  // namespace

FiberCount fiber_degree(const std::vector<RatFn>& gens, const std::vector<Sym>& vars,
                        const std::vector<FieldAuto>& autos, long expected_order,
                        const std::map<Sym, Q>& specialization, const FieldTower& tower,
                        uint64_t seed, int retry_cap) {
    size_t n = vars.size();
    if (gens.size() != n) throw std::runtime_error("fiber_degree: need n generators in n vars");

    // specialize parameters in generators and automorphisms
    std::vector<RatFn> G;
    for (auto& g : gens) {
        auto s = specialize(g, tower, specialization);
        if (!s) throw constraint_violation();
        G.push_back(*s);
    }
    std::vector<FieldAuto> A;
    for (auto& a : autos) {
        std::vector<RatFn> im;
        for (auto& f : a.images) {
            auto s = specialize(f, tower, specialization);
            if (!s) throw constraint_violation();
            im.push_back(*s);
        }
        A.push_back(FieldAuto(a.vars, im, a.conj));
    }

    Sym usym = var("_u");
    DetRng rng(seed);
    FiberCount fc;
    for (auto& [s, v] : specialization) fc.specialization[sym_name(s)] = v;

    for (int attempt = 0; attempt <= retry_cap; ++attempt) {
        fc.retries = attempt;
        // 1. base point avoiding poles
        std::vector<Q> pt(n);
        for (auto& q : pt) q = Q(rng.pick(2, 97));
        std::vector<RatFn> vals;
        bool ok = true;
        for (auto& g : G) {
            auto v = eval_at(g, vars, pt);
            if (!v) {
                ok = false;
                break;
            }
            vals.push_back(*v);
        }
        if (!ok) continue;

        // 2. orbit of the base point under the group (tower-valued coords)
        std::vector<std::vector<RatFn>> orb;
        try {
            std::vector<RatFn> p0;
            for (auto& q : pt) p0.push_back(RatFn(q));
            std::set<std::string> seen;
            auto keyof = [](const std::vector<RatFn>& p) {
                std::string k;
                for (auto& c : p) k += c.str() + ";";
                return k;
            };
            seen.insert(keyof(p0));
            orb.push_back(p0);
            for (size_t qi = 0; qi < orb.size(); ++qi) {
                auto cur = orb[qi];
                for (auto& a : A) {
                    std::vector<RatFn> nxt;
                    std::map<Sym, RatFn> m;
                    for (size_t i = 0; i < n; ++i) m.emplace(vars[i], cur[i]);
                    bool bad = false;
                    for (auto& f : a.images) {
                        try {
                            nxt.push_back(f.substitute(m));
                        } catch (const zero_denominator&) {
                            bad = true;
                            break;
                        }
                    }
                    if (bad) throw pole_hit();
                    if (seen.insert(keyof(nxt)).second) orb.push_back(nxt);
                }
            }
        } catch (const pole_hit&) {
            continue;
        }
        if (expected_order > 0 && long(orb.size()) != expected_order) continue;  // stabilizer

        // 3. separating form u = v1 + l2 v2 + ... (coefficients from -9..9)
        std::vector<long> lam(n, 1);
        for (size_t i = 1; i < n; ++i) {
            long l = 0;
            while (l == 0) l = rng.pick(-9, 9);
            lam[i] = l;
        }
        // orbit u-values must be pairwise distinct
        std::set<std::string> uvals;
        bool sep = true;
        for (auto& p : orb) {
            RatFn u(Q(0));
            for (size_t i = 0; i < n; ++i) u = u + RatFn(Q(lam[i])) * p[i];
            if (!uvals.insert(u.str()).second) {
                sep = false;
                break;
            }
        }
        if (!sep) continue;

        // 4. the fiber system num_i - v_i den_i, with v1 = u - sum lam_i v_i
        std::vector<Poly> sys;
        for (size_t i = 0; i < n; ++i) {
            Poly p = G[i].num() * vals[i].den() - vals[i].num() * G[i].den();
            if (p.is_zero()) {
                sep = false;
                break;
            }
            sys.push_back(clear_numeric_content(p));
        }
        if (!sep) continue;
        std::vector<Poly> dens;
        for (size_t i = 0; i < n; ++i)
            if (!G[i].den().is_constant()) dens.push_back(G[i].den());
        {
            RatFn repl = RatFn::sym(usym);
            for (size_t i = 1; i < n; ++i)
                repl = repl - RatFn(Q(lam[i])) * RatFn::sym(vars[i]);
            std::map<Sym, RatFn> m;
            m.emplace(vars[0], repl);
            for (auto& p : sys) {
                RatFn s = RatFn(p, Poly(Q(1)), true).substitute(m);
                p = clear_numeric_content(s.num());
            }
            for (auto& p : dens) {
                RatFn s = RatFn(p, Poly(Q(1)), true).substitute(m);
                p = clear_numeric_content(s.num());
            }
        }

        // 5. eliminate down to the separating variable (full pairwise
        // cascade), then strip roots supported on denominator loci: the
        // equations num_i - v_i den_i = 0 pick up spurious solutions where
        // num_i and den_i vanish together
        std::vector<Sym> rest(vars.begin() + 1, vars.end());
        Poly T = cascade(sys, rest, usym);
        if (T.is_zero() || T.deg(usym) == 0) continue;
        if (rest.size() > 1) {
            std::vector<Sym> rev(rest.rbegin(), rest.rend());
            Poly T2 = cascade(sys, rev, usym);
            if (!T2.is_zero() && T2.deg(usym) > 0)
                T = clear_numeric_content(gcd_univ(T, T2, usym));
        }
        if (T.is_zero() || T.deg(usym) == 0) continue;
        {
            std::set<std::string> seen_dens;
            for (auto& den : dens) {
                if (!seen_dens.insert(den.str()).second) continue;
                std::vector<Poly> bad = sys;
                bad.push_back(den);
                Poly Tbad = cascade(bad, rest, usym);
                T = saturate_univ(T, Tbad, usym);
                if (T.deg(usym) == 0) break;
            }
        }
        if (T.is_zero() || T.deg(usym) == 0) continue;

        // 6. every orbit u-value must be a root of T
        bool roots_ok = true;
        for (auto& p : orb) {
            RatFn u(Q(0));
            for (size_t i = 0; i < n; ++i) u = u + RatFn(Q(lam[i])) * p[i];
            std::map<Sym, RatFn> m;
            m.emplace(usym, u);
            RatFn tval = RatFn(T, Poly(Q(1)), true).substitute(m);
            if (!tval.is_zero()) {
                roots_ok = false;
                break;
            }
        }
        if (!roots_ok) continue;

        long sq = squarefree_degree(T, usym);
        if (sq < long(orb.size())) continue;  // degree collapse: retry

        for (auto& q : pt) fc.base_point.push_back(q);
        fc.separating_coeffs = lam;
        fc.elim_degree = T.deg(usym);
        fc.sqfree_degree = sq;
        return fc;
    }
    throw degenerate_specialization();
}

// ---- placeholders, specializations, aggregate --------------------------------

RatFn substitute_placeholders(const std::string& expr, const std::vector<RatFn>& gens,
                              const std::vector<Sym>& stage_syms) {
    // Parses expr over stage symbols, then substitutes stage symbol i -> gens[i].
    RatFn parsed = Parser::parse(expr);
    std::map<Sym, RatFn> m;
    for (size_t i = 0; i < stage_syms.size() && i < gens.size(); ++i)
        m.emplace(stage_syms[i], gens[i]);
    return parsed.substitute(m);
}

std::vector<std::map<Sym, Q>> admissible_specializations(const BasisClaim& claim, int want,
                                                         uint64_t seed) {
    std::vector<Sym> params;
    for (auto& g : claim.gens) g.collect_syms(params);
    for (auto& a : claim.autos)
        for (auto& f : a.images) f.collect_syms(params);
    params.erase(std::remove_if(params.begin(), params.end(),
                                [](Sym s) { return sym_kind(s) != SymKind::Param; }),
                 params.end());
    std::sort(params.begin(), params.end());
    params.erase(std::unique(params.begin(), params.end()), params.end());

    DetRng rng(seed ^ 0x5bdULL);
    std::vector<std::map<Sym, Q>> out;
    std::set<std::string> seen;
    for (int tries = 0; tries < 200 && int(out.size()) < want; ++tries) {
        std::map<Sym, Q> m;
        std::string key;
        for (Sym p : params) {
            Q v(rng.pick(2, 23));
            m.emplace(p, v);
            key += q_str(v) + ",";
        }
        if (!seen.insert(key).second) continue;
        bool ok = true;
        for (auto& g : claim.gens)
            if (!specialize(g, claim.tower, m)) ok = false;
        for (auto& a : claim.autos)
            for (auto& f : a.images)
                if (!specialize(f, claim.tower, m)) ok = false;
        if (ok) out.push_back(m);
    }
    return out;
}

VerificationReport verify_fixed_field(const BasisClaim& claim, uint64_t seed, int retry_cap) {
    VerificationReport rep;
    for (auto& g : claim.gens) {
        Obligation inv = check_invariance(g, claim.autos);
        rep.add("invariance: " + g.str(), claim.id, inv.pass, inv.detail);
    }
    // independence only for claims with as many generators as variables
    if (claim.gens.size() == claim.vars.size()) {
        Obligation ind = check_independence(claim.gens, claim.vars, seed, claim.id);
        rep.add(ind.desc, claim.id, ind.pass, ind.detail);
    }
    if (claim.degree_witness) {
        auto& dw = *claim.degree_witness;
        // minimal polynomial of the primitive coordinate over the new field
        RatFn w = RatFn::sym(dw.primitive);
        RatFn acc(Q(0));
        for (size_t k = 0; k < dw.minpoly.size(); ++k) {
            RatFn ck = substitute_placeholders(dw.minpoly[k], claim.gens, claim.vars);
            acc = acc + ck * w.pow(long(k));
        }
        rep.add("degree witness: minimal polynomial annihilates " + sym_name(dw.primitive),
                claim.id, acc.is_zero(), acc.is_zero() ? "" : acc.str());
        for (auto& [oldc, expr] : dw.older_coords) {
            RatFn rhs = substitute_placeholders(expr, claim.gens, claim.vars);
            Obligation o = check_witness(RatFn::sym(oldc), rhs, claim.id);
            rep.add("degree witness: " + sym_name(oldc) + " expressible", claim.id, o.pass,
                    o.detail);
        }
    } else {
        auto specs = admissible_specializations(claim, 2, seed);
        if (specs.size() < 2) {
            rep.add("fiber oracle: admissible specializations", claim.id, false,
                    "could not find two admissible specializations");
        } else {
            for (size_t s = 0; s < specs.size(); ++s) {
                try {
                    FiberCount fc =
                        fiber_degree(claim.gens, claim.vars, claim.autos, claim.order, specs[s],
                                     claim.tower, seed + 101 * (s + 1), retry_cap);
                    bool ok = fc.sqfree_degree == claim.order;
                    rep.add("fiber count at specialization " + std::to_string(s + 1), claim.id,
                            ok,
                            "count " + std::to_string(fc.sqfree_degree) + " vs order " +
                                std::to_string(claim.order));
                } catch (const std::exception& e) {
                    rep.add("fiber count at specialization " + std::to_string(s + 1), claim.id,
                            false, e.what());
                }
            }
        }
    }
    for (auto& [lhs, rhs] : claim.witnesses) {
        Obligation o = check_witness(lhs, rhs, claim.id);
        rep.add("witness: " + lhs.str() + " = rhs", claim.id, o.pass, o.detail);
    }
    return rep;
}

}  // namespace mono3

#include "mono3/action.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mono3 {

namespace {
Sym sym_x() {
    static Sym s = var("x");
    return s;
}
Sym sym_y() {
    static Sym s = var("y");
    return s;
}
Sym sym_z() {
    static Sym s = var("z");
    return s;
}
std::array<Sym, 3> xyz() { return {sym_x(), sym_y(), sym_z()}; }
}  // namespace

MonomialAuto::MonomialAuto(const IntMatrix3& m, std::array<RatFn, 3> c)
    : mat(m), coef(std::move(c)) {
    if (!mat.unimodular()) throw not_unimodular();
    for (auto& x : coef)
        if (x.is_zero()) throw std::runtime_error("MonomialAuto: zero coefficient");
}

RatFn MonomialAuto::var_image(int j) const {
    RatFn r = coef[j];
    auto v = xyz();
    for (int i = 0; i < 3; ++i) {
        int64_t e = mat.at(i, j);
        if (e) r = r * RatFn::sym(v[i]).pow(e);
    }
    return r;
}

RatFn MonomialAuto::apply(const RatFn& f) const {
    std::map<Sym, RatFn> m;
    auto v = xyz();
    for (int j = 0; j < 3; ++j) m.emplace(v[j], var_image(j));
    return f.substitute(m);
}

MonomialAuto compose(const MonomialAuto& s, const MonomialAuto& t) {
    // (s o t)(x_j) = s(t(x_j)): matrix is mat_s * mat_t; coefficient j is
    // coef_t[j] * prod_i coef_s[i]^(mat_t(i,j)) (coefficients are constants).
    MonomialAuto r;
    r.mat = s.mat * t.mat;
    for (int j = 0; j < 3; ++j) {
        RatFn c = t.coef[j];
        for (int i = 0; i < 3; ++i) {
            int64_t e = t.mat.at(i, j);
            if (e) c = c * s.coef[i].pow(e);
        }
        r.coef[j] = c;
    }
    return r;
}

MonomialAuto MonomialAuto::inverse() const {
    MonomialAuto r;
    r.mat = mat.inverse();
    for (int j = 0; j < 3; ++j) {
        RatFn c(1L);
        for (int i = 0; i < 3; ++i) {
            int64_t e = r.mat.at(i, j);
            if (e) c = c * coef[i].pow(-e);
        }
        r.coef[j] = c;
    }
    return r;
}

bool MonomialAuto::operator==(const MonomialAuto& o) const {
    if (!(mat == o.mat)) return false;
    for (int j = 0; j < 3; ++j)
        if (coef[j] != o.coef[j]) return false;
    return true;
}

std::string MonomialAuto::str() const {
    std::ostringstream os;
    const char* names[3] = {"x", "y", "z"};
    for (int j = 0; j < 3; ++j) {
        if (j) os << ", ";
        os << names[j] << " -> " << var_image(j).str();
    }
    return os.str();
}

// ---- FieldAuto --------------------------------------------------------------

FieldAuto::FieldAuto(std::vector<Sym> v, std::vector<RatFn> im, std::vector<Sym> cj)
    : vars(std::move(v)), images(std::move(im)), conj(std::move(cj)) {
    if (vars.size() != images.size()) throw std::runtime_error("FieldAuto: arity mismatch");
    std::sort(conj.begin(), conj.end());
}

FieldAuto FieldAuto::identity(const std::vector<Sym>& vars) {
    std::vector<RatFn> im;
    for (Sym s : vars) im.push_back(RatFn::sym(s));
    return FieldAuto(vars, im, {});
}

FieldAuto FieldAuto::from_monomial(const MonomialAuto& m) {
    std::vector<Sym> v = {sym_x(), sym_y(), sym_z()};
    std::vector<RatFn> im;
    for (int j = 0; j < 3; ++j) im.push_back(m.var_image(j));
    return FieldAuto(v, im, {});
}

RatFn FieldAuto::apply(const RatFn& f) const {
    std::map<Sym, RatFn> m;
    for (size_t i = 0; i < vars.size(); ++i) m.emplace(vars[i], images[i]);
    for (Sym s : conj) {
        auto cj = SymbolTable::instance().adjunct_conj(s);
        if (!cj) throw unknown_adjunct(sym_name(s));
        m.emplace(s, RatFn(*cj, Poly(Q(1)), true));
    }
    return f.substitute(m);
}

FieldAuto compose(const FieldAuto& s, const FieldAuto& t) {
    if (s.vars != t.vars) throw std::runtime_error("FieldAuto compose: different stages");
    std::vector<RatFn> im;
    for (auto& g : t.images) im.push_back(s.apply(g));
    // conjugations are commuting involutions: symmetric difference survives
    std::vector<Sym> cj;
    std::set_symmetric_difference(s.conj.begin(), s.conj.end(), t.conj.begin(), t.conj.end(),
                                  std::back_inserter(cj));
    return FieldAuto(s.vars, std::move(im), std::move(cj));
}

bool FieldAuto::operator==(const FieldAuto& o) const {
    if (vars != o.vars || conj != o.conj) return false;
    for (size_t i = 0; i < images.size(); ++i)
        if (images[i] != o.images[i]) return false;
    return true;
}

bool FieldAuto::is_identity() const { return conj.empty() && images_are_identity(); }

bool FieldAuto::images_are_identity() const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (images[i] != RatFn::sym(vars[i])) return false;
    return true;
}

std::string FieldAuto::key() const {
    std::ostringstream os;
    for (Sym s : conj) os << "~" << sym_name(s);
    for (auto& g : images) os << "|" << g.str();
    return os.str();
}

std::string FieldAuto::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < vars.size(); ++i) {
        if (i) os << ", ";
        os << sym_name(vars[i]) << " -> " << images[i].str();
    }
    for (Sym s : conj) os << ", conj " << sym_name(s);
    return os.str();
}

std::vector<FieldAuto> field_auto_closure(const std::vector<FieldAuto>& gens, size_t cap) {
    if (gens.empty()) return {};
    std::set<std::string> seen;
    std::vector<FieldAuto> out;
    FieldAuto id = FieldAuto::identity(gens.front().vars);
    seen.insert(id.key());
    out.push_back(id);
    for (size_t qi = 0; qi < out.size(); ++qi) {
        FieldAuto cur = out[qi];
        for (auto& g : gens) {
            FieldAuto n = compose(cur, g);
            if (seen.insert(n.key()).second) {
                if (out.size() + 1 > cap) throw closure_cap_exceeded();
                out.push_back(n);
            }
        }
    }
    return out;
}

// ---- assignments ------------------------------------------------------------

const MonomialAuto& ActionAssignment::gen(const std::string& name) const {
    for (auto& g : gens)
        if (g.first == name) return g.second;
    throw std::runtime_error("assignment has no generator '" + name + "'");
}

std::vector<FieldAuto> ActionAssignment::field_autos() const {
    std::vector<FieldAuto> v;
    for (auto& g : gens) v.push_back(FieldAuto::from_monomial(g.second));
    return v;
}

ActionAssignment make_assignment(const GroupSpec& spec,
                                 const std::vector<std::pair<std::string, MonomialAuto>>& gens,
                                 FieldTower tower, std::vector<std::string> constraints) {
    ActionAssignment a;
    a.spec = &spec;
    a.tower = std::move(tower);
    a.constraints = std::move(constraints);
    for (auto& [name, mono] : gens) {
        if (!(spec.gen(name) == mono.mat))
            throw std::runtime_error("assignment matrix mismatch for generator '" + name +
                                     "' of " + spec.id());
        a.gens.push_back({name, mono});
    }
    if (a.gens.size() != spec.generators.size())
        throw std::runtime_error("assignment must cover all generators of " + spec.id());
    return a;
}

// word evaluation over automorphisms (names resolve to assigned generators)
namespace {

struct AutoWordParser {
    const ActionAssignment& a;
    const std::string& s;
    size_t pos = 0;
    AutoWordParser(const ActionAssignment& aa, const std::string& str) : a(aa), s(str) {}

    void ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    char peek() {
        ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    MonomialAuto word() {
        MonomialAuto r = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos;
                r = compose(r, factor());
            } else if (c == '\0' || c == ')' || c == ',' || c == ']' || c == '=') {
                return r;
            } else {
                r = compose(r, factor());
            }
        }
    }
    MonomialAuto factor() {
        MonomialAuto b = element();
        if (peek() == '^') {
            ++pos;
            ws();
            bool neg = false;
            if (peek() == '-') {
                neg = true;
                ++pos;
            }
            size_t st = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
            long e = std::stol(s.substr(st, pos - st));
            if (neg) b = b.inverse();
            MonomialAuto r;
            for (long i = 0; i < e; ++i) r = compose(r, b);
            b = r;
        }
        return b;
    }
    MonomialAuto element() {
        char c = peek();
        if (c == '(') {
            ++pos;
            MonomialAuto r = word();
            if (peek() != ')') throw std::runtime_error("auto word: expected )");
            ++pos;
            return r;
        }
        if (c == '[') {
            ++pos;
            MonomialAuto u = word();
            if (peek() != ',') throw std::runtime_error("auto word: expected ,");
            ++pos;
            MonomialAuto v = word();
            if (peek() != ']') throw std::runtime_error("auto word: expected ]");
            ++pos;
            return compose(compose(u.inverse(), v.inverse()), compose(u, v));
        }
        std::string name;
        if (c == '-') {
            name += '-';
            ++pos;
            ws();
        }
        while (pos < s.size() && std::isalnum((unsigned char)s[pos])) name += s[pos++];
        if (name == "I") return MonomialAuto::identity();
        for (auto& g : a.gens)
            if (g.first == name) return g.second;
        throw std::runtime_error("auto word: name '" + name + "' not an assigned generator");
    }
};

}  // namespace

MonomialAuto eval_auto_word(const ActionAssignment& a, const std::string& word) {
    AutoWordParser p(a, word);
    MonomialAuto r = p.word();
    p.ws();
    if (p.pos != word.size())
        throw std::runtime_error("auto word: trailing input in '" + word + "'");
    return r;
}

AssignmentReport verify_assignment(const ActionAssignment& a) {
    AssignmentReport rep;
    for (auto& rel : a.spec->relations) {
        auto eq = rel.find('=');
        std::string lhs_s = rel.substr(0, eq), rhs_s = rel.substr(eq + 1);
        bool ok = true;
        std::string why;
        try {
            MonomialAuto lhs = eval_auto_word(a, lhs_s);
            MonomialAuto rhs = eval_auto_word(a, rhs_s);
            if (!(lhs.mat == rhs.mat)) {
                ok = false;
                why = "matrix mismatch in " + rel;
            } else {
                for (int j = 0; j < 3 && ok; ++j) {
                    if (lhs.coef[j] != rhs.coef[j]) {
                        ok = false;
                        why = rel + ": coefficient " + std::to_string(j + 1) + " gives " +
                              lhs.coef[j].str() + " != " + rhs.coef[j].str();
                    }
                }
            }
        } catch (const std::exception& e) {
            // relation mentions a matrix that is not an assigned generator
            // (e.g. A4^2 = ta1): the matrix identity is still checkable
            try {
                ok = check_matrix_relation(rel);
                if (!ok) why = "matrix relation fails: " + rel;
            } catch (...) {
                ok = false;
                why = std::string("cannot evaluate: ") + e.what();
            }
        }
        rep.checks.push_back({rel, ok});
        if (!ok) rep.failures.push_back(why);
    }
    return rep;
}

std::vector<std::array<Q, 3>> orbit(const ActionAssignment& a, const std::array<Q, 3>& point,
                                    const std::map<Sym, Q>& specialization) {
    std::vector<MonomialAuto> gens;
    for (auto& [name, g] : a.gens) {
        MonomialAuto s = g;
        for (int j = 0; j < 3; ++j) {
            auto sp = specialize(g.coef[j], a.tower, specialization);
            if (!sp || !sp->is_constant())
                throw std::runtime_error("orbit: coefficient does not specialize to a constant");
            s.coef[j] = *sp;
        }
        gens.push_back(s);
    }
    auto act = [&](const MonomialAuto& g, const std::array<Q, 3>& p) {
        std::array<Q, 3> r;
        for (int j = 0; j < 3; ++j) {
            Q v = g.coef[j].constant_value();
            for (int i = 0; i < 3; ++i) {
                int64_t e = g.mat.at(i, j);
                if (e > 0)
                    for (int64_t t = 0; t < e; ++t) v *= p[i];
                else if (e < 0) {
                    if (p[i] == 0) throw pole_hit();
                    for (int64_t t = 0; t < -e; ++t) v /= p[i];
                }
            }
            r[j] = v;
        }
        return r;
    };
    std::set<std::array<Q, 3>> seen;
    std::vector<std::array<Q, 3>> out;
    seen.insert(point);
    out.push_back(point);
    for (size_t qi = 0; qi < out.size(); ++qi) {
        auto cur = out[qi];
        for (auto& g : gens) {
            auto n = act(g, cur);
            if (seen.insert(n).second) out.push_back(n);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::array<RatFn, 3>> orbit_tower(const ActionAssignment& a,
                                              const std::array<Q, 3>& point,
                                              const std::map<Sym, Q>& specialization) {
    std::vector<MonomialAuto> gens;
    for (auto& [name, g] : a.gens) {
        MonomialAuto s = g;
        for (int j = 0; j < 3; ++j) {
            auto sp = specialize(g.coef[j], a.tower, specialization);
            if (!sp || !sp->is_constant())
                throw std::runtime_error("orbit: coefficient does not specialize to a constant");
            s.coef[j] = *sp;
        }
        gens.push_back(s);
    }
    auto act = [&](const MonomialAuto& g, const std::array<RatFn, 3>& p) {
        std::array<RatFn, 3> r;
        for (int j = 0; j < 3; ++j) {
            RatFn v = g.coef[j];
            for (int i = 0; i < 3; ++i) {
                int64_t e = g.mat.at(i, j);
                if (e) {
                    if (p[i].is_zero() && e < 0) throw pole_hit();
                    v = v * p[i].pow(e);
                }
            }
            r[j] = v;
        }
        return r;
    };
    auto keyof = [](const std::array<RatFn, 3>& p) {
        return p[0].str() + ";" + p[1].str() + ";" + p[2].str();
    };
    std::array<RatFn, 3> p0 = {RatFn(point[0]), RatFn(point[1]), RatFn(point[2])};
    std::set<std::string> seen;
    std::vector<std::array<RatFn, 3>> out;
    seen.insert(keyof(p0));
    out.push_back(p0);
    for (size_t qi = 0; qi < out.size(); ++qi) {
        auto cur = out[qi];
        for (auto& g : gens) {
            auto n = act(g, cur);
            if (seen.insert(keyof(n)).second) out.push_back(n);
        }
    }
    return out;
}

MonomialAuto monomial_auto_from_images(const std::array<std::string, 3>& images) {
    std::array<RatFn, 3> f = {Parser::parse(images[0]), Parser::parse(images[1]),
                              Parser::parse(images[2])};
    return monomial_auto_from_images(f);
}

MonomialAuto monomial_auto_from_images(const std::array<RatFn, 3>& images) {
    auto v = xyz();
    MonomialAuto r;
    r.mat = IntMatrix3{};  // zero, filled from the exponents below
    for (int j = 0; j < 3; ++j) {
        const RatFn& im = images[j];
        if (im.num().t.size() != 1 || im.den().t.size() != 1)
            throw std::runtime_error("not a monomial image: " + im.str());
        const auto& [mn, cn] = *im.num().t.begin();
        const auto& [md, cd] = *im.den().t.begin();
        Mono rest_n, rest_d;
        for (auto& pr : mn.e) {
            bool isvar = false;
            for (int i = 0; i < 3; ++i)
                if (pr.first == v[i]) {
                    r.mat.at(i, j) += pr.second;
                    isvar = true;
                }
            if (!isvar) rest_n.e.push_back(pr);
        }
        for (auto& pr : md.e) {
            bool isvar = false;
            for (int i = 0; i < 3; ++i)
                if (pr.first == v[i]) {
                    r.mat.at(i, j) -= pr.second;
                    isvar = true;
                }
            if (!isvar) rest_d.e.push_back(pr);
        }
        Poly pn, pd;
        pn.add_term(rest_n, cn);
        pd.add_term(rest_d, cd);
        r.coef[j] = RatFn(pn, pd);
        if (r.coef[j].is_zero()) throw std::runtime_error("zero coefficient image");
    }
    if (!r.mat.unimodular()) throw not_unimodular();
    return r;
}

}  // namespace mono3

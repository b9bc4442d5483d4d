#ifndef MONO3_ACTION_HPP
#define MONO3_ACTION_HPP

#include <functional>

#include "mono3/catalog.hpp"
#include "mono3/tower.hpp"

namespace mono3 {

struct pole_hit : std::runtime_error {
    pole_hit() : std::runtime_error("PoleHit") {}
};

// One monomial K-automorphism: sigma(x_j) = c_j * prod_i x_i^(a_ij) with
// [a_ij] unimodular and c_j nonzero tower elements.
struct MonomialAuto {
    IntMatrix3 mat;
    std::array<RatFn, 3> coef;

    MonomialAuto() : mat(IntMatrix3::identity()), coef{RatFn(1L), RatFn(1L), RatFn(1L)} {}
    MonomialAuto(const IntMatrix3& m, std::array<RatFn, 3> c);

    static MonomialAuto identity() { return MonomialAuto(); }

    // image of variable j (0-based) as a rational function of x,y,z
    RatFn var_image(int j) const;
    RatFn apply(const RatFn& f) const;

    friend MonomialAuto compose(const MonomialAuto& s, const MonomialAuto& t);  // s after t
    MonomialAuto inverse() const;
    bool operator==(const MonomialAuto& o) const;
    bool is_identity() const { return *this == MonomialAuto(); }
    std::string str() const;
};

// General automorphism of a staged field K(v_1..v_n): images of the stage
// coordinates plus a set of conjugated adjuncts (semilinear part).  Monomial
// automorphisms embed as the special case with empty conjugation.
struct FieldAuto {
    std::vector<Sym> vars;
    std::vector<RatFn> images;
    std::vector<Sym> conj;  // sorted adjunct symbols

    FieldAuto() = default;
    FieldAuto(std::vector<Sym> v, std::vector<RatFn> im, std::vector<Sym> cj = {});
    static FieldAuto identity(const std::vector<Sym>& vars);
    static FieldAuto from_monomial(const MonomialAuto& m);

    RatFn apply(const RatFn& f) const;
    friend FieldAuto compose(const FieldAuto& s, const FieldAuto& t);  // s after t
    bool operator==(const FieldAuto& o) const;
    bool is_identity() const;
    bool images_are_identity() const;  // allows a semilinear part
    std::string key() const;           // canonical key for closure sets
    std::string str() const;
};

std::vector<FieldAuto> field_auto_closure(const std::vector<FieldAuto>& gens, size_t cap = 256);

// Group action data: catalog group, one MonomialAuto per generator, declared
// parameter constraints already substituted into the coefficients (recorded
// for audit), over a field tower.
struct ActionAssignment {
    const GroupSpec* spec = nullptr;
    std::vector<std::pair<std::string, MonomialAuto>> gens;
    std::vector<std::string> constraints;  // display strings, e.g. "c^3 = 1 (c := 1)"
    FieldTower tower;

    const MonomialAuto& gen(const std::string& name) const;
    std::vector<FieldAuto> field_autos() const;
    long group_order() const { return spec ? spec->order : 0; }
};

// Builds an assignment and checks the matrix of each automorphism against the
// catalog generator matrix.
ActionAssignment make_assignment(const GroupSpec& spec,
                                 const std::vector<std::pair<std::string, MonomialAuto>>& gens,
                                 FieldTower tower, std::vector<std::string> constraints = {});

struct AssignmentReport {
    std::vector<std::pair<std::string, bool>> checks;
    std::vector<std::string> failures;  // offending coefficient identities
    bool all_pass() const {
        for (auto& c : checks)
            if (!c.second) return false;
        return true;
    }
};

// Lifts every catalog relation word to the automorphism level and verifies it.
AssignmentReport verify_assignment(const ActionAssignment& a);

// Evaluates a relation word ("[la1,b3]=ta1") over the assigned automorphisms;
// names resolve to assigned generators first, then to words in them.
MonomialAuto eval_auto_word(const ActionAssignment& a, const std::string& word);

// Exact orbit of a rational point under the group (coefficients must be
// constant after specialization).  Throws pole_hit when a coordinate hits a
// pole; the caller re-draws.
std::vector<std::array<Q, 3>> orbit(const ActionAssignment& a, const std::array<Q, 3>& point,
                                    const std::map<Sym, Q>& specialization);

// Orbit with tower-valued coordinates (e.g. when a coefficient specializes
// inside Q(w)).  Points are constant rational functions.
std::vector<std::array<RatFn, 3>> orbit_tower(const ActionAssignment& a,
                                              const std::array<Q, 3>& point,
                                              const std::map<Sym, Q>& specialization);

// Builds a MonomialAuto from variable images given as expression strings
// (each must be a nonzero coefficient times a Laurent monomial in x,y,z).
MonomialAuto monomial_auto_from_images(const std::array<std::string, 3>& images);
MonomialAuto monomial_auto_from_images(const std::array<RatFn, 3>& images);

}  // namespace mono3

#endif

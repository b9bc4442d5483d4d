#ifndef MONO3_VERIFIER_HPP
#define MONO3_VERIFIER_HPP

#include <json.hpp>

#include <optional>

#include "mono3/action.hpp"
#include "mono3/resultant.hpp"

namespace mono3 {

struct Obligation {
    std::string desc;
    std::string anchor;
    bool pass = false;
    std::string detail;  // counterexample or certificate data
};

struct VerificationReport {
    std::vector<Obligation> obligations;
    bool aggregate() const {
        for (auto& o : obligations)
            if (!o.pass) return false;
        return true;
    }
    void add(std::string desc, std::string anchor, bool pass, std::string detail = "") {
        obligations.push_back({std::move(desc), std::move(anchor), pass, std::move(detail)});
    }
    void merge(const VerificationReport& o) {
        obligations.insert(obligations.end(), o.obligations.begin(), o.obligations.end());
    }
    const Obligation* first_failure() const {
        for (auto& o : obligations)
            if (!o.pass) return &o;
        return nullptr;
    }
    nlohmann::ordered_json to_json() const;
};

// deterministic splitmix64-based rng (identical streams on every platform)
struct DetRng {
    uint64_t state;
    explicit DetRng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long pick(long lo, long hi) { return lo + long(next() % uint64_t(hi - lo + 1)); }
};

// A transcendental-basis claim: generator functions of `vars`, the automorphisms
// they are invariant under, the claimed group order, and optional witnesses.
struct BasisClaim {
    std::string id;
    std::vector<Sym> vars;      // base coordinates (3, or 4 for the V4 recipes)
    std::vector<RatFn> gens;
    std::vector<FieldAuto> autos;
    long order = 1;
    std::vector<std::pair<RatFn, RatFn>> witnesses;  // exact identities
    // Degree-bound witness ("[old:new] <= order"): a primitive coordinate w
    // satisfying sum_k minpoly[k] * w^k = 0 with minpoly coefficients written
    // in the new generators, plus each remaining old coordinate as a rational
    // expression in (new generators, w).  Placeholders $1..$n in the
    // expression strings refer to the claim's generators.
    struct DegreeWitness {
        Sym primitive;
        std::vector<std::string> minpoly;             // degree = order entries: c_0..c_order
        std::map<Sym, std::string> older_coords;      // old coordinate -> expr in $i and primitive
    };
    std::optional<DegreeWitness> degree_witness;
    FieldTower tower;
    std::vector<std::string> constraints;
};

struct identically_zero_jacobian : std::runtime_error {
    identically_zero_jacobian() : std::runtime_error("IdenticallyZeroJacobian") {}
};
struct degenerate_specialization : std::runtime_error {
    degenerate_specialization() : std::runtime_error("DegenerateSpecialization") {}
};
struct constraint_violation : std::runtime_error {
    constraint_violation() : std::runtime_error("ConstraintViolation") {}
};

// sigma(f) == f for every automorphism, exactly (cross-multiplied)
Obligation check_invariance(const RatFn& f, const std::vector<FieldAuto>& autos,
                            const std::string& anchor = "");

// new_vars are functions of the base variables; claimed_images are written in
// stage symbols stage_vars (|stage_vars| == |new_vars|).  Checks
// claimed_i(new_vars) == sigma(new_vars_i) exactly.
Obligation check_induced_action(const std::vector<RatFn>& new_vars, const FieldAuto& sigma,
                                const std::vector<Sym>& stage_vars,
                                const std::vector<RatFn>& claimed_images,
                                const std::string& anchor = "");

// Jacobian criterion: the n x n determinant of d g_i / d v_j is not the zero
// function; certified by a rational point where it is nonzero.
Obligation check_independence(const std::vector<RatFn>& gens, const std::vector<Sym>& vars,
                              uint64_t seed, const std::string& anchor = "");

Obligation check_witness(const RatFn& lhs, const RatFn& rhs, const std::string& anchor = "");

struct FiberCount {
    std::vector<Q> base_point;
    std::map<std::string, Q> specialization;
    std::vector<long> separating_coeffs;
    long elim_degree = 0;
    long sqfree_degree = 0;
    int retries = 0;
    nlohmann::ordered_json to_json() const;
};

// Independent fiber-degree oracle: counts the distinct points of the fiber of
// (g_1..g_n) through a random rational base point by eliminating to a
// univariate polynomial in a separating linear form and taking the degree of
// its squarefree part.  `autos` give the group action on `vars` (used for the
// orbit lower bound / degeneracy detection).
FiberCount fiber_degree(const std::vector<RatFn>& gens, const std::vector<Sym>& vars,
                        const std::vector<FieldAuto>& autos, long expected_order,
                        const std::map<Sym, Q>& specialization, const FieldTower& tower,
                        uint64_t seed, int retry_cap = 8);

// Aggregate check: invariance of every generator, independence, and either the
// degree witness or fiber counts equal to `order` at >= 2 admissible
// specializations.
VerificationReport verify_fixed_field(const BasisClaim& claim, uint64_t seed, int retry_cap = 8);

// helpers shared with the script engine
RatFn substitute_placeholders(const std::string& expr, const std::vector<RatFn>& gens,
                              const std::vector<Sym>& stage_syms);

// squarefree-part degree of a univariate polynomial (tower-valued coefficients
// allowed); -1 if zero polynomial
long squarefree_degree(const Poly& T, Sym u);

// global (tower-independent) rationalization/inversion of constants
RatFn rationalize_const(const RatFn& e);
RatFn invert_const(const RatFn& e);

// Picks admissible parameter specializations for a claim: small positive
// values avoiding vanishing denominators and square adjunct arguments.
std::vector<std::map<Sym, Q>> admissible_specializations(const BasisClaim& claim, int want,
                                                         uint64_t seed);

}  // namespace mono3

#endif

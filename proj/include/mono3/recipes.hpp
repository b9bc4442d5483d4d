#ifndef MONO3_RECIPES_HPP
#define MONO3_RECIPES_HPP

#include "mono3/verifier.hpp"

namespace mono3 {

struct unknown_recipe : std::runtime_error {
    explicit unknown_recipe(const std::string& id) : std::runtime_error("UnknownRecipe: " + id) {}
};
struct inadmissible_params : std::runtime_error {
    explicit inadmissible_params(const std::string& m)
        : std::runtime_error("InadmissibleParams: " + m) {}
};
struct zero_trace : std::runtime_error {
    zero_trace() : std::runtime_error("ZeroTrace") {}
};
struct missing_omega : std::runtime_error {
    missing_omega() : std::runtime_error("MissingOmega") {}
};

void ensure_standard_symbols();

struct RecipeInfo {
    std::string id;
    std::string summary;
    std::vector<std::string> args;  // e.g. {"a", "eps1=+1|-1"}
};

// named recipe constructors; args are name -> value strings ("a" stays
// symbolic when the value names a parameter, signs must be "1" or "-1")
BasisClaim build_basis(const std::string& recipe_id,
                       const std::map<std::string, std::string>& args);

const std::vector<RecipeInfo>& list_recipes();

// Every instantiation exercised by the invariance suite: one claim per sign
// branch / case split of every recipe, plus numeric variants.
std::vector<BasisClaim> all_recipe_instances();

// Trace of `seed` over the closure of the given automorphisms.
RatFn theta_trace(const std::vector<FieldAuto>& gens, const RatFn& seed, size_t cap = 256);

// The section-9 Lagrange resolvent machinery for the order-3 action
//   a3: x -> y, y -> b/(xy), z -> w z   over a tower containing w.
struct Resolvent {
    RatFn theta;   // x + w y + w^2 b/(xy)
    RatFn F;       // theta^2 / (-al)(theta)
    RatFn Fp;      // theta^2 / (-be)(theta)
    RatFn Fpp;     // (theta+ta1(theta))^2 / (-be)(theta+ta1(theta))
    FieldAuto a3;  // the resolvent's cyclic automorphism (on x,y,z)
};
Resolvent lagrange_resolvent(const RatFn& b, const FieldTower& tower);

}  // namespace mono3

#endif

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mono3/action.hpp"
#include "testutil.hpp"

using namespace mono3;
using testutil::Rng;

static void ensure_syms() {
    var("x");
    var("y");
    var("z");
    for (const char* p : {"a", "b", "c"}) param(p);
}

TEST_CASE("monomial auto: apply, spec examples") {
    ensure_syms();
    // -I3 with a: x -> a/x
    MonomialAuto mi = monomial_auto_from_images({"a/x", "a/y", "a/z"});
    CHECK(mi.mat == named_matrix("-I"));
    CHECK(mi.apply(rf("x")) == rf("a/x"));
    CHECK(mi.apply(rf("5")) == rf("5"));
    // b3 is the cyclic permutation
    MonomialAuto b3 = monomial_auto_from_images({"y", "z", "x"});
    CHECK(b3.mat == named_matrix("b3"));
    CHECK(b3.apply(rf("x")) == rf("y"));
    // reading back the matrix from images recovers it (type invariant)
    MonomialAuto a3 = monomial_auto_from_images({"y", "b/(x*y)", "c*z"});
    CHECK(a3.mat == named_matrix("a3"));
}

TEST_CASE("monomial auto: compose and inverse") {
    ensure_syms();
    MonomialAuto s = monomial_auto_from_images({"2*x", "y", "z"});
    MonomialAuto t = monomial_auto_from_images({"3*x", "y", "z"});
    CHECK(compose(s, t).apply(rf("x")) == rf("6*x"));

    MonomialAuto mi = monomial_auto_from_images({"a/x", "a/y", "a/z"});
    CHECK(compose(mi, mi).is_identity());

    // a3 with coefficients (1,b,c): cube fixes x,y and scales z by c^3
    MonomialAuto a3 = monomial_auto_from_images({"y", "b/(x*y)", "c*z"});
    MonomialAuto cube = compose(compose(a3, a3), a3);
    CHECK(cube.mat == IntMatrix3::identity());
    CHECK(cube.apply(rf("x")) == rf("x"));
    CHECK(cube.apply(rf("y")) == rf("y"));
    CHECK(cube.apply(rf("z")) == rf("c^3*z"));
    CHECK_FALSE(cube.is_identity());

    // A4-twist of the 4A+ case: x->y, y->b/x, z->c z satisfies s s^-1 = id
    MonomialAuto A4 = monomial_auto_from_images({"y", "b/x", "c*z"});
    CHECK(compose(A4, A4.inverse()).is_identity());
    CHECK(compose(A4.inverse(), A4).is_identity());
    CHECK(MonomialAuto::identity().inverse().is_identity());
    MonomialAuto rot = monomial_auto_from_images({"y", "z", "x"});
    CHECK(rot.inverse() == monomial_auto_from_images({"z", "x", "y"}));
}

TEST_CASE("apply is compatible with composition and products (property)") {
    ensure_syms();
    Rng rng(11);
    std::vector<Sym> syms = {var("x"), var("y"), var("z")};
    MonomialAuto s = monomial_auto_from_images({"a/x", "3*y", "y*z"});
    MonomialAuto t = monomial_auto_from_images({"y", "b/(x*y)", "z"});
    for (int it = 0; it < 8; ++it) {
        RatFn f = testutil::random_ratfn(rng, syms, 2, 2);
        RatFn g = testutil::random_ratfn(rng, syms, 2, 2);
        CHECK(compose(s, t).apply(f) == s.apply(t.apply(f)));
        CHECK(s.apply(f * g) == s.apply(f) * s.apply(g));
        CHECK(s.apply(f + g) == s.apply(f) + s.apply(g));
    }
}

TEST_CASE("matrix part of compose is the matrix product (catalog generators)") {
    ensure_syms();
    std::vector<std::string> names = {"ta1", "la1", "b3", "al", "-I", "A4", "B4", "a3"};
    for (auto& n1 : names)
        for (auto& n2 : names) {
            MonomialAuto u, v;
            u.mat = named_matrix(n1);
            v.mat = named_matrix(n2);
            CHECK(compose(u, v).mat == named_matrix(n1) * named_matrix(n2));
        }
}

TEST_CASE("assignment: G_{7,1,1} relations hold for the paper's action") {
    ensure_syms();
    FieldTower T({"a"});
    // eps1 = -1 branch of (act711)
    auto ta1 = monomial_auto_from_images({"a/x", "-a/y", "-z"});
    auto la1 = monomial_auto_from_images({"-a/x", "-y", "a/z"});
    auto b3 = monomial_auto_from_images({"y", "z", "x"});
    auto A = make_assignment(builtin_group(7, 1, 1), {{"ta1", ta1}, {"la1", la1}, {"b3", b3}}, T,
                             {"eps1 = -1"});
    auto rep = verify_assignment(A);
    CHECK(rep.all_pass());
    // and the eps1 = +1 branch
    auto ta1p = monomial_auto_from_images({"a/x", "a/y", "z"});
    auto la1p = monomial_auto_from_images({"a/x", "y", "a/z"});
    auto Ap = make_assignment(builtin_group(7, 1, 1), {{"ta1", ta1p}, {"la1", la1p}, {"b3", b3}},
                              T, {"eps1 = 1"});
    CHECK(verify_assignment(Ap).all_pass());
}

TEST_CASE("assignment: broken constraint is reported") {
    ensure_syms();
    FieldTower T({"b", "c"});
    // a3 with c^3 != 1: the relation a3^3 = I fails at the coefficient level
    auto a3 = monomial_auto_from_images({"y", "b/(x*y)", "c*z"});
    auto A = make_assignment(builtin_group(5, 1, 2), {{"a3", a3}}, T, {});
    auto rep = verify_assignment(A);
    CHECK_FALSE(rep.all_pass());
    REQUIRE(!rep.failures.empty());
    CHECK(rep.failures[0].find("a3^3=I") != std::string::npos);
    // with c := 1 everything passes
    auto a3ok = monomial_auto_from_images({"y", "b/(x*y)", "z"});
    auto B = make_assignment(builtin_group(5, 1, 2), {{"a3", a3ok}}, T, {"c^3 = 1 (c := 1)"});
    CHECK(verify_assignment(B).all_pass());
}

TEST_CASE("trivial group: empty failure report") {
    auto A = make_assignment(builtin_group(1, 1, 1), {{"I", MonomialAuto::identity()}},
                             FieldTower{}, {});
    auto rep = verify_assignment(A);
    CHECK(rep.all_pass());
    CHECK(rep.failures.empty());
}

TEST_CASE("orbit: spec examples") {
    ensure_syms();
    FieldTower T({"a"});
    auto mi = monomial_auto_from_images({"a/x", "a/y", "a/z"});
    auto A = make_assignment(builtin_group(1, 2, 1), {{"-I", mi}}, T, {});
    std::map<Sym, Q> spec1;
    spec1.emplace(param("a"), Q(1));
    auto orb = orbit(A, {Q(2), Q(3), Q(5)}, spec1);
    REQUIRE(orb.size() == 2);
    CHECK(orb[0] == std::array<Q, 3>{Q(1, 2), Q(1, 3), Q(1, 5)});
    CHECK(orb[1] == std::array<Q, 3>{Q(2), Q(3), Q(5)});

    auto b3 = monomial_auto_from_images({"y", "z", "x"});
    auto B = make_assignment(builtin_group(5, 1, 1), {{"b3", b3}}, FieldTower{}, {});
    auto orb3 = orbit(B, {Q(1), Q(2), Q(3)}, {});
    CHECK(orb3.size() == 3);

    // G_{7,1,1} with eps1 = 1, a = 1 at a generic point: 12 distinct points
    auto ta1 = monomial_auto_from_images({"a/x", "a/y", "z"});
    auto la1 = monomial_auto_from_images({"a/x", "y", "a/z"});
    auto G = make_assignment(builtin_group(7, 1, 1), {{"ta1", ta1}, {"la1", la1}, {"b3", b3}}, T,
                             {});
    auto orb12 = orbit(G, {Q(2), Q(3), Q(5)}, spec1);
    CHECK(orb12.size() == 12);

    // pole hit
    CHECK_THROWS_AS(orbit(A, {Q(0), Q(1), Q(1)}, spec1), pole_hit);
}

TEST_CASE("orbit cardinality divides group order (property)") {
    ensure_syms();
    Rng rng(2024);
    FieldTower T({"a"});
    auto ta1 = monomial_auto_from_images({"a/x", "a/y", "z"});
    auto la1 = monomial_auto_from_images({"a/x", "y", "a/z"});
    auto b3 = monomial_auto_from_images({"y", "z", "x"});
    auto G = make_assignment(builtin_group(7, 1, 1), {{"ta1", ta1}, {"la1", la1}, {"b3", b3}}, T,
                             {});
    std::map<Sym, Q> sp;
    sp.emplace(param("a"), Q(1));
    for (int it = 0; it < 6; ++it) {
        std::array<Q, 3> p = {Q(rng.pick(1, 20)), Q(rng.pick(1, 20)), Q(rng.pick(1, 20))};
        auto orb = orbit(G, p, sp);
        CHECK(12 % orb.size() == 0);
    }
}

TEST_CASE("field autos: closure and semilinear composition") {
    ensure_syms();
    FieldTower T({"a"});
    Sym sa = SymbolTable::instance().known("sqrt(a)") ? SymbolTable::instance().lookup("sqrt(a)")
                                                      : T.adjoin_sqrt(rf("a"));
    std::vector<Sym> vars = {var("x"), var("y"), var("z")};
    // rho: conjugates sqrt(a), fixes variables
    FieldAuto rho(vars, {rf("x"), rf("y"), rf("z")}, {sa});
    CHECK_FALSE(rho.is_identity());
    CHECK(rho.images_are_identity());
    CHECK(compose(rho, rho).is_identity());
    // -I3 on X,Y,Z coordinates: X -> -X ...
    FieldAuto neg(vars, {rf("-x"), rf("-y"), rf("-z")});
    auto cl = field_auto_closure({rho, neg});
    CHECK(cl.size() == 4);
    // rho applied to (x+sqrt(a))/(x-sqrt(a)) flips the sign of sqrt(a)
    RatFn X = (rf("x") + RatFn::sym(sa)) / (rf("x") - RatFn::sym(sa));
    CHECK(rho.apply(X) == (rf("x") - RatFn::sym(sa)) / (rf("x") + RatFn::sym(sa)));
    CHECK(rho.apply(X) == RatFn(1L) / X);
}

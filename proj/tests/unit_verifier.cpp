#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mono3/verifier.hpp"
#include "testutil.hpp"

using namespace mono3;

static void ensure_syms() {
    var("x");
    var("y");
    var("z");
    for (const char* p : {"a", "b", "c", "f"}) param(p);
}

static FieldAuto auto_xy(const std::string& ix, const std::string& iy) {
    return FieldAuto({var("x"), var("y")}, {rf(ix), rf(iy)});
}
static FieldAuto auto_xyz(const std::string& ix, const std::string& iy, const std::string& iz) {
    return FieldAuto({var("x"), var("y"), var("z")}, {rf(ix), rf(iy), rf(iz)});
}

TEST_CASE("check_invariance: spec examples") {
    ensure_syms();
    // (xy+a)/(x+y) under -I2
    auto mi2 = auto_xy("a/x", "a/y");
    CHECK(check_invariance(rf("(x*y+a)/(x+y)"), {mi2}).pass);
    // k1 of thaaa under -I3
    auto mi3 = auto_xyz("a/x", "a/y", "a/z");
    CHECK(check_invariance(rf("(x*y+a)/(x+y)"), {mi3}).pass);
    // x is not invariant; counterexample mentions a/x - x
    Obligation o = check_invariance(rf("x"), {mi3});
    CHECK_FALSE(o.pass);
    CHECK(o.detail.find("(-x^2 + a)/x") != std::string::npos);
}

TEST_CASE("check_induced_action: thaaa proof display") {
    ensure_syms();
    FieldTower T({"a"});
    Sym sa = SymbolTable::instance().known("sqrt(a)") ? SymbolTable::instance().lookup("sqrt(a)")
                                                      : T.adjoin_sqrt(rf("a"));
    RatFn X = rf("(x+sqrt(a))/(x-sqrt(a))");
    RatFn Yv = rf("(y+sqrt(a))/(y-sqrt(a))");
    RatFn Zv = rf("(z+sqrt(a))/(z-sqrt(a))");
    auto mi3 = auto_xyz("a/x", "a/y", "a/z");
    std::vector<Sym> stage = {var("v1"), var("v2"), var("v3")};
    // -I3 : X -> -X, Y -> -Y, Z -> -Z
    auto ob = check_induced_action({X, Yv, Zv}, mi3, stage, {rf("-v1"), rf("-v2"), rf("-v3")});
    CHECK(ob.pass);
    // rho : sqrt(a) -> -sqrt(a);  X -> 1/X etc.
    FieldAuto rho({var("x"), var("y"), var("z")}, {rf("x"), rf("y"), rf("z")}, {sa});
    auto ob2 =
        check_induced_action({X, Yv, Zv}, rho, stage, {rf("1/v1"), rf("1/v2"), rf("1/v3")});
    CHECK(ob2.pass);
    // identity automorphism: images equal variables
    auto ob3 = check_induced_action({X, Yv, Zv}, FieldAuto::identity({var("x"), var("y"),
                                                                      var("z")}),
                                    stage, {rf("v1"), rf("v2"), rf("v3")});
    CHECK(ob3.pass);
    // wrong claim fails with localized detail
    auto bad = check_induced_action({X, Yv, Zv}, mi3, stage, {rf("v1"), rf("-v2"), rf("-v3")});
    CHECK_FALSE(bad.pass);
    CHECK(bad.detail.find("coordinate 1") != std::string::npos);
}

TEST_CASE("check_induced_action: the 5A display -I3(u2) = (3u1^2+1)/u2") {
    ensure_syms();
    // t1 = u~(1), t2 = v~(1) from lemMas2 with b = 1; u1=(t1-t2)/(t1+t2), u2=2/(t1+t2), u3=z
    RatFn t1 = rf("y*(y^3*x^3+x^3-3*y*x^2+1)/(y^2*x^4-y^3*x^3+y^4*x^2-y*x^2-y^2*x+1)");
    RatFn t2 = rf("x*(x^3*y^3+y^3-3*x*y^2+1)/(y^2*x^4-y^3*x^3+y^4*x^2-y*x^2-y^2*x+1)");
    RatFn u1 = (t1 - t2) / (t1 + t2);
    RatFn u2 = rf("2") / (t1 + t2);
    RatFn u3 = rf("z");
    auto mi3 = auto_xyz("1/x", "1/y", "f/z");
    std::vector<Sym> stage = {var("v1"), var("v2"), var("v3")};
    auto ob = check_induced_action({u1, u2, u3}, mi3, stage,
                                   {rf("-v1"), rf("(3*v1^2+1)/v2"), rf("f/v3")});
    CHECK(ob.pass);
}

TEST_CASE("check_independence: spec examples") {
    ensure_syms();
    std::vector<Sym> vars = {var("x"), var("y"), var("z")};
    CHECK(check_independence({rf("x"), rf("y"), rf("z")}, vars, 1).pass);
    auto bad = check_independence({rf("x+y"), rf("x+y"), rf("z")}, vars, 1);
    CHECK_FALSE(bad.pass);
    CHECK(bad.detail == "IdenticallyZeroJacobian");
    // lemMas (s1, u, v)
    RatFn s1 = rf("x+y+z");
    RatFn u = rf("(x*y^2+y*z^2+z*x^2-3*x*y*z)/(x^2+y^2+z^2-x*y-y*z-z*x)");
    RatFn v = rf("(x^2*y+y^2*z+z^2*x-3*x*y*z)/(x^2+y^2+z^2-x*y-y*z-z*x)");
    CHECK(check_independence({s1, u, v}, vars, 1).pass);
}

TEST_CASE("squarefree degree") {
    ensure_syms();
    Sym u = var("_u");
    RatFn T = rf("(_u-1)^2*(_u-2)");
    CHECK(squarefree_degree(T.num(), u) == 2);
    CHECK(squarefree_degree(rf("(_u-1)*(_u-2)*(_u-3)").num(), u) == 3);
    CHECK(squarefree_degree(rf("5").num(), u) == 0);
}

TEST_CASE("fiber oracle: lemaa with a=1 counts 2; brute force cross-check") {
    ensure_syms();
    std::vector<Sym> vars = {var("x"), var("y")};
    RatFn t1 = rf("(x*y+a)/(x+y)"), t2 = rf("(x*y-a)/(x-y)");
    auto mi2 = auto_xy("a/x", "a/y");
    std::map<Sym, Q> sp;
    sp.emplace(param("a"), Q(1));
    FieldTower T({"a"});
    FiberCount fc = fiber_degree({t1, t2}, vars, {mi2}, 2, sp, T, 20260810, 8);
    CHECK(fc.sqfree_degree == 2);

    // independent brute force at the spec's fiber (t1,t2) = (7/5,-5):
    // enumerate small-height rationals and solve both equations exactly
    std::map<Sym, Q> one;
    one.emplace(param("a"), Q(1));
    RatFn t1s = *specialize(t1, T, one), t2s = *specialize(t2, T, one);
    std::vector<std::pair<Q, Q>> sols;
    std::vector<Q> cand;
    for (long p = -6; p <= 6; ++p)
        for (long q = 1; q <= 6; ++q)
            if (p != 0) {
                Q r(p, q);
                r.canonicalize();
                if (std::find(cand.begin(), cand.end(), r) == cand.end()) cand.push_back(r);
            }
    for (auto& xv : cand)
        for (auto& yv : cand) {
            if (xv + yv == 0 || xv - yv == 0) continue;
            Q lhs1 = (xv * yv + 1) / (xv + yv);
            Q lhs2 = (xv * yv - 1) / (xv - yv);
            if (lhs1 == Q(7, 5) && lhs2 == Q(-5)) sols.push_back({xv, yv});
        }
    std::sort(sols.begin(), sols.end(),
              [](auto& a, auto& b) { return a.first < b.first; });
    REQUIRE(sols.size() == 2);
    CHECK(sols[0] == std::pair<Q, Q>{Q(1, 2), Q(1, 3)});
    CHECK(sols[1] == std::pair<Q, Q>{Q(2), Q(3)});
}

TEST_CASE("fiber oracle: lemMas counts 3, trivial counts 1") {
    ensure_syms();
    std::vector<Sym> vars = {var("x"), var("y"), var("z")};
    RatFn s1 = rf("x+y+z");
    RatFn u = rf("(x*y^2+y*z^2+z*x^2-3*x*y*z)/(x^2+y^2+z^2-x*y-y*z-z*x)");
    RatFn v = rf("(x^2*y+y^2*z+z^2*x-3*x*y*z)/(x^2+y^2+z^2-x*y-y*z-z*x)");
    FieldAuto cyc = auto_xyz("y", "z", "x");
    FiberCount fc = fiber_degree({s1, u, v}, vars, {cyc}, 3, {}, FieldTower{}, 7, 8);
    CHECK(fc.sqfree_degree == 3);

    FiberCount triv = fiber_degree({rf("x"), rf("y"), rf("z")}, vars,
                                   {FieldAuto::identity(vars)}, 1, {}, FieldTower{}, 7, 8);
    CHECK(triv.sqfree_degree == 1);
}

TEST_CASE("verify_fixed_field: thmex passes at a=2 with count 4") {
    ensure_syms();
    BasisClaim c;
    c.id = "thmex";
    c.vars = {var("x"), var("y"), var("z")};
    c.gens = {rf("(a*(-x+y+z)-x*y*z)/(a-x*y-x*z+y*z)"),
              rf("(a*(x-y+z)-x*y*z)/(a-x*y+x*z-y*z)"),
              rf("(a*(x+y-z)-x*y*z)/(a+x*y-x*z-y*z)")};
    c.autos = {auto_xyz("a/x", "a/y", "z"), auto_xyz("a/x", "y", "a/z")};
    c.order = 4;
    c.tower = FieldTower({"a"});
    auto rep = verify_fixed_field(c, 20260810);
    CHECK(rep.aggregate());
}

TEST_CASE("verify_fixed_field: thaaa passes; corrupted claim fails at the fiber step") {
    ensure_syms();
    BasisClaim c;
    c.id = "thaaa";
    c.vars = {var("x"), var("y"), var("z")};
    c.gens = {rf("(x*y+a)/(x+y)"), rf("(y*z+a)/(y+z)"), rf("(x*z+a)/(x+z)")};
    c.autos = {auto_xyz("a/x", "a/y", "a/z")};
    c.order = 2;
    c.tower = FieldTower({"a"});
    auto rep = verify_fixed_field(c, 20260810);
    CHECK(rep.aggregate());

    // corrupt: square the second generator; invariance still holds but the
    // fiber degree doubles
    BasisClaim bad = c;
    bad.gens[1] = bad.gens[1] * bad.gens[1];
    auto rep2 = verify_fixed_field(bad, 20260810);
    CHECK_FALSE(rep2.aggregate());
    const Obligation* fail = rep2.first_failure();
    REQUIRE(fail != nullptr);
    CHECK(fail->desc.find("fiber") != std::string::npos);
    CHECK(fail->detail.find("4") != std::string::npos);
}

TEST_CASE("degree witness route: lemMas2 expressibility identities") {
    ensure_syms();
    // sigma: x -> y -> b/(xy) -> x
    std::vector<Sym> vars2 = {var("x"), var("y")};
    RatFn ut = rf("y*(y^3*x^3+b*x^3-3*b*y*x^2+b^2)/(y^2*x^4-y^3*x^3+y^4*x^2-b*y*x^2-b*y^2*x+b^2)");
    RatFn vt = rf("x*(x^3*y^3+b*y^3-3*b*x*y^2+b^2)/(y^2*x^4-y^3*x^3+y^4*x^2-b*y*x^2-b*y^2*x+b^2)");
    RatFn st = rf("(y*x^2+y^2*x+b)/(x*y)");
    FieldAuto sigma = auto_xy("y", "b/(x*y)");
    // s~ = (u~^3 + v~^3 + b)/(u~ v~)
    CHECK(check_witness(st, (ut.pow(3) + vt.pow(3) + rf("b")) / (ut * vt)).pass);
    // x = (y^2 - s~ y - 2 u~ y + v~ y + s~ u~)/(u~ + v~ - 2y)
    RatFn xw = (rf("y^2") - st * rf("y") - rf("2*y") * ut + vt * rf("y") + st * ut) /
               (ut + vt - rf("2*y"));
    CHECK(check_witness(rf("x"), xw).pass);
    // the cubic for y: (y^3 - s~ y^2 - b)/y = -(s~^2(u~+v~) + 9b)/(s~ + 3(u~+v~))
    RatFn lhs = (rf("y^3") - st * rf("y^2") - rf("b")) / rf("y");
    RatFn rhs = -(st * st * (ut + vt) + rf("9*b")) / (st + rf("3") * (ut + vt));
    CHECK(check_witness(lhs, rhs).pass);
    CHECK(check_invariance(ut, {sigma}).pass);
    CHECK(check_invariance(vt, {sigma}).pass);
    CHECK(check_invariance(st, {sigma}).pass);
}

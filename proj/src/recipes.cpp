#include "mono3/recipes.hpp"

#include <sstream>

namespace mono3 {

void ensure_standard_symbols() {
    static bool done = [] {
        for (const char* v : {"x", "y", "z", "x4", "v1", "v2", "v3", "v4", "_u"}) var(v);
        for (const char* p : {"a",  "b",  "c",  "d",  "e",  "f",  "g",  "h", "j",
                              "k",  "l",  "m",  "n",  "o",  "p",  "q",  "r", "s",
                              "t",  "a0", "a1", "a2", "a3", "b1", "c1", "d1"})
            param(p);
        return true;
    }();
    (void)done;
}

namespace {

Sym X() { return var("x"); }
Sym Y() { return var("y"); }
Sym Z() { return var("z"); }
Sym X4() { return var("x4"); }

std::vector<Sym> v_xyz() { return {X(), Y(), Z()}; }
std::vector<Sym> v_xy() { return {X(), Y()}; }

FieldAuto fa(std::initializer_list<const char*> images, std::vector<Sym> vars,
             std::vector<Sym> conj = {}) {
    std::vector<RatFn> im;
    for (auto s : images) im.push_back(rf(s));
    return FieldAuto(std::move(vars), std::move(im), std::move(conj));
}
FieldAuto fa3(const char* ix, const char* iy, const char* iz) {
    return fa({ix, iy, iz}, v_xyz());
}

std::string get_arg(const std::map<std::string, std::string>& args, const std::string& key,
                    const std::string& dflt) {
    auto it = args.find(key);
    return it == args.end() ? dflt : it->second;
}

RatFn get_param(const std::map<std::string, std::string>& args, const std::string& key,
                const std::string& dflt = "") {
    std::string v = get_arg(args, key, dflt.empty() ? key : dflt);
    RatFn r = rf(v);
    if (r.is_zero()) throw inadmissible_params(key + " must be nonzero");
    return r;
}

long get_sign(const std::map<std::string, std::string>& args, const std::string& key,
              const std::string& dflt = "1") {
    std::string v = get_arg(args, key, dflt);
    if (v == "1" || v == "+1") return 1;
    if (v == "-1") return -1;
    throw inadmissible_params(key + " must be 1 or -1, got " + v);
}

RatFn sgn(long e) { return RatFn(Q(e)); }

// substitution helper: f with x,y(,z) replaced
RatFn sub3(const RatFn& f, const RatFn& ix, const RatFn& iy, const RatFn& iz) {
    std::map<Sym, RatFn> m;
    m.emplace(X(), ix);
    m.emplace(Y(), iy);
    m.emplace(Z(), iz);
    return f.substitute(m);
}

// ---- the recipe builders -----------------------------------------------------

using Args = std::map<std::string, std::string>;

BasisClaim r_thab(const Args& args) {
    ensure_standard_symbols();
    RatFn a = get_param(args, "a");
    RatFn c = rf(get_arg(args, "c", "c"));
    RatFn d = rf(get_arg(args, "d", "d"));
    if (c.is_zero() && d.is_zero())
        throw inadmissible_params("thab needs at least one of c and d nonzero");
    RatFn x = rf("x"), y = rf("y");
    RatFn b = c * (x + a / x) + d;  // sigma-invariant by construction
    BasisClaim cl;
    cl.id = "thab";
    cl.vars = v_xy();
    cl.gens = {y * (x * x - a) / (x * x * y * y - a * b),
               x * (y * y - b) / (x * x * y * y - a * b)};
    cl.autos = {FieldAuto(v_xy(), {a / x, b / y})};
    cl.order = 2;
    cl.tower = FieldTower({"a", "c", "d"});
    return cl;
}

BasisClaim r_lemaa(const Args& args) {
    ensure_standard_symbols();
    RatFn a = get_param(args, "a");
    BasisClaim cl;
    cl.id = "lemaa";
    cl.vars = v_xy();
    RatFn x = rf("x"), y = rf("y");
    cl.gens = {(x * y + a) / (x + y), (x * y - a) / (x - y)};
    cl.autos = {FieldAuto(v_xy(), {a / x, a / y})};
    cl.order = 2;
    cl.tower = FieldTower({"a"});
    return cl;
}

BasisClaim r_lemMas(const Args&) {
    ensure_standard_symbols();
    BasisClaim cl;
    cl.id = "lemMas";
    cl.vars = v_xyz();
    cl.gens = {rf("x+y+z"),
               rf("(x*y^2+y*z^2+z*x^2-3*x*y*z)/(x^2+y^2+z^2-x*y-y*z-z*x)"),
               rf("(x^2*y+y^2*z+z^2*x-3*x*y*z)/(x^2+y^2+z^2-x*y-y*z-z*x)")};
    cl.autos = {fa3("y", "z", "x")};
    cl.order = 3;
    // u(y,x,z) = v(x,y,z)
    cl.witnesses.push_back({sub3(cl.gens[1], rf("y"), rf("x"), rf("z")), cl.gens[2]});
    return cl;
}

BasisClaim r_lemMas2(const Args& args) {
    ensure_standard_symbols();
    RatFn b = get_param(args, "b");
    BasisClaim cl;
    cl.id = "lemMas2";
    cl.vars = v_xy();
    RatFn x = rf("x"), y = rf("y");
    RatFn den = rf("y^2*x^4-y^3*x^3+y^4*x^2") - b * rf("y*x^2") - b * rf("y^2*x") + b * b;
    RatFn ut = y * (rf("y^3*x^3") + b * rf("x^3") - b * rf("3*y*x^2") + b * b) / den;
    RatFn vt = x * (rf("x^3*y^3") + b * rf("y^3") - b * rf("3*x*y^2") + b * b) / den;
    RatFn st = (y * x * x + y * y * x + b) / (x * y);
    cl.gens = {ut, vt};
    cl.autos = {FieldAuto(v_xy(), {y, b / (x * y)})};
    cl.order = 3;
    cl.tower = FieldTower({"b"});
    // s~ = (u~^3+v~^3+b)/(u~ v~); the proof's expressibility identities
    cl.witnesses.push_back({st, (ut.pow(3) + vt.pow(3) + b) / (ut * vt)});
    cl.witnesses.push_back(
        {(y.pow(3) - st * y * y - b) / y,
         -(st * st * (ut + vt) + RatFn(9L) * b) / (st + RatFn(3L) * (ut + vt))});
    cl.witnesses.push_back(
        {x, (y * y - st * y - RatFn(2L) * ut * y + vt * y + st * ut) / (ut + vt - RatFn(2L) * y)});
    // degree witness: the cubic for y over K(u~, v~) proves [K(x,y):K(u~,v~)] <= 3
    BasisClaim::DegreeWitness dw;
    dw.primitive = Y();
    // y^3 - s y^2 + ((s^2(u+v)+9b)/(s+3(u+v))) y - b = 0 with s = (v1^3+v2^3+b)/(v1 v2)
    std::string sstr = "((v1^3+v2^3+" + get_arg(args, "b", "b") + ")/(v1*v2))";
    std::string bstr = get_arg(args, "b", "b");
    dw.minpoly = {"-(" + bstr + ")",
                  "((" + sstr + ")^2*(v1+v2)+9*(" + bstr + "))/((" + sstr + ")+3*(v1+v2))",
                  "-(" + sstr + ")", "1"};
    dw.older_coords[X()] =
        "(y^2-(" + sstr + ")*y-2*v1*y+v2*y+(" + sstr + ")*v1)/(v1+v2-2*y)";
    cl.degree_witness = dw;
    return cl;
}

BasisClaim r_lemV4(const Args&) {
    ensure_standard_symbols();
    BasisClaim cl;
    cl.id = "lemV4";
    cl.vars = {X(), Y(), Z(), X4()};
    cl.gens = {rf("x+y+z+x4"), rf("(x+y-z-x4)/(x*y-z*x4)"), rf("(x-y-z+x4)/(x*x4-y*z)"),
               rf("(x-y+z-x4)/(x*z-y*x4)")};
    cl.autos = {fa({"y", "x", "x4", "z"}, cl.vars), fa({"z", "x4", "x", "y"}, cl.vars)};
    cl.order = 4;
    // the proof's elementary-symmetric identities, with u_i = 1/v_i
    RatFn u0 = cl.gens[0];
    RatFn u1 = RatFn(1L) / cl.gens[1], u2 = RatFn(1L) / cl.gens[2], u3 = RatFn(1L) / cl.gens[3];
    RatFn s1 = u1 + u2 + u3, s2 = u1 * u2 + u2 * u3 + u1 * u3, s3 = u1 * u2 * u3;
    RatFn e1 = rf("x+y+z+x4");
    RatFn e2 = rf("x*y+x*z+x*x4+y*z+y*x4+z*x4");
    RatFn e3 = rf("x*y*z+x*y*x4+x*z*x4+y*z*x4");
    RatFn e4 = rf("x*y*z*x4");
    cl.witnesses.push_back({e1, u0});
    cl.witnesses.push_back({e2, s1 * u0 - RatFn(2L) * s2});
    cl.witnesses.push_back({e3, s2 * u0 - RatFn(8L) * s3});
    cl.witnesses.push_back({e4, s2 * s2 - RatFn(4L) * s1 * s3 + s3 * u0});
    return cl;
}

BasisClaim r_lemV42(const Args& args) {
    ensure_standard_symbols();
    RatFn c = get_param(args, "c");
    BasisClaim cl;
    cl.id = "lemV42";
    cl.vars = v_xyz();
    RatFn x = rf("x"), y = rf("y"), z = rf("z");
    RatFn w = c / (x * y * z);
    RatFn v1 = (c - x * y * z * (x + y - z)) / (z * (c - x * x * y * y));
    RatFn v2 = (c - x * y * z * (-x + y + z)) / (x * (c - y * y * z * z));
    RatFn v3 = (c - x * y * z * (x - y + z)) / (y * (c - x * x * z * z));
    cl.gens = {v1, v2, v3};
    std::string cs = get_arg(args, "c", "c");
    cl.autos = {fa3("y", "x", ("(" + cs + ")/(x*y*z)").c_str()),
                fa3("z", ("(" + cs + ")/(x*y*z)").c_str(), "x")};
    cl.order = 4;
    cl.tower = FieldTower({"c"});
    // both displayed forms agree
    cl.witnesses.push_back({v1, (x + y - z - w) / (x * y - z * w)});
    cl.witnesses.push_back({v2, (x - y - z + w) / (x * w - y * z)});
    cl.witnesses.push_back({v3, (x - y + z - w) / (x * z - y * w)});
    // v0 elimination identity
    RatFn v0 = x + y + z + w;
    cl.witnesses.push_back(
        {v0, (RatFn(2L) * (v1 * v2 + v2 * v3 + v1 * v3) - (v1 * v1 + v2 * v2 + v3 * v3) +
              c * (v1 * v2 * v3).pow(2)) /
                 (v1 * v2 * v3)});
    return cl;
}

BasisClaim r_lemc2t(const Args& args) {
    ensure_standard_symbols();
    RatFn c = get_param(args, "c");
    BasisClaim cl;
    cl.id = "lemc2t";
    cl.vars = v_xyz();
    RatFn x = rf("x"), y = rf("y"), z = rf("z");
    cl.gens = {x * y / (x + y), (x * y * z + c / z) / (x + y), (x * y * z - c / z) / (x - y)};
    std::string cs = get_arg(args, "c", "c");
    cl.autos = {fa3("y", "x", ("(" + cs + ")/(x*y*z)").c_str())};
    cl.order = 2;
    cl.tower = FieldTower({"c"});
    // proof: with X=c/(yz), Y=xz, Z=1/x, the lemaa generators carry the t's
    // up to units (the printed t1' = 1/t2, t2' = 1/t3 hold up to the factors
    // c and -c; Z + XYZ/c = 1/t1 holds on the nose)
    RatFn Xc = c / (y * z), Yc = x * z, Zc = RatFn(1L) / x;
    cl.witnesses.push_back({(Xc * Yc + c) / (Xc + Yc), c / cl.gens[1]});
    cl.witnesses.push_back({(Xc * Yc - c) / (Xc - Yc), -c / cl.gens[2]});
    cl.witnesses.push_back({Zc + Xc * Yc * Zc / c, RatFn(1L) / cl.gens[0]});
    return cl;
}

BasisClaim r_thaaa(const Args& args) {
    ensure_standard_symbols();
    RatFn a = get_param(args, "a");
    long n = std::stol(get_arg(args, "n", "3"));
    BasisClaim cl;
    cl.id = "thaaa.n" + std::to_string(n);
    cl.tower = FieldTower({"a"});
    cl.order = 2;
    std::string as = get_arg(args, "a", "a");
    if (n == 3) {
        cl.vars = v_xyz();
        RatFn x = rf("x"), y = rf("y"), z = rf("z");
        cl.gens = {(x * y + a) / (x + y), (y * z + a) / (y + z), (x * z + a) / (x + z)};
        cl.autos = {fa3(("(" + as + ")/x").c_str(), ("(" + as + ")/y").c_str(),
                        ("(" + as + ")/z").c_str())};
    } else if (n == 2) {
        cl.vars = v_xy();
        RatFn x = rf("x"), y = rf("y");
        cl.gens = {(x * y + a) / (x + y), (x * y - a) / (x - y)};
        cl.autos = {FieldAuto(v_xy(), {a / x, a / y})};
    } else if (n == 4) {
        cl.vars = {X(), Y(), Z(), X4()};
        RatFn x = rf("x"), y = rf("y"), z = rf("z"), w = rf("x4");
        cl.gens = {(x * y + a) / (x + y), (y * z + a) / (y + z), (z * w + a) / (z + w),
                   (w * x - a) / (w - x)};
        cl.autos = {FieldAuto(cl.vars, {a / x, a / y, a / z, a / w})};
    } else {
        throw inadmissible_params("thaaa: n must be 2, 3 or 4");
    }
    return cl;
}

BasisClaim r_th231(const Args& args) {
    ensure_standard_symbols();
    RatFn a = get_param(args, "a");
    RatFn b = get_param(args, "b");
    RatFn c = get_param(args, "c");
    long e1 = get_sign(args, "eps1"), e2 = get_sign(args, "eps2");
    BasisClaim cl;
    cl.id = "th231.e1" + std::to_string(e1) + ".e2" + std::to_string(e2);
    cl.vars = v_xyz();
    RatFn x = rf("x"), y = rf("y"), z = rf("z");
    RatFn t1 = y * (x * x - a) / (x * x * y * y - a * b);
    RatFn t2 = x * (y * y - b) / (x * x * y * y - a * b);
    RatFn zf = z - c / z;
    RatFn u1 = (e2 == 1) ? t1 : t1 * zf;
    RatFn u2 = (e1 == 1) ? t2 : t2 * zf;
    RatFn u3 = z + c / z;
    cl.gens = {u1, u2, u3};
    cl.autos = {FieldAuto(v_xyz(), {sgn(e1) * x, sgn(e2) * y, c / z}),
                FieldAuto(v_xyz(), {a / x, b / y, z})};
    cl.order = 4;
    cl.tower = FieldTower({"a", "b", "c"});
    return cl;
}

BasisClaim r_thmex(const Args& args) {
    ensure_standard_symbols();
    RatFn a = get_param(args, "a");
    BasisClaim cl;
    cl.id = "thmex";
    cl.vars = v_xyz();
    RatFn x = rf("x"), y = rf("y"), z = rf("z");
    cl.gens = {(a * (-x + y + z) - x * y * z) / (a - x * y - x * z + y * z),
               (a * (x - y + z) - x * y * z) / (a - x * y + x * z - y * z),
               (a * (x + y - z) - x * y * z) / (a + x * y - x * z - y * z)};
    cl.autos = {FieldAuto(v_xyz(), {a / x, a / y, z}), FieldAuto(v_xyz(), {a / x, y, a / z})};
    cl.order = 4;
    cl.tower = FieldTower({"a"});
    return cl;
}

BasisClaim r_thHK1(const Args& args) {
    ensure_standard_symbols();
    RatFn a = get_param(args, "a");
    BasisClaim cl;
    cl.id = "thHK1";
    cl.vars = v_xyz();
    RatFn s3 = rf("x*y*z");
    RatFn u = rf("(x*y^2+y*z^2+z*x^2-3*x*y*z)/(x^2+y^2+z^2-x*y-y*z-z*x)");
    RatFn v = rf("(x^2*y+y^2*z+z^2*x-3*x*y*z)/(x^2+y^2+z^2-x*y-y*z-z*x)");
    RatFn U = u * u - u * v + v * v;
    cl.gens = {U * (s3 * s3 - a.pow(3)) / (u * (s3 * s3 * U - a.pow(4))),
               s3 * (U - a) / (s3 * s3 * U - a.pow(4)), v / u};
    RatFn x = rf("x"), y = rf("y"), z = rf("z");
    cl.autos = {fa3("y", "z", "x"), FieldAuto(v_xyz(), {a / y, a / x, a / z})};
    cl.order = 6;
    cl.tower = FieldTower({"a"});
    return cl;
}

// Theorem thInv: tau(x) = -x, tau(y) = f(x^2) N(g(x)) / y.
// Shared construction: y' = y/g(x), X = (y'+f/y')/2, Y = (y'-f/y')/(2x), Z = x^2.
struct InvParts {
    RatFn Xc, Yc, Zc, fZ, action_y;
};
InvParts thinv_parts(const RatFn& f_of_Z, const RatFn& g) {
    RatFn x = rf("x"), y = rf("y");
    std::map<Sym, RatFn> zmap;
    zmap.emplace(Z(), x * x);
    RatFn fx2 = f_of_Z.substitute(zmap);
    std::map<Sym, RatFn> neg;
    neg.emplace(X(), -x);
    RatFn Ng = g * g.substitute(neg);
    RatFn yp = y / g;
    InvParts p;
    p.fZ = f_of_Z;
    p.Xc = (yp + fx2 / yp) / RatFn(2L);
    p.Yc = (yp - fx2 / yp) / (RatFn(2L) * x);
    p.Zc = x * x;
    p.action_y = fx2 * Ng / y;
    return p;
}

BasisClaim r_thInv_I(const Args& args) {
    ensure_standard_symbols();
    RatFn a = rf(get_arg(args, "a", "a"));
    RatFn b = rf(get_arg(args, "b", "b"));
    RatFn g = rf(get_arg(args, "g", "1"));
    if (a.is_zero() && b.is_zero()) throw inadmissible_params("thInv.I: f = 0");
    RatFn fZ = a * rf("z") + b;  // use z as the Z placeholder
    std::map<Sym, RatFn> asZ;
    asZ.emplace(Z(), rf("z"));
    InvParts p = thinv_parts(fZ, g);
    BasisClaim cl;
    cl.id = "thInv.I";
    cl.vars = v_xy();
    cl.gens = {p.Xc, p.Yc};
    cl.autos = {FieldAuto(v_xy(), {rf("-x"), p.action_y})};
    cl.order = 2;
    cl.tower = FieldTower({"a", "b"});
    // X^2 - Z Y^2 = f(Z) and Z = (X^2 - b)/(Y^2 + a)
    std::map<Sym, RatFn> fat;
    fat.emplace(Z(), p.Zc);
    cl.witnesses.push_back({p.Xc * p.Xc - p.Zc * p.Yc * p.Yc, fZ.substitute(fat)});
    cl.witnesses.push_back({p.Zc, (p.Xc * p.Xc - b) / (p.Yc * p.Yc + a)});
    return cl;
}

BasisClaim r_thInv_IIi(const Args& args) {
    ensure_standard_symbols();
    RatFn d = get_param(args, "d");
    RatFn b = rf(get_arg(args, "b", "b"));
    RatFn c = rf(get_arg(args, "c", "c"));
    RatFn g = rf(get_arg(args, "g", "1"));
    RatFn fZ = d * d * rf("z^2") + b * rf("z") + c;
    InvParts p = thinv_parts(fZ, g);
    BasisClaim cl;
    cl.id = "thInv.IIi";
    cl.vars = v_xy();
    cl.gens = {p.Xc + d * p.Zc, p.Yc};
    cl.autos = {FieldAuto(v_xy(), {rf("-x"), p.action_y})};
    cl.order = 2;
    cl.tower = FieldTower({"d", "b", "c"});
    std::map<Sym, RatFn> fat;
    fat.emplace(Z(), p.Zc);
    cl.witnesses.push_back({p.Xc * p.Xc - p.Zc * p.Yc * p.Yc, fZ.substitute(fat)});
    return cl;
}

BasisClaim r_thInv_IIii(const Args& args) {
    ensure_standard_symbols();
    RatFn a = rf(get_arg(args, "a", "a"));
    RatFn b = rf(get_arg(args, "b", "b"));
    RatFn e = get_param(args, "e");
    RatFn g = rf(get_arg(args, "g", "1"));
    if (a.is_zero()) throw inadmissible_params("thInv.IIii: a must be nonzero");
    RatFn x = rf("x"), y = rf("y");
    RatFn fZ = a * rf("z^2") + b * rf("z") + e * e;
    std::map<Sym, RatFn> zm;
    zm.emplace(Z(), x * x);
    RatFn fx2 = fZ.substitute(zm);
    std::map<Sym, RatFn> neg;
    neg.emplace(X(), -x);
    RatFn Ng = g * g.substitute(neg);
    // p := 1/x, q := y'/x^2; tau: p -> -p, q -> F(p^2)/q with F = e^2 P^2 + b P + a
    RatFn pp = RatFn(1L) / x;
    RatFn qq = (y / g) / (x * x);
    RatFn Fp2 = e * e * pp.pow(4) + b * pp * pp + a;
    RatFn Xc = (qq + Fp2 / qq) / RatFn(2L);
    RatFn Yc = (qq - Fp2 / qq) / (RatFn(2L) * pp);
    BasisClaim cl;
    cl.id = "thInv.IIii";
    cl.vars = v_xy();
    cl.gens = {Xc + e * pp * pp, Yc};
    cl.autos = {FieldAuto(v_xy(), {-x, fx2 * Ng / y})};
    cl.order = 2;
    cl.tower = FieldTower({"a", "b", "e"});
    cl.witnesses.push_back({Xc * Xc - pp * pp * Yc * Yc, Fp2});
    return cl;
}

BasisClaim r_lem522(const Args& args) {
    ensure_standard_symbols();
    RatFn f = get_param(args, "f");
    BasisClaim cl;
    cl.id = "lem522";
    cl.vars = v_xyz();
    RatFn x = rf("x"), y = rf("y"), z = rf("z");
    RatFn r1 = (z * z + f) / z;
    RatFn r2 = x * y / (RatFn(3L) * x * x - y * y + RatFn(1L));
    RatFn r3 = (RatFn(3L) * x * x + y * y + RatFn(2L) * y + RatFn(1L)) * (z * z - f) /
               ((RatFn(3L) * x * x - y * y + RatFn(1L)) * z);
    cl.gens = {r1, r2, r3};
    std::string fs = get_arg(args, "f", "f");
    cl.autos = {fa3("-x", "(3*x^2+1)/y", ("(" + fs + ")/z").c_str())};
    cl.order = 2;
    cl.tower = FieldTower({"f"});
    // proof identities
    RatFn w1 = z + f / z;
    RatFn w2 = x / (z - f / z);
    RatFn w3 = y + (RatFn(3L) * x * x + RatFn(1L)) / y;
    RatFn w4 = x / (y - (RatFn(3L) * x * x + RatFn(1L)) / y);
    RatFn w2p = w4 * (w3 + RatFn(2L)) / w2;
    RatFn w3p = w4 * (w3 - RatFn(2L)) / w2;
    cl.witnesses.push_back(
        {w2p * w3p, (w1 * w1 - RatFn(4L) * f) * (RatFn(12L) * w4 * w4 + RatFn(1L))});
    cl.witnesses.push_back({r1, w1});
    cl.witnesses.push_back({r2, -w4});
    cl.witnesses.push_back({r3, -w2p});
    return cl;
}

BasisClaim r_lemqq(const Args& args) {
    ensure_standard_symbols();
    long e1 = get_sign(args, "eps1");
    BasisClaim cl;
    cl.id = "lemqq.e1" + std::to_string(e1);
    cl.vars = v_xyz();
    RatFn x = rf("x"), y = rf("y"), z = rf("z");
    RatFn q1 = (RatFn(3L) * x * x + y * y + RatFn(1L)) / y;
    RatFn q2 = -(RatFn(3L) * x * x - y * y + RatFn(1L)) / (x * y);
    RatFn q3 = (e1 == 1) ? z : z / x;
    cl.gens = {q1, q2, q3};
    cl.autos = {FieldAuto(v_xyz(), {-x, (RatFn(3L) * x * x + RatFn(1L)) / y, sgn(e1) * z})};
    cl.order = 2;
    // proof identity: u1^2 q2^2 = q1^2 - 4(3 u1^2 + 1)
    cl.witnesses.push_back(
        {x * x * q2 * q2, q1 * q1 - RatFn(4L) * (RatFn(3L) * x * x + RatFn(1L))});
    return cl;
}

BasisClaim r_lemtlm(const Args& args) {
    ensure_standard_symbols();
    RatFn g = get_param(args, "g");
    BasisClaim cl;
    cl.id = "lemtlm";
    cl.vars = v_xyz();
    RatFn x = rf("x"), y = rf("y"), z = rf("z");
    RatFn ix = (-x + y + z) / (g * y * z);
    RatFn iy = (x - y + z) / (g * x * z);
    RatFn iz = (x + y - z) / (g * x * y);
    RatFn t1 = x + ix, t2 = y + iy, t3 = z + iz;
    cl.gens = {t1, t2, t3};
    cl.autos = {FieldAuto(v_xyz(), {ix, iy, iz})};
    cl.order = 2;
    cl.tower = FieldTower({"g"});
    // the closed form of t1 with w eliminated
    cl.witnesses.push_back({t1, (-x + y + z + g * x * y * z) / (g * y * z)});
    // Corrected proof identities.  The printed quadratic reads
    // g(g t1 t2 - 4)(v3^2 - t3 v3) - 4 g t3 (t1 + t2 - t3) = 0, which fails
    // identically; solving the defining equations gives
    //   g(g t1 t2 - 4)(v3^2 - t3 v3) + g t3 (t1 + t2 - t3) - 4 = 0
    // and with it the simpler expressions for v1, v2 below (the printed
    // v1, v2 expressions fail as well).
    cl.witnesses.push_back(
        {g * (g * t1 * t2 - RatFn(4L)) * (z * z - t3 * z) + g * t3 * (t1 + t2 - t3) - RatFn(4L),
         RatFn(0L)});
    RatFn denoms = g * (t3 - RatFn(2L) * z);
    cl.witnesses.push_back({x, (RatFn(2L) - g * t1 * z) / denoms});
    cl.witnesses.push_back({y, (RatFn(2L) - g * t2 * z) / denoms});
    // degree witness: v3 satisfies the corrected quadratic over K(t1,t2,t3)
    std::string gs = "(" + get_arg(args, "g", "g") + ")";
    BasisClaim::DegreeWitness dw;
    dw.primitive = Z();
    dw.minpoly = {gs + "*v3*(v1+v2-v3)-4",
                  "-" + gs + "*(" + gs + "*v1*v2-4)*v3",
                  gs + "*(" + gs + "*v1*v2-4)"};
    dw.older_coords[X()] = "(2-" + gs + "*v1*z)/(" + gs + "*(v3-2*z))";
    dw.older_coords[Y()] = "(2-" + gs + "*v2*z)/(" + gs + "*(v3-2*z))";
    cl.degree_witness = dw;
    return cl;
}

BasisClaim r_lemuc2(const Args& args) {
    ensure_standard_symbols();
    RatFn a = get_param(args, "a");
    BasisClaim cl;
    cl.id = "lemuc2";
    cl.vars = v_xyz();
    RatFn x = rf("x"), y = rf("y"), z = rf("z");
    RatFn den = x * x * (RatFn(1L) - a * a * y * y * z * z) - (y - z) * (y - z);
    RatFn t1 = (y - z) / x;
    RatFn t2 = a * x * z * (x + y - z - a * x * y * y) / den;
    RatFn t3 = a * x * y * (x - y + z - a * x * z * z) / den;
    cl.gens = {t1, t2, t3};
    cl.autos = {FieldAuto(
        v_xyz(), {(-x + y + z) / (a * y * z), (x + y - z) / (a * x * y), (x - y + z) / (a * x * z)})};
    cl.order = 2;
    cl.tower = FieldTower({"a"});
    // proof: on K(t1, v2, v3) the action fixes t1 and inverts v2, v3 with
    // A = (1+t1)/a, B = (1-t1)/a; the displayed generators are the thab pair
    RatFn A = (RatFn(1L) + t1) / a, B = (RatFn(1L) - t1) / a;
    cl.witnesses.push_back({cl.autos[0].apply(t1), t1});
    cl.witnesses.push_back({cl.autos[0].apply(y), A / y});
    cl.witnesses.push_back({cl.autos[0].apply(z), B / z});
    cl.witnesses.push_back({t2, z * (y * y - A) / (y * y * z * z - A * B)});
    cl.witnesses.push_back({t3, y * (z * z - B) / (y * y * z * z - A * B)});
    return cl;
}

BasisClaim r_lem72pp(const Args&) {
    ensure_standard_symbols();
    BasisClaim cl;
    cl.id = "lem72pp";
    cl.vars = v_xyz();
    RatFn x = rf("x"), y = rf("y"), z = rf("z");
    RatFn u1 = (x + y) * (z + RatFn(1L)) * (z - x * y) / ((x - y * z) * (y - x * z));
    RatFn u2 = (y + z) * (x + RatFn(1L)) * (x - y * z) / ((y - x * z) * (z - x * y));
    RatFn u3 = (x + z) * (y + RatFn(1L)) * (y - x * z) / ((x - y * z) * (z - x * y));
    cl.gens = {u1, u2, u3};
    cl.autos = {fa3("y/z", "x/z", "1/z"), fa3("z/y", "1/y", "x/y")};
    cl.order = 4;
    // construction witnesses: u1 = (v1+v2)/(v3-2) with v1 = (x^2-y^2-z^2+1)/(x-yz)
    RatFn v1 = (x * x - y * y - z * z + RatFn(1L)) / (x - y * z);
    RatFn v2 = (-x * x + y * y - z * z + RatFn(1L)) / (y - x * z);
    RatFn v3 = (-x * x - y * y + z * z + RatFn(1L)) / (z - x * y);
    cl.witnesses.push_back({u1, (v1 + v2) / (v3 - RatFn(2L))});
    cl.witnesses.push_back({u2, (v2 + v3) / (v1 - RatFn(2L))});
    cl.witnesses.push_back({u3, (v1 + v3) / (v2 - RatFn(2L))});
    return cl;
}

BasisClaim r_lemp1(const Args& args) {
    ensure_standard_symbols();
    RatFn a = get_param(args, "a");
    long pm = get_sign(args, "pm");
    BasisClaim cl;
    cl.id = "lemp1." + std::string(pm == 1 ? "plus" : "minus");
    cl.vars = v_xyz();
    RatFn x = rf("x"), y = rf("y"), z = rf("z");
    RatFn p1, p2, p3;
    if (pm == 1) {
        p1 = (x * x - a) * (y * y + a) / (x * (y * y - a));
        p2 = (y * y - a) * (z * z + a) / (y * (z * z - a));
        p3 = (z * z - a) * (x * x + a) / (z * (x * x - a));
    } else {
        p1 = (x * x - a) * (y * y + a) / (y * (x * x + a));
        p2 = (y * y - a) * (z * z + a) / (z * (y * y + a));
        p3 = (z * z - a) * (x * x + a) / (x * (z * z + a));
    }
    cl.gens = {p1, p2, p3};
    RatFn s = sgn(pm);
    cl.autos = {FieldAuto(v_xyz(), {a / x, -a / y, -z}),
                FieldAuto(v_xyz(), {-a / x, -y, a / z}),
                FieldAuto(v_xyz(), {s * a / x, s * a / y, s * a / z})};
    cl.order = 8;
    cl.tower = FieldTower({"a"});
    // p_i^2 in terms of t_i = (x - a/x)^2 etc.
    RatFn t1 = (x - a / x).pow(2), t2 = (y - a / y).pow(2), t3 = (z - a / z).pow(2);
    if (pm == 1) {
        cl.witnesses.push_back({p1 * p1, t1 * (t2 + RatFn(4L) * a) / t2});
        cl.witnesses.push_back({p2 * p2, t2 * (t3 + RatFn(4L) * a) / t3});
        cl.witnesses.push_back({p3 * p3, t3 * (t1 + RatFn(4L) * a) / t1});
    }
    return cl;
}

BasisClaim r_lemv0(const Args& args) {
    ensure_standard_symbols();
    RatFn a = get_param(args, "a");
    long e1 = get_sign(args, "eps1");
    BasisClaim cl;
    cl.id = "lemv0.e1" + std::to_string(e1);
    cl.vars = v_xyz();
    RatFn x = rf("x"), y = rf("y"), z = rf("z");
    RatFn u1;
    if (e1 == 1) {
        u1 = ((a * (-x + y + z) - x * y * z) * (a * (x - y + z) - x * y * z)) /
             ((a - x * y - x * z + y * z) * (a - x * y + x * z - y * z));
    } else {
        u1 = y * (x * x + a) / (x * (y * y - a));
    }
    RatFn u2 = sub3(u1, y, z, x);  // b3(u1)
    RatFn u3 = sub3(u2, y, z, x);
    cl.gens = {u1, u2, u3};
    RatFn s = sgn(e1);
    cl.autos = {FieldAuto(v_xyz(), {a / x, s * a / y, s * z}),
                FieldAuto(v_xyz(), {s * a / x, s * y, a / z}),
                FieldAuto(v_xyz(), {-x, -y, -z})};
    cl.order = 8;
    cl.tower = FieldTower({"a"});
    return cl;
}

BasisClaim r_lemv1(const Args& args) {
    ensure_standard_symbols();
    RatFn a = get_param(args, "a");
    long e = get_sign(args, "eps");
    BasisClaim cl;
    cl.id = "lemv1.e" + std::to_string(e);
    cl.vars = v_xyz();
    RatFn x = rf("x"), y = rf("y"), z = rf("z");
    RatFn u1;
    if (e == 1) {
        u1 = ((a * (x * y + x * z - y * z) - x * y * z) * (a * (x * y - x * z + y * z) - x * y * z)) /
             (x * y * z * (a + x - y - z) * (a - x + y - z));
    } else {
        u1 = (y * z + a * x) / (x * z - a * y);
    }
    RatFn u2 = sub3(u1, y, z, x);
    RatFn u3 = sub3(u2, y, z, x);
    cl.gens = {u1, u2, u3};
    RatFn s = sgn(e);
    cl.autos = {FieldAuto(v_xyz(), {a * y / z, s * a * x / z, s * a * a / z}),
                FieldAuto(v_xyz(), {s * a * z / y, s * a * a / y, a * x / y})};
    cl.order = 4;
    cl.tower = FieldTower({"a"});
    return cl;
}

// ---- registry -----------------------------------------------------------------

using Builder = BasisClaim (*)(const Args&);

const std::vector<std::tuple<std::string, std::string, std::vector<std::string>, Builder>>&
builders() {
    static const std::vector<std::tuple<std::string, std::string, std::vector<std::string>, Builder>>
        v = {
            {"thab", "u1,u2 for -I2: x->a/x, y->b/y with b=c(x+a/x)+d", {"a", "c", "d"}, r_thab},
            {"lemaa", "t1,t2 for -I2: x->a/x, y->a/y", {"a"}, r_lemaa},
            {"lemMas", "s1,u,v for the cyclic shift", {}, r_lemMas},
            {"lemMas2", "u~(b),v~(b) for x->y->b/(xy)", {"b"}, r_lemMas2},
            {"lemV4", "v0..v3 for the Klein four-group on 4 variables", {}, r_lemV4},
            {"lemV42", "v1,v2,v3 for ta3,la3 with w=c/(xyz)", {"c"}, r_lemV42},
            {"lemc2t", "t1,t2,t3 for ta3 alone", {"c"}, r_lemc2t},
            {"thaaa", "k1..kn for -I_n: x_i -> a/x_i (n=2,3,4)", {"a", "n"}, r_thaaa},
            {"th231", "u1,u2,u3 for <-ta1,ta1> with eps3=1", {"a", "b", "c", "eps1", "eps2"},
             r_th231},
            {"thmex", "v1,v2,v3 for ta1,la1 (same a)", {"a"}, r_thmex},
            {"thHK1", "the twisted S3 basis", {"a"}, r_thHK1},
            {"thInv.I", "X,Y for f(Z)=aZ+b", {"a", "b", "g"}, r_thInv_I},
            {"thInv.IIi", "X+dZ,Y for f(Z)=d^2 Z^2+bZ+c", {"d", "b", "c", "g"}, r_thInv_IIi},
            {"thInv.IIii", "case II-ii via p=1/x", {"a", "b", "e", "g"}, r_thInv_IIii},
            {"lem522", "r1,r2,r3 on the 5A u-coordinates", {"f"}, r_lem522},
            {"lemqq", "q1,q2,q3 on the 5A u-coordinates", {"eps1"}, r_lemqq},
            {"lemtlm", "t_i = v_i + (-I3)(v_i)", {"g"}, r_lemtlm},
            {"lemuc2", "t1,t2,t3 for B4 on the V42 coordinates", {"a"}, r_lemuc2},
            {"lem72pp", "u1,u2,u3 for ta2,la2 purely monomial", {}, r_lem72pp},
            {"lemp1", "p1,p2,p3 (choose pm=1|-1)", {"a", "pm"}, r_lemp1},
            {"lemv0", "u1,u2,u3 for <ta1,la1,rho>", {"a", "eps1"}, r_lemv0},
            {"lemv1", "u1,u2,u3 for <ta2,la2>", {"a", "eps"}, r_lemv1},
        };
    return v;
}

}  // namespace

BasisClaim build_basis(const std::string& recipe_id, const Args& args) {
    for (auto& [id, summary, argnames, fn] : builders())
        if (id == recipe_id) return fn(args);
    throw unknown_recipe(recipe_id);
}

const std::vector<RecipeInfo>& list_recipes() {
    static const std::vector<RecipeInfo> v = [] {
        std::vector<RecipeInfo> out;
        for (auto& [id, summary, argnames, fn] : builders())
            out.push_back({id, summary, argnames});
        return out;
    }();
    return v;
}

std::vector<BasisClaim> all_recipe_instances() {
    ensure_standard_symbols();
    std::vector<BasisClaim> out;
    auto add = [&](const std::string& id, const Args& args, const std::string& tag) {
        BasisClaim c = build_basis(id, args);
        c.id += tag;
        out.push_back(std::move(c));
    };
    add("thab", {}, "");
    add("thab", {{"c", "0"}}, ".c0");
    add("thab", {{"d", "0"}}, ".d0");
    add("thab", {{"a", "5"}, {"c", "2"}, {"d", "3"}}, ".num");
    add("lemaa", {}, "");
    add("lemaa", {{"a", "7"}}, ".num");
    add("lemMas", {}, "");
    add("lemMas2", {}, "");
    add("lemMas2", {{"b", "5"}}, ".num");
    add("lemV4", {}, "");
    add("lemV42", {}, "");
    add("lemV42", {{"c", "3"}}, ".num");
    add("lemc2t", {}, "");
    add("lemc2t", {{"c", "2"}}, ".num");
    for (const char* n : {"2", "3", "4"}) add("thaaa", {{"n", n}}, "");
    add("thaaa", {{"n", "3"}, {"a", "3"}}, ".num");
    for (const char* e1 : {"1", "-1"})
        for (const char* e2 : {"1", "-1"})
            add("th231", {{"eps1", e1}, {"eps2", e2}}, "");
    add("thmex", {}, "");
    add("thmex", {{"a", "2"}}, ".num");
    add("thHK1", {}, "");
    add("thHK1", {{"a", "2"}}, ".num");
    add("thInv.I", {}, "");
    add("thInv.I", {{"a", "0"}, {"b", "b"}}, ".const");
    add("thInv.I", {{"g", "x^2+1"}}, ".g");
    add("thInv.IIi", {}, "");
    add("thInv.IIi", {{"g", "x+2"}}, ".g");
    add("thInv.IIii", {}, "");
    add("lem522", {}, "");
    add("lem522", {{"f", "3"}}, ".num");
    for (const char* e1 : {"1", "-1"}) add("lemqq", {{"eps1", e1}}, "");
    add("lemtlm", {}, "");
    add("lemtlm", {{"g", "2"}}, ".num");
    add("lemuc2", {}, "");
    add("lemuc2", {{"a", "3"}}, ".num");
    add("lem72pp", {}, "");
    for (const char* pm : {"1", "-1"}) add("lemp1", {{"pm", pm}}, "");
    add("lemp1", {{"pm", "1"}, {"a", "2"}}, ".num");
    for (const char* e : {"1", "-1"}) add("lemv0", {{"eps1", e}}, "");
    for (const char* e : {"1", "-1"}) add("lemv1", {{"eps", e}}, "");
    add("lemv0", {{"eps1", "-1"}, {"a", "3"}}, ".num");
    add("lemv1", {{"eps", "-1"}, {"a", "3"}}, ".num");
    return out;
}

RatFn theta_trace(const std::vector<FieldAuto>& gens, const RatFn& seed, size_t cap) {
    auto closure = field_auto_closure(gens, cap);
    RatFn acc(Q(0));
    for (auto& g : closure) acc = acc + g.apply(seed);
    if (acc.is_zero()) throw zero_trace();
    return acc;
}

Resolvent lagrange_resolvent(const RatFn& b, const FieldTower& tower) {
    ensure_standard_symbols();
    if (!SymbolTable::instance().known("w")) throw missing_omega();
    Sym w = SymbolTable::instance().lookup("w");
    if (!tower.has_adjunct(w)) throw missing_omega();
    RatFn om = RatFn::sym(w);
    RatFn x = rf("x"), y = rf("y"), z = rf("z");
    Resolvent r;
    r.theta = x + om * y + om * om * b / (x * y);
    r.a3 = FieldAuto(v_xyz(), {y, b / (x * y), om * z});
    FieldAuto mal(v_xyz(), {RatFn(1L) / y, RatFn(1L) / x, rf("l/z")});
    FieldAuto mbe(v_xyz(), {y, x, rf("r/z")});
    FieldAuto ta1(v_xyz(), {RatFn(1L) / x, RatFn(1L) / y, rf("z")});
    r.F = r.theta * r.theta / mal.apply(r.theta);
    r.Fp = r.theta * r.theta / mbe.apply(r.theta);
    RatFn tsum = r.theta + ta1.apply(r.theta);
    r.Fpp = tsum * tsum / mbe.apply(tsum);
    return r;
}

}  // namespace mono3

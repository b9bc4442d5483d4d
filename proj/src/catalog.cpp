#include "mono3/catalog.hpp"

#include <cctype>
#include <sstream>

namespace mono3 {

std::string status_str(RationalityStatus s) {
    switch (s) {
        case RationalityStatus::Rational: return "rational";
        case RationalityStatus::NegativeConditional: return "negative-conditional";
        case RationalityStatus::OpenConditional: return "open-conditional";
    }
    return "?";
}
RationalityStatus status_from_str(const std::string& s) {
    if (s == "rational") return RationalityStatus::Rational;
    if (s == "negative-conditional") return RationalityStatus::NegativeConditional;
    if (s == "open-conditional") return RationalityStatus::OpenConditional;
    throw std::runtime_error("bad status: " + s);
}

const std::map<std::string, IntMatrix3>& named_matrices() {
    static const std::map<std::string, IntMatrix3> tbl = [] {
        std::map<std::string, IntMatrix3> t;
        t["I"] = IntMatrix3::identity();
        t["ta1"] = IntMatrix3::of({-1, 0, 0, 0, -1, 0, 0, 0, 1});
        t["ta2"] = IntMatrix3::of({0, 1, 0, 1, 0, 0, -1, -1, -1});
        t["ta3"] = IntMatrix3::of({0, 1, -1, 1, 0, -1, 0, 0, -1});
        t["la1"] = IntMatrix3::of({-1, 0, 0, 0, 1, 0, 0, 0, -1});
        t["la2"] = IntMatrix3::of({0, 0, 1, -1, -1, -1, 1, 0, 0});
        t["la3"] = IntMatrix3::of({0, -1, 1, 0, -1, 0, 1, -1, 0});
        t["al"] = IntMatrix3::of({0, 1, 0, 1, 0, 0, 0, 0, 1});
        t["be"] = IntMatrix3::of({0, -1, 0, -1, 0, 0, 0, 0, 1});
        t["be1"] = t["be"];
        t["be2"] = IntMatrix3::of({1, 0, 0, 0, 1, 0, -1, -1, -1});
        t["be3"] = IntMatrix3::of({1, 0, -1, 0, 1, -1, 0, 0, -1});
        t["a3"] = IntMatrix3::of({0, -1, 0, 1, -1, 0, 0, 0, 1});
        t["b3"] = IntMatrix3::of({0, 0, 1, 1, 0, 0, 0, 1, 0});
        t["A4"] = IntMatrix3::of({0, -1, 0, 1, 0, 0, 0, 0, 1});
        t["B4"] = IntMatrix3::of({0, 1, 0, 0, 1, -1, -1, 1, 0});
        t["R1"] = IntMatrix3::of({0, 1, 1, 1, 0, -1, -1, 0, 0});
        t["R2"] = IntMatrix3::of({0, 1, 0, 0, 1, -1, -1, 1, -1});
        t["P"] = IntMatrix3::of({0, 1, 1, 1, 0, 1, 1, 1, 0});
        t["phi2"] = IntMatrix3::of({-1, 0, 1, 0, -1, -1, 0, 0, 1});
        t["phi3"] = IntMatrix3::of({-1, 0, 0, 0, -1, 0, 1, -1, 1});
        // negations for every base name
        std::vector<std::pair<std::string, IntMatrix3>> negs;
        for (auto& kv : t) negs.push_back({"-" + kv.first, -kv.second});
        for (auto& kv : negs) t.insert(kv);
        return t;
    }();
    return tbl;
}

IntMatrix3 named_matrix(const std::string& name) {
    auto& t = named_matrices();
    auto it = t.find(name);
    if (it == t.end()) throw std::runtime_error("unknown matrix name: " + name);
    return it->second;
}

// ---- word evaluation -------------------------------------------------------

namespace {

struct WordParser {
    const std::string& s;
    size_t pos = 0;
    explicit WordParser(const std::string& str) : s(str) {}

    void ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    char peek() {
        ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    IntMatrix3 word() {
        IntMatrix3 r = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos;
                r = r * factor();
            } else if (c == '\0' || c == ')' || c == ',' || c == ']' || c == '=') {
                return r;
            } else {
                r = r * factor();  // juxtaposition
            }
        }
    }

    IntMatrix3 factor() {
        IntMatrix3 b = element();
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
            b = b.pow(neg ? -e : e);
        }
        return b;
    }

    IntMatrix3 element() {
        char c = peek();
        if (c == '(') {
            ++pos;
            IntMatrix3 r = word();
            if (peek() != ')') throw std::runtime_error("word: expected )");
            ++pos;
            return r;
        }
        if (c == '[') {
            ++pos;
            IntMatrix3 u = word();
            if (peek() != ',') throw std::runtime_error("word: expected ,");
            ++pos;
            IntMatrix3 v = word();
            if (peek() != ']') throw std::runtime_error("word: expected ]");
            ++pos;
            return u.inverse() * v.inverse() * u * v;
        }
        // name, possibly with '-' prefix
        std::string name;
        if (c == '-') {
            name += '-';
            ++pos;
            ws();
        }
        while (pos < s.size() && (std::isalnum((unsigned char)s[pos]))) name += s[pos++];
        if (name.empty() || name == "-") throw std::runtime_error("word: expected name in '" + s + "'");
        return named_matrix(name);
    }
};

}  // namespace

IntMatrix3 eval_matrix_word(const std::string& word) {
    WordParser p(word);
    IntMatrix3 r = p.word();
    p.ws();
    if (p.pos != word.size()) throw std::runtime_error("word: trailing input in '" + word + "'");
    return r;
}

bool check_matrix_relation(const std::string& relation) {
    auto eq = relation.find('=');
    if (eq == std::string::npos) throw std::runtime_error("relation needs '=': " + relation);
    WordParser lp(relation);
    IntMatrix3 lhs = lp.word();
    std::string rhs_s = relation.substr(eq + 1);
    return lhs == eval_matrix_word(rhs_s);
}

// ---- the relation tables ---------------------------------------------------

const std::vector<std::string>& relation_table_c4() {
    static const std::vector<std::string> v = {
        "A4^4=I", "(-A4)^4=I", "B4^4=I", "(-B4)^4=I",
        "la1^2=I", "(-la1)^2=I", "la3^2=I", "(-la3)^2=I", "(-I)^2=I",
        "[A4,la1]=A4^2", "[A4,-la1]=A4^2", "[-A4,la1]=A4^2", "[-A4,-la1]=A4^2",
        "[B4,la3]=B4^2", "[B4,-la3]=B4^2", "[-B4,la3]=B4^2", "[-B4,-la3]=B4^2",
        "[A4,-I]=I", "[-A4,-I]=I", "[B4,-I]=I", "[-B4,-I]=I",
        "[al,-I]=I", "[-al,-I]=I", "[be,-I]=I", "[-be,-I]=I",
        "A4^2=ta1", "(-A4)^2=ta1", "B4^2=ta3", "(-B4)^2=ta3"};
    return v;
}
const std::vector<std::string>& relation_table_mat5() {
    static const std::vector<std::string> v = {
        "a3^3=I", "b3^3=I", "al^2=I", "(-al)^2=I", "be^2=I", "(-be)^2=I", "(-I)^2=I",
        "[a3,al]=a3", "[a3,-al]=a3", "[a3,be]=a3", "[a3,-be]=a3",
        "[b3,al]=b3", "[b3,-al]=b3",
        "[a3,-I]=I", "[b3,-I]=I", "[al,-I]=I", "[-al,-I]=I", "[be,-I]=I", "[-be,-I]=I"};
    return v;
}
const std::vector<std::string>& relation_table_mat6() {
    static const std::vector<std::string> v = {
        "a3^3=I", "ta1^2=I", "(-ta1)^2=I", "be^2=I", "(-be)^2=I", "(-I)^2=I",
        "[a3,ta1]=I", "[a3,-ta1]=I", "[a3,be]=a3", "[a3,-be]=a3",
        "[ta1,be]=I", "[ta1,-be]=I", "[-ta1,be]=I", "[-ta1,-be]=I",
        "[a3,-I]=I", "[ta1,-I]=I", "[-ta1,-I]=I", "[be,-I]=I", "[-be,-I]=I",
        "ta1=(-al)*(-be)", "ta1=al*be"};
    return v;
}
const std::vector<std::string>& relation_table_mat7() {
    static std::vector<std::string> v = [] {
        std::vector<std::string> r;
        for (std::string k : {"1", "2", "3"}) {
            std::string ta = "ta" + k, la = "la" + k, be = "be" + k;
            r.push_back(ta + "^2=I");
            r.push_back(la + "^2=I");
            r.push_back("b3^3=I");
            r.push_back(be + "^2=I");
            r.push_back("(-" + be + ")^2=I");
            r.push_back("[" + ta + "," + la + "]=I");
            r.push_back("[" + ta + ",b3]=" + la + "*" + ta);
            r.push_back("[" + la + ",b3]=" + ta);
            r.push_back("[" + ta + "," + be + "]=I");
            r.push_back("[" + ta + ",-" + be + "]=I");
            r.push_back("[" + la + "," + be + "]=" + ta);
            r.push_back("[" + la + ",-" + be + "]=" + ta);
            r.push_back("[b3," + be + "]=b3*" + la);
            r.push_back("[b3,-" + be + "]=b3*" + la);
            r.push_back("[" + ta + ",-I]=I");
            r.push_back("[" + la + ",-I]=I");
            r.push_back("[b3,-I]=I");
            r.push_back("[" + be + ",-I]=I");
            r.push_back("[-" + be + ",-I]=I");
        }
        return r;
    }();
    return v;
}

// ---- catalog ----------------------------------------------------------------

namespace {

GroupSpec mk(int i, int j, int k, std::vector<std::string> gens, long order,
             const std::string& type, std::vector<std::string> rels, bool inN = false,
             RationalityStatus st = RationalityStatus::Rational, std::string cond = "") {
    GroupSpec g;
    g.i = i;
    g.j = j;
    g.k = k;
    for (auto& n : gens) g.generators.push_back({n, named_matrix(n)});
    g.order = order;
    g.abstract_type = type;
    g.relations = std::move(rels);
    g.in_N = inN;
    g.status = st;
    g.condition = std::move(cond);
    return g;
}

std::vector<GroupSpec> build_catalog() {
    std::vector<GroupSpec> c;
    auto neg = RationalityStatus::NegativeConditional;
    const std::string yam = "necessary and sufficient rationality condition given in [Yam]";

    // crystal system 1
    c.push_back(mk(1, 1, 1, {"I"}, 1, "C1", {"I=I"}));
    c.push_back(mk(1, 2, 1, {"-I"}, 2, "C2", {"(-I)^2=I"}, true, neg,
                   "rational iff [K(sqrt(a1),sqrt(a2),sqrt(a3)):K] <= 4"));

    // crystal system 2 (abelian, exponent 2)
    c.push_back(mk(2, 1, 1, {"la1"}, 2, "C2", {"la1^2=I"}));
    c.push_back(mk(2, 1, 2, {"-al"}, 2, "C2", {"(-al)^2=I"}));
    c.push_back(mk(2, 2, 1, {"-la1"}, 2, "C2", {"(-la1)^2=I"}));
    c.push_back(mk(2, 2, 2, {"al"}, 2, "C2", {"al^2=I"}));
    c.push_back(mk(2, 3, 1, {"la1", "-I"}, 4, "C2xC2",
                   {"la1^2=I", "(-I)^2=I", "[la1,-I]=I"}, true, neg, yam));
    c.push_back(mk(2, 3, 2, {"-al", "-I"}, 4, "C2xC2", {"(-al)^2=I", "(-I)^2=I", "[-al,-I]=I"}));

    // crystal system 3 (abelian, exponent 2)
    c.push_back(mk(3, 1, 1, {"ta1", "la1"}, 4, "C2xC2",
                   {"ta1^2=I", "la1^2=I", "[ta1,la1]=I"}, true, neg,
                   "rational iff [K(sqrt(a),sqrt(-1)):K] <= 2"));
    c.push_back(mk(3, 1, 2, {"ta1", "-al"}, 4, "C2xC2", {"ta1^2=I", "(-al)^2=I", "[ta1,-al]=I"}));
    c.push_back(mk(3, 1, 3, {"ta2", "la2"}, 4, "C2xC2", {"ta2^2=I", "la2^2=I", "[ta2,la2]=I"}));
    c.push_back(mk(3, 1, 4, {"ta3", "la3"}, 4, "C2xC2", {"ta3^2=I", "la3^2=I", "[ta3,la3]=I"}));
    c.push_back(mk(3, 2, 1, {"ta1", "-la1"}, 4, "C2xC2",
                   {"ta1^2=I", "(-la1)^2=I", "[ta1,-la1]=I"}));
    c.push_back(mk(3, 2, 2, {"ta1", "al"}, 4, "C2xC2", {"ta1^2=I", "al^2=I", "[ta1,al]=I"}));
    c.push_back(mk(3, 2, 3, {"-al", "be"}, 4, "C2xC2", {"(-al)^2=I", "be^2=I", "[-al,be]=I"}));
    c.push_back(mk(3, 2, 4, {"ta2", "-la2"}, 4, "C2xC2",
                   {"ta2^2=I", "(-la2)^2=I", "[ta2,-la2]=I"}));
    c.push_back(mk(3, 2, 5, {"ta3", "-la3"}, 4, "C2xC2",
                   {"ta3^2=I", "(-la3)^2=I", "[ta3,-la3]=I"}));
    c.push_back(mk(3, 3, 1, {"ta1", "la1", "-I"}, 8, "C2xC2xC2",
                   {"ta1^2=I", "la1^2=I", "(-I)^2=I", "[ta1,la1]=I", "[ta1,-I]=I", "[la1,-I]=I"},
                   true, neg, yam));
    c.push_back(mk(3, 3, 2, {"ta1", "-al", "-I"}, 8, "C2xC2xC2",
                   {"ta1^2=I", "(-al)^2=I", "(-I)^2=I", "[ta1,-al]=I", "[ta1,-I]=I",
                    "[-al,-I]=I"}));
    c.push_back(mk(3, 3, 3, {"ta2", "la2", "-I"}, 8, "C2xC2xC2",
                   {"ta2^2=I", "la2^2=I", "(-I)^2=I", "[ta2,la2]=I", "[ta2,-I]=I", "[la2,-I]=I"}));
    c.push_back(mk(3, 3, 4, {"ta3", "la3", "-I"}, 8, "C2xC2xC2",
                   {"ta3^2=I", "la3^2=I", "(-I)^2=I", "[ta3,la3]=I", "[ta3,-I]=I", "[la3,-I]=I"}));

    // crystal system 4 (contain an element of order 4)
    c.push_back(mk(4, 1, 1, {"A4"}, 4, "C4", {"A4^4=I", "A4^2=ta1"}));
    c.push_back(mk(4, 1, 2, {"B4"}, 4, "C4", {"B4^4=I", "B4^2=ta3"}));
    c.push_back(mk(4, 2, 1, {"-A4"}, 4, "C4", {"(-A4)^4=I", "(-A4)^2=ta1"}, true, neg, yam));
    c.push_back(mk(4, 2, 2, {"-B4"}, 4, "C4", {"(-B4)^4=I", "(-B4)^2=ta3"}, true, neg,
                   "rational iff char K = 2, or c in K^2, or -4c in K^4, or -1 in K^2"));
    c.push_back(mk(4, 3, 1, {"A4", "-I"}, 8, "C4xC2", {"A4^4=I", "(-I)^2=I", "[A4,-I]=I"}, true,
                   neg, yam));
    c.push_back(mk(4, 3, 2, {"B4", "-I"}, 8, "C4xC2", {"B4^4=I", "(-I)^2=I", "[B4,-I]=I"}));
    c.push_back(mk(4, 4, 1, {"A4", "la1"}, 8, "D4",
                   {"A4^4=I", "la1^2=I", "[A4,la1]=A4^2"}, true, neg, yam));
    c.push_back(mk(4, 4, 2, {"B4", "la3"}, 8, "D4", {"B4^4=I", "la3^2=I", "[B4,la3]=B4^2"}));
    c.push_back(mk(4, 5, 1, {"A4", "-la1"}, 8, "D4", {"A4^4=I", "(-la1)^2=I", "[A4,-la1]=A4^2"}));
    c.push_back(mk(4, 5, 2, {"B4", "-la3"}, 8, "D4", {"B4^4=I", "(-la3)^2=I", "[B4,-la3]=B4^2"}));
    c.push_back(mk(4, 6, 1, {"-A4", "la1"}, 8, "D4", {"(-A4)^4=I", "la1^2=I", "[-A4,la1]=A4^2"}));
    c.push_back(mk(4, 6, 2, {"-A4", "-la1"}, 8, "D4",
                   {"(-A4)^4=I", "(-la1)^2=I", "[-A4,-la1]=A4^2"}));
    c.push_back(mk(4, 6, 3, {"-B4", "-la3"}, 8, "D4",
                   {"(-B4)^4=I", "(-la3)^2=I", "[-B4,-la3]=B4^2"}));
    c.push_back(mk(4, 6, 4, {"-B4", "la3"}, 8, "D4", {"(-B4)^4=I", "la3^2=I", "[-B4,la3]=B4^2"}));
    c.push_back(mk(4, 7, 1, {"A4", "la1", "-I"}, 16, "D4xC2",
                   {"A4^4=I", "la1^2=I", "(-I)^2=I", "[A4,la1]=A4^2", "[A4,-I]=I", "[la1,-I]=I"}));
    c.push_back(mk(4, 7, 2, {"B4", "la3", "-I"}, 16, "D4xC2",
                   {"B4^4=I", "la3^2=I", "(-I)^2=I", "[B4,la3]=B4^2", "[B4,-I]=I", "[la3,-I]=I"}));

    // crystal system 5 (normal subgroup of order 3)
    c.push_back(mk(5, 1, 1, {"b3"}, 3, "C3", {"b3^3=I"}));
    c.push_back(mk(5, 1, 2, {"a3"}, 3, "C3", {"a3^3=I"}));
    c.push_back(mk(5, 2, 1, {"b3", "-I"}, 6, "C6", {"b3^3=I", "(-I)^2=I", "[b3,-I]=I"}));
    c.push_back(mk(5, 2, 2, {"a3", "-I"}, 6, "C6", {"a3^3=I", "(-I)^2=I", "[a3,-I]=I"}));
    c.push_back(mk(5, 3, 1, {"b3", "-al"}, 6, "S3", {"b3^3=I", "(-al)^2=I", "[b3,-al]=b3"}));
    c.push_back(mk(5, 3, 2, {"a3", "-al"}, 6, "S3", {"a3^3=I", "(-al)^2=I", "[a3,-al]=a3"}));
    c.push_back(mk(5, 3, 3, {"a3", "-be"}, 6, "S3", {"a3^3=I", "(-be)^2=I", "[a3,-be]=a3"}));
    c.push_back(mk(5, 4, 1, {"b3", "al"}, 6, "S3", {"b3^3=I", "al^2=I", "[b3,al]=b3"}));
    c.push_back(mk(5, 4, 2, {"a3", "be"}, 6, "S3", {"a3^3=I", "be^2=I", "[a3,be]=a3"}));
    c.push_back(mk(5, 4, 3, {"a3", "al"}, 6, "S3", {"a3^3=I", "al^2=I", "[a3,al]=a3"}));
    c.push_back(mk(5, 5, 1, {"b3", "-al", "-I"}, 12, "D6",
                   {"b3^3=I", "(-al)^2=I", "(-I)^2=I", "[b3,-al]=b3", "[b3,-I]=I", "[-al,-I]=I"}));
    c.push_back(mk(5, 5, 2, {"a3", "-al", "-I"}, 12, "D6",
                   {"a3^3=I", "(-al)^2=I", "(-I)^2=I", "[a3,-al]=a3", "[a3,-I]=I", "[-al,-I]=I"}));
    c.push_back(mk(5, 5, 3, {"a3", "-be", "-I"}, 12, "D6",
                   {"a3^3=I", "(-be)^2=I", "(-I)^2=I", "[a3,-be]=a3", "[a3,-I]=I", "[-be,-I]=I"}));

    // crystal system 6 (normal subgroup <a3>)
    c.push_back(mk(6, 1, 1, {"a3", "ta1"}, 6, "C6", {"a3^3=I", "ta1^2=I", "[a3,ta1]=I"}));
    c.push_back(mk(6, 2, 1, {"a3", "-ta1"}, 6, "C6", {"a3^3=I", "(-ta1)^2=I", "[a3,-ta1]=I"}));
    c.push_back(mk(6, 3, 1, {"a3", "ta1", "-I"}, 12, "C6xC2",
                   {"a3^3=I", "ta1^2=I", "(-I)^2=I", "[a3,ta1]=I", "[a3,-I]=I", "[ta1,-I]=I"}));
    c.push_back(mk(6, 4, 1, {"a3", "ta1", "-be"}, 12, "D6",
                   {"a3^3=I", "ta1^2=I", "(-be)^2=I", "[a3,ta1]=I", "[a3,-be]=a3",
                    "[ta1,-be]=I"}));
    c.push_back(mk(6, 5, 1, {"a3", "ta1", "be"}, 12, "D6",
                   {"a3^3=I", "ta1^2=I", "be^2=I", "[a3,ta1]=I", "[a3,be]=a3", "[ta1,be]=I"}));
    c.push_back(mk(6, 6, 1, {"a3", "-ta1", "be"}, 12, "D6",
                   {"a3^3=I", "(-ta1)^2=I", "be^2=I", "[a3,-ta1]=I", "[a3,be]=a3",
                    "[-ta1,be]=I"}));
    c.push_back(mk(6, 6, 2, {"a3", "-ta1", "-be"}, 12, "D6",
                   {"a3^3=I", "(-ta1)^2=I", "(-be)^2=I", "[a3,-ta1]=I", "[a3,-be]=a3",
                    "[-ta1,-be]=I"}));
    c.push_back(mk(6, 7, 1, {"a3", "ta1", "be", "-I"}, 24, "D6xC2",
                   {"a3^3=I", "ta1^2=I", "be^2=I", "(-I)^2=I", "[a3,ta1]=I", "[a3,be]=a3",
                    "[ta1,be]=I", "[a3,-I]=I", "[ta1,-I]=I", "[be,-I]=I"}));

    // crystal system 7 (non-normal <b3>, normal <tak,lak>)
    for (int k = 1; k <= 3; ++k) {
        std::string ks = std::to_string(k);
        std::string ta = "ta" + ks, la = "la" + ks, be = "be" + ks;
        auto base_rels = [&](std::vector<std::string> extra) {
            std::vector<std::string> r = {ta + "^2=I", la + "^2=I", "b3^3=I",
                                          "[" + ta + "," + la + "]=I",
                                          "[" + ta + ",b3]=" + la + "*" + ta,
                                          "[" + la + ",b3]=" + ta};
            for (auto& e : extra) r.push_back(e);
            return r;
        };
        c.push_back(mk(7, 1, k, {ta, la, "b3"}, 12, "A4", base_rels({}), false,
                       k == 1 ? RationalityStatus::OpenConditional : RationalityStatus::Rational,
                       k == 1 ? "rational if eps1 = 1, or if eps1 = -1 and "
                                "[K(sqrt(a),sqrt(-1)):K] <= 2; open for eps1 = -1 with "
                                "[K(sqrt(a),sqrt(-1)):K] = 4"
                              : ""));
        c.push_back(mk(7, 2, k, {ta, la, "b3", "-I"}, 24, "A4xC2",
                       base_rels({"(-I)^2=I", "[" + ta + ",-I]=I", "[" + la + ",-I]=I",
                                  "[b3,-I]=I"})));
        c.push_back(mk(7, 3, k, {ta, la, "b3", "-" + be}, 24, "S4",
                       base_rels({"(-" + be + ")^2=I", "[" + ta + ",-" + be + "]=I",
                                  "[" + la + ",-" + be + "]=" + ta,
                                  "[b3,-" + be + "]=b3*" + la})));
        c.push_back(mk(7, 4, k, {ta, la, "b3", be}, 24, "S4",
                       base_rels({be + "^2=I", "[" + ta + "," + be + "]=I",
                                  "[" + la + "," + be + "]=" + ta, "[b3," + be + "]=b3*" + la})));
        c.push_back(mk(7, 5, k, {ta, la, "b3", be, "-I"}, 48, "S4xC2",
                       base_rels({be + "^2=I", "(-I)^2=I", "[" + ta + "," + be + "]=I",
                                  "[" + la + "," + be + "]=" + ta, "[b3," + be + "]=b3*" + la,
                                  "[" + ta + ",-I]=I", "[" + la + ",-I]=I", "[b3,-I]=I",
                                  "[" + be + ",-I]=I"})));
    }
    return c;
}

}  // namespace

const std::vector<GroupSpec>& catalog() {
    static const std::vector<GroupSpec> c = build_catalog();
    return c;
}

const GroupSpec& builtin_group(int i, int j, int k) {
    for (auto& g : catalog())
        if (g.i == i && g.j == j && g.k == k) return g;
    throw unknown_class(i, j, k);
}

bool class_exists(int i, int j, int k) {
    for (auto& g : catalog())
        if (g.i == i && g.j == j && g.k == k) return true;
    return false;
}

std::vector<IntMatrix3> group_closure(const std::vector<IntMatrix3>& gens, size_t cap) {
    for (auto& g : gens)
        if (!g.unimodular()) throw not_unimodular();
    std::set<IntMatrix3> seen;
    std::vector<IntMatrix3> queue;
    seen.insert(IntMatrix3::identity());
    queue.push_back(IntMatrix3::identity());
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        IntMatrix3 cur = queue[qi];
        for (auto& g : gens) {
            IntMatrix3 n = cur * g;
            if (seen.insert(n).second) {
                if (seen.size() > cap) throw closure_cap_exceeded();
                queue.push_back(n);
            }
        }
    }
    return queue;
}

RelationReport check_relations(const GroupSpec& spec) {
    RelationReport r;
    for (auto& rel : spec.relations) r.checks.push_back({rel, check_matrix_relation(rel)});
    return r;
}

GroupSpec conjugate_group(const GroupSpec& spec, const IntMatrix3& R) {
    if (R.det() == 0) throw singular_matrix();
    if (!R.unimodular()) throw not_unimodular();
    GroupSpec g = spec;
    IntMatrix3 Rinv = R.inverse();
    for (auto& [name, mat] : g.generators) mat = Rinv * mat * R;
    g.relations.clear();  // relation words refer to the original named matrices
    return g;
}

std::vector<QMatrix3> conjugate_group_rational(const GroupSpec& spec, const IntMatrix3& R) {
    int64_t d = R.det();
    if (d == 0) throw singular_matrix();
    IntMatrix3 adj = R.adjugate();
    std::vector<QMatrix3> out;
    for (auto& [name, mat] : spec.generators) {
        IntMatrix3 t = adj * mat * R;
        QMatrix3 q;
        for (int i = 0; i < 9; ++i) q.m[i] = mpq_class(t.m[i], d);
        for (auto& x : q.m) x.canonicalize();
        out.push_back(q);
    }
    return out;
}

std::string QMatrix3::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < 3; ++i) {
        os << "[";
        for (int j = 0; j < 3; ++j) {
            os << m[i * 3 + j];
            if (j != 2) os << ",";
        }
        os << "]";
        if (i != 2) os << ",";
    }
    os << "]";
    return os.str();
}

// ---- JSON -------------------------------------------------------------------

nlohmann::ordered_json catalog_to_json(const std::vector<GroupSpec>& cat) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (auto& g : cat) {
        nlohmann::ordered_json e;
        e["id"] = {g.i, g.j, g.k};
        nlohmann::ordered_json gens = nlohmann::ordered_json::array();
        for (auto& [name, mat] : g.generators) {
            nlohmann::ordered_json m;
            m["name"] = name;
            m["matrix"] = {{mat.at(0, 0), mat.at(0, 1), mat.at(0, 2)},
                           {mat.at(1, 0), mat.at(1, 1), mat.at(1, 2)},
                           {mat.at(2, 0), mat.at(2, 1), mat.at(2, 2)}};
            gens.push_back(m);
        }
        e["generators"] = gens;
        e["order"] = g.order;
        e["abstract_type"] = g.abstract_type;
        e["relations"] = g.relations;
        e["in_N"] = g.in_N;
        e["status"] = status_str(g.status);
        if (!g.condition.empty()) e["condition"] = g.condition;
        arr.push_back(e);
    }
    return arr;
}

std::vector<GroupSpec> catalog_from_json(const nlohmann::ordered_json& j) {
    std::vector<GroupSpec> out;
    for (auto& e : j) {
        GroupSpec g;
        g.i = e["id"][0];
        g.j = e["id"][1];
        g.k = e["id"][2];
        for (auto& m : e["generators"]) {
            IntMatrix3 mat;
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) mat.at(r, c) = m["matrix"][r][c];
            g.generators.push_back({m["name"], mat});
        }
        g.order = e["order"];
        g.abstract_type = e["abstract_type"];
        for (auto& r : e["relations"]) g.relations.push_back(r);
        g.in_N = e["in_N"];
        g.status = status_from_str(e["status"]);
        if (e.contains("condition")) g.condition = e["condition"];
        out.push_back(g);
    }
    return out;
}

std::string catalog_canonical_dump() { return catalog_to_json(catalog()).dump(2) + "\n"; }

}  // namespace mono3

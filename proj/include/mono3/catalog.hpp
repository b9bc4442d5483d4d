#ifndef MONO3_CATALOG_HPP
#define MONO3_CATALOG_HPP

#include <gmpxx.h>
#include <json.hpp>

#include <map>
#include <set>
#include <vector>

#include "mono3/matrix.hpp"

namespace mono3 {

struct unknown_class : std::runtime_error {
    unknown_class(int i, int j, int k)
        : std::runtime_error("UnknownClass: G_" + std::to_string(i) + "," + std::to_string(j) +
                             "," + std::to_string(k)) {}
};
struct closure_cap_exceeded : std::runtime_error {
    closure_cap_exceeded() : std::runtime_error("ClosureCapExceeded") {}
};

enum class RationalityStatus { Rational, NegativeConditional, OpenConditional };

std::string status_str(RationalityStatus s);
RationalityStatus status_from_str(const std::string& s);

// One of the 73 GL(3,Z) conjugacy classes: BBNWZ Z-class (i,j,k), the paper's
// working generators, order, abstract type, relation words, N-membership and
// rationality status.
struct GroupSpec {
    int i = 0, j = 0, k = 0;
    std::vector<std::pair<std::string, IntMatrix3>> generators;
    long order = 0;
    std::string abstract_type;
    std::vector<std::string> relations;  // "word = word" over named matrices
    bool in_N = false;
    RationalityStatus status = RationalityStatus::Rational;
    std::string condition;  // text for conditional statuses

    std::string id() const {
        return "G" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k);
    }
    IntMatrix3 gen(const std::string& name) const {
        for (auto& g : generators)
            if (g.first == name) return g.second;
        throw std::runtime_error("no generator '" + name + "' in " + id());
    }
};

// The named matrices of the section-2 displays (ta1..ta3, la1..la3, al, be,
// be1..be3, a3, b3, A4, B4, -I, R1, R2, P, phi2, phi3 and negations).
const std::map<std::string, IntMatrix3>& named_matrices();
IntMatrix3 named_matrix(const std::string& name);

// Word evaluation over the named matrices: products, powers, commutators
// [u,v] = u^-1 v^-1 u v.  Example: "[la1,b3] = t1".
IntMatrix3 eval_matrix_word(const std::string& word);
bool check_matrix_relation(const std::string& relation);

// The global relation tables (eqc4g), (relmat5), (relmat6), (relmat7).
const std::vector<std::string>& relation_table_c4();
const std::vector<std::string>& relation_table_mat5();
const std::vector<std::string>& relation_table_mat6();
const std::vector<std::string>& relation_table_mat7();

// catalog access
const std::vector<GroupSpec>& catalog();
const GroupSpec& builtin_group(int i, int j, int k);
bool class_exists(int i, int j, int k);

// group closure by BFS over products; cap guards non-finite input
std::vector<IntMatrix3> group_closure(const std::vector<IntMatrix3>& gens, size_t cap = 10000);

struct RelationReport {
    std::vector<std::pair<std::string, bool>> checks;
    bool all_pass() const {
        for (auto& c : checks)
            if (!c.second) return false;
        return true;
    }
};
RelationReport check_relations(const GroupSpec& spec);

// generator-wise conjugation R^-1 g R for unimodular R
GroupSpec conjugate_group(const GroupSpec& spec, const IntMatrix3& R);

// rational conjugation (e.g. by P with det 2): exact rational entries
struct QMatrix3 {
    std::array<mpq_class, 9> m{};
    std::string str() const;
    bool operator==(const QMatrix3& o) const { return m == o.m; }
};
std::vector<QMatrix3> conjugate_group_rational(const GroupSpec& spec, const IntMatrix3& R);

// JSON round trip (canonical form; bit-exact: parse(dump(x)) == x and the
// checked-in data file equals dump(builtin catalog))
nlohmann::ordered_json catalog_to_json(const std::vector<GroupSpec>& cat);
std::vector<GroupSpec> catalog_from_json(const nlohmann::ordered_json& j);
std::string catalog_canonical_dump();

}  // namespace mono3

#endif

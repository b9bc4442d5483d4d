#ifndef MONO3_SYMBOLS_HPP
#define MONO3_SYMBOLS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace mono3 {

// Interned symbols.  Three kinds, ordered for the graded-lex term order:
// variables come first (x > y > z > later-registered), then algebraic
// adjuncts (sqrt(a), i, w, relational stage adjuncts), then transcendental
// parameters.  A symbol id encodes (kind, index) so that comparing ids is
// comparing term-order priority.
enum class SymKind : int { Var = 0, Adjunct = 1, Param = 2 };

using Sym = int32_t;

namespace symdetail {
constexpr int32_t kKindShift = 20;
}

inline SymKind sym_kind(Sym s) {
    return static_cast<SymKind>(s >> symdetail::kKindShift);
}

class Poly;  // fwd, adjunct squares are polynomials

struct SymbolInfo {
    std::string name;
    SymKind kind;
    // Adjunct data: s^2 reduces to `square`; conjugation sends s to `conj`.
    // Stored as shared pointers to break the header cycle with Poly.
    std::shared_ptr<const Poly> square;
    std::shared_ptr<const Poly> conj;
};

class SymbolTable {
  public:
    static SymbolTable& instance() {
        static SymbolTable t;
        return t;
    }

    Sym intern(const std::string& name, SymKind kind) {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = byname_.find(name);
        if (it != byname_.end()) {
            if (sym_kind(it->second) != kind)
                throw std::runtime_error("symbol '" + name + "' re-interned with different kind");
            return it->second;
        }
        auto& pool = pools_[static_cast<int>(kind)];
        Sym id = (static_cast<int32_t>(kind) << symdetail::kKindShift) |
                 static_cast<int32_t>(pool.size());
        pool.push_back(SymbolInfo{name, kind, nullptr, nullptr});
        byname_.emplace(name, id);
        return id;
    }

    // Looks up an existing symbol; throws if unknown.
    Sym lookup(const std::string& name) const {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = byname_.find(name);
        if (it == byname_.end()) throw std::runtime_error("unknown symbol '" + name + "'");
        return it->second;
    }

    bool known(const std::string& name) const {
        std::lock_guard<std::mutex> lk(mu_);
        return byname_.count(name) != 0;
    }

    const SymbolInfo& info(Sym s) const {
        std::lock_guard<std::mutex> lk(mu_);
        return pools_Get(s);
    }

    const std::string& name(Sym s) const {
        std::lock_guard<std::mutex> lk(mu_);
        return pools_Get(s).name;
    }

    void set_adjunct_data(Sym s, std::shared_ptr<const Poly> square,
                          std::shared_ptr<const Poly> conj) {
        std::lock_guard<std::mutex> lk(mu_);
        SymbolInfo& si = pools_Mut(s);
        if (si.kind != SymKind::Adjunct)
            throw std::runtime_error("set_adjunct_data on non-adjunct '" + si.name + "'");
        if (si.square && si.square != square)
            return;  // adjunct data is write-once; re-registration keeps the original
        si.square = std::move(square);
        si.conj = std::move(conj);
    }

    std::shared_ptr<const Poly> adjunct_square(Sym s) const {
        std::lock_guard<std::mutex> lk(mu_);
        return pools_Get(s).square;
    }
    std::shared_ptr<const Poly> adjunct_conj(Sym s) const {
        std::lock_guard<std::mutex> lk(mu_);
        return pools_Get(s).conj;
    }

  private:
    SymbolTable() = default;
    const SymbolInfo& pools_Get(Sym s) const {
        int kind = s >> symdetail::kKindShift;
        int idx = s & ((1 << symdetail::kKindShift) - 1);
        return pools_[kind].at(idx);
    }
    SymbolInfo& pools_Mut(Sym s) {
        int kind = s >> symdetail::kKindShift;
        int idx = s & ((1 << symdetail::kKindShift) - 1);
        return pools_[kind].at(idx);
    }

    mutable std::mutex mu_;
    std::vector<SymbolInfo> pools_[3];
    std::map<std::string, Sym> byname_;
};

inline Sym var(const std::string& n) { return SymbolTable::instance().intern(n, SymKind::Var); }
inline Sym param(const std::string& n) { return SymbolTable::instance().intern(n, SymKind::Param); }
inline const std::string& sym_name(Sym s) { return SymbolTable::instance().name(s); }

}  // namespace mono3

#endif

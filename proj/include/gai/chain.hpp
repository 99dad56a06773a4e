#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gai/errors.hpp"

namespace gai {

/// Truth degree, stored as an index into the chain 0 < 1/n < ... < n/n.
using Degree = std::uint8_t;

/// Number of levels a chain may have. Indices must fit a Degree.
inline constexpr int kMaxLevels = 256;

enum class Variety {
    lukasiewicz,
    godel,
    custom,
};

std::string variety_name(Variety v);
std::optional<Variety> variety_from_name(const std::string& name);

/// Outcome of checking one algebraic law over a full table. The witness holds
/// the degree indices of the first failing instance; unused slots are -1.
struct LawCheck {
    std::string law;
    bool pass = true;
    std::array<int, 3> witness{-1, -1, -1};
};

struct LawReport {
    std::vector<LawCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const LawCheck* first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return &c;
        return nullptr;
    }
};

/// A finite residuated chain: levels equidistant truth degrees with a
/// commutative, associative, isotone tensor (unit = top) and its residuum,
/// adjoint via a (x) b <= c iff a <= (b -> c). Operations are table lookups;
/// the built-in varieties fill the tables from their closed forms.
class ResiduatedChain {
public:
    static ResiduatedChain make(Variety v, int levels);

    /// Builds a chain from explicit tables, row-major levels x levels.
    /// Verifies the laws first and refuses tables that break any of them.
    static ResiduatedChain custom(int levels,
                                  std::vector<Degree> tensor_table,
                                  std::vector<Degree> residuum_table);

    int levels() const { return levels_; }
    Degree top() const { return static_cast<Degree>(levels_ - 1); }
    Variety variety() const { return variety_; }

    Degree tensor(Degree a, Degree b) const { return ten_[size_t(a) * levels_ + b]; }
    Degree residuum(Degree a, Degree b) const { return res_[size_t(a) * levels_ + b]; }

    const std::vector<Degree>& tensor_table() const { return ten_; }
    const std::vector<Degree>& residuum_table() const { return res_; }

    /// Structural equality: same levels and same operation tables.
    bool operator==(const ResiduatedChain& o) const {
        return levels_ == o.levels_ && ten_ == o.ten_ && res_ == o.res_;
    }

private:
    ResiduatedChain(Variety v, int levels, std::vector<Degree> ten, std::vector<Degree> res)
        : variety_(v), levels_(levels), ten_(std::move(ten)), res_(std::move(res)) {}

    Variety variety_;
    int levels_;
    std::vector<Degree> ten_;
    std::vector<Degree> res_;
};

/// Exhaustively checks commutativity, associativity, unit and adjointness of
/// raw tables. Value-range violations are reported as a failed "bounds" law.
LawReport verify_chain_tables(int levels,
                              const std::vector<Degree>& tensor_table,
                              const std::vector<Degree>& residuum_table);

/// Law report for an already constructed chain.
LawReport verify_chain(const ResiduatedChain& chain);

enum class HedgeKind {
    identity,
    globalization,
    custom,
};

std::string hedge_name(HedgeKind k);

/// An idempotent truth stresser on a chain: keeps the top fixed, stays below
/// its argument, is compatible with the residuum and idempotent. Stored as a
/// unary table.
class Hedge {
public:
    static Hedge identity(int levels);
    static Hedge globalization(int levels);

    /// Builds a hedge from an explicit table; verifies the axioms against the
    /// given chain and refuses violating tables.
    static Hedge custom(const ResiduatedChain& chain, std::vector<Degree> table);

    int levels() const { return int(table_.size()); }
    HedgeKind kind() const { return kind_; }
    Degree operator()(Degree a) const { return table_[a]; }
    const std::vector<Degree>& table() const { return table_; }

    bool operator==(const Hedge& o) const { return table_ == o.table_; }

private:
    Hedge(HedgeKind k, std::vector<Degree> table) : kind_(k), table_(std::move(table)) {}

    HedgeKind kind_;
    std::vector<Degree> table_;
};

Degree apply_hedge(const Hedge& hedge, Degree a);

/// Exhaustively checks the hedge axioms for a raw unary table over the chain.
LawReport verify_hedge_table(const ResiduatedChain& chain, const std::vector<Degree>& table);

LawReport verify_hedge(const ResiduatedChain& chain, const Hedge& hedge);

} // namespace gai

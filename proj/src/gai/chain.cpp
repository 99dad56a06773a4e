#include "gai/chain.hpp"

#include <algorithm>

namespace gai {

std::string variety_name(Variety v) {
    switch (v) {
        case Variety::lukasiewicz: return "lukasiewicz";
        case Variety::godel: return "godel";
        case Variety::custom: return "custom";
    }
    return "custom";
}

std::optional<Variety> variety_from_name(const std::string& name) {
    if (name == "lukasiewicz") return Variety::lukasiewicz;
    if (name == "godel") return Variety::godel;
    if (name == "custom") return Variety::custom;
    return std::nullopt;
}

std::string hedge_name(HedgeKind k) {
    switch (k) {
        case HedgeKind::identity: return "identity";
        case HedgeKind::globalization: return "globalization";
        case HedgeKind::custom: return "custom";
    }
    return "custom";
}

namespace {

void check_levels(int levels) {
    if (levels < 2 || levels > kMaxLevels)
        throw PreconditionError("invalid chain: levels must be in [2, " +
                                std::to_string(kMaxLevels) + "], got " + std::to_string(levels));
}

} // namespace

ResiduatedChain ResiduatedChain::make(Variety v, int levels) {
    check_levels(levels);
    if (v == Variety::custom)
        throw PreconditionError("invalid chain: custom chains require explicit tables");
    const int n = levels - 1;
    std::vector<Degree> ten(size_t(levels) * levels);
    std::vector<Degree> res(size_t(levels) * levels);
    for (int a = 0; a < levels; ++a) {
        for (int b = 0; b < levels; ++b) {
            int t, r;
            if (v == Variety::lukasiewicz) {
                t = std::max(0, a + b - n);
                r = std::min(n, n - a + b);
            } else {
                t = std::min(a, b);
                r = a <= b ? n : b;
            }
            ten[size_t(a) * levels + b] = Degree(t);
            res[size_t(a) * levels + b] = Degree(r);
        }
    }
    return ResiduatedChain(v, levels, std::move(ten), std::move(res));
}

ResiduatedChain ResiduatedChain::custom(int levels,
                                        std::vector<Degree> tensor_table,
                                        std::vector<Degree> residuum_table) {
    check_levels(levels);
    LawReport report = verify_chain_tables(levels, tensor_table, residuum_table);
    if (const LawCheck* fail = report.first_failure()) {
        std::string msg = "invalid chain: law '" + fail->law + "' fails";
        if (fail->witness[0] >= 0) {
            msg += " at (" + std::to_string(fail->witness[0]);
            if (fail->witness[1] >= 0) msg += ", " + std::to_string(fail->witness[1]);
            if (fail->witness[2] >= 0) msg += ", " + std::to_string(fail->witness[2]);
            msg += ")";
        }
        throw PreconditionError(msg);
    }
    return ResiduatedChain(Variety::custom, levels, std::move(tensor_table),
                           std::move(residuum_table));
}

LawReport verify_chain_tables(int levels,
                              const std::vector<Degree>& ten,
                              const std::vector<Degree>& res) {
    LawReport rep;
    const int n = levels - 1;
    const size_t cells = size_t(levels) * levels;

    LawCheck bounds{"bounds"};
    if (ten.size() != cells || res.size() != cells) {
        bounds.pass = false;
    } else {
        for (size_t i = 0; i < cells && bounds.pass; ++i) {
            if (ten[i] > n || res[i] > n) {
                bounds.pass = false;
                bounds.witness = {int(i / levels), int(i % levels), -1};
            }
        }
    }
    rep.checks.push_back(bounds);
    if (!bounds.pass) return rep;

    auto T = [&](int a, int b) { return int(ten[size_t(a) * levels + b]); };
    auto R = [&](int a, int b) { return int(res[size_t(a) * levels + b]); };

    LawCheck comm{"commutativity"};
    for (int a = 0; a <= n && comm.pass; ++a)
        for (int b = 0; b <= n && comm.pass; ++b)
            if (T(a, b) != T(b, a)) {
                comm.pass = false;
                comm.witness = {a, b, -1};
            }
    rep.checks.push_back(comm);

    LawCheck assoc{"associativity"};
    for (int a = 0; a <= n && assoc.pass; ++a)
        for (int b = 0; b <= n && assoc.pass; ++b)
            for (int c = 0; c <= n && assoc.pass; ++c)
                if (T(T(a, b), c) != T(a, T(b, c))) {
                    assoc.pass = false;
                    assoc.witness = {a, b, c};
                }
    rep.checks.push_back(assoc);

    LawCheck unit{"unit"};
    for (int a = 0; a <= n && unit.pass; ++a)
        if (T(a, n) != a) {
            unit.pass = false;
            unit.witness = {a, n, -1};
        }
    rep.checks.push_back(unit);

    LawCheck adj{"adjointness"};
    for (int a = 0; a <= n && adj.pass; ++a)
        for (int b = 0; b <= n && adj.pass; ++b)
            for (int c = 0; c <= n && adj.pass; ++c)
                if ((T(a, b) <= c) != (a <= R(b, c))) {
                    adj.pass = false;
                    adj.witness = {a, b, c};
                }
    rep.checks.push_back(adj);

    return rep;
}

LawReport verify_chain(const ResiduatedChain& chain) {
    return verify_chain_tables(chain.levels(), chain.tensor_table(), chain.residuum_table());
}

Hedge Hedge::identity(int levels) {
    check_levels(levels);
    std::vector<Degree> t(levels);
    for (int a = 0; a < levels; ++a) t[a] = Degree(a);
    return Hedge(HedgeKind::identity, std::move(t));
}

Hedge Hedge::globalization(int levels) {
    check_levels(levels);
    std::vector<Degree> t(levels, 0);
    t[levels - 1] = Degree(levels - 1);
    return Hedge(HedgeKind::globalization, std::move(t));
}

Hedge Hedge::custom(const ResiduatedChain& chain, std::vector<Degree> table) {
    LawReport report = verify_hedge_table(chain, table);
    if (const LawCheck* fail = report.first_failure()) {
        std::string msg = "invalid hedge: axiom '" + fail->law + "' fails";
        if (fail->witness[0] >= 0) {
            msg += " at (" + std::to_string(fail->witness[0]);
            if (fail->witness[1] >= 0) msg += ", " + std::to_string(fail->witness[1]);
            msg += ")";
        }
        throw PreconditionError(msg);
    }
    return Hedge(HedgeKind::custom, std::move(table));
}

Degree apply_hedge(const Hedge& hedge, Degree a) {
    return hedge(a);
}

LawReport verify_hedge_table(const ResiduatedChain& chain, const std::vector<Degree>& table) {
    LawReport rep;
    const int n = chain.levels() - 1;

    LawCheck bounds{"bounds"};
    if (int(table.size()) != chain.levels()) {
        bounds.pass = false;
    } else {
        for (int a = 0; a <= n && bounds.pass; ++a)
            if (table[a] > n) {
                bounds.pass = false;
                bounds.witness = {a, -1, -1};
            }
    }
    rep.checks.push_back(bounds);
    if (!bounds.pass) return rep;

    auto H = [&](int a) { return int(table[a]); };

    LawCheck top{"preserves-top"};
    if (H(n) != n) {
        top.pass = false;
        top.witness = {n, -1, -1};
    }
    rep.checks.push_back(top);

    LawCheck below{"below-argument"};
    for (int a = 0; a <= n && below.pass; ++a)
        if (H(a) > a) {
            below.pass = false;
            below.witness = {a, -1, -1};
        }
    rep.checks.push_back(below);

    LawCheck compat{"compatible-with-residuum"};
    for (int a = 0; a <= n && compat.pass; ++a)
        for (int b = 0; b <= n && compat.pass; ++b) {
            const int lhs = H(chain.residuum(Degree(a), Degree(b)));
            const int rhs = chain.residuum(Degree(H(a)), Degree(H(b)));
            if (lhs > rhs) {
                compat.pass = false;
                compat.witness = {a, b, -1};
            }
        }
    rep.checks.push_back(compat);

    LawCheck idem{"idempotent"};
    for (int a = 0; a <= n && idem.pass; ++a)
        if (H(H(a)) != H(a)) {
            idem.pass = false;
            idem.witness = {a, -1, -1};
        }
    rep.checks.push_back(idem);

    return rep;
}

LawReport verify_hedge(const ResiduatedChain& chain, const Hedge& hedge) {
    return verify_hedge_table(chain, hedge.table());
}

} // namespace gai

#pragma once

#include <cstddef>
#include <vector>

#include "gai/theory.hpp"

namespace gai::detail {

inline constexpr size_t npos = size_t(-1);

/// Flat working representation of a theory for repeated least-model rounds.
/// Rows are contiguous degree arrays; formulas can be deactivated or swapped
/// without touching the owning Theory. Not thread safe; every public API
/// entry point builds its own engine.
class ClosureEngine {
public:
    explicit ClosureEngine(const Theory& t)
        : k_(t.universe().size()),
          m_(t.size()),
          levels_(t.chain().levels()),
          top_(t.chain().top()),
          ten_(t.chain().tensor_table().data()),
          res_(t.chain().residuum_table().data()),
          hedge_(t.hedge().table().data()),
          ant_(m_ * k_),
          con_(m_ * k_),
          inert_(m_, 0),
          active_(m_, 1),
          dead_(m_, 0) {
        for (size_t i = 0; i < m_; ++i) {
            const Implication& f = t[i];
            bool inert = true;
            for (size_t j = 0; j < k_; ++j) {
                ant_[i * k_ + j] = f.antecedent[j];
                con_[i * k_ + j] = f.consequent[j];
                if (f.consequent[j] > f.antecedent[j]) inert = false;
            }
            // A formula whose consequent lies inside its antecedent can never
            // grow a closure: its contribution is bounded by hedge(S(A,N)) (x) A,
            // which adjointness keeps inside N.
            inert_[i] = inert ? 1 : 0;
        }
    }

    size_t formula_count() const { return m_; }
    size_t universe_size() const { return k_; }

    void set_active(size_t i, bool on) { active_[i] = on ? 1 : 0; }

    const Degree* antecedent(size_t i) const { return &ant_[i * k_]; }
    const Degree* consequent(size_t i) const { return &con_[i * k_]; }

    void replace_antecedent(size_t i, const LSet& a) {
        bool inert = true;
        for (size_t j = 0; j < k_; ++j) {
            ant_[i * k_ + j] = a[j];
            if (con_[i * k_ + j] > a[j]) inert = false;
        }
        inert_[i] = inert ? 1 : 0;
    }

    /// Degree to which the graded set S is included in N.
    Degree subsethood_in(const Degree* s, const Degree* n) const {
        int v = top_;
        for (size_t j = 0; j < k_; ++j) {
            const int r = res_[size_t(s[j]) * levels_ + n[j]];
            if (r < v) {
                v = r;
                if (v == 0) break;
            }
        }
        return Degree(v);
    }

    bool contains(const Degree* sub, const Degree* n) const {
        for (size_t j = 0; j < k_; ++j)
            if (sub[j] > n[j]) return false;
        return true;
    }

    /// Closes N in place under all active formulas except `exclude`,
    /// iterating rounds until nothing grows. When stop_when is given, stops
    /// early and returns true as soon as stop_when fits inside N (N is then
    /// only partially closed). Without stop_when the return value is false
    /// and N holds the least model containing the input.
    bool close(Degree* n, size_t exclude = npos, const Degree* stop_when = nullptr) {
        if (stop_when && contains(stop_when, n)) return true;
        std::fill(dead_.begin(), dead_.end(), 0);
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i < m_; ++i) {
                if (i == exclude || !active_[i] || dead_[i] || inert_[i]) continue;
                const Degree* a = &ant_[i * k_];
                const Degree* b = &con_[i * k_];
                const int s = subsethood_in(a, n);
                const int hs = hedge_[s];
                if (hs == 0) continue;
                bool grew = false;
                if (hs == top_) {
                    for (size_t j = 0; j < k_; ++j)
                        if (b[j] > n[j]) {
                            n[j] = b[j];
                            grew = true;
                        }
                    // Contributed its whole consequent; it stays inside N from
                    // now on, so this formula can never fire usefully again.
                    dead_[i] = 1;
                } else {
                    const Degree* trow = &ten_[size_t(hs) * levels_];
                    for (size_t j = 0; j < k_; ++j) {
                        const Degree v = trow[b[j]];
                        if (v > n[j]) {
                            n[j] = v;
                            grew = true;
                        }
                    }
                }
                if (grew) {
                    changed = true;
                    if (stop_when && contains(stop_when, n)) return true;
                }
            }
        }
        return stop_when ? contains(stop_when, n) : false;
    }

    LSet least_model_of(const LSet& m, size_t exclude = npos) {
        LSet n = m;
        close(n.data(), exclude);
        return n;
    }

private:
    size_t k_;
    size_t m_;
    int levels_;
    int top_;
    const Degree* ten_;
    const Degree* res_;
    const Degree* hedge_;
    std::vector<Degree> ant_;
    std::vector<Degree> con_;
    std::vector<std::uint8_t> inert_;
    std::vector<std::uint8_t> active_;
    std::vector<std::uint8_t> dead_;
};

} // namespace gai::detail

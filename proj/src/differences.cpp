#include "scldpc/differences.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <set>
#include <sstream>

#include "scldpc/girth_oracle.hpp"

namespace scldpc {

DifferenceTable build_differences(const SyndromeFormer& hs) {
    DifferenceTable t;
    t.a = hs.a();
    t.c = hs.c();
    t.L_h = hs.L_h();
    for (int i = 0; i < hs.a(); ++i) {
        const auto& r = hs.row(i);
        for (std::size_t p = 0; p < r.size(); ++p)
            for (std::size_t q = p + 1; q < r.size(); ++q) {
                const int j = r[p];
                const int d = r[q] - r[p];
                t.records.push_back({i, j, d, j % t.c, (j + d) % t.c});
            }
    }
    // Row-major pair order is already (row, start_col, delta)-sorted.
    t.by_start_level.assign(static_cast<std::size_t>(t.c), {});
    t.by_end_level.assign(static_cast<std::size_t>(t.c), {});
    for (std::size_t id = 0; id < t.records.size(); ++id) {
        t.by_start_level[static_cast<std::size_t>(t.records[id].level_start)].push_back(static_cast<int>(id));
        t.by_end_level[static_cast<std::size_t>(t.records[id].level_end)].push_back(static_cast<int>(id));
    }
    return t;
}

bool has_repeated_difference(const DifferenceTable& t) {
    std::vector<std::pair<int, int>> keys;
    keys.reserve(t.records.size());
    for (const auto& d : t.records) keys.emplace_back(d.delta, d.level_start);
    std::sort(keys.begin(), keys.end());
    return std::adjacent_find(keys.begin(), keys.end()) != keys.end();
}

std::string CycleWitness::report_line() const {
    std::ostringstream os;
    os << length() << ";";
    for (const auto& term : terms)
        os << " (" << term.diff.row << "," << term.diff.start_col << ","
           << (term.sign > 0 ? '+' : '-') << term.diff.delta << ")";
    os << "; anchor=" << (terms.empty() ? 0 : terms.front().block);
    return os.str();
}

namespace {

struct ChainTerm {
    int id;
    int sign;
};

// Turns a signed record chain into its explicit walk. The chain fixes every
// check row and replica index up to one global translation; after anchoring
// the minimum variable block at 0 the walk either has 2l distinct edges (a
// real local cycle) or it does not exist at all under the non-cyclic shift.
std::optional<CycleWitness> materialize(const std::vector<ChainTerm>& chain,
                                        const DifferenceTable& t) {
    const int l = static_cast<int>(chain.size());
    std::vector<int> blocks(static_cast<std::size_t>(l));
    std::vector<int> check_at(static_cast<std::size_t>(l) + 1);
    // The running check row stays congruent to the current level mod c, so
    // starting it at the chain's starting level keeps every division exact.
    const int start_level = t.records[static_cast<std::size_t>(chain[0].id)].level_start;
    int x = start_level;
    int min_block = std::numeric_limits<int>::max();
    check_at[0] = x;
    for (int k = 0; k < l; ++k) {
        const Difference& d = t.records[static_cast<std::size_t>(chain[static_cast<std::size_t>(k)].id)];
        const int sign = chain[static_cast<std::size_t>(k)].sign;
        const int entry_col = sign > 0 ? d.start_col : d.start_col + d.delta;
        assert((x - entry_col) % t.c == 0);
        blocks[static_cast<std::size_t>(k)] = (x - entry_col) / t.c;
        min_block = std::min(min_block, blocks[static_cast<std::size_t>(k)]);
        x += sign * d.delta;
        check_at[static_cast<std::size_t>(k) + 1] = x;
    }
    assert(x == start_level);

    CycleWitness w;
    w.terms.reserve(static_cast<std::size_t>(l));
    w.edges.reserve(static_cast<std::size_t>(2 * l));
    const int row_shift = -min_block * t.c;
    for (int k = 0; k < l; ++k) {
        const ChainTerm& term = chain[static_cast<std::size_t>(k)];
        const Difference& d = t.records[static_cast<std::size_t>(term.id)];
        const int block = blocks[static_cast<std::size_t>(k)] - min_block;
        const int var_col = block * t.a + d.row;
        w.terms.push_back({d, term.sign, block});
        w.edges.emplace_back(check_at[static_cast<std::size_t>(k)] + row_shift, var_col);
        w.edges.emplace_back(check_at[static_cast<std::size_t>(k) + 1] + row_shift, var_col);
    }
    auto sorted = w.edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
    return w;
}

std::vector<std::pair<int, int>> witness_key(const CycleWitness& w) {
    auto key = w.edges;
    std::sort(key.begin(), key.end());
    return key;
}

// Enumerates valid signed chains of exactly `l` records: first sign +, level
// chaining at every junction, zero total signed sum, closing level equal to
// the starting one, and no record appearing with both signs in two cyclically
// adjacent terms. A backward reachability table prunes every branch that
// cannot be completed, so the walk over the search tree is proportional to
// the number of valid chains.
class ChainEnumerator {
public:
    ChainEnumerator(const DifferenceTable& table, int l) : t_(table), l_(l) {
        delta_max_ = 0;
        for (const auto& d : t_.records) delta_max_ = std::max(delta_max_, d.delta);
        sum_off_ = l_ * delta_max_;
        sum_range_ = 2 * sum_off_ + 1;
        build_reach();
        build_candidates();
    }

    // emit returns false to abort the whole enumeration.
    void run(const std::function<bool(const std::vector<ChainTerm>&)>& emit) {
        if (t_.records.empty() || delta_max_ == 0) return;
        stack_.clear();
        aborted_ = false;
        for (int id = 0; id < static_cast<int>(t_.records.size()) && !aborted_; ++id) {
            const Difference& d = t_.records[static_cast<std::size_t>(id)];
            const int lam0 = d.level_start;
            if (!reach_at(1, lam0, d.level_end, d.delta)) continue;
            stack_.push_back({id, +1});
            descend(1, lam0, d.level_end, d.delta, emit);
            stack_.pop_back();
        }
    }

private:
    bool reach_at(int k, int lam0, int lev, int sum) const {
        if (sum < -sum_off_ || sum > sum_off_) return false;
        const std::size_t idx =
            ((static_cast<std::size_t>(k) * static_cast<std::size_t>(t_.c) + static_cast<std::size_t>(lam0)) *
                 static_cast<std::size_t>(t_.c) +
             static_cast<std::size_t>(lev)) *
                static_cast<std::size_t>(sum_range_) +
            static_cast<std::size_t>(sum + sum_off_);
        return reach_[idx] != 0;
    }

    void set_reach(int k, int lam0, int lev, int sum) {
        const std::size_t idx =
            ((static_cast<std::size_t>(k) * static_cast<std::size_t>(t_.c) + static_cast<std::size_t>(lam0)) *
                 static_cast<std::size_t>(t_.c) +
             static_cast<std::size_t>(lev)) *
                static_cast<std::size_t>(sum_range_) +
            static_cast<std::size_t>(sum + sum_off_);
        reach_[idx] = 1;
    }

    void build_reach() {
        reach_.assign(static_cast<std::size_t>(l_ + 1) * static_cast<std::size_t>(t_.c) *
                          static_cast<std::size_t>(t_.c) * static_cast<std::size_t>(sum_range_),
                      0);
        for (int lam0 = 0; lam0 < t_.c; ++lam0) set_reach(l_, lam0, lam0, 0);
        for (int k = l_ - 1; k >= 1; --k) {
            const int abs_cap = std::min(sum_off_, k * delta_max_);
            for (int lam0 = 0; lam0 < t_.c; ++lam0)
                for (int lev = 0; lev < t_.c; ++lev)
                    for (int sum = -abs_cap; sum <= abs_cap; ++sum) {
                        bool ok = false;
                        for (int id : t_.by_start_level[static_cast<std::size_t>(lev)]) {
                            const Difference& d = t_.records[static_cast<std::size_t>(id)];
                            if (reach_at(k + 1, lam0, d.level_end, sum + d.delta)) {
                                ok = true;
                                break;
                            }
                        }
                        if (!ok)
                            for (int id : t_.by_end_level[static_cast<std::size_t>(lev)]) {
                                const Difference& d = t_.records[static_cast<std::size_t>(id)];
                                if (reach_at(k + 1, lam0, d.level_start, sum - d.delta)) {
                                    ok = true;
                                    break;
                                }
                            }
                        if (ok) set_reach(k, lam0, lev, sum);
                    }
        }
    }

    // Per level, the (id, sign) extension candidates in lexicographic order
    // (record id ascending, + before -).
    void build_candidates() {
        candidates_.assign(static_cast<std::size_t>(t_.c), {});
        for (int lev = 0; lev < t_.c; ++lev) {
            const auto& plus = t_.by_start_level[static_cast<std::size_t>(lev)];
            const auto& minus = t_.by_end_level[static_cast<std::size_t>(lev)];
            auto& out = candidates_[static_cast<std::size_t>(lev)];
            std::size_t p = 0, m = 0;
            while (p < plus.size() || m < minus.size()) {
                if (m >= minus.size() || (p < plus.size() && plus[p] <= minus[m]))
                    out.push_back({plus[p++], +1});
                else
                    out.push_back({minus[m++], -1});
            }
        }
    }

    void descend(int k, int lam0, int lev, int sum,
                 const std::function<bool(const std::vector<ChainTerm>&)>& emit) {
        if (aborted_) return;
        if (k == l_) {
            assert(lev == lam0 && sum == 0);
            const ChainTerm& first = stack_.front();
            const ChainTerm& last = stack_.back();
            if (last.id == first.id && last.sign != first.sign) return;  // cyclic adjacency rule
            if (!emit(stack_)) aborted_ = true;
            return;
        }
        const ChainTerm prev = stack_.back();
        for (const ChainTerm& cand : candidates_[static_cast<std::size_t>(lev)]) {
            if (cand.id == prev.id && cand.sign != prev.sign) continue;  // adjacent both-signs rule
            const Difference& d = t_.records[static_cast<std::size_t>(cand.id)];
            const int nlev = cand.sign > 0 ? d.level_end : d.level_start;
            const int nsum = sum + cand.sign * d.delta;
            if (!reach_at(k + 1, lam0, nlev, nsum)) continue;
            stack_.push_back(cand);
            descend(k + 1, lam0, nlev, nsum, emit);
            stack_.pop_back();
            if (aborted_) return;
        }
    }

    const DifferenceTable& t_;
    int l_;
    int delta_max_ = 0;
    int sum_off_ = 0;
    int sum_range_ = 1;
    std::vector<char> reach_;
    std::vector<std::vector<ChainTerm>> candidates_;
    std::vector<ChainTerm> stack_;
    bool aborted_ = false;
};

void require_chain_cap(int g) {
    if (g < 4 || g % 2 != 0)
        throw invalid_params("cycle length cap must be even and >= 4, got " + std::to_string(g));
    if (g > kGirthCapLimit)
        throw cap_exceeded("cycle length cap " + std::to_string(g) + " above the configured limit " +
                           std::to_string(kGirthCapLimit));
}

}  // namespace

std::vector<CycleWitness> find_4cycles(const DifferenceTable& t) {
    std::vector<int> ids(t.records.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    std::stable_sort(ids.begin(), ids.end(), [&](int x, int y) {
        const auto& dx = t.records[static_cast<std::size_t>(x)];
        const auto& dy = t.records[static_cast<std::size_t>(y)];
        return std::pair(dx.delta, dx.level_start) < std::pair(dy.delta, dy.level_start);
    });
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t lo = 0; lo < ids.size();) {
        std::size_t hi = lo + 1;
        const auto& d = t.records[static_cast<std::size_t>(ids[lo])];
        while (hi < ids.size()) {
            const auto& e = t.records[static_cast<std::size_t>(ids[hi])];
            if (e.delta != d.delta || e.level_start != d.level_start) break;
            ++hi;
        }
        for (std::size_t p = lo; p < hi; ++p)
            for (std::size_t q = p + 1; q < hi; ++q)
                pairs.emplace_back(std::min(ids[p], ids[q]), std::max(ids[p], ids[q]));
        lo = hi;
    }
    std::sort(pairs.begin(), pairs.end());
    std::vector<CycleWitness> out;
    out.reserve(pairs.size());
    for (const auto& [i, j] : pairs) {
        auto w = materialize({{i, +1}, {j, -1}}, t);
        assert(w.has_value());  // equal delta, equal level always realizes a 4-cycle
        if (w) out.push_back(std::move(*w));
    }
    return out;
}

std::vector<CycleWitness> find_cycles(const SyndromeFormer& hs, int g_max, std::size_t max_witnesses) {
    require_chain_cap(g_max);
    const DifferenceTable t = build_differences(hs);
    std::vector<CycleWitness> out;
    for (int l = 2; l <= g_max / 2; ++l) {
        std::set<std::vector<std::pair<int, int>>> seen;
        ChainEnumerator chains(t, l);
        chains.run([&](const std::vector<ChainTerm>& chain) {
            auto w = materialize(chain, t);
            if (w && seen.insert(witness_key(*w)).second) {
                out.push_back(std::move(*w));
                if (out.size() >= max_witnesses) return false;
            }
            return true;
        });
        if (out.size() >= max_witnesses) break;
    }
    return out;
}

std::optional<int> girth_via_differences(const SyndromeFormer& hs, int g_cap) {
    require_chain_cap(g_cap);
    const DifferenceTable t = build_differences(hs);
    for (int l = 2; l <= g_cap / 2; ++l) {
        bool found = false;
        ChainEnumerator chains(t, l);
        chains.run([&](const std::vector<ChainTerm>& chain) {
            if (materialize(chain, t)) {
                found = true;
                return false;
            }
            return true;
        });
        if (found) return 2 * l;
    }
    return std::nullopt;
}

}  // namespace scldpc

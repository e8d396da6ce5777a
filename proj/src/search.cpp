#include "scldpc/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "scldpc/bounds.hpp"
#include "scldpc/girth_oracle.hpp"
#include "scldpc/rng.hpp"

namespace scldpc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void validate_spec(const SearchSpec& s) {
    if (s.a < 1 || s.c < 1 || s.a <= s.c)
        throw invalid_params("search: need a > c >= 1");
    if (static_cast<int>(s.row_weights.size()) != s.a)
        throw invalid_params("search: expected " + std::to_string(s.a) + " row weights");
    for (int w : s.row_weights)
        if (w < 1) throw invalid_params("search: row weights must be >= 1");
    if (s.girth < 4 || s.girth % 2 != 0)
        throw invalid_params("search: target girth must be even and >= 4");
    if (s.budget < 1) throw invalid_params("search: budget must be >= 1");
    if (s.workers < 1) throw invalid_params("search: workers must be >= 1");
}

// Tracks per-(delta, starting level) multiplicities; a second occurrence of
// any key is a length-4 cycle. Stamped so clearing is O(1) per candidate.
class CollisionGrid {
public:
    void reset(int L_h, int c) {
        c_ = c;
        const std::size_t need = static_cast<std::size_t>(L_h) * static_cast<std::size_t>(c);
        if (counts_.size() < need) {
            counts_.assign(need, 0);
            stamps_.assign(need, 0);
        }
        ++epoch_;
        trail_.clear();
    }

    // Adds every difference of `row`; returns false on the first collision
    // (the grid keeps the additions either way; use mark()/rollback()).
    bool add_row(const std::vector<int>& row) {
        bool clean = true;
        for (std::size_t p = 0; p < row.size(); ++p)
            for (std::size_t q = p + 1; q < row.size(); ++q) {
                const int delta = row[q] - row[p];
                const int level = row[p] % c_;
                const std::size_t key =
                    static_cast<std::size_t>(delta) * static_cast<std::size_t>(c_) +
                    static_cast<std::size_t>(level);
                if (stamps_[key] != epoch_) {
                    stamps_[key] = epoch_;
                    counts_[key] = 0;
                }
                if (++counts_[key] > 1) clean = false;
                trail_.push_back(key);
            }
        return clean;
    }

    std::size_t mark() const { return trail_.size(); }

    void rollback(std::size_t mark) {
        while (trail_.size() > mark) {
            --counts_[trail_.back()];
            trail_.pop_back();
        }
    }

private:
    int c_ = 1;
    std::vector<int> counts_;
    std::vector<std::uint64_t> stamps_;
    std::vector<std::size_t> trail_;
    std::uint64_t epoch_ = 0;
};

// All ascending w-subsets of [0, L_h) whose least element is < c, in
// lexicographic order. Shifting a row by multiples of c relabels replicas
// and preserves every cycle, so one representative per shift class suffices.
std::vector<std::vector<int>> normalized_row_candidates(int w, int c, int L_h) {
    std::vector<std::vector<int>> out;
    if (w > L_h) return out;
    std::vector<int> cur(static_cast<std::size_t>(w));
    auto rec = [&](auto&& self, int slot, int from) -> void {
        if (slot == w) {
            out.push_back(cur);
            return;
        }
        const int hi = L_h - (w - slot - 1);
        const int limit = slot == 0 ? std::min(hi, c) : hi;
        for (int v = from; v < limit; ++v) {
            cur[static_cast<std::size_t>(slot)] = v;
            self(self, slot + 1, v + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

bool lex_less(const std::vector<std::vector<int>>& x, const std::vector<std::vector<int>>& y) {
    return x < y;
}

struct PhaseResult {
    std::optional<std::vector<std::vector<int>>> best_rows;
    std::uint64_t examined = 0;
    bool budget_hit = false;
};

// ---------------------------------------------------------------------------
// Exhaustive enumeration at one width.
// ---------------------------------------------------------------------------

struct ExhaustivePhase {
    int a, c, L_h, girth;
    std::vector<int> weights;  // ascending; rows with equal weight are enumerated as a multiset
    std::uint64_t budget_left;
    int workers;

    PhaseResult run() const;
};

struct ExhaustiveWorker {
    const ExhaustivePhase& phase;
    const std::vector<std::vector<std::vector<int>>>& cands_per_slot;  // shared, per slot
    std::atomic<std::uint64_t>& examined;
    std::atomic<bool>& stop;
    std::atomic<int>& best_first;  // least first-slot candidate index that produced a hit
    int first_lo, first_stride;

    std::optional<std::vector<std::vector<int>>> best{};
    CollisionGrid grid{};
    std::vector<int> chosen{};  // candidate index per slot
    int max_index = -1;

    void run() {
        grid.reset(phase.L_h, phase.c);
        chosen.assign(static_cast<std::size_t>(phase.a), 0);
        const auto& firsts = cands_per_slot[0];
        for (int i = first_lo; i < static_cast<int>(firsts.size()); i += first_stride) {
            if (stop.load(std::memory_order_relaxed)) return;
            if (i > best_first.load(std::memory_order_relaxed)) return;  // cannot beat an earlier hit
            if (descend(0, i)) {
                // Candidates are explored in lexicographic order, so this is
                // the worker's minimum; publish the first-slot index so other
                // workers stop scanning lexicographically later subtrees.
                int cur = best_first.load();
                while (i < cur && !best_first.compare_exchange_weak(cur, i)) {
                }
                return;
            }
        }
    }

    // Places candidate `idx` in `slot`; returns true when the subtree found a
    // hit (enumeration below this worker's first slot is lexicographic, so
    // the first hit is the worker's minimum).
    bool descend(int slot, int idx) {
        if (stop.load(std::memory_order_relaxed)) return false;
        const auto& row = cands_per_slot[static_cast<std::size_t>(slot)][static_cast<std::size_t>(idx)];
        const std::size_t mark = grid.mark();
        const bool clean = phase.girth >= 6 ? grid.add_row(row) : (grid.add_row(row), true);
        const int prev_max = max_index;
        max_index = std::max(max_index, row.back());
        chosen[static_cast<std::size_t>(slot)] = idx;
        bool hit = false;
        if (clean) {
            if (slot + 1 == phase.a)
                hit = evaluate_leaf();
            else {
                const auto& next_cands = cands_per_slot[static_cast<std::size_t>(slot) + 1];
                const bool same_class = phase.weights[static_cast<std::size_t>(slot) + 1] ==
                                        phase.weights[static_cast<std::size_t>(slot)];
                const int from = same_class ? idx : 0;
                for (int j = from; j < static_cast<int>(next_cands.size()); ++j)
                    if (descend(slot + 1, j)) {
                        hit = true;
                        break;
                    }
            }
        }
        grid.rollback(mark);
        max_index = prev_max;
        return hit;
    }

    bool evaluate_leaf() {
        const std::uint64_t n = examined.fetch_add(1, std::memory_order_relaxed) + 1;
        if (n >= phase.budget_left) stop.store(true, std::memory_order_relaxed);
        if (max_index != phase.L_h - 1) return false;  // tight width: class is owned by a smaller L_h
        if (phase.girth > 6) {
            std::vector<std::vector<int>> rows;
            rows.reserve(static_cast<std::size_t>(phase.a));
            for (int s = 0; s < phase.a; ++s)
                rows.push_back(cands_per_slot[static_cast<std::size_t>(s)]
                                             [static_cast<std::size_t>(chosen[static_cast<std::size_t>(s)])]);
            auto hs = SyndromeFormer::trusted(phase.a, phase.c, phase.L_h, std::move(rows));
            if (!girth_at_least(hs, phase.girth)) return false;
            best = hs.rows();
            return true;
        }
        // girth <= 6: the repeated-difference filter is the complete test
        std::vector<std::vector<int>> rows;
        rows.reserve(static_cast<std::size_t>(phase.a));
        for (int s = 0; s < phase.a; ++s)
            rows.push_back(cands_per_slot[static_cast<std::size_t>(s)]
                                         [static_cast<std::size_t>(chosen[static_cast<std::size_t>(s)])]);
        best = std::move(rows);
        return true;
    }
};

PhaseResult ExhaustivePhase::run() const {
    std::vector<std::vector<std::vector<int>>> cands_per_slot;
    cands_per_slot.reserve(static_cast<std::size_t>(a));
    for (int s = 0; s < a; ++s) {
        if (s > 0 && weights[static_cast<std::size_t>(s)] == weights[static_cast<std::size_t>(s) - 1])
            cands_per_slot.push_back(cands_per_slot.back());
        else
            cands_per_slot.push_back(normalized_row_candidates(weights[static_cast<std::size_t>(s)], c, L_h));
    }
    PhaseResult result;
    if (cands_per_slot[0].empty()) return result;

    std::atomic<std::uint64_t> examined{0};
    std::atomic<bool> stop{false};
    std::atomic<int> best_first{std::numeric_limits<int>::max()};

    const int n_workers = std::min<int>(workers, static_cast<int>(cands_per_slot[0].size()));
    std::vector<ExhaustiveWorker> ws;
    ws.reserve(static_cast<std::size_t>(std::max(1, n_workers)));
    for (int k = 0; k < std::max(1, n_workers); ++k)
        ws.push_back(ExhaustiveWorker{*this, cands_per_slot, examined, stop, best_first, k,
                                      std::max(1, n_workers)});

    if (ws.size() == 1) {
        ws[0].run();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(ws.size());
        for (auto& w : ws) threads.emplace_back([&w] { w.run(); });
        for (auto& th : threads) th.join();
    }

    for (auto& w : ws)
        if (w.best && (!result.best_rows || lex_less(*w.best, *result.best_rows)))
            result.best_rows = std::move(w.best);
    result.examined = examined.load();
    result.budget_hit = stop.load();  // an aborted scan proves nothing beyond what it found
    return result;
}

// ---------------------------------------------------------------------------
// Monte Carlo sampling at one width.
// ---------------------------------------------------------------------------

struct RandomPhase {
    int a, c, L_h, girth;
    std::vector<int> weights;  // spec order, not canonicalized
    std::uint64_t seed;
    std::uint64_t index_base;  // global index of this phase's first candidate
    std::uint64_t count;
    int workers;

    PhaseResult run() const;
};

struct RandomWorker {
    const RandomPhase& phase;
    std::uint64_t lo, stride;

    std::optional<std::vector<std::vector<int>>> best{};
    std::uint64_t examined = 0;
    CollisionGrid grid{};
    std::vector<int> pool{};

    void run() {
        const int m_h = ceil_div(phase.L_h, phase.c) - 1;
        const int canonical_floor = m_h * phase.c;
        std::vector<std::vector<int>> rows(static_cast<std::size_t>(phase.a));
        for (std::uint64_t i = lo; i < phase.count; i += stride) {
            Xoshiro256ss rng(derive_stream(phase.seed, phase.index_base + i));
            bool canonical = false;
            for (int attempt = 0; attempt < 256 && !canonical; ++attempt) {
                int max_index = -1;
                for (int r = 0; r < phase.a; ++r) {
                    draw_support(rng, phase.weights[static_cast<std::size_t>(r)],
                                 rows[static_cast<std::size_t>(r)]);
                    max_index = std::max(max_index, rows[static_cast<std::size_t>(r)].back());
                }
                canonical = max_index >= canonical_floor;  // else redraw, never repair
            }
            ++examined;
            if (!canonical) continue;
            grid.reset(phase.L_h, phase.c);
            bool clean = phase.girth < 6;
            if (!clean) {
                clean = true;
                for (const auto& row : rows)
                    if (!grid.add_row(row)) {
                        clean = false;
                        break;
                    }
            }
            if (!clean) continue;
            if (phase.girth > 6) {
                auto hs = SyndromeFormer::trusted(phase.a, phase.c, phase.L_h, rows);
                if (!girth_at_least(hs, phase.girth)) continue;
            }
            if (!best || lex_less(rows, *best)) best = rows;
        }
    }

    // Each draw starts from the identity pool so a support is a pure function
    // of the candidate's stream, whatever worker processed it before.
    void draw_support(Xoshiro256ss& rng, int w, std::vector<int>& out) {
        pool.resize(static_cast<std::size_t>(phase.L_h));
        std::iota(pool.begin(), pool.end(), 0);
        for (int k = 0; k < w; ++k) {
            const std::uint64_t j =
                static_cast<std::uint64_t>(k) + rng.below(static_cast<std::uint64_t>(phase.L_h - k));
            std::swap(pool[static_cast<std::size_t>(k)], pool[static_cast<std::size_t>(j)]);
        }
        out.assign(pool.begin(), pool.begin() + w);
        std::sort(out.begin(), out.end());
    }
};

PhaseResult RandomPhase::run() const {
    const int n_workers = static_cast<int>(std::min<std::uint64_t>(
        static_cast<std::uint64_t>(std::max(1, workers)), std::max<std::uint64_t>(1, count)));
    std::vector<RandomWorker> ws;
    ws.reserve(static_cast<std::size_t>(n_workers));
    for (int k = 0; k < n_workers; ++k)
        ws.push_back(RandomWorker{*this, static_cast<std::uint64_t>(k),
                                  static_cast<std::uint64_t>(n_workers)});
    if (ws.size() == 1) {
        ws[0].run();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(ws.size());
        for (auto& w : ws) threads.emplace_back([&w] { w.run(); });
        for (auto& th : threads) th.join();
    }
    PhaseResult result;
    for (auto& w : ws) {
        result.examined += w.examined;
        if (w.best && (!result.best_rows || lex_less(*w.best, *result.best_rows)))
            result.best_rows = std::move(w.best);
    }
    return result;
}

SearchOutcome finalize(const SearchSpec& spec, std::optional<SyndromeFormer> best,
                       std::uint64_t candidates, double elapsed, ProofFlag proof) {
    SearchOutcome out;
    out.candidates = candidates;
    out.elapsed_s = elapsed;
    out.proof = proof;
    if (best) {
        const int report_cap = std::min(std::max(spec.girth, 12), kGirthCapLimit);
        const auto g = conv_girth(*best, report_cap);
        if (g && *g < spec.girth)
            throw std::logic_error("search produced a candidate below the target girth");
        out.girth_found = g;
        out.best = std::move(best);
    }
    return out;
}

}  // namespace

std::optional<int> search_floor(int a, int c, const std::vector<int>& row_weights, int girth) {
    int floor = c + 1;
    for (int w : row_weights) floor = std::max(floor, w);
    const bool boundable = std::all_of(row_weights.begin(), row_weights.end(),
                                       [](int w) { return w >= 2; });
    if (boundable && girth >= 6) {
        // girth >= g implies girth >= 8, so the g=8 bound applies to any g >= 8.
        const auto b = bound_for_girth(a, c, row_weights, girth >= 8 ? 8 : 6);
        if (b) {
            if (!b->feasible) return std::nullopt;
            floor = std::max(floor, static_cast<int>(*b->Lh_lower));
        }
    }
    return floor;
}

SearchOutcome exhaustive_min_Lh(const SearchSpec& spec, const ProgressFn& progress) {
    validate_spec(spec);
    const auto t0 = Clock::now();
    const auto floor = search_floor(spec.a, spec.c, spec.row_weights, spec.girth);
    if (!floor)  // target girth unreachable for these weights (c=1, some w_i >= 3)
        return finalize(spec, std::nullopt, 0, seconds_since(t0), ProofFlag::complete);

    std::vector<int> weights = spec.row_weights;
    std::sort(weights.begin(), weights.end());

    const int lo = std::max(spec.Lh_min > 0 ? spec.Lh_min : *floor, *floor);
    const int hi = spec.Lh_max > 0 ? std::max(lo, spec.Lh_max) : lo + 32;
    std::uint64_t examined = 0;
    for (int L_h = lo; L_h <= hi; ++L_h) {
        if (examined >= spec.budget)
            return finalize(spec, std::nullopt, examined, seconds_since(t0),
                            ProofFlag::budget_exceeded);
        ExhaustivePhase phase{spec.a, spec.c, L_h, spec.girth, weights, spec.budget - examined,
                              spec.workers};
        PhaseResult r = phase.run();
        examined += r.examined;
        if (progress) progress(examined, std::nullopt, seconds_since(t0));
        if (r.best_rows) {
            auto hs = SyndromeFormer(spec.a, spec.c, L_h, std::move(*r.best_rows));
            return finalize(spec, std::move(hs), examined, seconds_since(t0),
                            r.budget_hit ? ProofFlag::budget_exceeded : ProofFlag::complete);
        }
        if (r.budget_hit)
            return finalize(spec, std::nullopt, examined, seconds_since(t0),
                            ProofFlag::budget_exceeded);
    }
    return finalize(spec, std::nullopt, examined, seconds_since(t0), ProofFlag::complete);
}

SearchOutcome montecarlo_search(const SearchSpec& spec, const ProgressFn& progress) {
    validate_spec(spec);
    const auto t0 = Clock::now();
    const auto floor = search_floor(spec.a, spec.c, spec.row_weights, spec.girth);
    if (!floor)
        return finalize(spec, std::nullopt, 0, seconds_since(t0), ProofFlag::heuristic);

    const int lo = std::max(spec.Lh_min > 0 ? spec.Lh_min : *floor, *floor);
    const int hi = spec.Lh_max > 0 ? std::max(lo, spec.Lh_max) : lo + 32;
    const std::uint64_t n_widths = static_cast<std::uint64_t>(hi - lo + 1);
    const std::uint64_t per_width = spec.budget / n_widths;
    const std::uint64_t leftover = spec.budget % n_widths;

    std::uint64_t examined = 0;
    std::uint64_t index_base = 0;
    std::optional<SyndromeFormer> best;
    for (int L_h = lo; L_h <= hi; ++L_h) {
        const std::uint64_t count =
            per_width + (static_cast<std::uint64_t>(L_h - lo) < leftover ? 1 : 0);
        if (count == 0) continue;
        RandomPhase phase{spec.a,   spec.c,     L_h,   spec.girth, spec.row_weights,
                          spec.seed, index_base, count, spec.workers};
        PhaseResult r = phase.run();
        examined += r.examined;
        index_base += count;
        if (r.best_rows) {
            best = SyndromeFormer(spec.a, spec.c, L_h, std::move(*r.best_rows));
            if (progress)
                progress(examined, best->m_h(), seconds_since(t0));
            break;  // later widths cannot improve (m_h, L_h, lex)
        }
        if (progress) progress(examined, std::nullopt, seconds_since(t0));
    }
    return finalize(spec, std::move(best), examined, seconds_since(t0), ProofFlag::heuristic);
}

VerifyReport verify_code(const SyndromeFormer& hs, int cap) {
    if (cap < 4 || cap % 2 != 0 || cap > kGirthCapLimit)
        throw invalid_params("verify: cap must be even, >= 4 and <= " +
                             std::to_string(kGirthCapLimit));
    const auto derived = derive_params(hs.a(), hs.c(), hs.L_h());
    VerifyReport r;
    r.a = hs.a();
    r.c = hs.c();
    r.L_h = hs.L_h();
    r.m_h = derived.m_h;
    r.v_s = derived.v_s;
    r.R = derived.R;
    r.cap = cap;
    r.girth = conv_girth(hs, cap);
    if (r.girth) {
        auto all = find_cycles(hs, *r.girth);
        std::erase_if(all, [&](const CycleWitness& w) { return w.length() != *r.girth; });
        if (all.empty())
            throw std::logic_error("difference search found no witness at the oracle girth");
        r.witnesses = std::move(all);
    }
    return r;
}

std::string VerifyReport::to_text(std::size_t max_witness_lines) const {
    std::ostringstream os;
    os << "a=" << a << " c=" << c << " L_h=" << L_h << '\n';
    os << "m_h=" << m_h << " v_s=" << v_s << " R=" << to_string(R) << '\n';
    if (girth)
        os << "girth=" << *girth << " (cap=" << cap << ")\n";
    else
        os << "girth=exceeds-cap (cap=" << cap << ")\n";
    if (girth) {
        os << "shortest_cycles=" << witnesses.size() << '\n';
        std::size_t shown = 0;
        for (const auto& w : witnesses) {
            if (shown++ >= max_witness_lines) {
                os << "... (" << witnesses.size() - max_witness_lines << " more)\n";
                break;
            }
            os << w.report_line() << '\n';
        }
    }
    return os.str();
}

}  // namespace scldpc

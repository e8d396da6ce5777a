#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "scldpc/code_model.hpp"
#include "scldpc/differences.hpp"
#include "scldpc/rational.hpp"

namespace scldpc {

enum class SearchMode { exhaustive, random };

enum class ProofFlag {
    complete,         // the stated range was searched exhaustively
    heuristic,        // randomized sampling, no completeness claim
    budget_exceeded,  // stopped early; any result is valid but unproven minimal
};

struct SearchSpec {
    int a = 0;
    int c = 0;
    std::vector<int> row_weights;  // one entry per row
    int girth = 6;
    SearchMode mode = SearchMode::exhaustive;
    int Lh_min = 0;  // 0 = start at the closed-form bound when one exists
    int Lh_max = 0;  // 0 = Lh_min + 32
    std::uint64_t budget = 1'000'000;  // random: candidates drawn; exhaustive: guard on leaves visited
    std::uint64_t seed = 1;
    int workers = 1;
};

struct SearchOutcome {
    std::optional<SyndromeFormer> best;
    std::optional<int> girth_found;  // oracle-verified; nullopt = exceeds the report cap
    std::uint64_t candidates = 0;
    double elapsed_s = 0.0;
    ProofFlag proof = ProofFlag::complete;
};

using ProgressFn = std::function<void(std::uint64_t candidates, std::optional<int> best_mh, double elapsed_s)>;

/// Smallest L_h worth searching: the closed-form bound when g is 6 or 8,
/// otherwise the g=8 bound for g >= 10 (girth >= 10 implies girth >= 8),
/// clamped to c+1 and the largest row weight. nullopt when the target is
/// infeasible outright (c=1 with any w_i >= 3 and g >= 8).
std::optional<int> search_floor(int a, int c, const std::vector<int>& row_weights, int girth);

/// Scans L_h upward through the spec range, enumerating one canonical
/// representative per equivalence class at each width: rows sorted within
/// equal-weight classes, every row shifted so its least index is < c, and
/// the largest index equal to L_h - 1 so each class appears at exactly one
/// width. Candidates are filtered by the repeated-difference test first,
/// then by the girth oracle. The first surviving representative at the
/// smallest width is the minimum under the (m_h, L_h, lexicographic H_s)
/// objective; it is re-verified with conv_girth before emission.
SearchOutcome exhaustive_min_Lh(const SearchSpec& spec, const ProgressFn& progress = {});

/// Draws spec.budget candidates spread over the width range in ascending
/// phases; each candidate's rows are sampled uniformly without replacement
/// from [0, L_h), redrawing candidates whose final column block is empty.
/// Candidate i is generated from the substream derive_stream(seed, i), so
/// the outcome is identical for any worker count. Stops after the first
/// width with a hit (later widths cannot improve the objective).
SearchOutcome montecarlo_search(const SearchSpec& spec, const ProgressFn& progress = {});

struct VerifyReport {
    int a = 0;
    int c = 0;
    int L_h = 0;
    int m_h = 0;
    long long v_s = 0;
    Rational R;
    int cap = 12;
    std::optional<int> girth;
    std::vector<CycleWitness> witnesses;  // all shortest cycles, when girth <= cap

    std::string to_text(std::size_t max_witness_lines = SIZE_MAX) const;
};

/// Parameters from the code model, girth from the graph oracle, witnesses
/// from the difference-chain search at the shortest length present.
VerifyReport verify_code(const SyndromeFormer& hs, int cap = 12);

}  // namespace scldpc

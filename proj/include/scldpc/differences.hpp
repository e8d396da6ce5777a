#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scldpc/code_model.hpp"

namespace scldpc {

/// One intra-row distance of H_s: a pair of ones in `row` at columns
/// start_col and start_col + delta. Levels are the column residues mod c.
struct Difference {
    int row = 0;
    int start_col = 0;
    int delta = 0;
    int level_start = 0;  // start_col mod c
    int level_end = 0;    // (start_col + delta) mod c

    friend bool operator==(const Difference&, const Difference&) = default;
};

/// All differences of an H_s, with per-level indexes for chain extension.
/// Row i contributes exactly C(w_i, 2) records.
struct DifferenceTable {
    int a = 0;
    int c = 1;
    int L_h = 0;
    std::vector<Difference> records;               // sorted by (row, start_col, delta)
    std::vector<std::vector<int>> by_start_level;  // level -> record ids, ascending
    std::vector<std::vector<int>> by_end_level;
};

DifferenceTable build_differences(const SyndromeFormer& hs);

/// True iff some two records share (delta, starting level): the length-4
/// cycle condition. The two records may lie in the same row.
bool has_repeated_difference(const DifferenceTable& t);

struct CycleTerm {
    Difference diff;
    int sign = +1;  // +1 or -1
    int block = 0;  // replica index of the traversed variable in the anchored walk
};

/// A closed walk in the semi-infinite Tanner graph: 2*terms.size() edges,
/// each traversed once. The signed deltas sum to zero, levels chain at every
/// junction, and `edges` is the explicit anchored walk (minimum variable
/// block = 0).
struct CycleWitness {
    std::vector<CycleTerm> terms;
    std::vector<std::pair<int, int>> edges;  // (check row, variable column), walk order

    int length() const { return 2 * static_cast<int>(terms.size()); }

    /// "length; (row,start,+delta) ...; anchor=<first term's block>"
    std::string report_line() const;
};

/// One witness per unordered pair of distinct records with equal delta and
/// equal starting level. Empty iff girth >= 6.
std::vector<CycleWitness> find_4cycles(const DifferenceTable& t);

/// All local cycles of length <= g_max, one witness per equivalence class
/// under rotation, reversal and whole-walk translation. Candidate signed
/// chains are generated from the level-chaining rules; whether a candidate
/// exists under the non-cyclic shift is decided by materializing its walk,
/// so every returned witness is real. Deterministic: chains are explored by
/// increasing length, then lexicographic record order.
std::vector<CycleWitness> find_cycles(const SyndromeFormer& hs, int g_max,
                                      std::size_t max_witnesses = SIZE_MAX);

/// Smallest cycle length <= g_cap found by the difference-chain search,
/// nullopt if none. Agrees with conv_girth on every input.
std::optional<int> girth_via_differences(const SyndromeFormer& hs, int g_cap);

}  // namespace scldpc

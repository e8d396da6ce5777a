#pragma once

#include <optional>
#include <vector>

#include "scldpc/errors.hpp"
#include "scldpc/rational.hpp"

namespace scldpc {

inline int ceil_div(int x, int y) { return (x + y - 1) / y; }

/// Code parameters (a, c, L_h, row weights). m_h, v_s and R are never stored;
/// they are recomputed from (a, c, L_h) so they cannot drift out of sync.
struct CodeParams {
    int a = 0;
    int c = 0;
    int L_h = 0;
    std::vector<int> row_weights;

    int memory_order() const { return ceil_div(L_h, c) - 1; }
    long long constraint_length() const { return static_cast<long long>(memory_order() + 1) * a; }
    Rational rate() const { return make_rational(a - c, a); }

    friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

struct DerivedParams {
    int m_h = 0;
    long long v_s = 0;
    Rational R;
};

/// m_h = ceil(L_h/c) - 1, v_s = (m_h+1)*a, R = (a-c)/a.
/// Throws invalid_params unless a > c >= 1 and L_h >= 1.
DerivedParams derive_params(int a, int c, int L_h);

/// The a x L_h binary syndrome former H_s, stored as per-row ascending column
/// supports. Always canonical: the final length-c column block is nonempty,
/// otherwise L_h (and with it m_h, v_s) would be overstated. Immutable after
/// construction.
class SyndromeFormer {
public:
    SyndromeFormer(int a, int c, int L_h, std::vector<std::vector<int>> rows);

    // Constructs without validation. For internal hot paths that build rows
    // already known to satisfy the invariants, and for tests that need
    // deliberately non-canonical inputs.
    static SyndromeFormer trusted(int a, int c, int L_h, std::vector<std::vector<int>> rows);

    int a() const { return a_; }
    int c() const { return c_; }
    int L_h() const { return L_h_; }
    int m_h() const { return ceil_div(L_h_, c_) - 1; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    const std::vector<int>& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
    std::vector<int> row_weights() const;
    CodeParams params() const;

    friend bool operator==(const SyndromeFormer&, const SyndromeFormer&) = default;

private:
    SyndromeFormer() = default;

    int a_ = 0;
    int c_ = 0;
    int L_h_ = 0;
    std::vector<std::vector<int>> rows_;
};

/// Throws invalid_params describing the first violated invariant.
void validate_syndrome_former(int a, int c, int L_h, const std::vector<std::vector<int>>& rows);

/// c x a matrix of exponent sets over F_2[x]: entries[i][j] is the ascending
/// support of h_{i,j}(x); an empty set is a null term.
struct PolyMatrix {
    int c = 0;
    int a = 0;
    std::vector<std::vector<std::vector<int>>> entries;

    std::optional<int> max_exponent() const;

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;
};

void validate_poly_matrix(const PolyMatrix& p);

/// For every 1 at row j, column l of H_s, exponent floor(l/c) is added to
/// entry (l mod c, j).
PolyMatrix hs_to_poly(const SyndromeFormer& hs);

/// Inverse direction: exponent e in entry (i, j) places a 1 at row j, column
/// e*c + i. L_h = c * (1 + max exponent). Throws invalid_params when all
/// entries are null.
SyndromeFormer poly_to_hs(const PolyMatrix& p);

/// Leading c*W x a*W corner of the semi-infinite parity-check matrix: column
/// block t carries H_s^T shifted down by t*c rows, truncated at the window
/// boundary. No wraparound; the shift is neither cyclic nor quasi-cyclic.
struct WindowMatrix {
    int c = 0;
    int a = 0;
    int W = 0;
    std::vector<std::vector<int>> cols;  // per variable column, ascending check rows

    int n_rows() const { return c * W; }
    int n_cols() const { return a * W; }
    long long ones() const;
};

WindowMatrix expand_window(const SyndromeFormer& hs, int W);

}  // namespace scldpc

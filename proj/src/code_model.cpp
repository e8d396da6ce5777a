#include "scldpc/code_model.hpp"

#include <algorithm>
#include <string>

namespace scldpc {

DerivedParams derive_params(int a, int c, int L_h) {
    if (a < 1 || c < 1 || L_h < 1)
        throw invalid_params("derive_params: a, c and L_h must be positive");
    if (a <= c)
        throw invalid_params("derive_params: need a > c for a positive rate, got a=" +
                             std::to_string(a) + " c=" + std::to_string(c));
    const int m_h = ceil_div(L_h, c) - 1;
    return {m_h, static_cast<long long>(m_h + 1) * a, make_rational(a - c, a)};
}

void validate_syndrome_former(int a, int c, int L_h, const std::vector<std::vector<int>>& rows) {
    if (a < 1 || c < 1 || L_h < 1)
        throw invalid_params("syndrome former: a, c and L_h must be positive");
    // a == c (rate 0) is tolerated so the degenerate a=1 explicit
    // constructions stay representable; rate-dependent operations reject it.
    if (a < c)
        throw invalid_params("syndrome former: need a >= c, got a=" + std::to_string(a) + " c=" +
                             std::to_string(c));
    if (static_cast<int>(rows.size()) != a)
        throw invalid_params("syndrome former: expected " + std::to_string(a) + " rows, got " +
                             std::to_string(rows.size()));
    int max_index = -1;
    for (int i = 0; i < a; ++i) {
        const auto& r = rows[static_cast<std::size_t>(i)];
        if (r.empty())
            throw invalid_params("syndrome former: row " + std::to_string(i) + " has weight 0");
        for (std::size_t k = 0; k < r.size(); ++k) {
            if (r[k] < 0 || r[k] >= L_h)
                throw invalid_params("syndrome former: row " + std::to_string(i) + " index " +
                                     std::to_string(r[k]) + " outside [0, " + std::to_string(L_h) + ")");
            if (k > 0 && r[k] <= r[k - 1])
                throw invalid_params("syndrome former: row " + std::to_string(i) +
                                     " support must be strictly ascending");
        }
        max_index = std::max(max_index, r.back());
    }
    const int m_h = ceil_div(L_h, c) - 1;
    if (max_index < m_h * c)
        throw invalid_params("syndrome former is not canonical: final column block [" +
                             std::to_string(m_h * c) + ", " + std::to_string(L_h) +
                             ") is empty, so L_h overstates the memory order");
}

SyndromeFormer::SyndromeFormer(int a, int c, int L_h, std::vector<std::vector<int>> rows) {
    validate_syndrome_former(a, c, L_h, rows);
    a_ = a;
    c_ = c;
    L_h_ = L_h;
    rows_ = std::move(rows);
}

SyndromeFormer SyndromeFormer::trusted(int a, int c, int L_h, std::vector<std::vector<int>> rows) {
    SyndromeFormer hs;
    hs.a_ = a;
    hs.c_ = c;
    hs.L_h_ = L_h;
    hs.rows_ = std::move(rows);
    return hs;
}

std::vector<int> SyndromeFormer::row_weights() const {
    std::vector<int> w;
    w.reserve(rows_.size());
    for (const auto& r : rows_) w.push_back(static_cast<int>(r.size()));
    return w;
}

CodeParams SyndromeFormer::params() const { return {a_, c_, L_h_, row_weights()}; }

std::optional<int> PolyMatrix::max_exponent() const {
    std::optional<int> best;
    for (const auto& row : entries)
        for (const auto& entry : row)
            if (!entry.empty() && (!best || entry.back() > *best)) best = entry.back();
    return best;
}

void validate_poly_matrix(const PolyMatrix& p) {
    if (p.c < 1 || p.a < 1)
        throw invalid_params("poly matrix: c and a must be positive");
    if (p.a < p.c)
        throw invalid_params("poly matrix: need a >= c, got a=" + std::to_string(p.a) + " c=" +
                             std::to_string(p.c));
    if (static_cast<int>(p.entries.size()) != p.c)
        throw invalid_params("poly matrix: expected " + std::to_string(p.c) + " entry rows");
    for (const auto& row : p.entries) {
        if (static_cast<int>(row.size()) != p.a)
            throw invalid_params("poly matrix: expected " + std::to_string(p.a) + " entries per row");
        for (const auto& entry : row)
            for (std::size_t k = 0; k < entry.size(); ++k) {
                if (entry[k] < 0) throw invalid_params("poly matrix: negative exponent");
                if (k > 0 && entry[k] <= entry[k - 1])
                    throw invalid_params("poly matrix: exponents must be strictly ascending");
            }
    }
}

PolyMatrix hs_to_poly(const SyndromeFormer& hs) {
    PolyMatrix p;
    p.c = hs.c();
    p.a = hs.a();
    p.entries.assign(static_cast<std::size_t>(p.c),
                     std::vector<std::vector<int>>(static_cast<std::size_t>(p.a)));
    for (int j = 0; j < hs.a(); ++j)
        for (int l : hs.row(j))
            p.entries[static_cast<std::size_t>(l % p.c)][static_cast<std::size_t>(j)].push_back(l / p.c);
    return p;  // ascending l with fixed residue gives ascending exponents
}

SyndromeFormer poly_to_hs(const PolyMatrix& p) {
    validate_poly_matrix(p);
    const auto max_e = p.max_exponent();
    if (!max_e) throw invalid_params("poly_to_hs: empty matrix, all entries are null");
    const int L_h = p.c * (*max_e + 1);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(p.a));
    for (int i = 0; i < p.c; ++i)
        for (int j = 0; j < p.a; ++j)
            for (int e : p.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                rows[static_cast<std::size_t>(j)].push_back(e * p.c + i);
    for (auto& r : rows) std::sort(r.begin(), r.end());
    return SyndromeFormer(p.a, p.c, L_h, std::move(rows));
}

long long WindowMatrix::ones() const {
    long long n = 0;
    for (const auto& col : cols) n += static_cast<long long>(col.size());
    return n;
}

WindowMatrix expand_window(const SyndromeFormer& hs, int W) {
    if (W < 1) throw invalid_params("expand_window: W must be >= 1");
    WindowMatrix w;
    w.c = hs.c();
    w.a = hs.a();
    w.W = W;
    w.cols.reserve(static_cast<std::size_t>(hs.a()) * static_cast<std::size_t>(W));
    const int row_limit = hs.c() * W;
    for (int t = 0; t < W; ++t) {
        const int shift = t * hs.c();
        for (int r = 0; r < hs.a(); ++r) {
            std::vector<int> col;
            for (int s : hs.row(r)) {
                const int x = shift + s;
                if (x >= row_limit) break;
                col.push_back(x);
            }
            w.cols.push_back(std::move(col));
        }
    }
    return w;
}

}  // namespace scldpc

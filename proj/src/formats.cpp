#include "scldpc/formats.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <string_view>

namespace scldpc {

std::string parse_error::describe(kind k, int line, int column, const std::string& detail) {
    const char* name = k == kind::syntax ? "syntax-error"
                       : k == kind::dimensions ? "inconsistent-dimensions"
                                               : "duplicate-index";
    std::ostringstream os;
    os << name << " at line " << line << ", column " << column << ": " << detail;
    return os.str();
}

namespace {

struct Token {
    std::string_view text;
    int line;  // 1-based
    int col;   // 1-based byte offset
};

// Non-empty lines after comment stripping, each a token list.
std::vector<std::vector<Token>> tokenize(const std::string& text) {
    std::vector<std::vector<Token>> out;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        ++line_no;
        std::string_view line(text.data() + pos, eol - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::vector<Token> toks;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
            std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
            if (i > start)
                toks.push_back({line.substr(start, i - start), line_no, static_cast<int>(start) + 1});
        }
        if (!toks.empty()) out.push_back(std::move(toks));
        if (eol == text.size()) break;
        pos = eol + 1;
    }
    return out;
}

long long parse_int(const Token& t, std::string_view piece, int col_offset) {
    long long value = 0;
    const char* first = piece.data();
    const char* last = piece.data() + piece.size();
    auto [p, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || p != last || piece.empty())
        throw parse_error(parse_error::kind::syntax, t.line, t.col + col_offset,
                          "expected a non-negative integer, got '" + std::string(piece) + "'");
    if (value < 0)
        throw parse_error(parse_error::kind::syntax, t.line, t.col + col_offset,
                          "negative value not allowed");
    return value;
}

long long parse_int(const Token& t) { return parse_int(t, t.text, 0); }

int parse_bounded(const Token& t, long long hi, const char* what) {
    long long v = parse_int(t);
    if (v > hi)
        throw parse_error(parse_error::kind::dimensions, t.line, t.col,
                          std::string(what) + " value " + std::to_string(v) + " is out of range");
    return static_cast<int>(v);
}

}  // namespace

SyndromeFormer parse_hs(const std::string& text) {
    const auto lines = tokenize(text);
    if (lines.empty())
        throw parse_error(parse_error::kind::syntax, 1, 1, "empty input");
    const auto& header = lines[0];
    if (header.size() != 3)
        throw parse_error(parse_error::kind::syntax, header[0].line, header[0].col,
                          ".hs header must be 'a c L_h' (3 fields), got " +
                              std::to_string(header.size()));
    const int a = parse_bounded(header[0], 1'000'000, "a");
    const int c = parse_bounded(header[1], 1'000'000, "c");
    const int L_h = parse_bounded(header[2], 100'000'000, "L_h");

    if (static_cast<int>(lines.size()) - 1 < a) {
        const auto& last = lines.back().back();
        throw parse_error(parse_error::kind::dimensions, last.line + 1, 1,
                          "expected " + std::to_string(a) + " support rows, found " +
                              std::to_string(lines.size() - 1));
    }
    if (static_cast<int>(lines.size()) - 1 > a) {
        const auto& extra = lines[static_cast<std::size_t>(a) + 1][0];
        throw parse_error(parse_error::kind::dimensions, extra.line, extra.col,
                          "expected " + std::to_string(a) + " support rows, found " +
                              std::to_string(lines.size() - 1));
    }

    std::vector<std::vector<int>> rows;
    rows.reserve(static_cast<std::size_t>(a));
    for (int i = 0; i < a; ++i) {
        const auto& toks = lines[static_cast<std::size_t>(i) + 1];
        std::vector<int> row;
        row.reserve(toks.size());
        for (const auto& t : toks) {
            long long v = parse_int(t);
            if (v >= L_h)
                throw parse_error(parse_error::kind::dimensions, t.line, t.col,
                                  "column index " + std::to_string(v) + " outside [0, " +
                                      std::to_string(L_h) + ")");
            if (!row.empty()) {
                if (v == row.back())
                    throw parse_error(parse_error::kind::duplicate, t.line, t.col,
                                      "column index " + std::to_string(v) + " repeated in row " +
                                          std::to_string(i));
                if (v < row.back())
                    throw parse_error(parse_error::kind::syntax, t.line, t.col,
                                      "support indices must be ascending");
            }
            row.push_back(static_cast<int>(v));
        }
        rows.push_back(std::move(row));
    }
    return SyndromeFormer(a, c, L_h, std::move(rows));
}

PolyMatrix parse_hx(const std::string& text) {
    const auto lines = tokenize(text);
    if (lines.empty())
        throw parse_error(parse_error::kind::syntax, 1, 1, "empty input");
    const auto& header = lines[0];
    if (header.size() != 2)
        throw parse_error(parse_error::kind::syntax, header[0].line, header[0].col,
                          ".hx header must be 'c a' (2 fields), got " +
                              std::to_string(header.size()));
    const int c = parse_bounded(header[0], 1'000'000, "c");
    const int a = parse_bounded(header[1], 1'000'000, "a");

    if (static_cast<int>(lines.size()) - 1 < c) {
        const auto& last = lines.back().back();
        throw parse_error(parse_error::kind::dimensions, last.line + 1, 1,
                          "expected " + std::to_string(c) + " entry rows, found " +
                              std::to_string(lines.size() - 1));
    }
    if (static_cast<int>(lines.size()) - 1 > c) {
        const auto& extra = lines[static_cast<std::size_t>(c) + 1][0];
        throw parse_error(parse_error::kind::dimensions, extra.line, extra.col,
                          "expected " + std::to_string(c) + " entry rows, found " +
                              std::to_string(lines.size() - 1));
    }

    PolyMatrix p;
    p.c = c;
    p.a = a;
    p.entries.assign(static_cast<std::size_t>(c),
                     std::vector<std::vector<int>>(static_cast<std::size_t>(a)));
    for (int i = 0; i < c; ++i) {
        const auto& toks = lines[static_cast<std::size_t>(i) + 1];
        if (static_cast<int>(toks.size()) != a)
            throw parse_error(parse_error::kind::dimensions, toks[0].line, toks[0].col,
                              "row " + std::to_string(i) + " has " + std::to_string(toks.size()) +
                                  " entries, expected " + std::to_string(a));
        for (int j = 0; j < a; ++j) {
            const auto& t = toks[static_cast<std::size_t>(j)];
            if (t.text == "-") continue;  // null term
            std::vector<int>& entry = p.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            std::size_t start = 0;
            while (start <= t.text.size()) {
                std::size_t comma = t.text.find(',', start);
                if (comma == std::string_view::npos) comma = t.text.size();
                std::string_view piece = t.text.substr(start, comma - start);
                const int off = static_cast<int>(start);
                if (piece.empty())
                    throw parse_error(parse_error::kind::syntax, t.line, t.col + off,
                                      "empty exponent in list '" + std::string(t.text) + "'");
                long long v = parse_int(t, piece, off);
                if (v > 100'000'000)
                    throw parse_error(parse_error::kind::dimensions, t.line, t.col + off,
                                      "exponent " + std::to_string(v) + " is out of range");
                if (!entry.empty()) {
                    if (v == entry.back())
                        throw parse_error(parse_error::kind::duplicate, t.line, t.col + off,
                                          "exponent " + std::to_string(v) + " repeated in entry (" +
                                              std::to_string(i) + "," + std::to_string(j) + ")");
                    if (v < entry.back())
                        throw parse_error(parse_error::kind::syntax, t.line, t.col + off,
                                          "exponents must be ascending");
                }
                entry.push_back(static_cast<int>(v));
                if (comma == t.text.size()) break;
                start = comma + 1;
            }
        }
    }
    validate_poly_matrix(p);
    return p;
}

std::string serialize_hs(const SyndromeFormer& hs) {
    std::ostringstream os;
    os << hs.a() << ' ' << hs.c() << ' ' << hs.L_h() << '\n';
    for (int i = 0; i < hs.a(); ++i) {
        const auto& r = hs.row(i);
        for (std::size_t k = 0; k < r.size(); ++k) os << (k ? " " : "") << r[k];
        os << '\n';
    }
    return os.str();
}

std::string serialize_hx(const PolyMatrix& p) {
    std::ostringstream os;
    os << p.c << ' ' << p.a << '\n';
    for (int i = 0; i < p.c; ++i) {
        for (int j = 0; j < p.a; ++j) {
            if (j) os << ' ';
            const auto& entry = p.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (entry.empty()) {
                os << '-';
            } else {
                for (std::size_t k = 0; k < entry.size(); ++k) os << (k ? "," : "") << entry[k];
            }
        }
        os << '\n';
    }
    return os.str();
}

TextFormat detect_format(const std::string& text) {
    const auto lines = tokenize(text);
    if (lines.empty())
        throw parse_error(parse_error::kind::syntax, 1, 1, "empty input");
    const auto& header = lines[0];
    if (header.size() == 3) return TextFormat::hs;
    if (header.size() == 2) return TextFormat::hx;
    throw parse_error(parse_error::kind::syntax, header[0].line, header[0].col,
                      "cannot detect format: header must have 3 fields (.hs) or 2 fields (.hx)");
}

std::string to_alist(const WindowMatrix& w) {
    const int n_cols = w.n_cols();
    const int n_rows = w.n_rows();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n_rows));
    for (int v = 0; v < n_cols; ++v)
        for (int x : w.cols[static_cast<std::size_t>(v)]) rows[static_cast<std::size_t>(x)].push_back(v);

    std::size_t max_col = 0, max_row = 0;
    for (const auto& col : w.cols) max_col = std::max(max_col, col.size());
    for (const auto& row : rows) max_row = std::max(max_row, row.size());

    std::ostringstream os;
    os << n_cols << ' ' << n_rows << '\n';
    os << max_col << ' ' << max_row << '\n';
    for (int v = 0; v < n_cols; ++v) os << (v ? " " : "") << w.cols[static_cast<std::size_t>(v)].size();
    os << '\n';
    for (int x = 0; x < n_rows; ++x) os << (x ? " " : "") << rows[static_cast<std::size_t>(x)].size();
    os << '\n';
    for (int v = 0; v < n_cols; ++v) {
        const auto& col = w.cols[static_cast<std::size_t>(v)];
        for (std::size_t k = 0; k < max_col; ++k)
            os << (k ? " " : "") << (k < col.size() ? col[k] + 1 : 0);
        os << '\n';
    }
    for (int x = 0; x < n_rows; ++x) {
        const auto& row = rows[static_cast<std::size_t>(x)];
        for (std::size_t k = 0; k < max_row; ++k)
            os << (k ? " " : "") << (k < row.size() ? row[k] + 1 : 0);
        os << '\n';
    }
    return os.str();
}

}  // namespace scldpc

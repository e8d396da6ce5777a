#pragma once

#include <stdexcept>
#include <string>

namespace scldpc {

// Structural parameter or type-invariant violation.
class invalid_params : public std::runtime_error {
public:
    explicit invalid_params(const std::string& what) : std::runtime_error(what) {}
};

// Malformed .hs / .hx text, with 1-based position of the offending token.
class parse_error : public std::runtime_error {
public:
    enum class kind { syntax, dimensions, duplicate };

    parse_error(kind k, int line, int column, const std::string& detail)
        : std::runtime_error(describe(k, line, column, detail)),
          kind_(k),
          line_(line),
          column_(column) {}

    kind error_kind() const { return kind_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    static std::string describe(kind k, int line, int column, const std::string& detail);

    kind kind_;
    int line_;
    int column_;
};

// Requested cycle length above the configured chain-search cap.
class cap_exceeded : public std::runtime_error {
public:
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Window expansion would exceed the configured node budget.
class resource_limit : public std::runtime_error {
public:
    explicit resource_limit(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace scldpc

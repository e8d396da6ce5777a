#pragma once

#include <string>

namespace scldpc {

// Exact rational, kept reduced with a positive denominator.
struct Rational {
    long long num = 0;
    long long den = 1;

    friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(long long num, long long den);
std::string to_string(const Rational& r);

}  // namespace scldpc

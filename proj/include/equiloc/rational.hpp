// Exact integers and rationals.
//
// Thin layer over boost::multiprecision: arbitrary-precision integers
// (`Int`) and rationals (`Rational`, always stored in lowest terms with a
// positive denominator), plus string parsing/printing in the "p/q" form
// used by the JSON interchange format.

#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "equiloc/errors.hpp"

namespace equiloc {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parse "n", "-n", or "p/q" (q != 0). Whitespace is not accepted.
inline Rational rational_from_string(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Int(text));
        }
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) {
            throw domain_error("rational denominator is zero: " + text);
        }
        return Rational(num, den);
    } catch (const error&) {
        throw; // our own errors pass through
    } catch (const std::exception&) {
        throw structural_error("malformed rational literal: '" + text + "'");
    }
}

/// Render in canonical form: "n" when the denominator is 1, else "p/q".
inline std::string rational_to_string(const Rational& r) {
    return r.str();
}

/// gcd of a vector of integers (non-negative result; 0 for all-zero input).
inline Int vector_gcd(const std::vector<Int>& values) {
    Int g = 0;
    for (const Int& v : values) {
        g = boost::multiprecision::gcd(g, v);
        if (g == 1) break;
    }
    return g;
}

/// Divide a vector by the gcd of its entries, making it primitive.
/// The zero vector is returned unchanged.
inline std::vector<Int> primitive_vector(std::vector<Int> values) {
    Int g = vector_gcd(values);
    if (g > 1) {
        for (Int& v : values) v /= g;
    }
    return values;
}

} // namespace equiloc

// One-variable Laurent polynomials over the rationals.
//
// Degrees may be negative; no zero coefficients are stored. The main use is
// holding values of fixed-point localization sums, where the interesting
// question is whether any negative-degree term survives.

#pragma once

#include <map>
#include <string>

#include "equiloc/polynomial.hpp"
#include "equiloc/rational.hpp"

namespace equiloc {

class LaurentUnivariate {
  public:
    LaurentUnivariate() = default;
    explicit LaurentUnivariate(std::string variable) : variable_(std::move(variable)) {}

    const std::string& variable() const { return variable_; }
    const std::map<int, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    /// True iff every stored degree is >= 0.
    bool is_polynomial() const {
        return terms_.empty() || terms_.begin()->first >= 0;
    }

    /// Add `value` to the coefficient of degree `degree`.
    void add_term(int degree, const Rational& value);

    /// The terms of negative degree, as a Laurent polynomial. Empty iff
    /// `is_polynomial()`.
    LaurentUnivariate principal_part() const;

    /// The terms of non-negative degree.
    LaurentUnivariate polynomial_part() const;

    LaurentUnivariate operator+(const LaurentUnivariate& other) const;
    LaurentUnivariate operator-(const LaurentUnivariate& other) const;

    bool operator==(const LaurentUnivariate& other) const {
        return variable_ == other.variable_ && terms_ == other.terms_;
    }
    bool operator!=(const LaurentUnivariate& other) const { return !(*this == other); }

  private:
    std::string variable_;
    std::map<int, Rational> terms_;
};

/// Exact ratio numer / (denom_coeff · v^denom_power) where `numer` must be a
/// one-variable polynomial. Zero denominator coefficient is a domain error.
LaurentUnivariate laurent_from_ratio(const MultiPolynomial& numer, const Rational& denom_coeff,
                                     int denom_power);

/// Rendering such as "u^-1 + 2 - u^3"; "0" when empty.
std::string laurent_to_text(const LaurentUnivariate& p);

} // namespace equiloc

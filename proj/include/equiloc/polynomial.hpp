// Multivariate polynomials over the rationals, in canonical form.
//
// A MultiPolynomial is an ordered variable list plus a term map keyed by
// dense exponent vectors; terms are kept in graded-lexicographic descending
// order, never store a zero coefficient, and two polynomials over the same
// variable list are equal iff their term maps are equal. LinearForm holds a
// primitive integer covector (sign-normalized) used for divisibility moduli.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "equiloc/rational.hpp"

namespace equiloc {

/// Dense exponent vector, one entry per variable of the owning polynomial.
using Exponent = std::vector<int>;

/// Graded-lexicographic order, descending: higher total degree first,
/// ties broken by lexicographically larger exponent vector first.
/// Map iteration therefore starts at the leading term.
struct GrlexDescending {
    bool operator()(const Exponent& a, const Exponent& b) const {
        int da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da > db;
        return a > b;
    }
};

using TermMap = std::map<Exponent, Rational, GrlexDescending>;

/// Result of the homogeneity test. The zero polynomial is homogeneous of
/// every degree and gets its own distinguished kind.
struct Homogeneity {
    enum class Kind { zero, homogeneous, mixed };
    Kind kind = Kind::zero;
    int degree = 0; // meaningful only when kind == homogeneous

    bool is_zero() const { return kind == Kind::zero; }
    bool is_homogeneous() const { return kind != Kind::mixed; }
};

class MultiPolynomial {
  public:
    MultiPolynomial() = default;

    /// The zero polynomial over the given variables.
    explicit MultiPolynomial(std::vector<std::string> variables)
        : variables_(std::move(variables)) {}

    static MultiPolynomial constant(std::vector<std::string> variables, Rational value);

    /// The polynomial consisting of the single variable `index`.
    static MultiPolynomial variable(std::vector<std::string> variables, std::size_t index);

    const std::vector<std::string>& variables() const { return variables_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    /// Total degree of the leading term; -1 for the zero polynomial.
    int total_degree() const;

    /// Coefficient of the given exponent vector (0 if absent).
    Rational coefficient(const Exponent& exponent) const;

    /// Add `value` to the coefficient of `exponent`, keeping canonical form.
    /// The exponent length must match the variable count.
    void add_term(const Exponent& exponent, const Rational& value);

    /// Leading coefficient (grlex order); 0 for the zero polynomial.
    Rational leading_coefficient() const;

    bool operator==(const MultiPolynomial& other) const {
        return variables_ == other.variables_ && terms_ == other.terms_;
    }
    bool operator!=(const MultiPolynomial& other) const { return !(*this == other); }

  private:
    std::vector<std::string> variables_;
    TermMap terms_;
};

enum class PolyOp { add, sub, mul };

/// Exact arithmetic; both operands must share one variable list.
MultiPolynomial poly_arith(const MultiPolynomial& a, const MultiPolynomial& b, PolyOp op);

inline MultiPolynomial operator+(const MultiPolynomial& a, const MultiPolynomial& b) {
    return poly_arith(a, b, PolyOp::add);
}
inline MultiPolynomial operator-(const MultiPolynomial& a, const MultiPolynomial& b) {
    return poly_arith(a, b, PolyOp::sub);
}
inline MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b) {
    return poly_arith(a, b, PolyOp::mul);
}

/// Multiply by a scalar.
MultiPolynomial poly_scale(const MultiPolynomial& p, const Rational& factor);

/// Common total degree of all terms, the distinguished zero result, or mixed.
Homogeneity is_homogeneous(const MultiPolynomial& p);

/// Primitive integer covector with the first nonzero entry positive.
/// Used as the generator of a divisibility modulus (α^m), where the sign
/// and scale of the generator do not matter.
class LinearForm {
  public:
    /// Normalizes to primitive with first nonzero entry positive.
    /// The zero vector is rejected.
    explicit LinearForm(std::vector<Int> coefficients);

    const std::vector<Int>& coefficients() const { return coefficients_; }
    std::size_t size() const { return coefficients_.size(); }

    /// The degree-1 polynomial Σ cᵢ·xᵢ over the given variables
    /// (count must match).
    MultiPolynomial to_polynomial(const std::vector<std::string>& variables) const;

    bool operator==(const LinearForm& other) const {
        return coefficients_ == other.coefficients_;
    }
    bool operator!=(const LinearForm& other) const { return !(*this == other); }

  private:
    std::vector<Int> coefficients_;
};

/// The degree-1 polynomial Σ vᵢ·xᵢ with the vector taken as-is — no
/// primitivity or sign normalization. Use for direction vectors whose sign
/// carries meaning.
MultiPolynomial covector_to_polynomial(const std::vector<Int>& v,
                                       const std::vector<std::string>& variables);

/// Exact division by α^m (m ≥ 1): returns q with p = α^m·q, or nullopt when
/// α^m does not divide p. Implemented as m successive exact divisions by α.
std::optional<MultiPolynomial> divide_by_linear_power(const MultiPolynomial& p,
                                                      const LinearForm& alpha, int m);

/// Ring map xᵢ ↦ ξᵢ·u into the one-variable ring named `residual_variable`.
/// `xi` must have one entry per variable of `p`.
MultiPolynomial specialize_polynomial(const MultiPolynomial& p, const std::vector<Int>& xi,
                                      const std::string& residual_variable);

/// Human-readable rendering, e.g. "x^2*y - 2*x + 1/2"; "0" for zero.
std::string poly_to_text(const MultiPolynomial& p);

/// Rendering of a linear form without '*', e.g. "2x - y"; single variables
/// render bare ("u").
std::string linear_form_to_text(const LinearForm& form,
                                const std::vector<std::string>& variables);

} // namespace equiloc

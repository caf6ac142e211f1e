#include "equiloc/laurent.hpp"

#include <sstream>

namespace equiloc {

void LaurentUnivariate::add_term(int degree, const Rational& value) {
    if (value == 0) return;
    auto [it, inserted] = terms_.emplace(degree, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentUnivariate LaurentUnivariate::principal_part() const {
    LaurentUnivariate out(variable_);
    for (const auto& [d, c] : terms_) {
        if (d < 0) out.add_term(d, c);
    }
    return out;
}

LaurentUnivariate LaurentUnivariate::polynomial_part() const {
    LaurentUnivariate out(variable_);
    for (const auto& [d, c] : terms_) {
        if (d >= 0) out.add_term(d, c);
    }
    return out;
}

LaurentUnivariate LaurentUnivariate::operator+(const LaurentUnivariate& other) const {
    if (variable_ != other.variable_) {
        throw structural_error("Laurent operands have different variables");
    }
    LaurentUnivariate out = *this;
    for (const auto& [d, c] : other.terms_) out.add_term(d, c);
    return out;
}

LaurentUnivariate LaurentUnivariate::operator-(const LaurentUnivariate& other) const {
    if (variable_ != other.variable_) {
        throw structural_error("Laurent operands have different variables");
    }
    LaurentUnivariate out = *this;
    for (const auto& [d, c] : other.terms_) out.add_term(d, -c);
    return out;
}

LaurentUnivariate laurent_from_ratio(const MultiPolynomial& numer, const Rational& denom_coeff,
                                     int denom_power) {
    if (numer.variables().size() != 1) {
        throw structural_error("laurent_from_ratio needs a one-variable numerator");
    }
    if (denom_coeff == 0) {
        throw domain_error("laurent_from_ratio: zero denominator coefficient");
    }
    LaurentUnivariate out(numer.variables().front());
    for (const auto& [e, c] : numer.terms()) {
        out.add_term(e.front() - denom_power, c / denom_coeff);
    }
    return out;
}

std::string laurent_to_text(const LaurentUnivariate& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [d, c] : p.terms()) {
        const Rational magnitude = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (d == 0) {
            out << rational_to_string(magnitude);
        } else {
            if (magnitude != 1) out << rational_to_string(magnitude) << "*";
            out << p.variable();
            if (d != 1) out << "^" << d;
        }
    }
    return out.str();
}

} // namespace equiloc

#include "equiloc/polynomial.hpp"

#include <sstream>

namespace equiloc {

namespace {

void require_same_variables(const MultiPolynomial& a, const MultiPolynomial& b) {
    if (a.variables() != b.variables()) {
        throw structural_error("polynomial operands have different variable lists");
    }
}

} // namespace

MultiPolynomial MultiPolynomial::constant(std::vector<std::string> variables, Rational value) {
    MultiPolynomial p(std::move(variables));
    p.add_term(Exponent(p.variables_.size(), 0), value);
    return p;
}

MultiPolynomial MultiPolynomial::variable(std::vector<std::string> variables, std::size_t index) {
    if (index >= variables.size()) {
        throw structural_error("variable index out of range");
    }
    MultiPolynomial p(std::move(variables));
    Exponent e(p.variables_.size(), 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

int MultiPolynomial::total_degree() const {
    if (terms_.empty()) return -1;
    int degree = 0;
    for (int e : terms_.begin()->first) degree += e;
    return degree;
}

Rational MultiPolynomial::coefficient(const Exponent& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPolynomial::add_term(const Exponent& exponent, const Rational& value) {
    if (exponent.size() != variables_.size()) {
        throw structural_error("exponent vector length does not match variable count");
    }
    for (int e : exponent) {
        if (e < 0) throw structural_error("negative exponent in polynomial term");
    }
    if (value == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational MultiPolynomial::leading_coefficient() const {
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

MultiPolynomial poly_arith(const MultiPolynomial& a, const MultiPolynomial& b, PolyOp op) {
    require_same_variables(a, b);
    MultiPolynomial result(a.variables());
    switch (op) {
    case PolyOp::add:
    case PolyOp::sub: {
        for (const auto& [e, c] : a.terms()) result.add_term(e, c);
        for (const auto& [e, c] : b.terms()) {
            result.add_term(e, op == PolyOp::add ? c : Rational(-c));
        }
        break;
    }
    case PolyOp::mul: {
        for (const auto& [ea, ca] : a.terms()) {
            for (const auto& [eb, cb] : b.terms()) {
                Exponent e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                result.add_term(e, ca * cb);
            }
        }
        break;
    }
    }
    return result;
}

MultiPolynomial poly_scale(const MultiPolynomial& p, const Rational& factor) {
    MultiPolynomial result(p.variables());
    if (factor == 0) return result;
    for (const auto& [e, c] : p.terms()) result.add_term(e, c * factor);
    return result;
}

Homogeneity is_homogeneous(const MultiPolynomial& p) {
    if (p.is_zero()) return {Homogeneity::Kind::zero, 0};
    int degree = -1;
    for (const auto& [e, c] : p.terms()) {
        int d = 0;
        for (int exp : e) d += exp;
        if (degree == -1) {
            degree = d;
        } else if (d != degree) {
            return {Homogeneity::Kind::mixed, 0};
        }
    }
    return {Homogeneity::Kind::homogeneous, degree};
}

LinearForm::LinearForm(std::vector<Int> coefficients) : coefficients_(std::move(coefficients)) {
    bool all_zero = true;
    for (const Int& c : coefficients_) {
        if (c != 0) {
            all_zero = false;
            break;
        }
    }
    if (all_zero) throw domain_error("linear form must be nonzero");
    coefficients_ = primitive_vector(std::move(coefficients_));
    for (const Int& c : coefficients_) {
        if (c != 0) {
            if (c < 0) {
                for (Int& v : coefficients_) v = -v;
            }
            break;
        }
    }
}

MultiPolynomial LinearForm::to_polynomial(const std::vector<std::string>& variables) const {
    if (variables.size() != coefficients_.size()) {
        throw structural_error("linear form length does not match variable count");
    }
    return covector_to_polynomial(coefficients_, variables);
}

MultiPolynomial covector_to_polynomial(const std::vector<Int>& v,
                                       const std::vector<std::string>& variables) {
    if (variables.size() != v.size()) {
        throw structural_error("covector length does not match variable count");
    }
    MultiPolynomial p(variables);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        Exponent e(v.size(), 0);
        e[i] = 1;
        p.add_term(e, Rational(v[i]));
    }
    return p;
}

namespace {

// One exact division step: p / α, or nullopt when α does not divide p.
// Reduction by the single divisor α with respect to the term order: since
// every remainder term would survive to the end, the first leading term not
// divisible by α's leading variable already certifies indivisibility.
std::optional<MultiPolynomial> divide_once(const MultiPolynomial& p, const MultiPolynomial& alpha,
                                           std::size_t pivot) {
    const Rational lead = alpha.coefficient([&] {
        Exponent e(p.variables().size(), 0);
        e[pivot] = 1;
        return e;
    }());
    MultiPolynomial remainder = p;
    MultiPolynomial quotient(p.variables());
    while (!remainder.is_zero()) {
        const auto& [exp, coeff] = *remainder.terms().begin();
        if (exp[pivot] == 0) return std::nullopt;
        Exponent qe = exp;
        qe[pivot] -= 1;
        const Rational qc = coeff / lead;
        quotient.add_term(qe, qc);
        MultiPolynomial t(p.variables());
        t.add_term(qe, qc);
        remainder = remainder - t * alpha;
    }
    return quotient;
}

} // namespace

std::optional<MultiPolynomial> divide_by_linear_power(const MultiPolynomial& p,
                                                      const LinearForm& alpha, int m) {
    if (m < 1) throw structural_error("divisibility power must be at least 1");
    if (alpha.size() != p.variables().size()) {
        throw structural_error("linear form length does not match variable count");
    }
    std::size_t pivot = 0;
    while (pivot < alpha.size() && alpha.coefficients()[pivot] == 0) ++pivot;
    const MultiPolynomial alpha_poly = alpha.to_polynomial(p.variables());
    MultiPolynomial current = p;
    for (int step = 0; step < m; ++step) {
        if (current.is_zero()) break; // 0 is divisible by anything
        auto next = divide_once(current, alpha_poly, pivot);
        if (!next) return std::nullopt;
        current = std::move(*next);
    }
    return current;
}

MultiPolynomial specialize_polynomial(const MultiPolynomial& p, const std::vector<Int>& xi,
                                      const std::string& residual_variable) {
    if (xi.size() != p.variables().size()) {
        throw structural_error("xi length does not match variable count");
    }
    MultiPolynomial result({residual_variable});
    for (const auto& [e, c] : p.terms()) {
        Rational value = c;
        int degree = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            degree += e[i];
            for (int k = 0; k < e[i]; ++k) value *= xi[i];
        }
        result.add_term({degree}, value);
    }
    return result;
}

namespace {

std::string monomial_to_text(const Exponent& e, const std::vector<std::string>& variables) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += variables[i];
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

} // namespace

std::string poly_to_text(const MultiPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const Rational magnitude = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const std::string mono = monomial_to_text(e, p.variables());
        if (mono.empty()) {
            out << rational_to_string(magnitude);
        } else {
            if (magnitude != 1) out << rational_to_string(magnitude) << "*";
            out << mono;
        }
    }
    return out.str();
}

std::string linear_form_to_text(const LinearForm& form,
                                const std::vector<std::string>& variables) {
    if (variables.size() != form.size()) {
        throw structural_error("linear form length does not match variable count");
    }
    std::string out;
    for (std::size_t i = 0; i < variables.size(); ++i) {
        const Int& c = form.coefficients()[i];
        if (c == 0) continue;
        const Int magnitude = c < 0 ? Int(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (magnitude != 1) out += magnitude.str();
        out += variables[i];
    }
    return out;
}

} // namespace equiloc

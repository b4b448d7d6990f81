#include "ydk/laurent.hpp"

#include <algorithm>
#include <limits>

namespace ydk {

LaurentPolynomial::LaurentPolynomial(int variables) : variables_(variables) {
    if (variables < 0 || variables > kMaxVariables)
        throw std::invalid_argument("Laurent polynomials support at most " + std::to_string(kMaxVariables) +
                                    " variables");
}

LaurentPolynomial LaurentPolynomial::constant(int variables, const BigInt& value) {
    return monomial(variables, Exponent{}, value);
}

LaurentPolynomial LaurentPolynomial::monomial(int variables, const Exponent& exponent, const BigInt& coefficient) {
    LaurentPolynomial p(variables);
    p.add_term(exponent, coefficient);
    return p;
}

BigInt LaurentPolynomial::coefficient(const Exponent& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPolynomial::add_term(const Exponent& exponent, const BigInt& coefficient) {
    if (coefficient == 0) return;
    for (int i = variables_; i < kMaxVariables; ++i)
        if (exponent[static_cast<std::size_t>(i)] != 0)
            throw std::invalid_argument("exponent uses a variable outside the polynomial ring");
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

const LaurentPolynomial::Terms::value_type& LaurentPolynomial::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
    return *terms_.rbegin();
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const BigInt& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= scalar;
    return *this;
}

void LaurentPolynomial::add_product(const LaurentPolynomial& other, const BigInt& factor, const Exponent& shift) {
    for (const auto& [e, c] : other.terms_) {
        Exponent sum;
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = e[i] + shift[i];
        add_term(sum, c * factor);
    }
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial result(std::max(a.variables(), b.variables()));
    const LaurentPolynomial& small = a.term_count() <= b.term_count() ? a : b;
    const LaurentPolynomial& large = a.term_count() <= b.term_count() ? b : a;
    for (const auto& [e, c] : small.terms()) result.add_product(large, c, e);
    return result;
}

LaurentPolynomial LaurentPolynomial::divide_exact(const LaurentPolynomial& divisor) const {
    if (divisor.is_zero()) throw AlternantDivisionError("division by the zero polynomial");
    LaurentPolynomial quotient(std::max(variables_, divisor.variables_));
    if (is_zero()) return quotient;

    // Exact division forces min/max of each coordinate of the quotient's
    // support to be differences of the corresponding extremes.
    auto extremes = [](const LaurentPolynomial& p) {
        Exponent lo, hi;
        lo.fill(std::numeric_limits<int>::max());
        hi.fill(std::numeric_limits<int>::min());
        for (const auto& [e, c] : p.terms())
            for (std::size_t i = 0; i < e.size(); ++i) {
                lo[i] = std::min(lo[i], e[i]);
                hi[i] = std::max(hi[i], e[i]);
            }
        return std::pair{lo, hi};
    };
    const auto [num_lo, num_hi] = extremes(*this);
    const auto [den_lo, den_hi] = extremes(divisor);

    LaurentPolynomial remainder = *this;
    const auto& [lead_exp, lead_coeff] = divisor.leading_term();
    while (!remainder.is_zero()) {
        const auto [rem_exp, rem_coeff] = remainder.leading_term();
        Exponent q;
        for (std::size_t i = 0; i < q.size(); ++i) {
            q[i] = rem_exp[i] - lead_exp[i];
            if (q[i] < num_lo[i] - den_lo[i] || q[i] > num_hi[i] - den_hi[i])
                throw AlternantDivisionError("division leaves a nonzero remainder");
        }
        if (rem_coeff % lead_coeff != 0) throw AlternantDivisionError("division leaves a fractional coefficient");
        const BigInt qc = rem_coeff / lead_coeff;
        quotient.add_term(q, qc);
        remainder.add_product(divisor, -qc, q);
    }
    return quotient;
}

BigInt LaurentPolynomial::evaluate_at_one() const {
    BigInt total = 0;
    for (const auto& [e, c] : terms_) total += c;
    return total;
}

LaurentPolynomial LaurentPolynomial::permute_variables(std::span<const int> permutation) const {
    if (static_cast<int>(permutation.size()) != variables_)
        throw std::invalid_argument("permutation length does not match the variable count");
    LaurentPolynomial result(variables_);
    for (const auto& [e, c] : terms_) {
        Exponent moved{};
        for (int i = 0; i < variables_; ++i)
            moved[static_cast<std::size_t>(permutation[static_cast<std::size_t>(i)])] = e[static_cast<std::size_t>(i)];
        result.add_term(moved, c);
    }
    return result;
}

LaurentPolynomial LaurentPolynomial::invert_variable(int i) const {
    if (i < 0 || i >= variables_) throw std::out_of_range("no such variable");
    LaurentPolynomial result(variables_);
    for (const auto& [e, c] : terms_) {
        Exponent flipped = e;
        flipped[static_cast<std::size_t>(i)] = -flipped[static_cast<std::size_t>(i)];
        result.add_term(flipped, c);
    }
    return result;
}

std::string LaurentPolynomial::to_string(int exponent_scale) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        BigInt magnitude = c < 0 ? BigInt(-c) : c;
        s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        first = false;
        std::string mono;
        for (int i = 0; i < variables_; ++i) {
            const int power = e[static_cast<std::size_t>(i)];
            if (power == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += "x" + std::to_string(i + 1);
            if (power != exponent_scale) {
                if (power % exponent_scale == 0)
                    mono += "^" + std::to_string(power / exponent_scale);
                else
                    mono += "^(" + std::to_string(power) + "/" + std::to_string(exponent_scale) + ")";
            }
        }
        if (mono.empty())
            s += magnitude.str();
        else
            s += (magnitude == 1 ? "" : magnitude.str() + "*") + mono;
    }
    return s;
}

}  // namespace ydk

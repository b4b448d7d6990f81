#pragma once

#include <array>
#include <map>
#include <span>
#include <stdexcept>
#include <string>

#include "ydk/numeric.hpp"

namespace ydk {

/// Hard upper bound on the number of variables.
inline constexpr int kMaxVariables = 4;

using Exponent = std::array<int, kMaxVariables>;

class AlternantDivisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Multivariate Laurent polynomial in up to kMaxVariables variables with
 * arbitrary-precision integer coefficients. Unused exponent slots stay zero.
 * Terms are kept in lexicographic exponent order; zero coefficients are
 * never stored.
 */
class LaurentPolynomial {
public:
    using Terms = std::map<Exponent, BigInt>;

    explicit LaurentPolynomial(int variables = 0);

    static LaurentPolynomial constant(int variables, const BigInt& value);
    static LaurentPolynomial monomial(int variables, const Exponent& exponent, const BigInt& coefficient = 1);

    int variables() const noexcept { return variables_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    BigInt coefficient(const Exponent& exponent) const;
    void add_term(const Exponent& exponent, const BigInt& coefficient);

    /// Lexicographically largest exponent and its coefficient. Requires a nonzero polynomial.
    const Terms::value_type& leading_term() const;

    LaurentPolynomial& operator+=(const LaurentPolynomial& other);
    LaurentPolynomial& operator-=(const LaurentPolynomial& other);
    LaurentPolynomial& operator*=(const BigInt& scalar);
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(LaurentPolynomial a, const BigInt& s) { return a *= s; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

    /// this += factor * other * x^shift
    void add_product(const LaurentPolynomial& other, const BigInt& factor, const Exponent& shift);

    /**
     * Exact quotient by divisor. Throws AlternantDivisionError when the
     * division leaves a remainder; the quotient's support is confined to the
     * box implied by the two Newton polytopes, so the loop always ends.
     */
    LaurentPolynomial divide_exact(const LaurentPolynomial& divisor) const;

    /// Value with every variable set to 1.
    BigInt evaluate_at_one() const;

    /// Variable i becomes variable permutation[i].
    LaurentPolynomial permute_variables(std::span<const int> permutation) const;

    /// x_i -> 1/x_i.
    LaurentPolynomial invert_variable(int i) const;

    /// Human-readable form; exponents are divided by exponent_scale.
    std::string to_string(int exponent_scale = 1) const;

    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

private:
    int variables_;
    Terms terms_;
};

}  // namespace ydk

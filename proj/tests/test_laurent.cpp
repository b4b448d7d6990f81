#include <doctest.h>

#include "ydk/laurent.hpp"

using namespace ydk;

namespace {

LaurentPolynomial x(int i, int power = 1) {
    Exponent e{};
    e[static_cast<std::size_t>(i)] = power;
    return LaurentPolynomial::monomial(2, e);
}

LaurentPolynomial one() { return LaurentPolynomial::constant(2, 1); }

}  // namespace

TEST_CASE("construction and coefficients") {
    CHECK(LaurentPolynomial(2).is_zero());
    CHECK(LaurentPolynomial::constant(2, 0).is_zero());
    CHECK(one().coefficient(Exponent{}) == 1);
    CHECK_THROWS_AS(LaurentPolynomial(kMaxVariables + 1), std::invalid_argument);
    CHECK_THROWS_AS(LaurentPolynomial::monomial(1, Exponent{0, 1, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(LaurentPolynomial(1).leading_term(), std::logic_error);
}

TEST_CASE("arithmetic cancels exactly") {
    LaurentPolynomial p = x(0) + x(1, -1);
    p -= x(0);
    CHECK(p == x(1, -1));
    CHECK((p * BigInt(0)).is_zero());
    const LaurentPolynomial sq = (x(0) + x(0, -1)) * (x(0) + x(0, -1));
    CHECK(sq.term_count() == 3);
    CHECK(sq.coefficient(Exponent{}) == 2);
    CHECK(sq.evaluate_at_one() == 4);
    CHECK(sq.leading_term().first == Exponent{2, 0, 0, 0});
}

TEST_CASE("exact division") {
    const LaurentPolynomial a = x(0) - x(1);
    const LaurentPolynomial b = x(0) + x(1) + x(0, -1);
    CHECK((a * b).divide_exact(a) == b);
    CHECK((a * b).divide_exact(b) == a);
    CHECK((x(0, 2) - one()).divide_exact(x(0) - one()) == x(0) + one());
    CHECK(LaurentPolynomial(2).divide_exact(a).is_zero());
    CHECK_THROWS_AS((x(0, 2) + one()).divide_exact(x(0) - one()), AlternantDivisionError);
    CHECK_THROWS_AS(x(0).divide_exact(x(0) * BigInt(2)), AlternantDivisionError);
    CHECK_THROWS_AS(one().divide_exact(LaurentPolynomial(2)), AlternantDivisionError);
}

TEST_CASE("variable permutation and inversion") {
    const LaurentPolynomial p = x(0, 2) * x(1, -1) + one();
    const std::array<int, 2> swap{1, 0};
    CHECK(p.permute_variables(swap) == x(1, 2) * x(0, -1) + one());
    CHECK(p.invert_variable(1) == x(0, 2) * x(1) + one());
    CHECK(p.invert_variable(0).invert_variable(0) == p);
    CHECK_THROWS_AS(p.invert_variable(2), std::out_of_range);
    const std::array<int, 1> bad{0};
    CHECK_THROWS_AS(p.permute_variables(bad), std::invalid_argument);
}

TEST_CASE("to_string") {
    CHECK(LaurentPolynomial(2).to_string() == "0");
    CHECK((x(0, 2) * BigInt(3) - one()).to_string() == "3*x1^2 - 1");
    CHECK((x(0, 2) + x(1, 1)).to_string(2) == "x1 + x2^(1/2)");
    CHECK(x(1, -4).to_string(2) == "x2^-2");
}

#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "ydk/characters.hpp"
#include "ydk/stable_product.hpp"

using namespace ydk;

namespace {

using P = Partition;

GroupContext O(int n) { return GroupContext(Family::O, n); }
GroupContext SO(int n) { return GroupContext(Family::SO, n); }
GroupContext Sp(int n) { return GroupContext(Family::Sp, n); }

std::vector<Weight> dominant_weights(const GroupContext& ctx, int max_boxes) {
    std::vector<Weight> out;
    const int l = ctx.rank();
    for (int f = 0; f <= max_boxes; ++f)
        for (const Partition& p : partitions_of(f, l)) {
            Weight w{std::vector<int>(static_cast<std::size_t>(l), 0)};
            for (int i = 0; i < p.length(); ++i) w.entries[static_cast<std::size_t>(i)] = p.row(i);
            out.push_back(w);
            if (ctx.even_orthogonal() && p.length() == l) {
                w.entries.back() = -w.entries.back();
                out.push_back(w);
            }
        }
    return out;
}

}  // namespace

TEST_CASE("character examples") {
    CHECK(character(Weight{{0, 0}}, SO(5)) == LaurentPolynomial::constant(2, 1));
    CHECK(character(Weight{{0, 0, 0}}, Sp(6)) == LaurentPolynomial::constant(3, 1));
    const LaurentPolynomial vector = character(Weight{{1, 0}}, SO(5));
    CHECK(vector.term_count() == 5);
    CHECK(vector.evaluate_at_one() == 5);
    CHECK(vector.coefficient(Exponent{kExponentScale, 0, 0, 0}) == 1);
    CHECK(character(Weight{{2, 1}}, SO(5)).evaluate_at_one() == 35);
    CHECK(character(P{2, 1}, O(5)) == character(Weight{{2, 1}}, SO(5)));
    CHECK(character(P{3, 2}, O(4)) == character(Weight{{3, 2}}, SO(4)) + character(Weight{{3, -2}}, SO(4)));
    CHECK(character(Weight{{3, 2}}, O(4)) == character(P{3, 2}, O(4)));
    CHECK_THROWS_AS(character(P{1, 1, 1}, O(5)), NonstandardInput);
}

TEST_CASE("group_dim examples") {
    CHECK(group_dim(P{1}, Sp(4)) == 4);
    CHECK(group_dim(P{2, 1}, O(5)) == 35);
    CHECK(group_dim(P{3, 2}, O(4)) == 24);
    CHECK(group_dim(Weight{{3, 2}}, SO(4)) == 12);
    CHECK(group_dim(Weight{{3, -2}}, SO(4)) == 12);
    CHECK(group_dim(P{1, 1}, O(5)) == 10);
    CHECK(group_dim(P{1}, O(7)) == 7);
    CHECK(group_dim(P{1, 1, 1}, O(6)) == 20);
    CHECK(group_dim(P{1, 1}, Sp(4)) == 5);
}

TEST_CASE("SO(4) dimensions factor over A1 x A1") {
    for (int a = 0; a <= 5; ++a)
        for (int b = -a; b <= a; ++b) {
            const Weight w{{a, b}};
            const BigInt expected = (a + b + 1) * (a - b + 1);
            CHECK(group_dim(w, SO(4)) == expected);
            CHECK(character(w, SO(4)).evaluate_at_one() == expected);
        }
}

TEST_CASE("characters evaluate to the Weyl dimension") {
    for (const GroupContext& ctx : {SO(3), SO(5), SO(7), SO(4), SO(6), SO(8), Sp(2), Sp(4), Sp(6)})
        for (const Weight& w : dominant_weights(ctx, 5)) {
            CAPTURE(ctx.name());
            CAPTURE(w.to_string());
            CHECK(character(w, ctx).evaluate_at_one() == group_dim(w, ctx));
        }
}

TEST_CASE("characters are Weyl invariant") {
    for (const GroupContext& ctx : {SO(5), SO(7), SO(4), SO(6), Sp(4), Sp(6)}) {
        const int l = ctx.rank();
        for (const Weight& w : dominant_weights(ctx, 4)) {
            const LaurentPolynomial chi = character(w, ctx);
            std::vector<int> perm(static_cast<std::size_t>(l));
            std::iota(perm.begin(), perm.end(), 0);
            do {
                CHECK(chi.permute_variables(perm) == chi);
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (ctx.even_orthogonal())
                CHECK(chi.invert_variable(0).invert_variable(1) == chi);
            else
                for (int i = 0; i < l; ++i) CHECK(chi.invert_variable(i) == chi);
        }
    }
    // A single sign flip swaps the two halves of a split SO(2l) pair.
    CHECK(character(Weight{{2, 1}}, SO(4)).invert_variable(1) == character(Weight{{2, -1}}, SO(4)));
}

TEST_CASE("verify_product") {
    const Decomposition c19 = kronecker(P{2, 1}, P{1, 1}, O(5));
    const ProductReport ok = verify_product(P{2, 1}, P{1, 1}, SO(5), c19);
    CHECK(ok.passed);
    CHECK(ok.lhs_dimension == 350);
    CHECK(ok.rhs_dimension == 350);
    CHECK(ok.difference.is_zero());

    Decomposition stable = stable_kronecker(P{2, 1}, P{1, 1});
    CHECK(verify_product(P{2, 1}, P{1, 1}, SO(9), stable).passed);
    stable.add(P{2, 1}, -1);
    const ProductReport bad = verify_product(P{2, 1}, P{1, 1}, SO(9), stable);
    CHECK_FALSE(bad.passed);
    CHECK_FALSE(bad.difference.is_zero());
    CHECK(bad.lhs_dimension - bad.rhs_dimension == group_dim(P{2, 1}, O(9)));

    const Decomposition d19 = kronecker(P{2, 1}, P{1, 1}, O(4));
    CHECK(verify_product(P{2, 1}, P{1, 1}, O(4), d19).passed);
    CHECK(verify_product(P{2, 1}, P{1, 1}, SO(4), to_weights(d19, O(4))).passed);
}

TEST_CASE("decompose_via_characters examples") {
    CHECK(decompose_via_characters(P{1}, P{1}, SO(5)) ==
          WeightDecomposition{{Weight{{2, 0}}, 1}, {Weight{{1, 1}}, 1}, {Weight{{0, 0}}, 1}});
    CHECK(decompose_via_characters(P{2, 1}, P{1, 1}, SO(5)) == to_weights(kronecker(P{2, 1}, P{1, 1}, O(5)), O(5)));
    CHECK(decompose_via_characters(P{2, 1}, P{1, 1}, Sp(4)) ==
          WeightDecomposition{{Weight{{3, 2}}, 1}, {Weight{{3, 0}}, 1}, {Weight{{2, 1}}, 1}, {Weight{{1, 0}}, 1}});
    CHECK(decompose_via_characters(P{1}, P{1}, SO(4)) ==
          WeightDecomposition{{Weight{{2, 0}}, 1}, {Weight{{1, 1}}, 1}, {Weight{{1, -1}}, 1}, {Weight{{0, 0}}, 1}});
}

TEST_CASE("decompose_via_characters is symmetric and self-certifying") {
    for (const GroupContext& ctx : {SO(5), Sp(4), SO(6)})
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b)
                for (const Partition& l1 : partitions_of(a, ctx.rank()))
                    for (const Partition& l2 : partitions_of(b, ctx.rank())) {
                        const WeightDecomposition d = decompose_via_characters(l1, l2, ctx);
                        CHECK(d == decompose_via_characters(l2, l1, ctx));
                        CHECK(verify_product(l1, l2, ctx, d).passed);
                    }
}

TEST_CASE("decompose_character recovers signed sums") {
    const GroupContext ctx = Sp(4);
    LaurentPolynomial chi = character(Weight{{2, 1}}, ctx) * BigInt(3);
    chi -= character(Weight{{1, 0}}, ctx);
    CHECK(decompose_character(chi, ctx) == WeightDecomposition{{Weight{{2, 1}}, 3}, {Weight{{1, 0}}, -1}});
    CHECK(decompose_character(LaurentPolynomial(2), ctx).empty());
}

TEST_CASE("universal characters agree with Weyl characters on standard labels") {
    for (const GroupContext& ctx : {O(3), O(4), O(5), O(6), O(7), O(8), Sp(2), Sp(4), Sp(6), Sp(8)})
        for (int f = 0; f <= 5; ++f)
            for (const Partition& lambda : partitions_of(f, ctx.rank())) {
                CAPTURE(ctx.name());
                CAPTURE(lambda.to_string());
                CHECK(universal_character(lambda, ctx) == character(lambda, ctx));
            }
}

TEST_CASE("modification rules agree with universal characters") {
    for (int n = 2; n <= 8; ++n)
        for (Family family : {Family::O, Family::Sp}) {
            if (family == Family::Sp && n % 2) continue;
            const GroupContext ctx(family, n);
            for (int f = 0; f <= 7; ++f)
                for (const Partition& lambda : partitions_of(f)) {
                    if (ctx.is_standard(lambda)) continue;
                    CAPTURE(ctx.name());
                    CAPTURE(lambda.to_string());
                    const SignedLabel s = standardize(lambda, ctx);
                    const LaurentPolynomial expected =
                        s.is_zero() ? LaurentPolynomial(ctx.rank()) : character(s.shape, ctx) * BigInt(s.sign);
                    CHECK(universal_character(lambda, ctx) == expected);
                }
        }
}

TEST_CASE("oracle caps") {
    CHECK_THROWS_AS(character(Weight{{1, 0, 0, 0, 0}}, SO(11)), OracleCapExceeded);
    CHECK_THROWS_AS(decompose_via_characters(P{9}, P{1}, SO(5)), OracleCapExceeded);
    OracleLimits tight;
    tight.max_rank = 2;
    CHECK_THROWS_AS(character(Weight{{1, 0, 0}}, SO(7), tight), OracleCapExceeded);
    CHECK(character(Weight{{1, 0}}, SO(5), tight).evaluate_at_one() == 5);
}

#include <doctest.h>

#include <algorithm>

#include "ydk/brauer.hpp"
#include "ydk/littlewood_richardson.hpp"

using namespace ydk;

namespace {

using P = Partition;

std::vector<std::pair<std::vector<int>, int>> keys(const std::vector<BrauerLabel>& labels) {
    std::vector<std::pair<std::vector<int>, int>> out;
    for (const auto& l : labels) out.emplace_back(l.shape().rows(), l.level());
    std::sort(out.begin(), out.end());
    return out;
}

// Standard tableaux of skew shape outer/inner, by peeling corners.
BigInt skew_tableaux(const Partition& outer, const Partition& inner) {
    if (outer == inner) return 1;
    BigInt total = 0;
    for (const Partition& smaller : remove_one_box(outer))
        if (contains(smaller, inner)) total += skew_tableaux(smaller, inner);
    return total;
}

// Closed count of the induced module: choose the 2k contracted strands,
// pair them, split the rest between the factors, then count skew tableaux.
BigInt induced_by_counting(const Partition& l1, const Partition& l2) {
    const int f1 = l1.size(), f2 = l2.size(), f = f1 + f2;
    BigInt total = 0;
    for (int k = 0; k <= std::min(f1, f2); ++k) {
        BigInt inner = 0;
        for (const Partition& delta : partitions_of(k))
            if (contains(l1, delta) && contains(l2, delta)) inner += skew_tableaux(l1, delta) * skew_tableaux(l2, delta);
        total += binomial(f, 2 * k) * odd_double_factorial(k) * binomial(f - 2 * k, f1 - k) * inner;
    }
    return total;
}

}  // namespace

TEST_CASE("BrauerLabel validates size and parity") {
    CHECK(BrauerLabel(P{1}, 3).contractions() == 1);
    CHECK_THROWS_AS(BrauerLabel(P{2, 1}, 2), std::invalid_argument);
    CHECK_THROWS_AS(BrauerLabel(P{1}, 2), std::invalid_argument);
    CHECK_THROWS_AS(BrauerLabel(P{}, -2), std::invalid_argument);
}

TEST_CASE("branch") {
    using K = std::vector<std::pair<std::vector<int>, int>>;
    CHECK(keys(branch(BrauerLabel(P{2}, 2))) == K{{{1}, 1}});
    CHECK(keys(branch(BrauerLabel(P{1}, 3))) == K{{{}, 2}, {{1, 1}, 2}, {{2}, 2}});
    CHECK(keys(branch(BrauerLabel(P{}, 2))) == K{{{1}, 1}});
    CHECK_THROWS_AS(branch(BrauerLabel(P{}, 0)), std::invalid_argument);
}

TEST_CASE("brauer_dim examples") {
    CHECK(brauer_dim(BrauerLabel(P{2, 1}, 3)) == 2);
    CHECK(brauer_dim(BrauerLabel(P{1}, 3)) == 3);
    CHECK(brauer_dim(BrauerLabel(P{}, 2)) == 1);
    CHECK(brauer_dim(BrauerLabel(P{}, 4)) == 3);
    CHECK(brauer_dim(BrauerLabel(P{2}, 4)) == 6);
}

TEST_CASE("brauer_dim matches the closed count") {
    for (int f = 0; f <= 10; ++f)
        for (int boxes = f; boxes >= 0; boxes -= 2)
            for (const Partition& lambda : partitions_of(boxes)) {
                const int k = (f - boxes) / 2;
                CHECK(brauer_dim(BrauerLabel(lambda, f)) ==
                      binomial(f, boxes) * odd_double_factorial(k) * sym_dim(lambda));
            }
}

TEST_CASE("squared dimensions sum to (2f-1)!!") {
    for (int f = 0; f <= 8; ++f) {
        BigInt sum = 0;
        for (int boxes = f; boxes >= 0; boxes -= 2)
            for (const Partition& lambda : partitions_of(boxes)) {
                const BigInt d = brauer_dim(BrauerLabel(lambda, f));
                sum += d * d;
            }
        CHECK(sum == odd_double_factorial(f));
    }
}

TEST_CASE("BratteliDiagram levels and path counts") {
    const BratteliDiagram diagram(6);
    CHECK(diagram.max_level() == 6);
    CHECK(diagram.level(0).size() == 1);
    CHECK(diagram.level(1).size() == 1);
    CHECK(diagram.level(2).size() == 3);
    CHECK(diagram.level(3).size() == 4);
    CHECK(diagram.level(4).size() == 8);
    for (int j = 1; j <= 6; ++j)
        for (std::size_t i = 0; i < diagram.level(j).size(); ++i) {
            const BrauerLabel label(diagram.level(j)[i], j);
            CHECK(diagram.dimension(label) == brauer_dim(label));
            CHECK(diagram.parents(j, static_cast<int>(i)).size() == branch(label).size());
        }
    CHECK_THROWS_AS(diagram.dimension(BrauerLabel(P{}, 8)), std::out_of_range);
    CHECK_THROWS_AS(diagram.index_of(P{3}, 2), std::out_of_range);
}

TEST_CASE("is_n_permissible") {
    CHECK_FALSE(is_n_permissible(P{2, 2}, 3));
    CHECK(is_n_permissible(P{2, 1}, 3));
    CHECK(is_n_permissible(P{1, 1, 1}, -4));
    CHECK_FALSE(is_n_permissible(P{3}, -4));
    CHECK_FALSE(is_n_permissible(P{4, 2}, -3));
    CHECK(is_n_permissible(P{2, 1}, -3));
    CHECK(is_n_permissible(P{}, 1));
    CHECK_THROWS_AS(is_n_permissible(P{1}, 0), std::invalid_argument);
    CHECK_THROWS_AS(is_n_permissible(P{1}, -1), std::invalid_argument);
}

TEST_CASE("is_semisimple") {
    CHECK(is_semisimple(5, 3));
    CHECK_FALSE(is_semisimple(2, 4));
    CHECK(is_semisimple(3, 4));
    CHECK(is_semisimple(-4, 3));
    CHECK_FALSE(is_semisimple(-2, 4));
    CHECK_FALSE(is_semisimple(-4, 3, NegativeReading::literal));
    CHECK(is_semisimple(-2, 4, NegativeReading::literal));
}

TEST_CASE("verify_induced_dim values") {
    CHECK(verify_induced_dim(P{2}, P{1}) == 6);
    CHECK(verify_induced_dim(P{1}, P{1}) == 3);
    CHECK(verify_induced_dim(P{2, 1}, P{1, 1}) == BigRational(95, 2));
    CHECK(induced_dimension(P{2, 1}, P{1, 1}) == 95);
}

TEST_CASE("induced dimension agrees with the skew-tableau count") {
    for (int total = 0; total <= 6; ++total)
        for (int a = 0; a <= total; ++a)
            for (const Partition& l1 : partitions_of(a))
                for (const Partition& l2 : partitions_of(total - a)) {
                    CAPTURE(l1.to_string());
                    CAPTURE(l2.to_string());
                    CHECK(induced_dimension(l1, l2) == induced_by_counting(l1, l2));
                }
}

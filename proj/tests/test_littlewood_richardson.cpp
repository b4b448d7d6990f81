#include <doctest.h>

#include "ydk/littlewood_richardson.hpp"

using namespace ydk;

namespace {

using P = Partition;

// Pieri: lambda x [r] adds a horizontal strip of r boxes.
bool horizontal_strip(const Partition& outer, const Partition& inner) {
    if (!contains(outer, inner)) return false;
    for (int i = 1; i < outer.length(); ++i)
        if (outer.row(i) > inner.row(i - 1)) return false;
    return true;
}

}  // namespace

TEST_CASE("lr_coefficient examples") {
    CHECK(lr_coefficient(P{1}, P{1}, P{2}) == 1);
    CHECK(lr_coefficient(P{2, 1}, P{1, 1}, P{3, 2}) == 1);
    CHECK(lr_coefficient(P{2, 1}, P{1, 1}, P{2, 2, 1}) == 1);
    CHECK(lr_coefficient(P{2}, P{2}, P{3, 1}) == 1);
    CHECK(lr_coefficient(P{2, 1}, P{2, 1}, P{3, 2, 1}) == 2);
    CHECK(lr_coefficient(P{2, 1}, P{1, 1}, P{4, 1}) == 0);
    CHECK(lr_coefficient(P{2, 1}, P{1}, P{2, 1}) == 0);
    CHECK(lr_coefficient(P{}, P{2, 1}, P{2, 1}) == 1);
}

TEST_CASE("lr_product tables") {
    CHECK(lr_product(P{2, 1}, P{1, 1}) == Decomposition{{P{3, 2}, 1}, {P{2, 2, 1}, 1}, {P{2, 1, 1, 1}, 1}, {P{3, 1, 1}, 1}});
    CHECK(lr_product(P{2}, P{1}) == Decomposition{{P{3}, 1}, {P{2, 1}, 1}});
    CHECK(lr_product(P{1, 1}, P{1}) == Decomposition{{P{2, 1}, 1}, {P{1, 1, 1}, 1}});
    CHECK(lr_product(P{1}, P{}) == Decomposition{{P{1}, 1}});
    CHECK(lr_product(P{}, P{}) == Decomposition{{P{}, 1}});
    CHECK(lr_product(P{2, 1}, P{2, 1}).multiplicity(P{3, 2, 1}) == 2);
    CHECK(lr_product(P{2, 1}, P{1, 1}).to_string() == "[3,2] + [3,1,1] + [2,2,1] + [2,1,1,1]");
}

TEST_CASE("products with a one-row factor follow the Pieri rule") {
    for (int f = 0; f <= 6; ++f)
        for (const Partition& lambda : partitions_of(f))
            for (int r = 1; r <= 3; ++r) {
                Decomposition expected;
                for (const Partition& nu : partitions_of(f + r))
                    if (horizontal_strip(nu, lambda)) expected.add(nu, 1);
                CHECK(lr_product(lambda, P{r}) == expected);
            }
}

TEST_CASE("skew_expand examples") {
    CHECK(skew_expand(P{2, 1}, P{1}) == Decomposition{{P{2}, 1}, {P{1, 1}, 1}});
    CHECK(skew_expand(P{2, 1}, P{1, 1}) == Decomposition{{P{1}, 1}});
    CHECK(skew_expand(P{2, 1}, P{2, 1}) == Decomposition{{P{}, 1}});
    CHECK(skew_expand(P{2, 1}, P{}) == Decomposition{{P{2, 1}, 1}});
    CHECK(skew_expand(P{1, 1}, P{2}).empty());
    CHECK(skew_expand(P{3, 2, 1}, P{2, 1}).multiplicity(P{2, 1}) == 2);
}

TEST_CASE("skew_expand inverts lr_product") {
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 3; ++b)
            for (const Partition& lambda : partitions_of(a + b))
                for (const Partition& delta : partitions_of(a)) {
                    const Decomposition skew = skew_expand(lambda, delta);
                    for (const Partition& alpha : partitions_of(b))
                        CHECK(skew.multiplicity(alpha) == lr_product(delta, alpha).multiplicity(lambda));
                }
}

TEST_CASE("sym_dim") {
    CHECK(sym_dim(P{2}) == 1);
    CHECK(sym_dim(P{2, 1}) == 2);
    CHECK(sym_dim(P{1, 1}) == 1);
    CHECK(sym_dim(P{}) == 1);
    CHECK(sym_dim(P{3, 2, 1}) == 16);
    CHECK(sym_dim(P{4, 4, 4}) == 462);
}

#pragma once

#include <cstdint>

#include "ydk/decomposition.hpp"
#include "ydk/numeric.hpp"
#include "ydk/partition.hpp"

namespace ydk {

/**
 * Littlewood-Richardson coefficient c^nu_{lambda mu}: the number of fillings of
 * the skew shape nu/lambda with content mu that are weakly increasing along
 * rows, strictly increasing down columns, and whose reverse reading word
 * (right to left, top to bottom) is a lattice word.
 */
std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Outer product lambda x mu = sum_nu c^nu_{lambda mu} nu.
Decomposition lr_product(const Partition& lambda, const Partition& mu);

/// All alpha with c^lambda_{delta alpha} > 0, i.e. the skew Schur expansion of lambda/delta.
Decomposition skew_expand(const Partition& lambda, const Partition& delta);

/// Dimension of the symmetric-group irrep: |lambda|! / prod(hook lengths).
BigInt sym_dim(const Partition& lambda);

}  // namespace ydk

#pragma once

#include <cstdint>
#include <vector>

#include "ydk/decomposition.hpp"
#include "ydk/partition.hpp"

namespace ydk {

/// One k-fold contraction channel: the same delta (|delta| = k) is stripped
/// from both factors, leaving alpha and beta to be multiplied by the LR rule.
struct ContractionTerm {
    int k = 0;
    Partition delta;
    Partition alpha;
    Partition beta;
    std::int64_t coeff = 0;  // c^{lambda1}_{delta alpha} * c^{lambda2}_{delta beta}
};

/// All channels with exactly k contractions. Requires k <= min(|lambda1|, |lambda2|).
std::vector<ContractionTerm> contraction_terms(const Partition& lambda1, const Partition& lambda2, int k);

/// Large-n Kronecker product of O(n) / Sp(n) tensor irreps:
/// sum over k, delta of (lambda1/delta) . (lambda2/delta).
Decomposition stable_kronecker(const Partition& lambda1, const Partition& lambda2);

}  // namespace ydk

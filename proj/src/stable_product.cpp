#include "ydk/stable_product.hpp"

#include <algorithm>
#include <stdexcept>

#include "ydk/littlewood_richardson.hpp"

namespace ydk {

std::vector<ContractionTerm> contraction_terms(const Partition& lambda1, const Partition& lambda2, int k) {
    if (k < 0 || k > std::min(lambda1.size(), lambda2.size()))
        throw std::invalid_argument("contraction count out of range");
    std::vector<ContractionTerm> terms;
    for (const Partition& delta : partitions_of(k)) {
        const Decomposition left = skew_expand(lambda1, delta);
        if (left.empty()) continue;
        const Decomposition right = skew_expand(lambda2, delta);
        for (const auto& [alpha, a] : left)
            for (const auto& [beta, b] : right) terms.push_back({k, delta, alpha, beta, a * b});
    }
    return terms;
}

Decomposition stable_kronecker(const Partition& lambda1, const Partition& lambda2) {
    Decomposition result;
    const int k_max = std::min(lambda1.size(), lambda2.size());
    for (int k = 0; k <= k_max; ++k)
        for (const ContractionTerm& term : contraction_terms(lambda1, lambda2, k))
            result.add_scaled(lr_product(term.alpha, term.beta), term.coeff);
    return result;
}

}  // namespace ydk

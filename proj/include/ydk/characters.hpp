#pragma once

#include <stdexcept>
#include <string>

#include "ydk/decomposition.hpp"
#include "ydk/laurent.hpp"
#include "ydk/modification.hpp"
#include "ydk/numeric.hpp"
#include "ydk/partition.hpp"
#include "ydk/weight.hpp"

namespace ydk {

/**
 * Weyl-character oracle for B_l (odd orthogonal), C_l (symplectic) and D_l
 * (even orthogonal) tensor representations.
 *
 * Characters are Laurent polynomials in x_1..x_l with every exponent doubled,
 * so the half-integral Weyl vector of B_l stays integral; a weight w appears
 * as the monomial x^(2w).
 */

/// Doubling applied to every exponent produced by the oracle.
inline constexpr int kExponentScale = 2;

struct OracleLimits {
    int max_rank = kMaxVariables;
    int max_boxes = 8;  // per factor

    /// Reads YDK_MAX_RANK and YDK_MAX_BOXES; the rank is clamped to kMaxVariables.
    static OracleLimits from_environment();
};

class OracleCapExceeded : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NonterminationGuard : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Irreducible character of SO(n) / Sp(n) with the given highest weight.
 * For an O(2l) context a weight with nonzero last entry yields the O(2l)
 * irrep, i.e. the sum over both signs of that entry.
 */
LaurentPolynomial character(const Weight& label, const GroupContext& ctx,
                            const OracleLimits& limits = OracleLimits::from_environment());

/// Character of the O(n) / Sp(n) tensor irrep of a standard partition,
/// restricted to the connected group (l-row labels of even n give the split pair).
LaurentPolynomial character(const Partition& label, const GroupContext& ctx,
                            const OracleLimits& limits = OracleLimits::from_environment());

/**
 * Specialization of the universal character of an arbitrary partition:
 * det(h_{l_i-i+j} - h_{l_i-i-j}) for orthogonal groups and
 * det(h_{l_i-i+j} + h_{l_i-i-j+2}) / 2 for symplectic ones, with h_k the
 * complete symmetric functions of the eigenvalues. Nonstandard labels give
 * +/- a standard character or zero, independently of the modification rules.
 */
LaurentPolynomial universal_character(const Partition& label, const GroupContext& ctx,
                                      const OracleLimits& limits = OracleLimits::from_environment());

/// Weyl dimension formula; same O(2l) convention as character(Weight).
BigInt group_dim(const Weight& label, const GroupContext& ctx);
BigInt group_dim(const Partition& label, const GroupContext& ctx);

struct ProductReport {
    bool passed = false;
    BigInt lhs_dimension;
    BigInt rhs_dimension;
    LaurentPolynomial difference;  // chi(lambda1) chi(lambda2) - sum mult chi(term)
};

/// Exact identity test of a claimed O(n)/Sp(n)-level decomposition.
ProductReport verify_product(const Partition& lambda1, const Partition& lambda2, const GroupContext& ctx,
                             const Decomposition& claimed,
                             const OracleLimits& limits = OracleLimits::from_environment());

/// Same, for a decomposition into SO(n) / Sp(n) highest weights.
ProductReport verify_product(const Partition& lambda1, const Partition& lambda2, const GroupContext& ctx,
                             const WeightDecomposition& claimed,
                             const OracleLimits& limits = OracleLimits::from_environment());

/// Peels off the character of the lexicographically highest weight until
/// nothing is left. The result is keyed by SO(n) / Sp(n) highest weights.
WeightDecomposition decompose_via_characters(const Partition& lambda1, const Partition& lambda2,
                                             const GroupContext& ctx,
                                             const OracleLimits& limits = OracleLimits::from_environment());

/// Splits a virtual character into irreducible characters (coefficients may be negative).
WeightDecomposition decompose_character(const LaurentPolynomial& chi, const GroupContext& ctx,
                                        const OracleLimits& limits = OracleLimits::from_environment());

}  // namespace ydk

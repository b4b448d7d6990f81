#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ydk/decomposition.hpp"
#include "ydk/partition.hpp"
#include "ydk/weight.hpp"

namespace ydk {

enum class Family { O, SO, Sp };

std::string_view family_name(Family family);

/// Accepts "O", "SO", "Sp" (case-insensitive). Throws std::invalid_argument.
Family parse_family(std::string_view text);

/**
 * A classical group: O(n) or SO(n) acting on C^n, or Sp(n) with n = 2m.
 * The rank is floor(n/2) in every case.
 */
class GroupContext {
public:
    GroupContext(Family family, int dimension);

    Family family() const noexcept { return family_; }
    int dimension() const noexcept { return dimension_; }
    int rank() const noexcept { return dimension_ / 2; }

    bool orthogonal() const noexcept { return family_ != Family::Sp; }
    bool even_orthogonal() const noexcept { return orthogonal() && dimension_ % 2 == 0; }

    /// At most rank() rows.
    bool is_standard(const Partition& lambda) const noexcept { return lambda.length() <= rank(); }

    /// "O(5)", "Sp(4)", ...
    std::string name() const;

    friend bool operator==(const GroupContext&, const GroupContext&) = default;

private:
    Family family_;
    int dimension_;
};

class NonstandardInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// sign is +1 or -1 for a standard label, 0 for the zero label.
struct SignedLabel {
    Partition shape;
    int sign = 0;

    bool is_zero() const noexcept { return sign == 0; }
    std::string to_string() const;
    friend bool operator==(const SignedLabel&, const SignedLabel&) = default;
};

/// One iteration of the modification rule, recorded for --trace output.
struct ModificationStep {
    Partition label;
    int rows = 0;
    int hook_length = 0;
    std::optional<SkewStrip> strip;  // empty when the label is sent to zero
    int sign = 0;                    // sign contributed by this step; 0 on the zero branch
};

/**
 * Brings a label to standard form for ctx. While the label has p > rank rows,
 * a rim strip of length 2p - n (orthogonal) or 2p - n - 2 (symplectic) is cut
 * from the foot of the first column. A strip spanning c columns contributes
 * (-1)^(c-1) for O(n) and (-1)^c for Sp(n). A non-positive length or a cut
 * that leaves no Young diagram gives the zero label.
 *
 * The orthogonal rule works up to the determinant character, so SO(n)
 * contexts use it unchanged.
 */
SignedLabel standardize(const Partition& lambda, const GroupContext& ctx,
                        std::vector<ModificationStep>* trace = nullptr);

struct StandardizationTrace {
    Partition label;
    std::int64_t multiplicity = 0;
    std::vector<ModificationStep> steps;
    SignedLabel result;
};

/**
 * Kronecker product for the group: the stable product with every term
 * standardized and like terms collected. Both inputs must be standard for
 * ctx (NonstandardInput otherwise). SO(n) returns the O(n) answer; use
 * to_weights to split l-row labels of SO(2l).
 */
Decomposition kronecker(const Partition& lambda1, const Partition& lambda2, const GroupContext& ctx,
                        std::vector<StandardizationTrace>* trace = nullptr);

/// Applies standardize to every term of an arbitrary decomposition.
Decomposition modify(const Decomposition& stable, const GroupContext& ctx,
                     std::vector<StandardizationTrace>* trace = nullptr);

/// SO(2l) labels of an O(2l) irrep: the pair (..., lambda_l), (..., -lambda_l)
/// when lambda has exactly l rows, otherwise the zero-padded label alone.
std::vector<Weight> so_even_split(const Partition& lambda, int l);

/// Pads every label to the rank; for even orthogonal groups l-row labels are split.
WeightDecomposition to_weights(const Decomposition& decomposition, const GroupContext& ctx);

}  // namespace ydk

#pragma once

#include <vector>

#include "ydk/numeric.hpp"
#include "ydk/partition.hpp"

namespace ydk {

/// An irrep of the Brauer algebra on `level` strands, labelled by a diagram
/// with level - 2k boxes.
class BrauerLabel {
public:
    BrauerLabel(Partition shape, int level);

    const Partition& shape() const noexcept { return shape_; }
    int level() const noexcept { return level_; }

    /// Number of trace contractions k = (level - |shape|) / 2.
    int contractions() const noexcept { return (level_ - shape_.size()) / 2; }

    friend bool operator==(const BrauerLabel&, const BrauerLabel&) = default;

private:
    Partition shape_;
    int level_;
};

/// Labels at level - 1 reached by removing a box, or adding one when the
/// shape has fewer than `level` boxes.
std::vector<BrauerLabel> branch(const BrauerLabel& label);

/// Number of oscillating tableaux from the empty diagram to the label.
BigInt brauer_dim(const BrauerLabel& label);

/**
 * Levels 0..max_level of the branching graph. Level j holds every partition
 * of j, j-2, ...; an edge joins neighbouring levels when the diagrams differ
 * by one box. Read-only once built.
 */
class BratteliDiagram {
public:
    explicit BratteliDiagram(int max_level);

    int max_level() const noexcept { return static_cast<int>(levels_.size()) - 1; }
    const std::vector<Partition>& level(int j) const { return levels_.at(static_cast<std::size_t>(j)); }

    /// Indices into level(j - 1) adjacent to level(j)[index].
    const std::vector<int>& parents(int j, int index) const {
        return parents_.at(static_cast<std::size_t>(j)).at(static_cast<std::size_t>(index));
    }

    /// Path count from the root; throws std::out_of_range for labels outside the diagram.
    const BigInt& dimension(const BrauerLabel& label) const;

    int index_of(const Partition& shape, int j) const;

private:
    std::vector<std::vector<Partition>> levels_;
    std::vector<std::vector<std::vector<int>>> parents_;
    std::vector<std::vector<BigInt>> paths_;
};

/**
 * n-permissibility:
 *   n > 0:          the first two columns hold at most n boxes;
 *   n = -2m:        at most m columns;
 *   n < 0 and odd:  the first two rows hold at most 2 - n boxes.
 * Throws std::invalid_argument for n = 0 or n = -1.
 */
bool is_n_permissible(const Partition& lambda, int n);

enum class NegativeReading {
    magnitude,  // -n >= f - 1, the same sense as the positive case
    literal,    // -n <= f - 1, as printed next to the permissibility conditions
};

/// Semisimplicity of the Brauer algebra on f strands: n >= f - 1 for n > 0.
/// Negative n is ambiguous in the source material; the reading picks one.
bool is_semisimple(int n, int f, NegativeReading reading = NegativeReading::magnitude);

/// Sum over the stable product of multiplicity x brauer_dim at level |lambda1| + |lambda2|.
BigInt induced_dimension(const Partition& lambda1, const Partition& lambda2);

/// induced_dimension divided by sym_dim(lambda1) * sym_dim(lambda2). Not always an integer.
BigRational verify_induced_dim(const Partition& lambda1, const Partition& lambda2);

}  // namespace ydk

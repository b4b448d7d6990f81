#pragma once

#include <compare>
#include <string>
#include <vector>

namespace ydk {

/**
 * A highest weight of SO(n) or Sp(2m) in the orthonormal basis, zero padded
 * to the rank. Tensor labels only: every entry is an integer, and only the
 * last entry of an even orthogonal label may be negative.
 */
struct Weight {
    std::vector<int> entries;

    int rank() const noexcept { return static_cast<int>(entries.size()); }
    int boxes() const noexcept;
    std::string to_string() const;

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// More boxes first, then lexicographically larger first.
struct WeightOrder {
    bool operator()(const Weight& a, const Weight& b) const {
        if (a.boxes() != b.boxes()) return a.boxes() > b.boxes();
        return a.entries > b.entries;
    }
};

}  // namespace ydk

#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ydk {

/**
 * A Young diagram stored as its weakly decreasing row lengths.
 *
 * Trailing zero rows are never stored, so the empty diagram is the empty
 * row list; it prints as "[0]". Values are immutable once constructed.
 */
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> rows);
    explicit Partition(std::vector<int> rows);

    const std::vector<int>& rows() const noexcept { return rows_; }

    /// Total number of boxes.
    int size() const noexcept { return size_; }

    /// Number of nonzero rows (the length of the first column).
    int length() const noexcept { return static_cast<int>(rows_.size()); }

    /// Length of the first row; 0 for the empty diagram.
    int width() const noexcept { return rows_.empty() ? 0 : rows_.front(); }

    bool empty() const noexcept { return rows_.empty(); }

    /// Row length at zero-based index i; 0 past the last row.
    int row(int i) const noexcept {
        return (i >= 0 && i < length()) ? rows_[static_cast<std::size_t>(i)] : 0;
    }

    /// Whether the 1-based cell (r, c) lies in the diagram.
    bool has_cell(int r, int c) const noexcept { return r >= 1 && c >= 1 && c <= row(r - 1); }

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.rows_ <=> b.rows_; }

private:
    std::vector<int> rows_;
    int size_ = 0;
};

/// Output order: more boxes first, then lexicographically larger rows first.
struct CanonicalOrder {
    bool operator()(const Partition& a, const Partition& b) const;
};

/// Parses "[3,3,3,1]", "3,3,3,1", "[3^3,1]", "[0]" or "[]". Throws std::invalid_argument.
Partition parse_partition(std::string_view text);

Partition conjugate(const Partition& lambda);

/// True iff mu_i <= lambda_i for every row.
bool contains(const Partition& lambda, const Partition& mu);

/// Hook length of every cell, row by row.
std::vector<std::vector<int>> hook_lengths(const Partition& lambda);

/// All partitions of n with at most max_rows rows and rows of at most max_width boxes.
std::vector<Partition> partitions_of(int n, int max_rows = -1, int max_width = -1);

/// All partitions mu with |mu| = n and mu contained in bound.
std::vector<Partition> subpartitions_of_size(const Partition& bound, int n);

/// Cells reachable by adding or removing one box.
std::vector<Partition> remove_one_box(const Partition& lambda);
std::vector<Partition> add_one_box(const Partition& lambda);

struct Cell {
    int row;  // 1-based
    int col;  // 1-based
    friend bool operator==(const Cell&, const Cell&) = default;
};

/// A band of boxes outer/inner cut from the south-east rim of outer.
struct SkewStrip {
    Partition outer;
    Partition inner;
    std::vector<Cell> boxes;  // ordered from the foot of the first column along the rim
    int columns_spanned = 0;
    int rows_spanned = 0;
};

/**
 * Removes h boxes from the rim of lambda, starting at the foot of the first
 * column and following the rim north-east (one cell per diagonal).
 *
 * Returns std::nullopt (not removable) when the rim is shorter than h or when
 * cutting the first h rim cells leaves something that is not a Young diagram.
 */
std::optional<SkewStrip> boundary_strip(const Partition& lambda, int h);

}  // namespace ydk

#include "ydk/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace ydk {

Partition::Partition(std::initializer_list<int> rows) : Partition(std::vector<int>(rows)) {}

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] <= 0) throw std::invalid_argument("partition rows must be positive");
        if (i > 0 && rows_[i] > rows_[i - 1])
            throw std::invalid_argument("partition rows must be weakly decreasing");
    }
    size_ = std::accumulate(rows_.begin(), rows_.end(), 0);
}

std::string Partition::to_string() const {
    if (rows_.empty()) return "[0]";
    std::string s = "[";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(rows_[i]);
    }
    s += ']';
    return s;
}

bool CanonicalOrder::operator()(const Partition& a, const Partition& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.rows() > b.rows();
}

namespace {

int parse_int(std::string_view token, std::string_view whole) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty())
        throw std::invalid_argument("malformed partition '" + std::string(whole) + "'");
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Partition parse_partition(std::string_view text) {
    std::string_view body = trim(text);
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw std::invalid_argument("unbalanced brackets in '" + std::string(text) + "'");
        body = trim(body.substr(1, body.size() - 2));
    }
    std::vector<int> rows;
    if (body.empty()) return Partition{};
    std::size_t start = 0;
    while (start <= body.size()) {
        std::size_t comma = body.find(',', start);
        if (comma == std::string_view::npos) comma = body.size();
        std::string_view token = trim(body.substr(start, comma - start));
        std::size_t caret = token.find('^');
        if (caret == std::string_view::npos) {
            int v = parse_int(token, text);
            if (v < 0) throw std::invalid_argument("negative row in '" + std::string(text) + "'");
            rows.push_back(v);
        } else {
            int v = parse_int(trim(token.substr(0, caret)), text);
            int times = parse_int(trim(token.substr(caret + 1)), text);
            if (v < 0 || times < 0) throw std::invalid_argument("negative entry in '" + std::string(text) + "'");
            rows.insert(rows.end(), static_cast<std::size_t>(times), v);
        }
        start = comma + 1;
    }
    try {
        return Partition(std::move(rows));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("'" + std::string(text) + "': " + e.what());
    }
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> cols(static_cast<std::size_t>(lambda.width()), 0);
    for (int r : lambda.rows())
        for (int c = 0; c < r; ++c) ++cols[static_cast<std::size_t>(c)];
    return Partition(std::move(cols));
}

bool contains(const Partition& lambda, const Partition& mu) {
    if (mu.length() > lambda.length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu.row(i) > lambda.row(i)) return false;
    return true;
}

std::vector<std::vector<int>> hook_lengths(const Partition& lambda) {
    const Partition cols = conjugate(lambda);
    std::vector<std::vector<int>> hooks;
    hooks.reserve(static_cast<std::size_t>(lambda.length()));
    for (int i = 0; i < lambda.length(); ++i) {
        std::vector<int> row;
        for (int j = 0; j < lambda.row(i); ++j) row.push_back(lambda.row(i) - j + cols.row(j) - i - 1);
        hooks.push_back(std::move(row));
    }
    return hooks;
}

namespace {

void generate(int remaining, int max_part, int rows_left, std::vector<int>& current,
              const std::function<bool(int, int)>& row_ok, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    if (rows_left == 0) return;
    const int index = static_cast<int>(current.size());
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        if (!row_ok(index, part)) continue;
        current.push_back(part);
        generate(remaining - part, part, rows_left - 1, current, row_ok, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_rows, int max_width) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> current;
    const int rows = max_rows < 0 ? n : max_rows;
    const int width = max_width < 0 ? n : max_width;
    generate(n, width, rows, current, [](int, int) { return true; }, out);
    return out;
}

std::vector<Partition> subpartitions_of_size(const Partition& bound, int n) {
    std::vector<Partition> out;
    if (n < 0 || n > bound.size()) return out;
    std::vector<int> current;
    generate(n, bound.width(), bound.length(), current,
             [&](int index, int part) { return part <= bound.row(index); }, out);
    return out;
}

std::vector<Partition> remove_one_box(const Partition& lambda) {
    std::vector<Partition> out;
    for (int i = 0; i < lambda.length(); ++i) {
        if (lambda.row(i) > lambda.row(i + 1)) {
            std::vector<int> rows = lambda.rows();
            --rows[static_cast<std::size_t>(i)];
            out.emplace_back(std::move(rows));
        }
    }
    return out;
}

std::vector<Partition> add_one_box(const Partition& lambda) {
    std::vector<Partition> out;
    for (int i = 0; i <= lambda.length(); ++i) {
        if (i == 0 || lambda.row(i) < lambda.row(i - 1)) {
            std::vector<int> rows = lambda.rows();
            if (i == lambda.length())
                rows.push_back(1);
            else
                ++rows[static_cast<std::size_t>(i)];
            out.emplace_back(std::move(rows));
        }
    }
    return out;
}

std::optional<SkewStrip> boundary_strip(const Partition& lambda, int h) {
    if (h < 1) throw std::invalid_argument("boundary_strip needs a positive length");
    const int p = lambda.length();
    if (p == 0 || h > p + lambda.width() - 1) return std::nullopt;

    // Rim cells have no cell diagonally south-east; there is exactly one per
    // content value c - r, running from 1 - p (the foot of column one) upward.
    std::vector<Cell> rim;
    for (int r = p; r >= 1; --r) {
        const int first = std::max(1, lambda.row(r));  // row(r) is the 0-based index of row r+1
        for (int c = first; c <= lambda.row(r - 1); ++c) rim.push_back({r, c});
    }
    std::stable_sort(rim.begin(), rim.end(),
                     [](const Cell& a, const Cell& b) { return a.col - a.row < b.col - b.row; });
    rim.resize(static_cast<std::size_t>(h));

    std::vector<int> removed(static_cast<std::size_t>(p), 0);
    for (const Cell& cell : rim) ++removed[static_cast<std::size_t>(cell.row - 1)];
    std::vector<int> rows = lambda.rows();
    for (const Cell& cell : rim) {
        // the cut in each row has to be a suffix of that row
        const int len = lambda.row(cell.row - 1);
        if (cell.col <= len - removed[static_cast<std::size_t>(cell.row - 1)]) return std::nullopt;
    }
    for (int i = 0; i < p; ++i) rows[static_cast<std::size_t>(i)] -= removed[static_cast<std::size_t>(i)];
    for (int i = 1; i < p; ++i)
        if (rows[static_cast<std::size_t>(i)] > rows[static_cast<std::size_t>(i - 1)]) return std::nullopt;
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    for (int v : rows)
        if (v == 0) return std::nullopt;

    SkewStrip strip;
    strip.outer = lambda;
    strip.inner = Partition(std::move(rows));
    auto [min_col, max_col] = std::minmax_element(rim.begin(), rim.end(),
                                                  [](const Cell& a, const Cell& b) { return a.col < b.col; });
    auto [min_row, max_row] = std::minmax_element(rim.begin(), rim.end(),
                                                  [](const Cell& a, const Cell& b) { return a.row < b.row; });
    strip.columns_spanned = max_col->col - min_col->col + 1;
    strip.rows_spanned = max_row->row - min_row->row + 1;
    strip.boxes = std::move(rim);
    return strip;
}

}  // namespace ydk

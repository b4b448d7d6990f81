#include "ydk/littlewood_richardson.hpp"

#include <algorithm>
#include <vector>

namespace ydk {

namespace {

class TableauCounter {
public:
    TableauCounter(const Partition& inner, const Partition& content, const Partition& outer)
        : inner_(inner), content_(content), outer_(outer), used_(static_cast<std::size_t>(content.length()) + 1, 0) {
        for (int r = 1; r <= outer.length(); ++r)
            for (int c = outer.row(r - 1); c > inner.row(r - 1); --c) cells_.push_back({r, c});
        filling_.assign(static_cast<std::size_t>(outer.length()) + 1,
                        std::vector<int>(static_cast<std::size_t>(outer.width()) + 2, 0));
    }

    std::int64_t count() { return place(0); }

private:
    bool in_skew(int r, int c) const {
        return r >= 1 && c >= 1 && c <= outer_.row(r - 1) && c > inner_.row(r - 1);
    }

    std::int64_t place(std::size_t index) {
        if (index == cells_.size()) return 1;
        const auto [r, c] = cells_[index];
        int upper = content_.length();
        if (in_skew(r, c + 1)) upper = std::min(upper, at(r, c + 1));
        int lower = 1;
        if (in_skew(r - 1, c)) lower = at(r - 1, c) + 1;
        std::int64_t total = 0;
        for (int v = lower; v <= upper; ++v) {
            auto& used_v = used_[static_cast<std::size_t>(v)];
            if (used_v >= content_.row(v - 1)) continue;
            if (v > 1 && used_v >= used_[static_cast<std::size_t>(v - 1)]) continue;
            ++used_v;
            at(r, c) = v;
            total += place(index + 1);
            at(r, c) = 0;
            --used_v;
        }
        return total;
    }

    int& at(int r, int c) { return filling_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }

    const Partition& inner_;
    const Partition& content_;
    const Partition& outer_;
    std::vector<Cell> cells_;
    std::vector<int> used_;
    std::vector<std::vector<int>> filling_;
};

void collect_outer_shapes(const Partition& lambda, const Partition& mu, int row, int remaining, int previous,
                          std::vector<int>& current, std::vector<Partition>& out) {
    const int max_rows = lambda.length() + mu.length();
    if (remaining == 0) {
        std::vector<int> rows = current;
        for (int i = row; i < lambda.length(); ++i) rows.push_back(lambda.row(i));
        // remaining rows of lambda must still fit under the previous row
        if (row < lambda.length() && lambda.row(row) > previous) return;
        out.emplace_back(std::move(rows));
        return;
    }
    if (row >= max_rows) return;
    const int low = lambda.row(row);
    const int high = std::min(previous, low + std::min(remaining, mu.width()));
    for (int v = high; v >= low; --v) {
        if (v == 0) break;
        current.push_back(v);
        collect_outer_shapes(lambda, mu, row + 1, remaining - (v - low), v, current, out);
        current.pop_back();
    }
}

}  // namespace

std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (nu.size() != lambda.size() + mu.size() || !contains(nu, lambda)) return 0;
    if (mu.empty()) return 1;
    if (!contains(nu, mu)) return 0;
    return TableauCounter(lambda, mu, nu).count();
}

Decomposition lr_product(const Partition& lambda, const Partition& mu) {
    Decomposition result;
    std::vector<Partition> candidates;
    std::vector<int> current;
    collect_outer_shapes(lambda, mu, 0, mu.size(), lambda.width() + mu.width(), current, candidates);
    for (const Partition& nu : candidates) result.add(nu, lr_coefficient(lambda, mu, nu));
    return result;
}

Decomposition skew_expand(const Partition& lambda, const Partition& delta) {
    Decomposition result;
    if (!contains(lambda, delta)) return result;
    for (const Partition& alpha : subpartitions_of_size(lambda, lambda.size() - delta.size()))
        result.add(alpha, lr_coefficient(delta, alpha, lambda));
    return result;
}

BigInt sym_dim(const Partition& lambda) {
    BigInt denominator = 1;
    for (const auto& row : hook_lengths(lambda))
        for (int h : row) denominator *= h;
    return factorial(lambda.size()) / denominator;
}

}  // namespace ydk

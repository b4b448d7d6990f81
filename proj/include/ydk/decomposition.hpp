#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "ydk/partition.hpp"
#include "ydk/weight.hpp"

namespace ydk {

/// Label -> integer multiplicity. Zero entries are never stored.
template <class Label, class Order>
class BasicDecomposition {
public:
    using Terms = std::map<Label, std::int64_t, Order>;

    BasicDecomposition() = default;
    BasicDecomposition(std::initializer_list<std::pair<const Label, std::int64_t>> terms) {
        for (const auto& [label, mult] : terms) add(label, mult);
    }

    void add(const Label& label, std::int64_t multiplicity) {
        if (multiplicity == 0) return;
        auto [it, inserted] = terms_.try_emplace(label, multiplicity);
        if (!inserted) {
            it->second += multiplicity;
            if (it->second == 0) terms_.erase(it);
        }
    }

    void add_scaled(const BasicDecomposition& other, std::int64_t factor) {
        for (const auto& [label, mult] : other.terms_) add(label, mult * factor);
    }

    BasicDecomposition& operator+=(const BasicDecomposition& other) {
        add_scaled(other, 1);
        return *this;
    }

    std::int64_t multiplicity(const Label& label) const {
        auto it = terms_.find(label);
        return it == terms_.end() ? 0 : it->second;
    }

    bool nonnegative() const {
        for (const auto& [label, mult] : terms_)
            if (mult < 0) return false;
        return true;
    }

    /// Sum of multiplicities.
    std::int64_t total() const {
        std::int64_t t = 0;
        for (const auto& [label, mult] : terms_) t += mult;
        return t;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    /// "[3,2] + 2[2,1] - [1]"; the empty decomposition prints as "0".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [label, mult] : terms_) {
            std::int64_t magnitude = mult < 0 ? -mult : mult;
            if (first)
                s += mult < 0 ? "-" : "";
            else
                s += mult < 0 ? " - " : " + ";
            if (magnitude != 1) s += std::to_string(magnitude);
            s += label.to_string();
            first = false;
        }
        return s;
    }

    friend bool operator==(const BasicDecomposition&, const BasicDecomposition&) = default;

private:
    Terms terms_;
};

using Decomposition = BasicDecomposition<Partition, CanonicalOrder>;
using WeightDecomposition = BasicDecomposition<Weight, WeightOrder>;

}  // namespace ydk

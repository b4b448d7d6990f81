#include "ydk/modification.hpp"

#include <algorithm>
#include <cctype>

#include "ydk/stable_product.hpp"

namespace ydk {

std::string_view family_name(Family family) {
    switch (family) {
        case Family::O: return "O";
        case Family::SO: return "SO";
        case Family::Sp: return "Sp";
    }
    return "?";
}

Family parse_family(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "o") return Family::O;
    if (lower == "so") return Family::SO;
    if (lower == "sp") return Family::Sp;
    throw std::invalid_argument("unknown group family '" + std::string(text) + "' (expected O, SO or Sp)");
}

GroupContext::GroupContext(Family family, int dimension) : family_(family), dimension_(dimension) {
    if (dimension_ < 1) throw std::invalid_argument("group dimension must be positive");
    if (family_ == Family::Sp && dimension_ % 2 != 0)
        throw std::invalid_argument("Sp(n) needs an even n, got " + std::to_string(dimension_));
}

std::string GroupContext::name() const {
    return std::string(family_name(family_)) + "(" + std::to_string(dimension_) + ")";
}

std::string SignedLabel::to_string() const {
    if (is_zero()) return "0";
    return (sign < 0 ? "-" : "") + shape.to_string();
}

SignedLabel standardize(const Partition& lambda, const GroupContext& ctx, std::vector<ModificationStep>* trace) {
    const int l = ctx.rank();
    const int n = ctx.dimension();
    Partition current = lambda;
    int sign = 1;
    while (current.length() > l) {
        const int p = current.length();
        const int h = ctx.orthogonal() ? 2 * p - n : 2 * p - n - 2;
        ModificationStep step{current, p, h, std::nullopt, 0};
        std::optional<SkewStrip> strip;
        if (h > 0) strip = boundary_strip(current, h);
        if (!strip) {
            if (trace) trace->push_back(std::move(step));
            return {Partition{}, 0};
        }
        const int c = strip->columns_spanned;
        const int step_sign = ((ctx.orthogonal() ? c - 1 : c) % 2 == 0) ? 1 : -1;
        sign *= step_sign;
        current = strip->inner;
        step.strip = std::move(strip);
        step.sign = step_sign;
        if (trace) trace->push_back(std::move(step));
    }
    return {current, sign};
}

Decomposition modify(const Decomposition& stable, const GroupContext& ctx, std::vector<StandardizationTrace>* trace) {
    Decomposition result;
    for (const auto& [label, mult] : stable) {
        if (ctx.is_standard(label)) {
            result.add(label, mult);
            continue;
        }
        std::vector<ModificationStep> steps;
        SignedLabel standard = standardize(label, ctx, trace ? &steps : nullptr);
        if (!standard.is_zero()) result.add(standard.shape, standard.sign * mult);
        if (trace) trace->push_back({label, mult, std::move(steps), std::move(standard)});
    }
    return result;
}

Decomposition kronecker(const Partition& lambda1, const Partition& lambda2, const GroupContext& ctx,
                        std::vector<StandardizationTrace>* trace) {
    for (const Partition* input : {&lambda1, &lambda2})
        if (!ctx.is_standard(*input))
            throw NonstandardInput(input->to_string() + " is not a standard label for " + ctx.name());
    return modify(stable_kronecker(lambda1, lambda2), ctx, trace);
}

std::vector<Weight> so_even_split(const Partition& lambda, int l) {
    if (l < 1) throw std::invalid_argument("rank must be positive");
    if (lambda.length() > l)
        throw std::invalid_argument(lambda.to_string() + " has more than " + std::to_string(l) + " rows");
    Weight w{std::vector<int>(static_cast<std::size_t>(l), 0)};
    for (int i = 0; i < lambda.length(); ++i) w.entries[static_cast<std::size_t>(i)] = lambda.row(i);
    if (lambda.length() < l) return {w};
    Weight mirrored = w;
    mirrored.entries.back() = -mirrored.entries.back();
    return {w, mirrored};
}

WeightDecomposition to_weights(const Decomposition& decomposition, const GroupContext& ctx) {
    WeightDecomposition result;
    const int l = ctx.rank();
    for (const auto& [label, mult] : decomposition) {
        if (ctx.even_orthogonal()) {
            for (Weight& w : so_even_split(label, l)) result.add(w, mult);
        } else {
            if (label.length() > l)
                throw NonstandardInput(label.to_string() + " is not a standard label for " + ctx.name());
            Weight w{std::vector<int>(static_cast<std::size_t>(l), 0)};
            for (int i = 0; i < label.length(); ++i) w.entries[static_cast<std::size_t>(i)] = label.row(i);
            result.add(w, mult);
        }
    }
    return result;
}

}  // namespace ydk

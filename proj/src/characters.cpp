#include "ydk/characters.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace ydk {

namespace {

enum class RootSystem { B, C, D };

RootSystem root_system(const GroupContext& ctx) {
    if (!ctx.orthogonal()) return RootSystem::C;
    return ctx.dimension() % 2 ? RootSystem::B : RootSystem::D;
}

int env_int(const char* name, int fallback) {
    const char* value = std::getenv(name);
    if (!value || !*value) return fallback;
    char* end = nullptr;
    const long parsed = std::strtol(value, &end, 10);
    if (*end != '\0' || parsed < 1) return fallback;
    return static_cast<int>(parsed);
}

int checked_rank(const GroupContext& ctx, const OracleLimits& limits) {
    const int l = ctx.rank();
    if (l < 1) throw OracleCapExceeded(ctx.name() + " has rank 0; the oracle needs rank >= 1");
    if (l > std::min(limits.max_rank, kMaxVariables))
        throw OracleCapExceeded(ctx.name() + " has rank " + std::to_string(l) + ", above the oracle cap of " +
                                std::to_string(std::min(limits.max_rank, kMaxVariables)));
    return l;
}

/// Doubled Weyl vector component for zero-based index j.
int doubled_rho(RootSystem system, int l, int j) {
    switch (system) {
        case RootSystem::B: return 2 * (l - 1 - j) + 1;
        case RootSystem::C: return 2 * (l - j);
        case RootSystem::D: return 2 * (l - 1 - j);
    }
    return 0;
}

Weight padded(const Weight& w, int l) {
    if (w.rank() > l) {
        for (int i = l; i < w.rank(); ++i)
            if (w.entries[static_cast<std::size_t>(i)] != 0)
                throw std::invalid_argument(w.to_string() + " has more than " + std::to_string(l) + " entries");
    }
    Weight out{std::vector<int>(static_cast<std::size_t>(l), 0)};
    for (int i = 0; i < std::min(l, w.rank()); ++i) out.entries[static_cast<std::size_t>(i)] = w.entries[static_cast<std::size_t>(i)];
    return out;
}

bool is_dominant(RootSystem system, const Weight& w) {
    const auto& e = w.entries;
    const std::size_t l = e.size();
    for (std::size_t i = 0; i + 1 < l; ++i) {
        if (i + 2 == l && system == RootSystem::D) {
            if (e[i] < std::abs(e[i + 1])) return false;
        } else if (e[i] < e[i + 1]) {
            return false;
        }
    }
    if (system != RootSystem::D && l > 0 && e.back() < 0) return false;
    return true;
}

/// sum over the Weyl group of sign(w) x^{w(mu)}, mu given doubled.
LaurentPolynomial alternant(RootSystem system, const std::vector<int>& mu) {
    const int l = static_cast<int>(mu.size());
    LaurentPolynomial result(l);
    std::vector<int> perm(static_cast<std::size_t>(l));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (int a = 0; a < l; ++a)
            for (int b = a + 1; b < l; ++b)
                if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inversions;
        const int perm_sign = inversions % 2 ? -1 : 1;
        for (unsigned flips = 0; flips < (1u << l); ++flips) {
            const int minus = __builtin_popcount(flips);
            if (system == RootSystem::D && minus % 2) continue;
            Exponent e{};
            for (int i = 0; i < l; ++i) {
                const int v = mu[static_cast<std::size_t>(i)];
                e[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = (flips >> i) & 1u ? -v : v;
            }
            int sign = perm_sign;
            if (system != RootSystem::D && minus % 2) sign = -sign;
            result.add_term(e, sign);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

const LaurentPolynomial& irreducible_character(RootSystem system, const Weight& w) {
    static std::mutex mutex;
    static std::map<std::tuple<int, std::vector<int>>, LaurentPolynomial> cache;
    static std::map<std::tuple<int, int>, LaurentPolynomial> denominators;
    const int l = w.rank();
    const auto key = std::make_tuple(static_cast<int>(system), w.entries);
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    auto den_key = std::make_tuple(static_cast<int>(system), l);
    auto den = denominators.find(den_key);
    if (den == denominators.end()) {
        std::vector<int> rho(static_cast<std::size_t>(l));
        for (int j = 0; j < l; ++j) rho[static_cast<std::size_t>(j)] = doubled_rho(system, l, j);
        den = denominators.emplace(den_key, alternant(system, rho)).first;
    }
    std::vector<int> mu(static_cast<std::size_t>(l));
    for (int j = 0; j < l; ++j)
        mu[static_cast<std::size_t>(j)] = kExponentScale * w.entries[static_cast<std::size_t>(j)] + doubled_rho(system, l, j);
    LaurentPolynomial chi = alternant(system, mu).divide_exact(den->second);
    return cache.emplace(key, std::move(chi)).first->second;
}

BigInt weyl_dimension(RootSystem system, const Weight& w) {
    const int l = w.rank();
    BigInt numerator = 1;
    BigInt denominator = 1;
    std::vector<int> mu(static_cast<std::size_t>(l)), rho(static_cast<std::size_t>(l));
    for (int j = 0; j < l; ++j) {
        rho[static_cast<std::size_t>(j)] = doubled_rho(system, l, j);
        mu[static_cast<std::size_t>(j)] = kExponentScale * w.entries[static_cast<std::size_t>(j)] + rho[static_cast<std::size_t>(j)];
    }
    for (int i = 0; i < l; ++i) {
        for (int j = i + 1; j < l; ++j) {
            numerator *= (mu[i] - mu[j]) * (mu[i] + mu[j]);
            denominator *= (rho[i] - rho[j]) * (rho[i] + rho[j]);
        }
        if (system != RootSystem::D) {
            numerator *= mu[static_cast<std::size_t>(i)];
            denominator *= rho[static_cast<std::size_t>(i)];
        }
    }
    return numerator / denominator;
}

/// Irreducible SO/Sp weights making up the given label in this context.
std::vector<Weight> constituents(const Weight& label, const GroupContext& ctx) {
    const int l = ctx.rank();
    Weight w = padded(label, l);
    const RootSystem system = root_system(ctx);
    if (!is_dominant(system, w)) throw std::invalid_argument(w.to_string() + " is not a dominant weight for " + ctx.name());
    if (ctx.family() == Family::O && system == RootSystem::D && w.entries.back() != 0) {
        Weight mirrored = w;
        mirrored.entries.back() = -mirrored.entries.back();
        return {w, mirrored};
    }
    return {w};
}

std::vector<Weight> constituents(const Partition& label, const GroupContext& ctx) {
    if (!ctx.is_standard(label))
        throw NonstandardInput(label.to_string() + " is not a standard label for " + ctx.name());
    if (ctx.even_orthogonal()) return so_even_split(label, ctx.rank());
    Weight w{std::vector<int>(static_cast<std::size_t>(ctx.rank()), 0)};
    for (int i = 0; i < label.length(); ++i) w.entries[static_cast<std::size_t>(i)] = label.row(i);
    return {w};
}

void check_boxes(const Partition& lambda, const OracleLimits& limits) {
    if (lambda.size() > limits.max_boxes)
        throw OracleCapExceeded(lambda.to_string() + " has more than " + std::to_string(limits.max_boxes) +
                                " boxes (oracle cap)");
}

/// Complete symmetric functions h_0..h_top of the eigenvalues x_i^{+-1} (and 1 for odd n).
std::vector<LaurentPolynomial> complete_symmetric(const GroupContext& ctx, int top) {
    const int l = ctx.rank();
    std::vector<LaurentPolynomial> h(static_cast<std::size_t>(top + 1), LaurentPolynomial(l));
    h[0] = LaurentPolynomial::constant(l, 1);
    std::vector<Exponent> letters;
    for (int i = 0; i < l; ++i) {
        Exponent up{}, down{};
        up[static_cast<std::size_t>(i)] = kExponentScale;
        down[static_cast<std::size_t>(i)] = -kExponentScale;
        letters.push_back(up);
        letters.push_back(down);
    }
    if (ctx.orthogonal() && ctx.dimension() % 2) letters.push_back(Exponent{});
    for (const Exponent& y : letters) {
        // h_k(S + y) = h_k(S) + y h_{k-1}(S + y)
        for (int k = 1; k <= top; ++k) {
            LaurentPolynomial shifted(l);
            shifted.add_product(h[static_cast<std::size_t>(k - 1)], 1, y);
            h[static_cast<std::size_t>(k)] += shifted;
        }
    }
    return h;
}

}  // namespace

OracleLimits OracleLimits::from_environment() {
    OracleLimits limits;
    limits.max_rank = std::min(env_int("YDK_MAX_RANK", limits.max_rank), kMaxVariables);
    limits.max_boxes = env_int("YDK_MAX_BOXES", limits.max_boxes);
    return limits;
}

LaurentPolynomial character(const Weight& label, const GroupContext& ctx, const OracleLimits& limits) {
    const int l = checked_rank(ctx, limits);
    LaurentPolynomial chi(l);
    for (const Weight& w : constituents(label, ctx)) chi += irreducible_character(root_system(ctx), w);
    return chi;
}

LaurentPolynomial character(const Partition& label, const GroupContext& ctx, const OracleLimits& limits) {
    const int l = checked_rank(ctx, limits);
    LaurentPolynomial chi(l);
    for (const Weight& w : constituents(label, ctx)) chi += irreducible_character(root_system(ctx), w);
    return chi;
}

LaurentPolynomial universal_character(const Partition& label, const GroupContext& ctx, const OracleLimits& limits) {
    const int l = checked_rank(ctx, limits);
    const int p = label.length();
    if (p == 0) return LaurentPolynomial::constant(l, 1);
    if (p > 20) throw OracleCapExceeded("universal_character supports at most 20 rows");
    const std::vector<LaurentPolynomial> h = complete_symmetric(ctx, label.width() + p);
    auto h_at = [&](int k) -> const LaurentPolynomial* {
        return (k < 0 || k >= static_cast<int>(h.size())) ? nullptr : &h[static_cast<std::size_t>(k)];
    };

    std::vector<std::vector<LaurentPolynomial>> matrix(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
            LaurentPolynomial entry(l);
            const int base = label.row(i) - i + j;
            if (const auto* a = h_at(base)) entry += *a;
            if (ctx.orthogonal()) {
                if (const auto* b = h_at(label.row(i) - i - j - 2)) entry -= *b;
            } else {
                if (const auto* b = h_at(label.row(i) - i - j)) entry += *b;
            }
            matrix[static_cast<std::size_t>(i)].push_back(std::move(entry));
        }
    }

    // Laplace expansion from the bottom row up, memoized on the used column set.
    std::map<unsigned, LaurentPolynomial> minors;
    minors.emplace(0u, LaurentPolynomial::constant(l, 1));
    for (int used = 1; used <= p; ++used) {
        const int row = p - used;
        std::map<unsigned, LaurentPolynomial> next;
        for (const auto& [mask, minor] : minors) {
            if (minor.is_zero()) continue;
            for (int j = 0; j < p; ++j) {
                if (mask & (1u << j)) continue;
                const auto& entry = matrix[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)];
                if (entry.is_zero()) continue;
                const int before = __builtin_popcount(mask & ((1u << j) - 1u));
                LaurentPolynomial term = entry * minor;
                if (before % 2) term *= BigInt(-1);
                auto [it, inserted] = next.try_emplace(mask | (1u << j), l);
                it->second += term;
            }
        }
        minors = std::move(next);
    }
    const unsigned full = (1u << p) - 1u;
    LaurentPolynomial det = minors.count(full) ? minors.at(full) : LaurentPolynomial(l);
    if (!ctx.orthogonal()) {
        LaurentPolynomial halved(l);
        for (const auto& [e, c] : det.terms()) {
            if (c % 2 != 0) throw AlternantDivisionError("symplectic determinant has an odd coefficient");
            halved.add_term(e, c / 2);
        }
        det = std::move(halved);
    }
    return det;
}

BigInt group_dim(const Weight& label, const GroupContext& ctx) {
    if (ctx.rank() < 1) throw std::invalid_argument(ctx.name() + " has rank 0");
    BigInt total = 0;
    for (const Weight& w : constituents(label, ctx)) total += weyl_dimension(root_system(ctx), w);
    return total;
}

BigInt group_dim(const Partition& label, const GroupContext& ctx) {
    if (ctx.rank() < 1) throw std::invalid_argument(ctx.name() + " has rank 0");
    BigInt total = 0;
    for (const Weight& w : constituents(label, ctx)) total += weyl_dimension(root_system(ctx), w);
    return total;
}

namespace {

template <class Claimed>
ProductReport verify_impl(const Partition& lambda1, const Partition& lambda2, const GroupContext& ctx,
                          const Claimed& claimed, const OracleLimits& limits) {
    check_boxes(lambda1, limits);
    check_boxes(lambda2, limits);
    ProductReport report;
    report.difference = character(lambda1, ctx, limits) * character(lambda2, ctx, limits);
    report.lhs_dimension = group_dim(lambda1, ctx) * group_dim(lambda2, ctx);
    report.rhs_dimension = 0;
    for (const auto& [label, mult] : claimed) {
        report.difference -= character(label, ctx, limits) * BigInt(mult);
        report.rhs_dimension += group_dim(label, ctx) * mult;
    }
    report.passed = report.difference.is_zero() && report.lhs_dimension == report.rhs_dimension;
    return report;
}

}  // namespace

ProductReport verify_product(const Partition& lambda1, const Partition& lambda2, const GroupContext& ctx,
                             const Decomposition& claimed, const OracleLimits& limits) {
    return verify_impl(lambda1, lambda2, ctx, claimed, limits);
}

ProductReport verify_product(const Partition& lambda1, const Partition& lambda2, const GroupContext& ctx,
                             const WeightDecomposition& claimed, const OracleLimits& limits) {
    // Weights are irreducible SO(n) labels even in an O(2l) context.
    const GroupContext connected = ctx.family() == Family::O ? GroupContext(Family::SO, ctx.dimension()) : ctx;
    check_boxes(lambda1, limits);
    check_boxes(lambda2, limits);
    ProductReport report;
    report.difference = character(lambda1, connected, limits) * character(lambda2, connected, limits);
    report.lhs_dimension = group_dim(lambda1, connected) * group_dim(lambda2, connected);
    for (const auto& [label, mult] : claimed) {
        report.difference -= character(label, connected, limits) * BigInt(mult);
        report.rhs_dimension += group_dim(label, connected) * mult;
    }
    report.passed = report.difference.is_zero() && report.lhs_dimension == report.rhs_dimension;
    return report;
}

WeightDecomposition decompose_character(const LaurentPolynomial& chi, const GroupContext& ctx,
                                        const OracleLimits& limits) {
    const int l = checked_rank(ctx, limits);
    const RootSystem system = root_system(ctx);
    WeightDecomposition result;
    LaurentPolynomial remainder = chi;
    constexpr int kMaxIterations = 100000;
    for (int iteration = 0; !remainder.is_zero(); ++iteration) {
        if (iteration >= kMaxIterations) throw NonterminationGuard("character decomposition did not terminate");
        const auto [top, coeff] = remainder.leading_term();
        Weight w{std::vector<int>(static_cast<std::size_t>(l))};
        for (int i = 0; i < l; ++i) {
            const int e = top[static_cast<std::size_t>(i)];
            if (e % kExponentScale != 0) throw std::logic_error("spin weight in a tensor character");
            w.entries[static_cast<std::size_t>(i)] = e / kExponentScale;
        }
        if (!is_dominant(system, w)) throw std::logic_error("leading weight " + w.to_string() + " is not dominant");
        if (coeff > std::numeric_limits<std::int64_t>::max() || coeff < std::numeric_limits<std::int64_t>::min())
            throw std::overflow_error("multiplicity does not fit in 64 bits");
        const auto mult = static_cast<std::int64_t>(coeff);
        result.add(w, mult);
        remainder -= irreducible_character(system, w) * BigInt(mult);
    }
    return result;
}

WeightDecomposition decompose_via_characters(const Partition& lambda1, const Partition& lambda2,
                                             const GroupContext& ctx, const OracleLimits& limits) {
    check_boxes(lambda1, limits);
    check_boxes(lambda2, limits);
    const LaurentPolynomial product = character(lambda1, ctx, limits) * character(lambda2, ctx, limits);
    WeightDecomposition result = decompose_character(product, ctx, limits);
    if (!result.nonnegative()) throw std::logic_error("product of characters has a negative multiplicity");
    return result;
}

}  // namespace ydk

#include "ydk/brauer.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "ydk/littlewood_richardson.hpp"
#include "ydk/stable_product.hpp"

namespace ydk {

BrauerLabel::BrauerLabel(Partition shape, int level) : shape_(std::move(shape)), level_(level) {
    if (level_ < 0 || shape_.size() > level_ || (level_ - shape_.size()) % 2 != 0)
        throw std::invalid_argument("Brauer label " + shape_.to_string() + " is not a level-" +
                                    std::to_string(level_) + " irrep");
}

std::vector<BrauerLabel> branch(const BrauerLabel& label) {
    if (label.level() == 0) throw std::invalid_argument("level 0 has no lower level");
    std::vector<BrauerLabel> out;
    for (Partition& mu : remove_one_box(label.shape())) out.emplace_back(std::move(mu), label.level() - 1);
    if (label.shape().size() < label.level())
        for (Partition& mu : add_one_box(label.shape())) out.emplace_back(std::move(mu), label.level() - 1);
    return out;
}

BigInt brauer_dim(const BrauerLabel& label) {
    static std::mutex mutex;
    static std::map<std::pair<std::vector<int>, int>, BigInt> memo;
    const auto key = std::make_pair(label.shape().rows(), label.level());
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    BigInt total = 0;
    if (label.level() == 0) {
        total = 1;
    } else {
        for (const BrauerLabel& below : branch(label)) total += brauer_dim(below);
    }
    std::lock_guard lock(mutex);
    memo.emplace(key, total);
    return total;
}

BratteliDiagram::BratteliDiagram(int max_level) {
    if (max_level < 0) throw std::invalid_argument("negative Bratteli level");
    for (int j = 0; j <= max_level; ++j) {
        std::vector<Partition> level;
        for (int boxes = j; boxes >= 0; boxes -= 2)
            for (Partition& p : partitions_of(boxes)) level.push_back(std::move(p));
        levels_.push_back(std::move(level));
    }
    parents_.resize(levels_.size());
    paths_.resize(levels_.size());
    paths_[0] = {BigInt(1)};
    parents_[0] = {{}};
    for (int j = 1; j <= max_level; ++j) {
        const auto& current = levels_[static_cast<std::size_t>(j)];
        auto& parents = parents_[static_cast<std::size_t>(j)];
        auto& paths = paths_[static_cast<std::size_t>(j)];
        parents.resize(current.size());
        paths.assign(current.size(), 0);
        for (std::size_t i = 0; i < current.size(); ++i) {
            for (const BrauerLabel& below : branch(BrauerLabel(current[i], j))) {
                const int idx = index_of(below.shape(), j - 1);
                parents[i].push_back(idx);
                paths[i] += paths_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(idx)];
            }
        }
    }
}

int BratteliDiagram::index_of(const Partition& shape, int j) const {
    const auto& level = levels_.at(static_cast<std::size_t>(j));
    auto it = std::find(level.begin(), level.end(), shape);
    if (it == level.end()) throw std::out_of_range(shape.to_string() + " is not on level " + std::to_string(j));
    return static_cast<int>(it - level.begin());
}

const BigInt& BratteliDiagram::dimension(const BrauerLabel& label) const {
    if (label.level() > max_level()) throw std::out_of_range("label above the diagram's top level");
    const int idx = index_of(label.shape(), label.level());
    return paths_[static_cast<std::size_t>(label.level())][static_cast<std::size_t>(idx)];
}

bool is_n_permissible(const Partition& lambda, int n) {
    if (n == 0 || n == -1) throw std::invalid_argument("n-permissibility is undefined for n = 0, -1");
    if (n > 0) {
        const Partition cols = conjugate(lambda);
        return cols.row(0) + cols.row(1) <= n;
    }
    if (n % 2 == 0) return lambda.width() <= -n / 2;
    return lambda.row(0) + lambda.row(1) <= 2 - n;
}

bool is_semisimple(int n, int f, NegativeReading reading) {
    if (n >= 0) return n >= f - 1;
    return reading == NegativeReading::magnitude ? -n >= f - 1 : -n <= f - 1;
}

BigInt induced_dimension(const Partition& lambda1, const Partition& lambda2) {
    const int f = lambda1.size() + lambda2.size();
    BigInt total = 0;
    for (const auto& [nu, mult] : stable_kronecker(lambda1, lambda2)) total += mult * brauer_dim(BrauerLabel(nu, f));
    return total;
}

BigRational verify_induced_dim(const Partition& lambda1, const Partition& lambda2) {
    return BigRational(induced_dimension(lambda1, lambda2), sym_dim(lambda1) * sym_dim(lambda2));
}

}  // namespace ydk

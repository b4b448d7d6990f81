#include "ydk/weight.hpp"

#include <cstdlib>

namespace ydk {

int Weight::boxes() const noexcept {
    int total = 0;
    for (int e : entries) total += std::abs(e);
    return total;
}

std::string Weight::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(entries[i]);
    }
    s += ']';
    return s;
}

}  // namespace ydk

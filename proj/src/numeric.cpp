#include "ydk/numeric.hpp"

#include <stdexcept>

namespace ydk {

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative number");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt odd_double_factorial(int k) {
    if (k < 0) throw std::invalid_argument("odd_double_factorial of a negative number");
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) r *= 2 * i - 1;
    return r;
}

}  // namespace ydk

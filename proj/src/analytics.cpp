#include "codegraph/analytics.hpp"

#include <stdexcept>

namespace codegraph {

namespace {

BigCount q_power(std::uint32_t q, std::size_t e) {
    BigCount r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= q;
    return r;
}

}  // namespace

BigCount gaussian_binomial(std::size_t n, std::size_t k, std::uint32_t q) {
    if (k > n) throw std::invalid_argument("gaussian_binomial requires k <= n");
    BigCount result = 1;
    for (std::size_t i = 0; i < k; ++i) {
        result *= q_power(q, n - i) - 1;
        BigCount den = q_power(q, i + 1) - 1;
        if (result % den != 0)
            throw std::logic_error("gaussian_binomial division not exact");
        result /= den;
    }
    return result;
}

BigCount binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    BigCount result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        result *= static_cast<unsigned>(n - k + i);
        if (result % static_cast<unsigned>(i) != 0)
            throw std::logic_error("binomial division not exact");
        result /= static_cast<unsigned>(i);
    }
    return result;
}

BigCount count_nondegenerate(std::size_t n, std::size_t k, std::uint32_t q) {
    if (k > n) throw std::invalid_argument("count_nondegenerate requires k <= n");
    BigCount total = 0;
    for (std::size_t i = 0; i <= n - k; ++i) {
        BigCount term = binomial(n, i) * gaussian_binomial(n - i, k, q);
        if (i % 2 == 0)
            total += term;
        else
            total -= term;
    }
    if (total < 0) throw std::logic_error("non-degenerate count came out negative");
    return total;
}

bool theorem1_predicate(std::size_t n, std::size_t k, std::uint32_t q) {
    return BigCount(n) < BigCount(q + 1) * (q + 1) + k - 2;
}

BigCount theorem2_bound(std::size_t k, std::size_t m, std::uint32_t q) {
    if (m + 2 > k) throw std::invalid_argument("theorem2_bound requires m <= k-2");
    return gaussian_binomial(k - m, 1, q) * (q + 1) + m;
}

bool lemma3_check(std::size_t k, std::uint32_t q) {
    if (k < 2) throw std::invalid_argument("lemma3_check requires k >= 2");
    BigCount rhs = BigCount(q + 1) * (q + 1) + k - 2;
    for (std::size_t m = 0; m + 2 <= k; ++m)
        if (theorem2_bound(k, m, q) < rhs) return false;
    return true;
}

}  // namespace codegraph

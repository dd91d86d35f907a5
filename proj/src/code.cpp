#include "codegraph/code.hpp"

#include <stdexcept>

#include "codegraph/errors.hpp"

namespace codegraph {

void CodeParams::validate() const {
    if (!(k > 1 && k + 1 < n))
        throw std::invalid_argument("code parameters must satisfy 1 < k < n-1");
    factor_prime_power(q);
}

bool is_nondegenerate(const Subspace& x) {
    if (x.k() == 0) return false;
    for (std::size_t c = 0; c < x.n(); ++c) {
        bool all_zero = true;
        for (std::size_t r = 0; r < x.k() && all_zero; ++r)
            if (x.basis().at(r, c) != 0) all_zero = false;
        if (all_zero) return false;
    }
    return true;
}

std::size_t grassmann_distance(const Subspace& x, const Subspace& y) {
    if (x.k() != y.k())
        throw std::invalid_argument("grassmann_distance needs equal dimensions");
    return x.k() - intersection_dim(x, y);
}

void for_each_vector(const Subspace& x, const std::function<void(const Vec&)>& fn,
                     std::size_t cap) {
    const Field& f = *x.field();
    const std::uint32_t q = f.q();
    double total = 1;
    for (std::size_t i = 0; i < x.k(); ++i) total *= q;
    if (total > static_cast<double>(cap))
        throw cap_exceeded("q^k exceeds the vector enumeration cap");

    const std::size_t k = x.k(), n = x.n();
    std::vector<Elem> c(k, 0);
    Vec v(n, 0);
    while (true) {
        fn(v);
        std::size_t pos = 0;
        while (pos < k && c[pos] == q - 1) {
            c[pos] = 0;
            ++pos;
        }
        if (pos == k) break;
        ++c[pos];
        // recompute; k and n are small here by the cap
        std::fill(v.begin(), v.end(), 0);
        for (std::size_t r = 0; r < k; ++r) {
            if (c[r] == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                v[j] = f.add(v[j], f.mul(c[r], x.basis().at(r, j)));
        }
    }
}

std::optional<Vec> find_weight_n_vector(const Subspace& x, std::size_t cap) {
    std::optional<Vec> found;
    for_each_vector(
        x,
        [&](const Vec& v) {
            if (!found && weight(v) == x.n()) found = v;
        },
        cap);
    return found;
}

bool has_weight_n_vector(const Subspace& x, const Subspace& y, std::size_t cap) {
    if (x.n() != y.n())
        throw std::invalid_argument("subspaces live in different ambient spaces");
    return find_weight_n_vector(x, cap).has_value() ||
           find_weight_n_vector(y, cap).has_value();
}

std::size_t m_min(std::size_t n, std::size_t k) {
    return k - std::min(k, n - k);
}

}  // namespace codegraph

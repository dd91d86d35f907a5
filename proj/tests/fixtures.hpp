#pragma once

#include <random>

#include "codegraph/code.hpp"
#include "codegraph/linalg.hpp"

namespace fixtures {

using codegraph::Elem;
using codegraph::FieldPtr;
using codegraph::Subspace;
using codegraph::Vec;

// The [9,2]_2 pair with d=2 and d_c=3: X spanned by v1, v2 and Y spanned
// by u1, u2.
inline const Vec v1{0, 0, 0, 1, 1, 1, 1, 1, 1};
inline const Vec v2{1, 1, 1, 0, 0, 0, 1, 1, 1};
inline const Vec u1{0, 1, 1, 0, 1, 1, 0, 1, 1};
inline const Vec u2{1, 0, 1, 1, 0, 1, 1, 0, 1};

inline std::pair<Subspace, Subspace> nine_two_pair(const FieldPtr& f2) {
    return {Subspace::from_rows(f2, 9, {v1, v2}),
            Subspace::from_rows(f2, 9, {u1, u2})};
}

// Uniformly random non-degenerate [n,k]_q code (rejection sampling).
inline Subspace random_code(const FieldPtr& f, std::size_t n, std::size_t k,
                            std::mt19937& rng) {
    std::uniform_int_distribution<std::uint32_t> dist(0, f->q() - 1);
    while (true) {
        std::vector<Vec> rows(k, Vec(n));
        for (auto& row : rows)
            for (auto& e : row) e = static_cast<Elem>(dist(rng));
        Subspace s = Subspace::from_rows(f, n, rows);
        if (s.k() == k && codegraph::is_nondegenerate(s)) return s;
    }
}

}  // namespace fixtures

#pragma once

#include <cstdint>
#include <optional>

#include "codegraph/linalg.hpp"

namespace codegraph {

// Parameters of a linear [n,k]_q code under the standing assumption
// 1 < k < n-1 (the boundary dimensions make every pair of distinct
// subspaces adjacent, so they carry no content here).
struct CodeParams {
    std::size_t n;
    std::size_t k;
    std::uint32_t q;

    void validate() const;
};

inline constexpr std::size_t default_vector_cap = 1u << 20;

// True iff X is contained in no coordinate hyperplane C_i, i.e. no column
// of the canonical basis is entirely zero.
bool is_nondegenerate(const Subspace& x);

// k - dim(X ∩ Y); the graph distance in the Grassmann graph.
std::size_t grassmann_distance(const Subspace& x, const Subspace& y);

// True iff some vector of X or of Y has no zero coordinate. Enumerates
// all q^k vectors of each; errors beyond the cap.
bool has_weight_n_vector(const Subspace& x, const Subspace& y,
                         std::size_t cap = default_vector_cap);

// First weight-n vector of X in enumeration order, if any.
std::optional<Vec> find_weight_n_vector(const Subspace& x,
                                        std::size_t cap = default_vector_cap);

// Calls fn on every vector of X (including zero); q^k of them.
void for_each_vector(const Subspace& x, const std::function<void(const Vec&)>& fn,
                     std::size_t cap = default_vector_cap);

// Smallest possible intersection dimension of two k-subspaces of F_q^n.
std::size_t m_min(std::size_t n, std::size_t k);

}  // namespace codegraph

#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "codegraph/code.hpp"
#include "codegraph/linalg.hpp"

namespace codegraph {

inline constexpr std::size_t default_bfs_cap = 1'000'000;

struct DistanceResult {
    enum class Evidence { geodesic_found, first_steps_exhausted, oracle_bfs };

    std::size_t d;   // Grassmann distance
    std::size_t dc;  // restricted-graph distance, d or d+1
    std::optional<std::vector<Subspace>> path;  // dc+1 vertices when present
    Evidence evidence;
};

std::string to_string(DistanceResult::Evidence e);

// All non-degenerate Z adjacent to X with d(Z,Y) = d(X,Y) - 1, each once.
// Generated as H + <y> over the hyperplanes H of X containing X ∩ Y and
// the line representatives y of Y outside X, in enumeration order.
std::vector<Subspace> reducing_neighbors(const Subspace& x, const Subspace& y);

// Distance in the restricted graph. Decides whether a geodesic of length
// d runs entirely through non-degenerate codes (depth-first search over
// reducing neighbors, dead-state memoization); otherwise d_c = d + 1.
DistanceResult restricted_distance(const Subspace& x, const Subspace& y);

// Constructive path of length d or d+1 through non-degenerate codes,
// built by the weight-n-vector walk.
std::vector<Subspace> connecting_path(const Subspace& x, const Subspace& y);

// Exact d_c by breadth-first search over the full restricted graph.
// Errors when |C(n,k)_q| exceeds the cap.
std::size_t bfs_oracle(const Subspace& x, const Subspace& y,
                       std::size_t cap = default_bfs_cap);

// Full BFS layer map from x (canonical subspace -> distance); the oracle
// engine, exposed for exhaustive cross-checks.
std::unordered_map<Subspace, std::size_t, SubspaceHash> bfs_distances(
    const Subspace& x, std::size_t cap = default_bfs_cap);

}  // namespace codegraph

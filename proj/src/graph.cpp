#include "codegraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "codegraph/analytics.hpp"
#include "codegraph/errors.hpp"

namespace codegraph {

namespace {

void check_pair(const Subspace& x, const Subspace& y) {
    if (x.n() != y.n() || x.k() != y.k() || !x.field()->same_as(*y.field()))
        throw std::invalid_argument("codes must share ambient space and dimension");
    if (!is_nondegenerate(x) || !is_nondegenerate(y))
        throw std::invalid_argument("codes must be non-degenerate");
}

using Seen = std::unordered_set<Subspace, SubspaceHash>;

// Depth-first geodesic search: is there a path of length d(cur, y) from
// cur to y inside the restricted graph? dead collects subspaces from
// which no geodesic completes (the remaining depth is a function of the
// vertex, so the key is the vertex alone).
bool geodesic_dfs(const Subspace& cur, const Subspace& y, std::size_t remaining,
                  Seen& dead, std::vector<Subspace>* path) {
    if (remaining == 0) return true;
    for (const Subspace& z : reducing_neighbors(cur, y)) {
        if (dead.contains(z)) continue;
        if (geodesic_dfs(z, y, remaining - 1, dead, path)) {
            if (path) path->push_back(z);
            return true;
        }
        dead.insert(z);
    }
    return false;
}

// A hyperplane of w containing the subspace inner (dim inner < dim w):
// extend inner's basis by rows of w up to k-1 vectors.
Subspace hyperplane_through(const Subspace& w, const Subspace& inner) {
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < inner.k(); ++r) {
        auto row = inner.basis().row(r);
        rows.emplace_back(row.begin(), row.end());
    }
    Subspace h = Subspace::from_rows(w.field(), w.n(), rows);
    for (std::size_t r = 0; r < w.k() && h.k() + 1 < w.k(); ++r) {
        auto row = w.basis().row(r);
        if (!contains_vector(h, row)) h = extend(h, row);
    }
    if (h.k() + 1 != w.k())
        throw std::logic_error("hyperplane extension failed");
    return h;
}

Vec vector_outside(const Subspace& from, const Subspace& avoid) {
    for (const Vec& v : lines_of(from))
        if (!contains_vector(avoid, v)) return v;
    throw std::logic_error("no vector outside the given subspace");
}

// Walk start -> target along adjacent non-degenerate codes; x is a
// weight-n vector inside target, so every intermediate vertex (which
// contains x) stays non-degenerate. Each step: take a hyperplane
// of the current vertex through target ∩ current and adjoin x, or a
// vector of target when x is already inside.
std::vector<Subspace> weight_walk(const Subspace& start, const Subspace& target,
                                  const Vec& x) {
    std::vector<Subspace> path{start};
    Subspace w = start;
    std::size_t guard = w.k() + 1;
    while (!(w == target)) {
        if (guard-- == 0) throw std::logic_error("weight walk failed to terminate");
        Subspace inner = intersection(target, w);
        Subspace a = hyperplane_through(w, inner);
        Vec added = contains_vector(w, x) ? vector_outside(target, w) : x;
        Subspace next = extend(a, added);
        if (next.k() != w.k()) throw std::logic_error("weight walk step degenerated");
        path.push_back(next);
        w = next;
    }
    return path;
}

}  // namespace

std::string to_string(DistanceResult::Evidence e) {
    switch (e) {
        case DistanceResult::Evidence::geodesic_found: return "geodesic-found";
        case DistanceResult::Evidence::first_steps_exhausted:
            return "first-steps-exhausted";
        case DistanceResult::Evidence::oracle_bfs: return "oracle-bfs";
    }
    return "?";
}

std::vector<Subspace> reducing_neighbors(const Subspace& x, const Subspace& y) {
    check_pair(x, y);
    if (x == y) throw std::invalid_argument("reducing_neighbors needs distinct codes");
    Subspace inner = intersection(x, y);
    std::size_t d = x.k() - inner.k();
    std::vector<Vec> y_lines;
    for (const Vec& v : lines_of(y))
        if (!contains_vector(x, v)) y_lines.push_back(v);

    std::vector<Subspace> out;
    Seen seen;
    for (const Subspace& h : hyperplanes_of(x)) {
        if (inner.k() > 0 && !contains_subspace(h, inner)) continue;
        for (const Vec& v : y_lines) {
            Subspace z = extend(h, v);
            if (!is_nondegenerate(z)) continue;
            if (grassmann_distance(z, y) + 1 != d) continue;
            if (seen.insert(z).second) out.push_back(z);
        }
    }
    return out;
}

DistanceResult restricted_distance(const Subspace& x, const Subspace& y) {
    check_pair(x, y);
    std::size_t d = grassmann_distance(x, y);
    if (d <= 1)
        return {d, d,
                d == 0 ? std::vector<Subspace>{x} : std::vector<Subspace>{x, y},
                DistanceResult::Evidence::geodesic_found};

    Seen dead;
    std::vector<Subspace> tail;  // filled back-to-front, excludes x
    if (geodesic_dfs(x, y, d, dead, &tail)) {
        std::vector<Subspace> path{x};
        path.insert(path.end(), tail.rbegin(), tail.rend());
        return {d, d, std::move(path), DistanceResult::Evidence::geodesic_found};
    }
    return {d, d + 1, std::nullopt, DistanceResult::Evidence::first_steps_exhausted};
}

std::vector<Subspace> connecting_path(const Subspace& x, const Subspace& y) {
    check_pair(x, y);
    std::size_t d = grassmann_distance(x, y);
    if (d == 0) return {x};
    if (d == 1) return {x, y};

    if (auto wx = find_weight_n_vector(x)) {
        auto path = weight_walk(y, x, *wx);
        std::reverse(path.begin(), path.end());
        return path;
    }
    if (auto wy = find_weight_n_vector(y)) return weight_walk(x, y, *wy);

    // Neither code holds a weight-n vector: hop to the code spanned by a
    // hyperplane of Y through X ∩ Y and the all-ones vector, then walk.
    Subspace a = hyperplane_through(y, intersection(x, y));
    Vec ones(x.n(), 1);
    Subspace y1 = extend(a, ones);
    auto path = weight_walk(x, y1, ones);
    path.push_back(y);
    return path;
}

std::unordered_map<Subspace, std::size_t, SubspaceHash> bfs_distances(
    const Subspace& x, std::size_t cap) {
    if (!is_nondegenerate(x))
        throw std::invalid_argument("BFS source must be non-degenerate");
    CodeParams params{x.n(), x.k(), x.field()->q()};
    params.validate();
    if (count_nondegenerate(params.n, params.k, params.q) > cap)
        throw cap_exceeded("|C(n,k)_q| exceeds the BFS oracle cap");

    auto ambient_lines = lines_of(Subspace::full_space(x.field(), x.n()));
    std::unordered_map<Subspace, std::size_t, SubspaceHash> dist;
    dist.emplace(x, 0);
    std::deque<Subspace> queue{x};
    while (!queue.empty()) {
        Subspace w = std::move(queue.front());
        queue.pop_front();
        std::size_t dw = dist.at(w);
        for (const Subspace& h : hyperplanes_of(w)) {
            for (const Vec& v : ambient_lines) {
                if (contains_vector(w, v)) continue;
                Subspace z = extend(h, v);
                if (!is_nondegenerate(z)) continue;
                if (dist.emplace(z, dw + 1).second) queue.push_back(z);
            }
        }
    }
    return dist;
}

std::size_t bfs_oracle(const Subspace& x, const Subspace& y, std::size_t cap) {
    check_pair(x, y);
    auto dist = bfs_distances(x, cap);
    auto it = dist.find(y);
    if (it == dist.end())
        throw std::logic_error("restricted graph is disconnected");  // cannot happen
    return it->second;
}

}  // namespace codegraph

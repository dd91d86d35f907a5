#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "codegraph/code.hpp"
#include "codegraph/linalg.hpp"

namespace codegraph {

// Proof that d_c(X,Y) = d(X,Y) + 1: for every hyperplane of X containing
// X ∩ Y (index h) and every line of Y outside X (index l), a coordinate
// i whose hyperplane C_i contains both, so no reducing neighbor is
// non-degenerate. Indices h, l and coordinates i are 1-based; h and l
// follow the deterministic enumeration order of hyperplanes_of/lines_of.
struct BlockingCertificate {
    std::size_t num_hyperplanes = 0;  // [k-m]_q
    std::size_t num_lines = 0;        // [k]_q - [m]_q
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> entries;
};

struct WitnessPair {
    Subspace x;
    Subspace y;
    CodeParams params;
    std::size_t m;  // dim(X ∩ Y)
    std::size_t d;  // k - m
    BlockingCertificate certificate;
};

// The k=2, n=(q+1)^2 pair: X spanned by the block vectors v1, v2 built
// from powers of the primitive element, Y by the repeated (y, z) rows.
// For q=2 this is exactly the [9,2]_2 pair with d=2, d_c=3.
std::pair<Subspace, Subspace> example2_pair(std::uint32_t q);

// The k>=2, n=[k]_q (q+1) pair: G_X repeats each normalized vector w_i
// over a (q+1)-column block; G_Y is the banded matrix carrying (y, z) in
// block column j at rows (min(j,k-1), min(j,k-1)+1). k=2 delegates to
// example2_pair.
std::pair<Subspace, Subspace> lemma4_pair(std::uint32_t q, std::size_t k);

// Block-diagonal extension by the m x m identity; the intersection of
// the resulting pair is exactly the new m coordinates' span.
std::pair<Subspace, Subspace> lemma6_pad(const Subspace& xp, const Subspace& yp,
                                         std::size_t m);

// Appends n - n' all-ones columns to both generator matrices.
std::pair<Subspace, Subspace> ones_extend(const Subspace& x, const Subspace& y,
                                          std::size_t n);

// Searches the full (hyperplane, line) grid for covering coordinates;
// present iff reducing_neighbors(X,Y) is empty iff d_c = d+1.
std::optional<BlockingCertificate> blocking_certificate(const Subspace& x,
                                                        const Subspace& y);

// Independent checker: completeness plus per-entry vanishing, linear in
// certificate size. On failure returns false and, when defect is given,
// a one-line description of the first defect.
bool verify_certificate(const Subspace& x, const Subspace& y,
                        const BlockingCertificate& cert,
                        std::string* defect = nullptr);

// Composes the base pair, the identity padding and the all-ones extension
// for parameters with m(n,k) <= m <= k-2 and n >= [k-m]_q (q+1) + m, then
// validates distances and certificate before returning.
WitnessPair construct_witness(std::uint32_t q, std::size_t k, std::size_t m,
                              std::size_t n);

}  // namespace codegraph

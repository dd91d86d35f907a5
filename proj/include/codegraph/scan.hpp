#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "codegraph/code.hpp"
#include "codegraph/linalg.hpp"

namespace codegraph {

inline constexpr std::size_t default_scan_cap = 100'000;

struct ScanResult {
    CodeParams params;
    std::size_t num_codes = 0;
    std::uint64_t pairs = 0;
    std::uint64_t exceptional = 0;  // pairs with d_c = d + 1
    // canonically sorted (enumeration-index) exceptional pairs
    std::vector<std::pair<std::size_t, std::size_t>> exceptional_pairs;
    bool predicate = false;  // n < (q+1)^2 + k - 2
    bool consistent = false;  // exceptional == 0 exactly when predicate holds
};

// Exhausts all unordered pairs of non-degenerate [n,k]_q codes and counts
// those whose restricted distance exceeds the Grassmann distance. Results
// are independent of the thread count. Errors when |C(n,k)_q| exceeds cap.
ScanResult scan_theorem1(std::size_t n, std::size_t k, std::uint32_t q,
                         unsigned threads = 1, std::size_t cap = default_scan_cap);

// All non-degenerate [n,k]_q codes in enumeration order (cap-guarded).
std::vector<Subspace> enumerate_nondegenerate(const FieldPtr& field, std::size_t n,
                                              std::size_t k,
                                              std::size_t cap = default_scan_cap);

}  // namespace codegraph

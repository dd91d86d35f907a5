#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace codegraph {

// Exact combinatorial counts; no overflow, no floating point.
using BigCount = boost::multiprecision::cpp_int;

// Number of k-subspaces of F_q^n (the Gaussian coefficient). Every
// intermediate division is asserted remainder-free.
BigCount gaussian_binomial(std::size_t n, std::size_t k, std::uint32_t q);

BigCount binomial(std::size_t n, std::size_t k);

// |C(n,k)_q|: the inclusion-exclusion count of non-degenerate codes,
// sum_{i=0}^{n-k} (-1)^i C(n,i) [n-i k]_q.
BigCount count_nondegenerate(std::size_t n, std::size_t k, std::uint32_t q);

// The region where the restricted distance always equals the Grassmann
// distance: n < (q+1)^2 + k - 2.
bool theorem1_predicate(std::size_t n, std::size_t k, std::uint32_t q);

// Smallest length admitting a witness pair at gap parameter m:
// [k-m]_q (q+1) + m.
BigCount theorem2_bound(std::size_t k, std::size_t m, std::uint32_t q);

// Integer sweep replacing the calculus argument: for every m in [0, k-2],
// [k-m]_q (q+1) + m >= (q+1)^2 + k - 2.
bool lemma3_check(std::size_t k, std::uint32_t q);

}  // namespace codegraph

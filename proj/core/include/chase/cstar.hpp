#pragma once

// Per-n non-injectivity threshold: the smallest r such that a uniform
// function [n] -> [n] is r-non-injective with probability at most 1/(2n^2).

#include <cstddef>
#include <cstdint>

namespace chase {

inline constexpr std::size_t kCStarExactLimit = 12;

/// Functions [n] -> [n] with every preimage class smaller than r.
/// Exact for n <= kCStarExactLimit (throws DomainError above).
std::uint64_t count_max_load_below(std::size_t n, std::size_t r);

/// Pr[some value has >= r preimages], exact count converted to double.
double non_injective_probability(std::size_t n, std::size_t r);

/// Smallest r meeting the bound, by exact max-load counting. n <= 12.
std::size_t c_star_exact(std::size_t n);

/// Smallest r with 2 n^3 C(n, r) <= n^r (union bound over values), in exact
/// integer arithmetic. Never below c_star_exact.
std::size_t c_star_certificate(std::size_t n);

/// Exact for n <= 12, certificate beyond. Requires n >= 2.
std::size_t c_star_threshold(std::size_t n);

}  // namespace chase

#include "chase/cstar.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "chase/errors.hpp"

namespace chase {
namespace {

using BigInt = boost::multiprecision::cpp_int;

BigInt power(std::size_t base, std::size_t exponent) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

void require_n(std::size_t n) {
  if (n < 2) throw DomainError("c_star: n must be at least 2");
}

}  // namespace

std::uint64_t count_max_load_below(std::size_t n, std::size_t r) {
  if (n > kCStarExactLimit) throw DomainError("count_max_load_below: n above the exact limit");
  std::vector<std::vector<std::uint64_t>> binom(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (std::size_t m = 0; m <= n; ++m) {
    binom[m][0] = 1;
    for (std::size_t j = 1; j <= m; ++j) binom[m][j] = binom[m - 1][j - 1] + binom[m - 1][j];
  }
  // ways[m]: assignments of m labeled balls into the bins seen so far, each
  // bin holding fewer than r.
  std::vector<std::uint64_t> ways(n + 1, 0);
  ways[0] = 1;
  for (std::size_t bin = 0; bin < n; ++bin) {
    std::vector<std::uint64_t> next(n + 1, 0);
    for (std::size_t m = 0; m <= n; ++m) {
      for (std::size_t j = 0; j < r && j <= m; ++j) next[m] += binom[m][j] * ways[m - j];
    }
    ways = std::move(next);
  }
  return ways[n];
}

double non_injective_probability(std::size_t n, std::size_t r) {
  const auto total = static_cast<double>(power(n, n));
  return (total - static_cast<double>(count_max_load_below(n, r))) / total;
}

std::size_t c_star_exact(std::size_t n) {
  require_n(n);
  const BigInt total = power(n, n);
  const BigInt two_n_sq = BigInt(2) * n * n;
  for (std::size_t r = 1;; ++r) {
    const BigInt bad = total - count_max_load_below(n, r);
    if (bad * two_n_sq <= total) return r;
  }
}

std::size_t c_star_certificate(std::size_t n) {
  require_n(n);
  const BigInt scale = BigInt(2) * n * n * n;
  BigInt choose = n;  // C(n, 1)
  for (std::size_t r = 1; r <= n; ++r) {
    if (scale * choose <= power(n, r)) return r;
    choose = choose * (n - r) / (r + 1);
  }
  return n + 1;
}

std::size_t c_star_threshold(std::size_t n) {
  return n <= kCStarExactLimit ? c_star_exact(n) : c_star_certificate(n);
}

}  // namespace chase

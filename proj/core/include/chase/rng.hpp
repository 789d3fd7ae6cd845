#pragma once

#include <cstdint>
#include <random>

namespace chase {

/// SplitMix64 finalizer over (master, index). Per-trial seeds come from here
/// so that serial and parallel Monte Carlo loops draw identical streams.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept;

/// Seedable deterministic generator.
///
/// Bounded integers and Bernoulli draws are computed here rather than through
/// <random> distributions, whose output is implementation-defined; golden
/// files must not depend on the standard library vendor.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng for_trial(std::uint64_t master, std::uint64_t trial) {
    return Rng(derive_seed(master, trial));
  }

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

  /// Uniform on [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double unit();

  bool bernoulli(double probability) { return unit() < probability; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace chase

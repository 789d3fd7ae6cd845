#pragma once

// Finite-distribution information theory. All logarithms are base 2.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "chase/rng.hpp"

namespace chase {

/// Probabilities over labels 0 .. size()-1.
class FiniteDistribution {
 public:
  /// Throws DomainError on negative entries or a sum off 1 by more than 1e-9.
  explicit FiniteDistribution(std::vector<double> probs);

  static FiniteDistribution uniform(std::size_t n);
  static FiniteDistribution point(std::size_t n, std::size_t at);
  /// Normalizes nonnegative weights.
  static FiniteDistribution from_weights(std::span<const double> weights);

  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_.at(i); }
  std::span<const double> probs() const noexcept { return probs_; }

  /// Inverse-CDF draw.
  std::size_t sample(Rng& rng) const;

 private:
  std::vector<double> probs_;
  std::vector<double> cdf_;
};

/// Row-major joint law of (X, Y).
class JointDistribution {
 public:
  JointDistribution(std::size_t rows, std::size_t cols, std::vector<double> probs);

  static JointDistribution independent(const FiniteDistribution& x, const FiniteDistribution& y);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double at(std::size_t x, std::size_t y) const { return probs_.at(x * cols_ + y); }

  FiniteDistribution marginal_x() const;
  FiniteDistribution marginal_y() const;
  FiniteDistribution flattened() const { return FiniteDistribution(probs_); }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> probs_;
};

double entropy(const FiniteDistribution& d);
/// +infinity when q vanishes somewhere p does not.
double kl_divergence(const FiniteDistribution& p, const FiniteDistribution& q);
double mutual_information(const JointDistribution& joint);

enum class CheckStatus { Holds, Violated, NotApplicable };

const char* to_string(CheckStatus status) noexcept;

struct AlmostUniformReport {
  CheckStatus status = CheckStatus::NotApplicable;
  double entropy_deficit = 0;  ///< log n - H(d)
  double spread = 0;           ///< sqrt(4 delta n / |S|)
  double mass = 0;             ///< Pr[X in S]
  double lower_bound = 0;      ///< |S|/n (1 - spread)
};

/// Pr[X in S] >= |S|/n (1 - sqrt(4 delta n / |S|)) for H(X) >= log n - delta.
/// Not applicable when the entropy premise fails, S is empty or the spread
/// exceeds 1/10.
AlmostUniformReport check_almost_uniform(const FiniteDistribution& d, std::span<const std::size_t> s,
                                         double delta);

inline constexpr double kCollisionDelta = 1.0 / (48.0 * 48.0);

struct CollisionReport {
  CheckStatus status = CheckStatus::NotApplicable;
  double equal = 0;  ///< Pr[X = Y]
  double equal_bound = 0;  ///< 1/(8n)
  double unequal = 0;  ///< Pr[X != Y]
  double unequal_bound = 0.25;
  bool unequal_checked = false;  ///< only for n >= 4
};

/// Independent X, Y on [n] with entropy deficit at most delta:
/// Pr[X = Y] >= 1/(8n) and, for n >= 4, Pr[X != Y] >= 1/4.
CollisionReport collision_bounds_check(const FiniteDistribution& x, const FiniteDistribution& y,
                                       double delta = kCollisionDelta);

struct MixtureReport {
  CheckStatus status = CheckStatus::NotApplicable;
  double mixture_entropy = 0;
  double bound = 0;  ///< 1 + sum_i Pr[Y=i] H(X_i)
};

/// H(X_Y) <= 1 + sum_i Pr[Y=i] H(X_i), with `slack` absorbed on the right.
MixtureReport mixture_entropy_check(const FiniteDistribution& x0, const FiniteDistribution& x1,
                                    const FiniteDistribution& y, double slack = 1e-9);

struct GoodSet {
  double divergence = 0;  ///< a = D(P || Q)
  double scale = 0;       ///< 2^{-(a+1)/eps}
  std::vector<std::size_t> members;  ///< within supp(P)
  double p_mass = 0;      ///< Pr_P[Good]
};

/// {i in supp(P) : P(i) 2^{-(a+1)/eps} <= Q(i)}. eps must lie in (0, 1).
GoodSet good_set(const FiniteDistribution& p, const FiniteDistribution& q, double eps);

struct SamplerOutcome {
  std::optional<std::size_t> value;  ///< nullopt is Bottom
  std::size_t steps = 0;
};

/// Draws from Q until a draw is accepted (value) or the second coin fires
/// (Bottom). Each step terminates with probability exactly `scale`.
class RejectionSampler {
 public:
  RejectionSampler(FiniteDistribution p, FiniteDistribution q, double eps);

  const GoodSet& good() const noexcept { return good_; }
  double termination_probability() const noexcept { return good_.scale; }
  double bottom_coin() const noexcept { return bottom_coin_; }

  /// Throws std::runtime_error after a million steps.
  SamplerOutcome draw(Rng& rng) const;

 private:
  FiniteDistribution p_;
  FiniteDistribution q_;
  GoodSet good_;
  std::vector<double> accept_;  ///< per label; zero outside Good
  double bottom_coin_ = 0;
};

SamplerOutcome rejection_sample(const FiniteDistribution& p, const FiniteDistribution& q, double eps,
                                Rng& rng);

inline constexpr std::size_t kSamplerStepCap = 1'000'000;

/// probs proportional to 2^{theta w_i}, with theta >= 0 chosen by bisection
/// so that log n - H = deficit. Throws DomainError when the deficit is out of
/// reach for these weights.
FiniteDistribution tilt_to_deficit(std::span<const double> weights, double deficit);

/// Weight 1 on the first half of [n], 0 on the rest (or the reverse).
FiniteDistribution two_level_tilt(std::size_t n, double deficit, bool upper_half = false);
/// Weight 1 on a single label.
FiniteDistribution spike_tilt(std::size_t n, double deficit, std::size_t at = 0);
/// Weights -i.
FiniteDistribution geometric_tilt(std::size_t n, double deficit);

}  // namespace chase

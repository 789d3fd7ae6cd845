#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numeric>

#include "chase/errors.hpp"
#include "chase/info.hpp"
#include "chase/verify.hpp"

using namespace chase;

namespace {

double plain_entropy(std::span<const double> probs) {
  double h = 0;
  for (double x : probs) {
    if (x > 0) h -= x * std::log2(x);
  }
  return h;
}

JointDistribution random_joint(std::size_t rows, std::size_t cols, Rng& rng) {
  std::vector<double> w(rows * cols);
  for (double& x : w) x = rng.bernoulli(0.2) ? 0.0 : rng.unit();
  w[0] += 0.1;
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& x : w) x /= total;
  return JointDistribution(rows, cols, w);
}

}  // namespace

TEST(FiniteDistribution, Validation) {
  EXPECT_THROW(FiniteDistribution({0.5, 0.6}), DomainError);
  EXPECT_THROW(FiniteDistribution({1.5, -0.5}), DomainError);
  const std::vector<double> w{1, 3};
  EXPECT_DOUBLE_EQ(FiniteDistribution::from_weights(w)[1], 0.75);
}

TEST(Entropy, Examples) {
  EXPECT_NEAR(entropy(FiniteDistribution::uniform(64)), 6.0, 1e-12);
  EXPECT_EQ(entropy(FiniteDistribution::point(5, 2)), 0.0);
  EXPECT_NEAR(entropy(FiniteDistribution({0.5, 0.25, 0.25})), 1.5, 1e-12);
}

TEST(KlDivergence, Examples) {
  const FiniteDistribution p({0.5, 0.5});
  EXPECT_EQ(kl_divergence(p, p), 0.0);
  EXPECT_NEAR(kl_divergence(p, FiniteDistribution({0.25, 0.75})), 0.5 + 0.5 * std::log2(2.0 / 3.0), 1e-12);
  EXPECT_EQ(kl_divergence(p, FiniteDistribution::point(2, 0)), std::numeric_limits<double>::infinity());
  EXPECT_EQ(kl_divergence(FiniteDistribution::point(2, 0), p), 1.0);
}

TEST(MutualInformation, Examples) {
  const auto indep = JointDistribution::independent(FiniteDistribution({0.3, 0.7}),
                                                    FiniteDistribution::uniform(3));
  EXPECT_NEAR(mutual_information(indep), 0.0, 1e-12);
  const std::size_t n = 8;
  std::vector<double> diag(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) diag[i * n + i] = 1.0 / n;
  EXPECT_NEAR(mutual_information(JointDistribution(n, n, diag)), 3.0, 1e-12);
}

TEST(MutualInformation, EntropyIdentity) {
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const auto joint = random_joint(1 + rng.below(5), 1 + rng.below(5), rng);
    const double expected = plain_entropy(joint.marginal_x().probs()) +
                            plain_entropy(joint.marginal_y().probs()) -
                            plain_entropy(joint.flattened().probs());
    EXPECT_NEAR(mutual_information(joint), expected, 1e-9);
    EXPECT_GE(mutual_information(joint), -1e-12);
  }
}

TEST(AlmostUniform, UniformMeetsBoundExactly) {
  const auto d = FiniteDistribution::uniform(64);
  std::vector<std::size_t> s(32);
  std::iota(s.begin(), s.end(), 0);
  const auto report = check_almost_uniform(d, s, 1e-3);
  EXPECT_EQ(report.status, CheckStatus::Holds);
  EXPECT_DOUBLE_EQ(report.mass, 0.5);
  EXPECT_NEAR(report.spread, std::sqrt(4e-3 * 64 / 32), 1e-12);
}

TEST(AlmostUniform, TiltedLightHalf) {
  const double delta = 1e-3;
  const auto d = two_level_tilt(64, delta);
  std::vector<std::size_t> light(32);
  std::iota(light.begin(), light.end(), 32);
  const auto report = check_almost_uniform(d, light, delta);
  EXPECT_EQ(report.status, CheckStatus::Holds);
  EXPECT_LT(report.mass, 0.5);
  EXPECT_GE(report.mass, report.lower_bound);
}

TEST(AlmostUniform, NeverViolatedOnRandomTilts) {
  Rng rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 16 << rng.below(3);
    std::vector<double> w(n);
    for (double& x : w) x = rng.unit();
    const double delta = 1e-4 + 1e-3 * rng.unit();
    const auto d = tilt_to_deficit(w, delta * rng.unit());
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (rng.bernoulli(0.7)) s.push_back(i);
    }
    EXPECT_NE(check_almost_uniform(d, s, delta).status, CheckStatus::Violated);
  }
}

TEST(AlmostUniform, NotApplicable) {
  const std::vector<std::size_t> s{0, 1};
  EXPECT_EQ(check_almost_uniform(FiniteDistribution::point(4, 0), s, 0.1).status,
            CheckStatus::NotApplicable);
  EXPECT_EQ(check_almost_uniform(FiniteDistribution::uniform(4), {}, 0.1).status,
            CheckStatus::NotApplicable);
  EXPECT_EQ(check_almost_uniform(FiniteDistribution::uniform(4), s, 0.1).status,
            CheckStatus::NotApplicable);
}

TEST(Collision, TestPairsHold) {
  for (std::size_t n : {2, 4, 16, 64}) {
    for (const auto& [x, y] : collision_test_pairs(n, kCollisionDelta)) {
      const auto report = collision_bounds_check(x, y);
      ASSERT_EQ(report.status, CheckStatus::Holds) << n;
      double equal = 0;
      for (std::size_t i = 0; i < n; ++i) equal += x[i] * y[i];
      EXPECT_NEAR(report.equal, equal, 1e-12);
      EXPECT_NEAR(report.unequal, 1 - equal, 1e-12);
      EXPECT_DOUBLE_EQ(report.equal_bound, 1.0 / (8.0 * n));
      EXPECT_EQ(report.unequal_checked, n >= 4);
    }
  }
}

TEST(Collision, OppositeHalvesAtLargerDeficit) {
  // Mismatched tilts push Pr[X = Y] down; at the allowed deficit it stays
  // far above 1/(8n).
  const std::size_t n = 64;
  const auto x = two_level_tilt(n, kCollisionDelta, false);
  const auto y = two_level_tilt(n, kCollisionDelta, true);
  const auto report = collision_bounds_check(x, y);
  EXPECT_EQ(report.status, CheckStatus::Holds);
  EXPECT_LT(report.equal, 1.0 / n);
  EXPECT_EQ(collision_bounds_check(FiniteDistribution::point(4, 0), FiniteDistribution::point(4, 0)).status,
            CheckStatus::NotApplicable);
}

TEST(Mixture, TightAndRandom) {
  const auto tight = mixture_entropy_check(FiniteDistribution::point(2, 0), FiniteDistribution::point(2, 1),
                                           FiniteDistribution::uniform(2));
  EXPECT_EQ(tight.status, CheckStatus::Holds);
  EXPECT_NEAR(tight.mixture_entropy, 1.0, 1e-12);
  EXPECT_NEAR(tight.bound, 1.0, 1e-12);

  Rng rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(10);
    const auto x0 = random_distribution(n, rng);
    const auto x1 = random_distribution(n, rng);
    const double a = rng.unit();
    const auto report = mixture_entropy_check(x0, x1, FiniteDistribution({a, 1 - a}));
    std::vector<double> mix(n);
    for (std::size_t i = 0; i < n; ++i) mix[i] = a * x0[i] + (1 - a) * x1[i];
    EXPECT_NEAR(report.mixture_entropy, plain_entropy(mix), 1e-9);
    EXPECT_EQ(report.status, CheckStatus::Holds);
  }
}

TEST(Tilts, HitTheRequestedDeficit) {
  for (double deficit : {1e-6, 1e-3, 0.3}) {
    EXPECT_NEAR(6.0 - entropy(two_level_tilt(64, deficit)), deficit, 1e-9);
    EXPECT_NEAR(6.0 - entropy(spike_tilt(64, deficit, 5)), deficit, 1e-9);
    EXPECT_NEAR(6.0 - entropy(geometric_tilt(64, deficit)), deficit, 1e-9);
  }
  EXPECT_THROW(two_level_tilt(64, 1.5), DomainError);
}

TEST(GoodSet, Examples) {
  const FiniteDistribution p({0.5, 0.5, 0, 0});
  const auto good = good_set(p, FiniteDistribution::uniform(4), 0.5);
  EXPECT_DOUBLE_EQ(good.divergence, 1.0);
  EXPECT_DOUBLE_EQ(good.scale, 1.0 / 16);
  EXPECT_EQ(good.members, (std::vector<std::size_t>{0, 1}));
  EXPECT_DOUBLE_EQ(good.p_mass, 1.0);

  const auto same = good_set(FiniteDistribution::uniform(5), FiniteDistribution::uniform(5), 0.25);
  EXPECT_EQ(same.members.size(), 5U);
  EXPECT_DOUBLE_EQ(same.scale, 1.0 / 16);

  const auto [tp, tq] = sampler_test_pair();
  EXPECT_EQ(good_set(tp, tq, 0.5).members.size(), 7U);
  EXPECT_THROW(good_set(tp, tq, 1.0), DomainError);
  EXPECT_THROW(good_set(tp, tq, 0.0), DomainError);
}

TEST(RejectionSampler, EqualLawsRunFourStepsOnAverage) {
  const auto u = FiniteDistribution::uniform(8);
  const RejectionSampler sampler(u, u, 0.5);
  EXPECT_DOUBLE_EQ(sampler.termination_probability(), 0.25);
  EXPECT_EQ(sampler.bottom_coin(), 0.0);
  Rng rng(44);
  const std::size_t draws = 40'000;
  double steps = 0;
  std::vector<std::size_t> counts(8, 0);
  for (std::size_t i = 0; i < draws; ++i) {
    const auto out = sampler.draw(rng);
    ASSERT_TRUE(out.value.has_value());
    ++counts[*out.value];
    steps += static_cast<double>(out.steps);
  }
  // Geometric with success 1/4: variance 12.
  EXPECT_NEAR(steps / draws, 4.0, 4 * std::sqrt(12.0 / draws));
  for (std::size_t c : counts) EXPECT_NEAR(static_cast<double>(c) / draws, 0.125, 4 * std::sqrt(0.125 * 0.875 / draws));
}

TEST(RejectionSampler, AcceptedLawIsConditionedP) {
  const auto [p, q] = sampler_test_pair();
  const RejectionSampler sampler(p, q, 0.5);
  const auto good = sampler.good();
  Rng rng(45);
  const std::size_t draws = 60'000;
  std::vector<std::size_t> counts(p.size(), 0);
  std::size_t accepted = 0;
  std::size_t bottoms = 0;
  for (std::size_t i = 0; i < draws; ++i) {
    const auto out = sampler.draw(rng);
    if (out.value) {
      ++counts[*out.value];
      ++accepted;
    } else {
      ++bottoms;
    }
  }
  const double pg = good.p_mass;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const bool member = std::find(good.members.begin(), good.members.end(), i) != good.members.end();
    const double target = member ? p[i] / pg : 0.0;
    const double sigma = std::sqrt(std::max(target * (1 - target), 1e-12) / accepted);
    EXPECT_NEAR(static_cast<double>(counts[i]) / accepted, target, 4 * sigma) << i;
  }
  const double sigma = std::sqrt(pg * (1 - pg) / draws);
  EXPECT_NEAR(static_cast<double>(bottoms) / draws, 1 - pg, 4 * sigma);

  const auto stats = sampler_experiment(p, q, 0.5, 20'000, 46);
  EXPECT_LT(stats.chi_square, stats.chi_square_critical);
  EXPECT_NEAR(stats.mean_steps, stats.expected_steps, 4 * stats.steps_sigma);
  EXPECT_NEAR(stats.bottom_rate, stats.bottom_expected, 4 * stats.bottom_sigma);
}

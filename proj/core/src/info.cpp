#include "chase/info.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "chase/errors.hpp"

namespace chase {
namespace {

constexpr double kNormTolerance = 1e-9;
constexpr double kCompareSlack = 1e-12;

double plogp(double x) { return x > 0 ? x * std::log2(x) : 0.0; }

void require_same_size(const FiniteDistribution& a, const FiniteDistribution& b, const char* what) {
  if (a.size() != b.size()) {
    throw DomainError(std::string(what) + ": distributions live on different domains");
  }
}

double deficit_of(const FiniteDistribution& d) {
  return std::log2(static_cast<double>(d.size())) - entropy(d);
}

}  // namespace

FiniteDistribution::FiniteDistribution(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw DomainError("distribution: empty support");
  double sum = 0;
  for (double x : probs_) {
    if (!(x >= 0) || !std::isfinite(x)) throw DomainError("distribution: negative or non-finite entry");
    sum += x;
  }
  if (std::abs(sum - 1.0) > kNormTolerance) {
    throw DomainError("distribution: probabilities sum to " + std::to_string(sum));
  }
  cdf_.resize(probs_.size());
  std::partial_sum(probs_.begin(), probs_.end(), cdf_.begin());
}

FiniteDistribution FiniteDistribution::uniform(std::size_t n) {
  if (n == 0) throw DomainError("distribution: empty support");
  return FiniteDistribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

FiniteDistribution FiniteDistribution::point(std::size_t n, std::size_t at) {
  if (at >= n) throw DomainError("distribution: point mass outside the domain");
  std::vector<double> probs(n, 0.0);
  probs[at] = 1.0;
  return FiniteDistribution(std::move(probs));
}

FiniteDistribution FiniteDistribution::from_weights(std::span<const double> weights) {
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(total > 0)) throw DomainError("distribution: weights have no mass");
  std::vector<double> probs(weights.begin(), weights.end());
  for (double& x : probs) x /= total;
  return FiniteDistribution(std::move(probs));
}

std::size_t FiniteDistribution::sample(Rng& rng) const {
  const double u = rng.unit();
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  if (it != cdf_.end()) return static_cast<std::size_t>(it - cdf_.begin());
  // Rounding left u above the final partial sum.
  std::size_t last = probs_.size() - 1;
  while (probs_[last] == 0) --last;
  return last;
}

JointDistribution::JointDistribution(std::size_t rows, std::size_t cols, std::vector<double> probs)
    : rows_(rows), cols_(cols), probs_(std::move(probs)) {
  if (rows_ * cols_ != probs_.size() || probs_.empty()) {
    throw DomainError("joint distribution: shape does not match the table");
  }
  FiniteDistribution check(probs_);
}

JointDistribution JointDistribution::independent(const FiniteDistribution& x, const FiniteDistribution& y) {
  std::vector<double> probs;
  probs.reserve(x.size() * y.size());
  for (double a : x.probs()) {
    for (double b : y.probs()) probs.push_back(a * b);
  }
  return JointDistribution(x.size(), y.size(), std::move(probs));
}

FiniteDistribution JointDistribution::marginal_x() const {
  std::vector<double> m(rows_, 0.0);
  for (std::size_t x = 0; x < rows_; ++x) {
    for (std::size_t y = 0; y < cols_; ++y) m[x] += at(x, y);
  }
  return FiniteDistribution::from_weights(m);
}

FiniteDistribution JointDistribution::marginal_y() const {
  std::vector<double> m(cols_, 0.0);
  for (std::size_t x = 0; x < rows_; ++x) {
    for (std::size_t y = 0; y < cols_; ++y) m[y] += at(x, y);
  }
  return FiniteDistribution::from_weights(m);
}

double entropy(const FiniteDistribution& d) {
  double h = 0;
  for (double x : d.probs()) h -= plogp(x);
  return h;
}

double kl_divergence(const FiniteDistribution& p, const FiniteDistribution& q) {
  require_same_size(p, q, "kl_divergence");
  double sum = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    if (q[i] == 0) return std::numeric_limits<double>::infinity();
    sum += p[i] * std::log2(p[i] / q[i]);
  }
  return std::max(sum, 0.0);
}

double mutual_information(const JointDistribution& joint) {
  const auto mx = joint.marginal_x();
  const auto my = joint.marginal_y();
  double sum = 0;
  for (std::size_t x = 0; x < joint.rows(); ++x) {
    for (std::size_t y = 0; y < joint.cols(); ++y) {
      const double pxy = joint.at(x, y);
      if (pxy > 0) sum += pxy * std::log2(pxy / (mx[x] * my[y]));
    }
  }
  return sum;
}

const char* to_string(CheckStatus status) noexcept {
  switch (status) {
    case CheckStatus::Holds:
      return "holds";
    case CheckStatus::Violated:
      return "violated";
    case CheckStatus::NotApplicable:
      return "not-applicable";
  }
  return "?";
}

AlmostUniformReport check_almost_uniform(const FiniteDistribution& d, std::span<const std::size_t> s,
                                         double delta) {
  const std::size_t n = d.size();
  std::vector<char> seen(n, 0);
  AlmostUniformReport report;
  for (std::size_t i : s) {
    if (i >= n || seen[i]) throw DomainError("check_almost_uniform: S must be distinct labels of [n]");
    seen[i] = 1;
    report.mass += d[i];
  }
  report.entropy_deficit = deficit_of(d);
  if (s.empty() || report.entropy_deficit > delta + kCompareSlack) return report;
  const double size = static_cast<double>(s.size());
  report.spread = std::sqrt(4.0 * delta * static_cast<double>(n) / size);
  report.lower_bound = size / static_cast<double>(n) * (1.0 - report.spread);
  if (report.spread > 0.1) return report;
  report.status = report.mass >= report.lower_bound - kCompareSlack ? CheckStatus::Holds : CheckStatus::Violated;
  return report;
}

CollisionReport collision_bounds_check(const FiniteDistribution& x, const FiniteDistribution& y,
                                       double delta) {
  require_same_size(x, y, "collision_bounds_check");
  const std::size_t n = x.size();
  CollisionReport report;
  for (std::size_t i = 0; i < n; ++i) report.equal += x[i] * y[i];
  report.unequal = 1.0 - report.equal;
  report.equal_bound = 1.0 / (8.0 * static_cast<double>(n));
  report.unequal_checked = n >= 4;
  if (deficit_of(x) > delta + kCompareSlack || deficit_of(y) > delta + kCompareSlack) return report;
  bool holds = report.equal >= report.equal_bound;
  if (report.unequal_checked) holds = holds && report.unequal >= report.unequal_bound;
  report.status = holds ? CheckStatus::Holds : CheckStatus::Violated;
  return report;
}

MixtureReport mixture_entropy_check(const FiniteDistribution& x0, const FiniteDistribution& x1,
                                    const FiniteDistribution& y, double slack) {
  require_same_size(x0, x1, "mixture_entropy_check");
  if (y.size() != 2) throw DomainError("mixture_entropy_check: selector must live on {0,1}");
  std::vector<double> mix(x0.size());
  for (std::size_t i = 0; i < mix.size(); ++i) mix[i] = y[0] * x0[i] + y[1] * x1[i];
  MixtureReport report;
  report.mixture_entropy = entropy(FiniteDistribution::from_weights(mix));
  report.bound = 1.0 + y[0] * entropy(x0) + y[1] * entropy(x1);
  report.status = report.mixture_entropy <= report.bound + slack ? CheckStatus::Holds : CheckStatus::Violated;
  return report;
}

GoodSet good_set(const FiniteDistribution& p, const FiniteDistribution& q, double eps) {
  require_same_size(p, q, "good_set");
  if (!(eps > 0 && eps < 1)) throw DomainError("good_set: eps must lie in (0, 1)");
  GoodSet good;
  good.divergence = kl_divergence(p, q);
  good.scale = std::exp2(-(good.divergence + 1.0) / eps);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0 && p[i] * good.scale <= q[i]) {
      good.members.push_back(i);
      good.p_mass += p[i];
    }
  }
  good.p_mass = std::min(good.p_mass, 1.0);
  return good;
}

RejectionSampler::RejectionSampler(FiniteDistribution p, FiniteDistribution q, double eps)
    : p_(std::move(p)), q_(std::move(q)), good_(good_set(p_, q_, eps)), accept_(p_.size(), 0.0) {
  for (std::size_t i : good_.members) {
    if (q_[i] > 0) accept_[i] = std::min(1.0, p_[i] * good_.scale / q_[i]);
  }
  bottom_coin_ = good_.scale * (1.0 - good_.p_mass) / (1.0 - good_.scale * good_.p_mass);
}

SamplerOutcome RejectionSampler::draw(Rng& rng) const {
  for (std::size_t step = 1; step <= kSamplerStepCap; ++step) {
    const std::size_t gamma = q_.sample(rng);
    if (rng.bernoulli(accept_[gamma])) return {gamma, step};
    if (rng.bernoulli(bottom_coin_)) return {std::nullopt, step};
  }
  throw std::runtime_error("rejection_sample: no termination within " + std::to_string(kSamplerStepCap) +
                           " steps (termination probability " + std::to_string(good_.scale) + ")");
}

SamplerOutcome rejection_sample(const FiniteDistribution& p, const FiniteDistribution& q, double eps,
                                Rng& rng) {
  return RejectionSampler(p, q, eps).draw(rng);
}

FiniteDistribution tilt_to_deficit(std::span<const double> weights, double deficit) {
  if (weights.empty()) throw DomainError("tilt_to_deficit: no weights");
  if (deficit < 0) throw DomainError("tilt_to_deficit: negative deficit");
  const double top = *std::max_element(weights.begin(), weights.end());
  const auto at = [&](double theta) {
    std::vector<double> w(weights.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = std::exp2(theta * (weights[i] - top));
    return FiniteDistribution::from_weights(w);
  };
  const auto ties = static_cast<double>(std::count(weights.begin(), weights.end(), top));
  const double reachable = std::log2(static_cast<double>(weights.size()) / ties);
  if (deficit == 0) return at(0);
  if (deficit >= reachable) {
    throw DomainError("tilt_to_deficit: deficit " + std::to_string(deficit) + " not below " +
                      std::to_string(reachable));
  }
  double lo = 0;
  double hi = 1;
  while (deficit_of(at(hi)) < deficit) {
    lo = hi;
    hi *= 2;
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (deficit_of(at(mid)) < deficit ? lo : hi) = mid;
  }
  // lo is on the feasible side: deficit(lo) <= deficit.
  return at(lo);
}

FiniteDistribution two_level_tilt(std::size_t n, double deficit, bool upper_half) {
  std::vector<double> w(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) w[i] = ((i < n / 2) != upper_half) ? 1.0 : 0.0;
  return tilt_to_deficit(w, deficit);
}

FiniteDistribution spike_tilt(std::size_t n, double deficit, std::size_t at) {
  if (at >= n) throw DomainError("spike_tilt: label outside the domain");
  std::vector<double> w(n, 0.0);
  w[at] = 1.0;
  return tilt_to_deficit(w, deficit);
}

FiniteDistribution geometric_tilt(std::size_t n, double deficit) {
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = -static_cast<double>(i);
  return tilt_to_deficit(w, deficit);
}

}  // namespace chase

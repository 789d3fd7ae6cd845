#include "chase/verify.hpp"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <cstdio>
#include <exception>
#include <future>
#include <limits>
#include <numeric>

#include "chase/cstar.hpp"
#include "chase/errors.hpp"
#include "chase/gadget.hpp"
#include "chase/oracles.hpp"
#include "chase/protocol.hpp"
#include "chase/streaming.hpp"

namespace chase {
namespace {

SetFunctionTable table_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<IndexSet> image(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (mask >> (x * n + y) & 1U) image[x].push_back(static_cast<Index>(y));
    }
  }
  return SetFunctionTable(std::move(image));
}

std::size_t total_multiplicity(const IntersectScInstance& inst) {
  std::size_t total = 0;
  for (const auto& f : inst.left.funcs()) total += f.multiplicity();
  for (const auto& f : inst.right.funcs()) total += f.multiplicity();
  return total;
}

// Walks the right chase through funcs[p-1] .. funcs[1], i.e. the argument
// funcs[0] is applied to.
Index inner_point(const PcInstance& inst) {
  Index x = 0;
  for (std::size_t i = inst.p(); i-- > 1;) x = inst.func(i)(x);
  return x;
}

bool any_non_injective(const OrLpceInstance& inst) {
  return std::any_of(inst.items().begin(), inst.items().end(),
                     [](const LpceInstance& item) { return has_non_injective_table(item); });
}

double binomial_sigma(double rate, std::size_t trials) {
  return std::sqrt(rate * (1.0 - rate) / static_cast<double>(trials));
}

std::size_t ceil_half(std::size_t x) { return (x + 1) / 2; }

}  // namespace

// --- enumeration ------------------------------------------------------------

void for_each_intersect_sc(std::size_t n, std::size_t layers,
                           const std::function<void(const IntersectScInstance&)>& visit) {
  if (n == 0 || n * n > 16 || layers == 0) {
    throw DomainError("for_each_intersect_sc: only n <= 4 and layers >= 1 are enumerable");
  }
  const std::uint64_t per_table = std::uint64_t{1} << (n * n);
  std::vector<SetFunctionTable> tables;
  tables.reserve(per_table);
  for (std::uint64_t m = 0; m < per_table; ++m) tables.push_back(table_from_mask(n, m));

  const std::size_t slots = 2 * layers;
  std::vector<std::uint64_t> digit(slots, 0);
  while (true) {
    std::vector<SetFunctionTable> left;
    std::vector<SetFunctionTable> right;
    for (std::size_t i = 0; i < layers; ++i) {
      left.push_back(tables[digit[i]]);
      right.push_back(tables[digit[layers + i]]);
    }
    visit(IntersectScInstance(ScInstance(std::move(left)), ScInstance(std::move(right))));
    std::size_t pos = 0;
    while (pos < slots && ++digit[pos] == per_table) digit[pos++] = 0;
    if (pos == slots) break;
  }
}

IntersectScInstance sample_desk_instance(std::size_t max_n, std::size_t max_layers, Rng& rng) {
  const std::size_t n = 1 + rng.below(max_n);
  const std::size_t layers = 2 + rng.below(max_layers - 1);
  const double density = std::min(1.0, (0.6 + 1.4 * rng.unit()) / static_cast<double>(n));
  return sample_random_intersect_sc(n, layers, density, rng);
}

// --- reduction --------------------------------------------------------------

OrLpceInstance sample_yes_or_lpce(std::size_t n, std::size_t p, std::size_t r, std::size_t t, Rng& rng) {
  while (true) {
    std::vector<LpceInstance> items;
    for (std::size_t j = 0; j < t; ++j) items.push_back(sample_uniform_lpce(n, p, r, rng));
    const std::size_t chosen = rng.below(t);
    auto& item = items[chosen];
    std::vector<FunctionTable> right(item.right.funcs().begin(), item.right.funcs().end());
    std::vector<Index> outer(right[0].image().begin(), right[0].image().end());
    outer[inner_point(item.right)] = eval_pc(item.left);
    right[0] = FunctionTable(std::move(outer));
    item = LpceInstance(item.left, PcInstance(std::move(right)), r);
    OrLpceInstance inst(std::move(items));
    if (!any_non_injective(inst)) return inst;
  }
}

OrLpceInstance sample_no_or_lpce(std::size_t n, std::size_t p, std::size_t r, std::size_t t, Rng& rng) {
  while (true) {
    OrLpceInstance inst = sample_uniform_or_lpce(n, p, r, t, rng);
    if (!eval_or_lpce(inst)) return inst;
  }
}

CompletenessStats reduction_completeness(const ReductionParams& params, std::size_t trials,
                                         std::uint64_t seed) {
  CompletenessStats stats;
  for (std::size_t i = 0; i < trials; ++i) {
    Rng rng = Rng::for_trial(seed, i);
    const auto inst = sample_yes_or_lpce(params.n, params.p, params.r, params.t, rng);
    const auto out = reduce_or_lpce(inst, rng, ReduceOptions{.require_feasible = false});
    const auto* reduced = std::get_if<IntersectScInstance>(&out);
    ++stats.trials;
    if (reduced != nullptr && !eval_intersect_sc(*reduced)) ++stats.failures;
  }
  return stats;
}

SoundnessStats reduction_soundness(const ReductionParams& params, std::size_t trials, std::uint64_t seed) {
  require_feasible(params);
  SoundnessStats stats;
  stats.bound = intersection_bound(params);
  double sum = 0;
  double sum_sq = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    Rng rng = Rng::for_trial(seed, i);
    const auto inst = sample_no_or_lpce(params.n, params.p, params.r, params.t, rng);
    const auto out = reduce_or_lpce(inst, rng);
    const auto& reduced = std::get<IntersectScInstance>(out);
    const auto size = static_cast<double>(
        intersect_sets(eval_sc(reduced.left), eval_sc(reduced.right)).size());
    ++stats.trials;
    if (size > 0) ++stats.false_intersections;
    sum += size;
    sum_sq += size * size;
  }
  const auto n = static_cast<double>(stats.trials);
  stats.rate = static_cast<double>(stats.false_intersections) / n;
  stats.rate_sigma = binomial_sigma(stats.rate, stats.trials);
  stats.mean_intersection = sum / n;
  const double variance = std::max(0.0, sum_sq / n - stats.mean_intersection * stats.mean_intersection);
  stats.mean_sigma = std::sqrt(variance / n);
  return stats;
}

std::size_t scramble_roundtrip_mismatches(std::size_t n, std::size_t p, std::size_t trials,
                                          std::uint64_t seed) {
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    Rng rng = Rng::for_trial(seed, i);
    const LpceInstance item = sample_uniform_lpce(n, p, n + 1, rng);
    const auto perms = PermutationFamily::sample(n, p, 1, rng);
    const ScrambledItem once = scramble(item, 0, perms);
    const auto back = perms.inverted();
    if (scramble_side(once.left, 0, back, false) != item.left) ++mismatches;
    if (scramble_side(once.right, 0, back, true) != item.right) ++mismatches;
  }
  return mismatches;
}

// --- gadgets ----------------------------------------------------------------

GadgetBuilders GadgetBuilders::standard() {
  return {build_distance_gadget, build_reachability_gadget, build_matching_gadget};
}

void EquivalenceStats::merge(const EquivalenceStats& o) {
  instances += o.instances;
  yes += o.yes;
  distance_mismatches += o.distance_mismatches;
  reach_mismatches += o.reach_mismatches;
  matching_mismatches += o.matching_mismatches;
  short_paths += o.short_paths;
  edge_count_mismatches += o.edge_count_mismatches;
}

void check_gadgets(const IntersectScInstance& inst, const GadgetBuilders& builders, EquivalenceStats& stats) {
  const bool expected = eval_intersect_sc(inst);
  const std::size_t p = gadget_pass_param(inst);
  ++stats.instances;
  if (expected) ++stats.yes;

  const GraphStream distance = builders.distance(inst);
  const auto dist = oracle_distance(distance);
  if ((dist && *dist <= 2 * (p + 1)) != expected) ++stats.distance_mismatches;
  if (dist && *dist < 2 * p + 2) ++stats.short_paths;
  if (distance.edges.size() != total_multiplicity(inst)) ++stats.edge_count_mismatches;

  if (oracle_reachable(builders.reachability(inst)) != expected) ++stats.reach_mismatches;

  try {
    if (oracle_perfect_matching(builders.matching(inst)) != expected) ++stats.matching_mismatches;
  } catch (const DomainError&) {
    ++stats.matching_mismatches;
  }
}

EquivalenceStats gadget_equivalence_exhaustive(std::size_t k, std::size_t layers,
                                               const GadgetBuilders& builders) {
  EquivalenceStats stats;
  for_each_intersect_sc(k, layers, [&](const IntersectScInstance& inst) { check_gadgets(inst, builders, stats); });
  return stats;
}

EquivalenceStats gadget_equivalence_sampled(std::size_t k, std::size_t layers, std::size_t count,
                                            std::uint64_t seed, const GadgetBuilders& builders) {
  EquivalenceStats stats;
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    check_gadgets(sample_random_intersect_sc(k, layers, 0.5, rng), builders, stats);
  }
  return stats;
}

EquivalenceStats gadget_equivalence_random(std::size_t max_k, std::size_t max_p, std::size_t count,
                                           std::uint64_t seed, const GadgetBuilders& builders) {
  EquivalenceStats stats;
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng = Rng::for_trial(seed, i);
    check_gadgets(sample_desk_instance(max_k, max_p + 1, rng), builders, stats);
  }
  return stats;
}

std::size_t vertex_count_mismatches(const GadgetBuilders& builders) {
  std::size_t mismatches = 0;
  for (std::size_t p : {1, 2, 3}) {
    for (std::size_t k : {2, 4, 8}) {
      const auto inst = identity_intersect_sc(k, p + 1);
      const bool ok = builders.distance(inst).num_vertices == (2 * p + 3) * k &&
                      builders.reachability(inst).num_vertices == (2 * p + 3) * k &&
                      builders.matching(inst).num_vertices == k * (4 * p + 6) - 2;
      if (!ok) ++mismatches;
    }
  }
  return mismatches;
}

// --- protocols --------------------------------------------------------------

void ProtocolStats::merge(const ProtocolStats& o) {
  instances += o.instances;
  forward_wrong += o.forward_wrong;
  reverse_wrong += o.reverse_wrong;
  forward_count_violations += o.forward_count_violations;
  reverse_count_violations += o.reverse_count_violations;
}

void check_protocols(const IntersectScInstance& inst, ProtocolStats& stats) {
  const bool expected = eval_intersect_sc(inst);
  const std::size_t p = inst.p();
  const std::size_t n = inst.n();
  ++stats.instances;

  const ProtocolResult forward = forward_sc_protocol(inst);
  if (forward.answer != expected) ++stats.forward_wrong;
  std::size_t set_bits = 0;
  bool placeholders_ok = true;
  for (const Message& m : forward.transcript.messages()) {
    const std::size_t round = m.turn.round;
    if (m.turn.player == p - round + 1 || m.turn.player == 2 * p - round + 1) {
      set_bits += m.bits.size();
    } else if (m.bits.size() != 1) {
      placeholders_ok = false;
    }
  }
  if (forward.transcript.rounds_used() != p || set_bits != 2 * p * n || !placeholders_ok) {
    ++stats.forward_count_violations;
  }

  const ProtocolResult reverse = reverse_order_sc_protocol(inst);
  if (reverse.answer != expected) ++stats.reverse_wrong;
  if (reverse.transcript.rounds_used() != 1 || reverse.transcript.total_bits() != 2 * p * n) {
    ++stats.reverse_count_violations;
  }
}

ProtocolStats protocol_exhaustive(std::size_t n, std::size_t p) {
  ProtocolStats stats;
  for_each_intersect_sc(n, p, [&](const IntersectScInstance& inst) { check_protocols(inst, stats); });
  return stats;
}

ProtocolStats protocol_random(std::size_t n, std::size_t max_p, std::size_t count, std::uint64_t seed) {
  ProtocolStats stats;
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng = Rng::for_trial(seed, i);
    const std::size_t p = 1 + rng.below(max_p);
    check_protocols(sample_random_intersect_sc(n, p, std::min(1.0, 1.5 / static_cast<double>(n)), rng),
                    stats);
  }
  return stats;
}

// --- streaming --------------------------------------------------------------

void StreamingStats::merge(const StreamingStats& o) {
  instances += o.instances;
  bidir_wrong += o.bidir_wrong;
  bidir_pass_violations += o.bidir_pass_violations;
  forward_wrong += o.forward_wrong;
  union_find_wrong += o.union_find_wrong;
  frontier_wrong += o.frontier_wrong;
  reversal_changes += o.reversal_changes;
  max_forward_passes = std::max(max_forward_passes, o.max_forward_passes);
  max_frontier_passes = std::max(max_frontier_passes, o.max_frontier_passes);
}

void check_streaming(const IntersectScInstance& inst, StreamingStats& stats) {
  const std::size_t p = gadget_pass_param(inst);
  const std::size_t bound = 2 * (p + 1);
  const GraphStream distance = build_distance_gadget(inst);
  const GraphStream reach = build_reachability_gadget(inst);
  const std::size_t budget = distance.num_vertices + 1;
  ++stats.instances;

  const auto dist = oracle_distance(distance);
  const bool within = dist && *dist <= bound;
  const bool reachable = oracle_reachable(reach);

  const RunReport bidir = run_streaming(*alg_bidirectional_bfs(bound), distance, budget);
  if (bidir.answer != within) ++stats.bidir_wrong;
  if (within && bidir.passes_used != ceil_half(bound)) ++stats.bidir_pass_violations;

  const RunReport forward = run_streaming(*alg_forward_bfs(bound), distance, budget);
  if (forward.answer != within) ++stats.forward_wrong;
  stats.max_forward_passes = std::max(stats.max_forward_passes, forward.passes_used);

  const RunReport uf = run_streaming(*alg_union_find(), distance, budget);
  if (uf.answer != dist.has_value()) ++stats.union_find_wrong;

  const RunReport frontier = run_streaming(*alg_directed_frontier(), reach, budget);
  if (frontier.answer != reachable) ++stats.frontier_wrong;
  stats.max_frontier_passes = std::max(stats.max_frontier_passes, frontier.passes_used);

  if (oracle_distance(reversed(distance)) != dist || oracle_reachable(reversed(reach)) != reachable) {
    ++stats.reversal_changes;
  }
}

StreamingStats streaming_exhaustive(std::size_t k, std::size_t layers) {
  StreamingStats stats;
  for_each_intersect_sc(k, layers, [&](const IntersectScInstance& inst) { check_streaming(inst, stats); });
  return stats;
}

StreamingStats streaming_random(std::size_t max_k, std::size_t max_p, std::size_t count, std::uint64_t seed) {
  StreamingStats stats;
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng = Rng::for_trial(seed, i);
    check_streaming(sample_desk_instance(max_k, max_p + 1, rng), stats);
  }
  return stats;
}

double union_find_state_ratio(std::size_t n) {
  GraphStream path;
  path.num_vertices = n;
  path.source = 0;
  path.target = static_cast<Vertex>(n - 1);
  for (std::size_t v = 1; v < n; ++v) path.edges.push_back({static_cast<Vertex>(v - 1), static_cast<Vertex>(v)});
  const RunReport report = run_streaming(*alg_union_find(), path, 1);
  return static_cast<double>(report.max_state_bits) / static_cast<double>(n * bits_for(n));
}

// --- info -------------------------------------------------------------------

SamplerStats sampler_experiment(const FiniteDistribution& p, const FiniteDistribution& q, double eps,
                                std::size_t draws, std::uint64_t seed) {
  const RejectionSampler sampler(p, q, eps);
  const GoodSet& good = sampler.good();
  Rng rng(seed);
  std::vector<std::size_t> counts(p.size(), 0);
  SamplerStats stats;
  stats.draws = draws;
  double steps = 0;
  for (std::size_t i = 0; i < draws; ++i) {
    const SamplerOutcome out = sampler.draw(rng);
    steps += static_cast<double>(out.steps);
    if (out.value) {
      ++counts[*out.value];
      ++stats.accepted;
    } else {
      ++stats.bottoms;
    }
  }
  const auto total = static_cast<double>(draws);
  const auto accepted = static_cast<double>(stats.accepted);
  std::vector<double> target(p.size(), 0.0);
  for (std::size_t i : good.members) target[i] = p[i] / good.p_mass;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double observed = accepted > 0 ? static_cast<double>(counts[i]) / accepted : 0.0;
    stats.total_variation += 0.5 * std::abs(observed - target[i]);
  }
  for (std::size_t i : good.members) {
    const double expected = accepted * target[i];
    const double diff = static_cast<double>(counts[i]) - expected;
    stats.chi_square += diff * diff / expected;
  }
  if (good.members.size() > 1) {
    const boost::math::chi_squared law(static_cast<double>(good.members.size() - 1));
    stats.chi_square_critical = boost::math::quantile(boost::math::complement(law, 1e-3));
  }
  const double c = sampler.termination_probability();
  stats.mean_steps = steps / total;
  stats.expected_steps = 1.0 / c;
  stats.steps_sigma = std::sqrt((1.0 - c) / (c * c) / total);
  stats.bottom_rate = static_cast<double>(stats.bottoms) / total;
  stats.bottom_expected = 1.0 - good.p_mass;
  stats.bottom_sigma = binomial_sigma(stats.bottom_expected, draws);
  return stats;
}

std::pair<FiniteDistribution, FiniteDistribution> sampler_test_pair() {
  const std::vector<double> q{1, 1, 1, 1, 1, 1, 1, 0.002};
  return {FiniteDistribution::uniform(8), FiniteDistribution::from_weights(q)};
}

std::vector<std::pair<FiniteDistribution, FiniteDistribution>> collision_test_pairs(std::size_t n,
                                                                                    double delta) {
  const auto u = FiniteDistribution::uniform(n);
  const auto lower = two_level_tilt(n, delta);
  const auto upper = two_level_tilt(n, delta, true);
  const auto spike0 = spike_tilt(n, delta, 0);
  const auto spike1 = spike_tilt(n, delta, 1);
  const auto geo = geometric_tilt(n, delta);
  std::vector<double> flipped(geo.probs().rbegin(), geo.probs().rend());
  const auto geo_rev = FiniteDistribution::from_weights(flipped);
  return {{u, u},           {lower, lower},   {lower, upper}, {spike0, spike0},
          {spike0, spike1}, {geo, geo},       {geo, geo_rev}, {lower, spike0},
          {upper, spike0},  {u, spike0}};
}

FiniteDistribution random_distribution(std::size_t n, Rng& rng) {
  if (rng.bernoulli(0.1)) return FiniteDistribution::point(n, rng.below(n));
  std::vector<double> w(n);
  for (auto& x : w) x = rng.bernoulli(0.3) ? 0.0 : rng.unit();
  w[rng.below(n)] += 0.5;
  return FiniteDistribution::from_weights(w);
}

MonteCarloRate non_injective_rate(std::size_t n, std::size_t r, std::size_t trials, std::uint64_t seed) {
  MonteCarloRate out;
  Rng rng(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    if (is_r_non_injective(sample_uniform_function(n, rng), r)) ++out.hits;
  }
  out.trials = trials;
  out.rate = static_cast<double>(out.hits) / static_cast<double>(trials);
  out.sigma = binomial_sigma(out.rate, trials);
  return out;
}

// --- suites -----------------------------------------------------------------

namespace {

class RowSink {
 public:
  RowSink(std::string suite, const VerifyConfig& config) : suite_(std::move(suite)), config_(config) {}

  /// Passes when measured <= threshold.
  void at_most(std::string check, double measured, double threshold) {
    rows_.push_back({suite_, std::move(check), measured, threshold, measured <= threshold});
  }
  /// Passes when measured >= threshold.
  void at_least(std::string check, double measured, double threshold) {
    rows_.push_back({suite_, std::move(check), measured, threshold, measured >= threshold});
  }
  void custom(std::string check, double measured, double threshold, bool pass) {
    rows_.push_back({suite_, std::move(check), measured, threshold, pass});
  }

  std::size_t trials(std::size_t nominal) const {
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(nominal * config_.trial_scale)));
  }

  /// Per-check seed: FNV-1a of the check name mixed with the master seed.
  std::uint64_t seed(std::string_view check) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : suite_ + "/" + std::string(check)) {
      h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
    }
    return derive_seed(config_.seed, h);
  }

  const VerifyConfig& config() const { return config_; }
  std::vector<CheckRow> take() { return std::move(rows_); }

 private:
  std::string suite_;
  const VerifyConfig& config_;
  std::vector<CheckRow> rows_;
};

void info_suite(RowSink& out) {
  {
    Rng rng(out.seed("mi_chain_rule"));
    double worst = 0;
    for (std::size_t i = 0; i < out.trials(200); ++i) {
      const auto flat = random_distribution(64, rng);
      const JointDistribution joint(8, 8, {flat.probs().begin(), flat.probs().end()});
      const double direct = mutual_information(joint);
      const double chain = entropy(joint.marginal_x()) + entropy(joint.marginal_y()) - entropy(flat);
      worst = std::max(worst, std::abs(direct - chain));
    }
    out.at_most("mi_chain_rule_max_error", worst, 1e-9);
  }
  for (std::size_t n : {4, 16, 64}) {
    double worst_equal = std::numeric_limits<double>::infinity();
    double worst_unequal = 1;
    bool all_applicable = true;
    for (const auto& [x, y] : collision_test_pairs(n, kCollisionDelta)) {
      const CollisionReport r = collision_bounds_check(x, y);
      all_applicable = all_applicable && r.status != CheckStatus::NotApplicable;
      worst_equal = std::min(worst_equal, r.equal / r.equal_bound);
      worst_unequal = std::min(worst_unequal, r.unequal);
    }
    const std::string tag = "_n" + std::to_string(n);
    out.custom("collision_equal_ratio" + tag, worst_equal, 1.0, all_applicable && worst_equal >= 1.0);
    out.custom("collision_unequal_min" + tag, worst_unequal, 0.25, all_applicable && worst_unequal >= 0.25);
  }
  {
    Rng rng(out.seed("mixture"));
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < out.trials(10'000); ++i) {
      const std::size_t n = 2 + rng.below(15);
      const auto x0 = random_distribution(n, rng);
      const auto x1 = random_distribution(n, rng);
      const auto y = random_distribution(2, rng);
      const MixtureReport r = mixture_entropy_check(x0, x1, y, 0.0);
      worst = std::max(worst, r.mixture_entropy - r.bound);
    }
    out.at_most("mixture_entropy_max_excess", worst, 1e-9);
  }
  {
    Rng rng(out.seed("fact31"));
    const std::size_t n = 64;
    const double delta = 1e-3;
    std::size_t applicable = 0;
    std::size_t violated = 0;
    for (std::size_t i = 0; i < out.trials(1000); ++i) {
      std::vector<double> w(n);
      for (auto& x : w) x = rng.unit();
      const auto d = tilt_to_deficit(w, delta * rng.unit());
      std::vector<std::size_t> labels(n);
      std::iota(labels.begin(), labels.end(), std::size_t{0});
      if (rng.bernoulli(0.5)) {
        std::sort(labels.begin(), labels.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
      } else {
        for (std::size_t j = n; j > 1; --j) std::swap(labels[j - 1], labels[rng.below(j)]);
      }
      labels.resize(n / 2 + rng.below(n / 2 + 1));
      const auto r = check_almost_uniform(d, labels, delta);
      if (r.status != CheckStatus::NotApplicable) ++applicable;
      if (r.status == CheckStatus::Violated) ++violated;
    }
    out.at_least("fact31_applicable_cases", static_cast<double>(applicable), 1);
    out.at_most("fact31_violations", static_cast<double>(violated), 0);
  }
  {
    Rng rng(out.seed("good_set"));
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < out.trials(1000); ++i) {
      const std::size_t n = 2 + rng.below(15);
      const auto p = random_distribution(n, rng);
      std::vector<double> wq(n);
      for (auto& x : wq) x = rng.unit() + 1e-3;
      const auto q = FiniteDistribution::from_weights(wq);
      const double eps = 0.05 + 0.9 * rng.unit();
      worst = std::min(worst, good_set(p, q, eps).p_mass - (1.0 - eps));
    }
    out.at_least("good_set_mass_margin", worst, -1e-12);
  }
  {
    const auto [p, q] = sampler_test_pair();
    const SamplerStats s = sampler_experiment(p, q, 0.5, out.trials(100'000), out.seed("sampler"));
    out.at_most("sampler_chi_square", s.chi_square, s.chi_square_critical);
    out.at_most("sampler_total_variation", s.total_variation, 0.02);
    out.at_most("sampler_mean_steps", s.mean_steps, s.expected_steps + 3 * s.steps_sigma);
    out.at_most("sampler_steps_z", std::abs(s.mean_steps - s.expected_steps) / s.steps_sigma, 3);
    out.at_most("sampler_bottom_z", std::abs(s.bottom_rate - s.bottom_expected) / s.bottom_sigma, 3);
    const auto u = FiniteDistribution::uniform(8);
    const SamplerStats same = sampler_experiment(u, u, 0.5, out.trials(10'000), out.seed("sampler_identity"));
    out.at_most("sampler_identity_steps_z", std::abs(same.mean_steps - same.expected_steps) / same.steps_sigma, 3);
  }
  {
    std::size_t violations = 0;
    for (std::size_t n = 2; n <= kCStarExactLimit; ++n) {
      const std::size_t r = c_star_exact(n);
      const double bound = 1.0 / (2.0 * static_cast<double>(n * n));
      if (non_injective_probability(n, r) > bound) ++violations;
      if (r > 1 && non_injective_probability(n, r - 1) <= bound) ++violations;
      if (c_star_certificate(n) < r) ++violations;
    }
    for (std::size_t n = 3; n <= 256; ++n) {
      if (c_star_certificate(n) < c_star_certificate(n - 1)) ++violations;
    }
    out.at_most("cstar_exact_minimal_and_certificate_conservative", static_cast<double>(violations), 0);
  }
  for (std::size_t n : {8, 16, 32}) {
    const std::size_t r = c_star_threshold(n);
    const double bound = 1.0 / (2.0 * static_cast<double>(n * n));
    const std::string check = "cstar_monte_carlo_n" + std::to_string(n);
    const auto mc = non_injective_rate(n, r, out.trials(100'000), out.seed(check));
    out.at_most(check, mc.rate, bound + 3 * binomial_sigma(bound, mc.trials));
  }
}

void reduction_suite(RowSink& out) {
  {
    const std::size_t n = 64;
    const ReductionParams params{n, 2, c_star_threshold(n), 2};
    const auto s = reduction_completeness(params, out.trials(1000), out.seed("completeness"));
    out.at_most("completeness_failures_n64_p2_t2", static_cast<double>(s.failures), 0);
  }
  for (const auto& [p, t] : {std::pair<std::size_t, std::size_t>{1, 20}, {2, 2}}) {
    const std::size_t n = 4096;
    const ReductionParams params{n, p, c_star_threshold(n), t};
    const std::string tag = "_n4096_p" + std::to_string(p) + "_t" + std::to_string(t);
    const auto s = reduction_soundness(params, out.trials(2000), out.seed("soundness" + tag));
    out.at_most("soundness_false_rate" + tag, s.rate, 0.13);
    out.at_most("soundness_mean_intersection" + tag, s.mean_intersection, s.bound + 3 * s.mean_sigma);
  }
  out.at_most("scramble_roundtrip_mismatches",
              static_cast<double>(scramble_roundtrip_mismatches(16, 3, out.trials(200), out.seed("roundtrip"))), 0);
  {
    std::size_t violations = 0;
    for (std::size_t n : {256, 4096, 65536}) {
      for (std::size_t p : {1, 2, 3}) {
        try {
          const auto params = choose_params(n, p, c_star_threshold(n));
          if (!is_feasible(params)) ++violations;
        } catch (const InfeasibleParams&) {
        }
      }
    }
    out.at_most("choose_params_infeasible_results", static_cast<double>(violations), 0);
  }
}

void report_equivalence(RowSink& out, const std::string& tag, const EquivalenceStats& s) {
  out.at_most("distance_mismatches" + tag, static_cast<double>(s.distance_mismatches), 0);
  out.at_most("reach_mismatches" + tag, static_cast<double>(s.reach_mismatches), 0);
  out.at_most("matching_mismatches" + tag, static_cast<double>(s.matching_mismatches), 0);
  out.at_most("short_paths" + tag, static_cast<double>(s.short_paths), 0);
  out.at_most("edge_count_mismatches" + tag, static_cast<double>(s.edge_count_mismatches), 0);
}

void gadgets_suite(RowSink& out) {
  const GadgetBuilders& b = out.config().builders;
  out.at_most("vertex_count_mismatches", static_cast<double>(vertex_count_mismatches(b)), 0);
  EquivalenceStats tiny = gadget_equivalence_exhaustive(1, 2, b);
  tiny.merge(gadget_equivalence_exhaustive(2, 2, b));
  report_equivalence(out, "_exhaustive_k2", tiny);
  report_equivalence(out, "_sampled_k3",
                     gadget_equivalence_sampled(3, 2, out.trials(20'000), out.seed("sampled_k3"), b));
  const auto desk = gadget_equivalence_random(16, 3, out.trials(1000), out.seed("desk"), b);
  report_equivalence(out, "_desk", desk);
  const double yes = static_cast<double>(desk.yes) / static_cast<double>(desk.instances);
  out.custom("desk_yes_fraction", yes, 0.05, yes >= 0.05 && yes <= 0.95);
}

void protocols_suite(RowSink& out) {
  ProtocolStats tiny;
  for (std::size_t p : {1, 2}) {
    tiny.merge(protocol_exhaustive(1, p));
    tiny.merge(protocol_exhaustive(2, p));
  }
  tiny.merge(protocol_exhaustive(3, 1));
  out.at_most("exhaustive_violations", static_cast<double>(tiny.violations()), 0);
  const auto random = protocol_random(16, 3, out.trials(10'000), out.seed("random"));
  out.at_most("random_wrong_answers", static_cast<double>(random.forward_wrong + random.reverse_wrong), 0);
  out.at_most("random_count_violations",
              static_cast<double>(random.forward_count_violations + random.reverse_count_violations), 0);
  {
    Rng rng(out.seed("determinism"));
    const auto inst = sample_random_intersect_sc(16, 3, 0.1, rng);
    const auto a = forward_sc_protocol(inst);
    const auto b = forward_sc_protocol(inst);
    const auto c = reverse_order_sc_protocol(inst);
    const auto d = reverse_order_sc_protocol(inst);
    const bool same = a.transcript.dump() == b.transcript.dump() && c.transcript.dump() == d.transcript.dump();
    out.custom("transcript_determinism", same ? 0 : 1, 0, same);
  }
}

void streaming_suite(RowSink& out) {
  StreamingStats tiny = streaming_exhaustive(1, 2);
  tiny.merge(streaming_exhaustive(2, 2));
  out.at_most("exhaustive_violations", static_cast<double>(tiny.violations()), 0);
  const auto desk = streaming_random(16, 3, out.trials(1000), out.seed("desk"));
  out.at_most("desk_violations", static_cast<double>(desk.violations()), 0);
  for (std::size_t n : {16, 64, 256}) {
    out.at_most("union_find_state_ratio_n" + std::to_string(n), union_find_state_ratio(n), 1.0);
  }
  {
    const GraphStream g = build_distance_gadget(identity_intersect_sc(4, 2));
    const RunReport r = run_streaming(*alg_bidirectional_bfs(4), g, 16);
    out.custom("bidir_passes_identity_p1", static_cast<double>(r.passes_used), 2,
               r.passes_used == 2 && r.answer == true);
  }
}

std::vector<CheckRow> run_one(Suite suite, const VerifyConfig& config) {
  RowSink out(std::string(suite_name(suite)), config);
  try {
    switch (suite) {
      case Suite::Info:
        info_suite(out);
        break;
      case Suite::Reduction:
        reduction_suite(out);
        break;
      case Suite::Gadgets:
        gadgets_suite(out);
        break;
      case Suite::Protocols:
        protocols_suite(out);
        break;
      case Suite::Streaming:
        streaming_suite(out);
        break;
      case Suite::All:
        break;
    }
  } catch (const std::exception& e) {
    std::string what = e.what();
    std::replace_if(what.begin(), what.end(), [](char c) { return c == ',' || c == '"' || c == '\n'; }, ' ');
    out.custom("error " + what, 0, 0, false);
  }
  return out.take();
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::Info, Suite::Reduction, Suite::Gadgets, Suite::Protocols, Suite::Streaming, Suite::All}) {
    if (suite_name(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view suite_name(Suite suite) {
  switch (suite) {
    case Suite::Info:
      return "info";
    case Suite::Reduction:
      return "reduction";
    case Suite::Gadgets:
      return "gadgets";
    case Suite::Protocols:
      return "protocols";
    case Suite::Streaming:
      return "streaming";
    case Suite::All:
      return "all";
  }
  return "?";
}

std::vector<CheckRow> run_suite(Suite suite, const VerifyConfig& config) {
  if (suite != Suite::All) return run_one(suite, config);
  std::vector<std::future<std::vector<CheckRow>>> jobs;
  for (Suite s : {Suite::Info, Suite::Reduction, Suite::Gadgets, Suite::Protocols, Suite::Streaming}) {
    jobs.push_back(std::async(std::launch::async, run_one, s, std::cref(config)));
  }
  std::vector<CheckRow> rows;
  for (auto& job : jobs) {
    auto part = job.get();
    rows.insert(rows.end(), part.begin(), part.end());
  }
  return rows;
}

std::string rows_to_csv(const std::vector<CheckRow>& rows) {
  std::string csv = "suite,check,measured,threshold,pass\n";
  char buf[64];
  for (const CheckRow& row : rows) {
    csv += row.suite;
    csv += ',';
    csv += row.check;
    std::snprintf(buf, sizeof buf, ",%.10g", row.measured);
    csv += buf;
    std::snprintf(buf, sizeof buf, ",%.10g", row.threshold);
    csv += buf;
    csv += row.pass ? ",1\n" : ",0\n";
  }
  return csv;
}

bool all_pass(const std::vector<CheckRow>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const CheckRow& row) { return row.pass; });
}

}  // namespace chase

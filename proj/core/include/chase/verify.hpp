#pragma once

// Seeded experiments behind the `verify` command, and the suite runner that
// turns them into CSV rows.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chase/game.hpp"
#include "chase/graph_stream.hpp"
#include "chase/info.hpp"
#include "chase/reduction.hpp"

namespace chase {

// --- enumeration ------------------------------------------------------------

/// Calls `visit` on every IntersectScInstance with the given n and layers
/// per side: (2^{n^2})^{2 layers} instances.
void for_each_intersect_sc(std::size_t n, std::size_t layers,
                           const std::function<void(const IntersectScInstance&)>& visit);

/// Random desk instance: n in [1, max_n], layers in [2, max_layers], with
/// membership density chosen around 1/n so both answers occur.
IntersectScInstance sample_desk_instance(std::size_t max_n, std::size_t max_layers, Rng& rng);

// --- reduction --------------------------------------------------------------

/// An OR instance with answer 1 and no r-non-injective table: one item has
/// its right chase forced onto the left one.
OrLpceInstance sample_yes_or_lpce(std::size_t n, std::size_t p, std::size_t r, std::size_t t, Rng& rng);

/// Uniform OR instance conditioned on answer 0 (resampled until it is).
OrLpceInstance sample_no_or_lpce(std::size_t n, std::size_t p, std::size_t r, std::size_t t, Rng& rng);

struct CompletenessStats {
  std::size_t trials = 0;
  std::size_t failures = 0;
};

/// Feasibility is not required: completeness holds for every t.
CompletenessStats reduction_completeness(const ReductionParams& params, std::size_t trials,
                                         std::uint64_t seed);

struct SoundnessStats {
  std::size_t trials = 0;
  std::size_t false_intersections = 0;
  double rate = 0;
  double rate_sigma = 0;
  double mean_intersection = 0;
  double mean_sigma = 0;  ///< standard error of the mean
  double bound = 0;       ///< t^{2p} r^{p-1} / n
};

/// Requires feasible parameters.
SoundnessStats reduction_soundness(const ReductionParams& params, std::size_t trials, std::uint64_t seed);

/// Tables that differ after scrambling with a family and then its inverse.
std::size_t scramble_roundtrip_mismatches(std::size_t n, std::size_t p, std::size_t trials,
                                          std::uint64_t seed);

// --- gadgets ----------------------------------------------------------------

using GadgetBuilder = std::function<GraphStream(const IntersectScInstance&)>;

struct GadgetBuilders {
  GadgetBuilder distance;
  GadgetBuilder reachability;
  GadgetBuilder matching;

  static GadgetBuilders standard();
};

struct EquivalenceStats {
  std::size_t instances = 0;
  std::size_t yes = 0;
  std::size_t distance_mismatches = 0;
  std::size_t reach_mismatches = 0;
  std::size_t matching_mismatches = 0;
  /// Connected distance gadgets with dist(u, v) < 2p+2.
  std::size_t short_paths = 0;
  /// Distance gadgets whose edge count is not the total image multiplicity.
  std::size_t edge_count_mismatches = 0;

  std::size_t mismatches() const noexcept {
    return distance_mismatches + reach_mismatches + matching_mismatches;
  }
  void merge(const EquivalenceStats& other);
};

void check_gadgets(const IntersectScInstance& inst, const GadgetBuilders& builders, EquivalenceStats& stats);

EquivalenceStats gadget_equivalence_exhaustive(std::size_t k, std::size_t layers,
                                               const GadgetBuilders& builders);
/// `count` uniform instances with exactly k and `layers`.
EquivalenceStats gadget_equivalence_sampled(std::size_t k, std::size_t layers, std::size_t count,
                                            std::uint64_t seed, const GadgetBuilders& builders);
/// `count` desk instances with k <= max_k and gadget p <= max_p.
EquivalenceStats gadget_equivalence_random(std::size_t max_k, std::size_t max_p, std::size_t count,
                                           std::uint64_t seed, const GadgetBuilders& builders);

/// (p, k) pairs in {1,2,3} x {2,4,8} whose vertex counts miss the closed forms.
std::size_t vertex_count_mismatches(const GadgetBuilders& builders);

// --- protocols --------------------------------------------------------------

struct ProtocolStats {
  std::size_t instances = 0;
  std::size_t forward_wrong = 0;
  std::size_t reverse_wrong = 0;
  /// Runs whose rounds or bit totals differ from p rounds / 2pn set bits
  /// (forward) or 1 round / 2pn bits (reverse).
  std::size_t forward_count_violations = 0;
  std::size_t reverse_count_violations = 0;

  std::size_t violations() const noexcept {
    return forward_wrong + reverse_wrong + forward_count_violations + reverse_count_violations;
  }
  void merge(const ProtocolStats& other);
};

void check_protocols(const IntersectScInstance& inst, ProtocolStats& stats);
ProtocolStats protocol_exhaustive(std::size_t n, std::size_t p);
/// Layers uniform in [1, max_p], density 1.5/n.
ProtocolStats protocol_random(std::size_t n, std::size_t max_p, std::size_t count, std::uint64_t seed);

// --- streaming --------------------------------------------------------------

struct StreamingStats {
  std::size_t instances = 0;
  std::size_t bidir_wrong = 0;
  /// Yes instances where bidirectional BFS did not use exactly ceil(D/2) passes.
  std::size_t bidir_pass_violations = 0;
  std::size_t forward_wrong = 0;
  std::size_t union_find_wrong = 0;
  std::size_t frontier_wrong = 0;
  /// Oracle answers that changed when the stream was reversed.
  std::size_t reversal_changes = 0;
  std::size_t max_forward_passes = 0;
  std::size_t max_frontier_passes = 0;

  std::size_t violations() const noexcept {
    return bidir_wrong + bidir_pass_violations + forward_wrong + union_find_wrong + frontier_wrong +
           reversal_changes;
  }
  void merge(const StreamingStats& other);
};

void check_streaming(const IntersectScInstance& inst, StreamingStats& stats);
StreamingStats streaming_exhaustive(std::size_t k, std::size_t layers);
StreamingStats streaming_random(std::size_t max_k, std::size_t max_p, std::size_t count, std::uint64_t seed);

/// Boundary state of union-find on an n-vertex path, over n * ceil(log2 n).
double union_find_state_ratio(std::size_t n);

// --- info -------------------------------------------------------------------

struct SamplerStats {
  std::size_t draws = 0;
  std::size_t accepted = 0;
  std::size_t bottoms = 0;
  double chi_square = 0;
  double chi_square_critical = 0;  ///< upper 1e-3 quantile
  double total_variation = 0;      ///< accepted law vs P conditioned on Good
  double mean_steps = 0;
  double steps_sigma = 0;          ///< standard error under the geometric law
  double expected_steps = 0;       ///< 2^{(a+1)/eps}
  double bottom_rate = 0;
  double bottom_expected = 0;      ///< 1 - Pr_P[Good]
  double bottom_sigma = 0;
};

SamplerStats sampler_experiment(const FiniteDistribution& p, const FiniteDistribution& q, double eps,
                                std::size_t draws, std::uint64_t seed);

/// The n = 8 pair used by the sampler checks: P uniform, Q nearly uniform
/// with one atom too light to be Good at eps = 1/2.
std::pair<FiniteDistribution, FiniteDistribution> sampler_test_pair();

/// Entropy-deficit-delta pairs built from two-level, spike and geometric
/// tilts (and uniform), including adversarial mismatched pairs.
std::vector<std::pair<FiniteDistribution, FiniteDistribution>> collision_test_pairs(std::size_t n,
                                                                                    double delta);

/// Uniform weights on a uniformly random support size, occasionally a point mass.
FiniteDistribution random_distribution(std::size_t n, Rng& rng);

struct MonteCarloRate {
  std::size_t trials = 0;
  std::size_t hits = 0;
  double rate = 0;
  double sigma = 0;
};

/// Uniform functions [n] -> [n] that are r-non-injective.
MonteCarloRate non_injective_rate(std::size_t n, std::size_t r, std::size_t trials, std::uint64_t seed);

// --- suites -----------------------------------------------------------------

enum class Suite { Info, Reduction, Gadgets, Protocols, Streaming, All };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);

struct CheckRow {
  std::string suite;
  std::string check;
  double measured = 0;
  double threshold = 0;
  bool pass = false;
};

struct VerifyConfig {
  std::uint64_t seed = 7;
  /// Scales every Monte Carlo loop (1.0 = default desk sizes).
  double trial_scale = 1.0;
  GadgetBuilders builders = GadgetBuilders::standard();
};

/// Rows in a fixed order; `All` runs the five suites concurrently.
std::vector<CheckRow> run_suite(Suite suite, const VerifyConfig& config);

/// Header "suite,check,measured,threshold,pass", LF endings.
std::string rows_to_csv(const std::vector<CheckRow>& rows);

bool all_pass(const std::vector<CheckRow>& rows);

}  // namespace chase

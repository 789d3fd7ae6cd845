#pragma once

// Scramble-and-overlay reduction from OR_t(LPCE_{n,p,r}) to
// INTERSECT(SC_{n,p}).
//
// Item j's functions are conjugated by fresh random permutations,
//   f'_i = pi_i . f_i . pi_{i+1}^{-1}   (i < p),   f'_p = pi_p . f_p,
// (rho on the right side, with pi_1 = rho_1 so final values are relabeled
// identically), then stacked: f*_i(x) = { f'_{i,j}(x) : j }.
// A yes-item always survives; for a no-instance the expected size of the
// final intersection is at most t^{2p} r^{p-1} / n.

#include <cstddef>
#include <functional>
#include <variant>
#include <vector>

#include "chase/game.hpp"
#include "chase/protocol.hpp"
#include "chase/rng.hpp"

namespace chase {

/// A bijection of [0, n) with its inverse.
class Permutation {
 public:
  explicit Permutation(std::vector<Index> forward);

  static Permutation identity(std::size_t n);
  /// Fisher-Yates.
  static Permutation sample(std::size_t n, Rng& rng);

  std::size_t n() const noexcept { return forward_.size(); }
  Index operator()(Index x) const { return forward_[x]; }
  Index inverse(Index y) const { return inverse_[y]; }
  Permutation inverted() const { return Permutation(inverse_); }

  bool operator==(const Permutation& other) const { return forward_ == other.forward_; }

 private:
  std::vector<Index> forward_;
  std::vector<Index> inverse_;
};

/// pi[j][i] and rho[j][i] for item j, layer i (0-based; layer 0 is the
/// outermost function). Invariant: pi[j][0] == rho[j][0].
class PermutationFamily {
 public:
  PermutationFamily(std::vector<std::vector<Permutation>> pi,
                    std::vector<std::vector<Permutation>> rho);

  static PermutationFamily identity(std::size_t n, std::size_t p, std::size_t t);
  /// Independent Fisher-Yates permutations; rho[j][0] is a copy of pi[j][0].
  static PermutationFamily sample(std::size_t n, std::size_t p, std::size_t t, Rng& rng);

  std::size_t t() const noexcept { return pi_.size(); }
  std::size_t p() const noexcept { return pi_.front().size(); }
  const Permutation& pi(std::size_t j, std::size_t i) const { return pi_.at(j).at(i); }
  const Permutation& rho(std::size_t j, std::size_t i) const { return rho_.at(j).at(i); }

  /// Family of inverse permutations; scrambling with it undoes a scramble.
  PermutationFamily inverted() const;

 private:
  std::vector<std::vector<Permutation>> pi_;
  std::vector<std::vector<Permutation>> rho_;
};

struct ReductionParams {
  std::size_t n = 0;
  std::size_t p = 0;
  std::size_t r = 0;
  std::size_t t = 0;
};

/// Exact integer test of t^{2p} r^{p-1} <= n / 10.
bool is_feasible(const ReductionParams& params);

/// Expected-intersection bound t^{2p} r^{p-1} / n.
double intersection_bound(const ReductionParams& params);

/// t = floor(n^{1/(2p)} / sqrt(10 r)), i.e. the largest t with
/// (10 r t^2)^p <= n, computed without floating point. Throws
/// InfeasibleParams when t < 1.
ReductionParams choose_params(std::size_t n, std::size_t p, std::size_t r);

/// Throws InfeasibleParams unless `params` passes is_feasible().
void require_feasible(const ReductionParams& params);

struct ScrambledItem {
  PcInstance left;
  PcInstance right;
};

/// Conjugates item j of a family; a PcInstance-level operation, so it also
/// undoes itself when given the inverted family.
PcInstance scramble_side(const PcInstance& side, std::size_t j, const PermutationFamily& perms,
                         bool right_side);
ScrambledItem scramble(const LpceInstance& item, std::size_t j, const PermutationFamily& perms);

/// Stacks the scrambled items layer by layer.
IntersectScInstance overlay(const std::vector<ScrambledItem>& items);

/// Outcome of the 2p-bit pre-round: some table was r-non-injective, so the
/// answer is 1 without running the reduction.
struct ShortCircuit {
  static constexpr bool answer = true;
  /// Diagnostic: an item's chases were equal as well.
  bool equality_also_holds = false;
};

using ReductionOutput = std::variant<IntersectScInstance, ShortCircuit>;

struct ReduceOptions {
  /// Soundness needs t^{2p} r^{p-1} <= n/10; completeness does not.
  bool require_feasible = true;
};

ReductionOutput reduce_or_lpce(const OrLpceInstance& inst, Rng& rng, ReduceOptions options = {});

/// Same as reduce_or_lpce with the permutation family supplied by the caller.
IntersectScInstance scramble_and_overlay(const OrLpceInstance& inst, const PermutationFamily& perms);

using IntersectSolver = std::function<ProtocolResult(const IntersectScInstance&)>;

struct EndToEndResult {
  bool answer = false;
  bool short_circuited = false;
  /// Solver transcript bits plus the 2p-bit non-injectivity round.
  std::size_t communication_bits = 0;
};

EndToEndResult end_to_end_solve(const OrLpceInstance& inst, const IntersectSolver& solver,
                                Rng& rng, ReduceOptions options = {});

}  // namespace chase

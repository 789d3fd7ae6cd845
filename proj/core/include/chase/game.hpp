#pragma once

// Pointer-chasing and set-chasing communication games.
//
// Elements of [n] are 0-based: the distinguished start element of every
// chase is index 0. Player i (1-based) holds funcs[i-1]; evaluation applies
// funcs[p-1] first and funcs[0] last.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "chase/rng.hpp"

namespace chase {

using Index = std::uint32_t;

/// Ascending, duplicate-free list of elements of [0, n).
using IndexSet = std::vector<Index>;

/// Total map [n] -> [n].
class FunctionTable {
 public:
  explicit FunctionTable(std::vector<Index> image);

  static FunctionTable identity(std::size_t n);
  static FunctionTable constant(std::size_t n, Index value);

  std::size_t n() const noexcept { return image_.size(); }
  Index operator()(Index x) const { return image_[x]; }
  std::span<const Index> image() const noexcept { return image_; }

  bool operator==(const FunctionTable&) const = default;

 private:
  std::vector<Index> image_;
};

/// Total map [n] -> subsets of [n]. Image sets may be empty; they are stored
/// in canonical (sorted, deduplicated) form.
class SetFunctionTable {
 public:
  explicit SetFunctionTable(std::vector<IndexSet> image);

  static SetFunctionTable identity(std::size_t n);
  /// x -> {f(x)}.
  static SetFunctionTable singleton_lift(const FunctionTable& f);

  std::size_t n() const noexcept { return image_.size(); }
  const IndexSet& operator()(Index x) const { return image_[x]; }
  std::span<const IndexSet> image() const noexcept { return image_; }

  /// Sum of image-set sizes.
  std::size_t multiplicity() const noexcept;

  bool operator==(const SetFunctionTable&) const = default;

 private:
  std::vector<IndexSet> image_;
};

class PcInstance {
 public:
  explicit PcInstance(std::vector<FunctionTable> funcs);

  std::size_t n() const noexcept { return funcs_.front().n(); }
  std::size_t p() const noexcept { return funcs_.size(); }
  std::span<const FunctionTable> funcs() const noexcept { return funcs_; }
  const FunctionTable& func(std::size_t i) const { return funcs_.at(i); }

  bool operator==(const PcInstance&) const = default;

 private:
  std::vector<FunctionTable> funcs_;
};

class ScInstance {
 public:
  explicit ScInstance(std::vector<SetFunctionTable> funcs);

  std::size_t n() const noexcept { return funcs_.front().n(); }
  std::size_t p() const noexcept { return funcs_.size(); }
  std::span<const SetFunctionTable> funcs() const noexcept { return funcs_; }
  const SetFunctionTable& func(std::size_t i) const { return funcs_.at(i); }

  bool operator==(const ScInstance&) const = default;

 private:
  std::vector<SetFunctionTable> funcs_;
};

/// EQUAL(PC) pair with the non-injectivity escape hatch at threshold r.
struct LpceInstance {
  LpceInstance(PcInstance left, PcInstance right, std::size_t r);

  PcInstance left;
  PcInstance right;
  std::size_t r;

  std::size_t n() const noexcept { return left.n(); }
  std::size_t p() const noexcept { return left.p(); }

  bool operator==(const LpceInstance&) const = default;
};

class OrLpceInstance {
 public:
  explicit OrLpceInstance(std::vector<LpceInstance> items);

  std::size_t n() const noexcept { return items_.front().n(); }
  std::size_t p() const noexcept { return items_.front().p(); }
  std::size_t r() const noexcept { return items_.front().r; }
  std::size_t t() const noexcept { return items_.size(); }
  std::span<const LpceInstance> items() const noexcept { return items_; }
  const LpceInstance& item(std::size_t j) const { return items_.at(j); }

  bool operator==(const OrLpceInstance&) const = default;

 private:
  std::vector<LpceInstance> items_;
};

struct IntersectScInstance {
  IntersectScInstance(ScInstance left, ScInstance right);

  ScInstance left;
  ScInstance right;

  std::size_t n() const noexcept { return left.n(); }
  std::size_t p() const noexcept { return left.p(); }

  bool operator==(const IntersectScInstance&) const = default;
};

// --- evaluation -------------------------------------------------------------

/// Union of f(x) over x in s. Throws DomainError if s has an element >= n.
IndexSet vec_apply(const SetFunctionTable& f, const IndexSet& s);

Index eval_pc(const PcInstance& inst);
IndexSet eval_sc(const ScInstance& inst);

/// Largest preimage class size of f.
std::size_t max_preimage_count(const FunctionTable& f);

/// True iff some value has at least r preimages.
bool is_r_non_injective(const FunctionTable& f, std::size_t r);

/// True iff any of the 2p tables of the instance is r-non-injective.
bool has_non_injective_table(const LpceInstance& inst);

bool eval_equal_pc(const PcInstance& left, const PcInstance& right);
bool eval_lpce(const LpceInstance& inst);
bool eval_intersect_sc(const IntersectScInstance& inst);
bool eval_or_lpce(const OrLpceInstance& inst);

/// Intersection of two ascending sets.
IndexSet intersect_sets(const IndexSet& a, const IndexSet& b);

// --- samplers ---------------------------------------------------------------
// All entries independent uniform on [0, n); consumption order is table by
// table, entry by entry, left before right, item by item.

FunctionTable sample_uniform_function(std::size_t n, Rng& rng);
PcInstance sample_uniform_pc(std::size_t n, std::size_t p, Rng& rng);
LpceInstance sample_uniform_lpce(std::size_t n, std::size_t p, std::size_t r, Rng& rng);
OrLpceInstance sample_uniform_or_lpce(std::size_t n, std::size_t p, std::size_t r,
                                      std::size_t t, Rng& rng);

/// Each membership y in f(x) is an independent Bernoulli(density) draw.
SetFunctionTable sample_random_set_function(std::size_t n, double density, Rng& rng);
ScInstance sample_random_sc(std::size_t n, std::size_t p, double density, Rng& rng);
IntersectScInstance sample_random_intersect_sc(std::size_t n, std::size_t p, double density,
                                               Rng& rng);

/// All p tables x -> {x}; both chases stay at {0}.
IntersectScInstance identity_intersect_sc(std::size_t n, std::size_t p);

}  // namespace chase

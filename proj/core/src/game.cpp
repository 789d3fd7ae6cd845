#include "chase/game.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "chase/errors.hpp"

namespace chase {
namespace {

void require(bool condition, const char* message) {
  if (!condition) {
    throw DomainError(message);
  }
}

IndexSet canonical(IndexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// Membership bitmap to ascending set.
IndexSet collect(const std::vector<char>& member) {
  IndexSet out;
  for (std::size_t y = 0; y < member.size(); ++y) {
    if (member[y]) {
      out.push_back(static_cast<Index>(y));
    }
  }
  return out;
}

}  // namespace

FunctionTable::FunctionTable(std::vector<Index> image) : image_(std::move(image)) {
  require(!image_.empty(), "FunctionTable: n must be positive");
  for (Index y : image_) {
    require(y < image_.size(), "FunctionTable: image entry out of range");
  }
}

FunctionTable FunctionTable::identity(std::size_t n) {
  std::vector<Index> image(n);
  for (std::size_t x = 0; x < n; ++x) {
    image[x] = static_cast<Index>(x);
  }
  return FunctionTable(std::move(image));
}

FunctionTable FunctionTable::constant(std::size_t n, Index value) {
  return FunctionTable(std::vector<Index>(n, value));
}

SetFunctionTable::SetFunctionTable(std::vector<IndexSet> image) : image_(std::move(image)) {
  require(!image_.empty(), "SetFunctionTable: n must be positive");
  for (auto& s : image_) {
    s = canonical(std::move(s));
    require(s.empty() || s.back() < image_.size(), "SetFunctionTable: element out of range");
  }
}

SetFunctionTable SetFunctionTable::identity(std::size_t n) {
  std::vector<IndexSet> image(n);
  for (std::size_t x = 0; x < n; ++x) {
    image[x] = {static_cast<Index>(x)};
  }
  return SetFunctionTable(std::move(image));
}

SetFunctionTable SetFunctionTable::singleton_lift(const FunctionTable& f) {
  std::vector<IndexSet> image(f.n());
  for (std::size_t x = 0; x < f.n(); ++x) {
    image[x] = {f(static_cast<Index>(x))};
  }
  return SetFunctionTable(std::move(image));
}

std::size_t SetFunctionTable::multiplicity() const noexcept {
  std::size_t total = 0;
  for (const auto& s : image_) {
    total += s.size();
  }
  return total;
}

PcInstance::PcInstance(std::vector<FunctionTable> funcs) : funcs_(std::move(funcs)) {
  require(!funcs_.empty(), "PcInstance: p must be positive");
  for (const auto& f : funcs_) {
    require(f.n() == funcs_.front().n(), "PcInstance: tables disagree on n");
  }
}

ScInstance::ScInstance(std::vector<SetFunctionTable> funcs) : funcs_(std::move(funcs)) {
  require(!funcs_.empty(), "ScInstance: p must be positive");
  for (const auto& f : funcs_) {
    require(f.n() == funcs_.front().n(), "ScInstance: tables disagree on n");
  }
}

LpceInstance::LpceInstance(PcInstance l, PcInstance rr, std::size_t threshold)
    : left(std::move(l)), right(std::move(rr)), r(threshold) {
  require(left.n() == right.n() && left.p() == right.p(), "LpceInstance: sides disagree on n or p");
  require(r >= 1, "LpceInstance: r must be positive");
}

OrLpceInstance::OrLpceInstance(std::vector<LpceInstance> items) : items_(std::move(items)) {
  require(!items_.empty(), "OrLpceInstance: t must be positive");
  for (const auto& it : items_) {
    require(it.n() == n() && it.p() == p() && it.r == r(), "OrLpceInstance: items disagree on n, p or r");
  }
}

IntersectScInstance::IntersectScInstance(ScInstance l, ScInstance rr)
    : left(std::move(l)), right(std::move(rr)) {
  require(left.n() == right.n() && left.p() == right.p(),
          "IntersectScInstance: sides disagree on n or p");
}

IndexSet vec_apply(const SetFunctionTable& f, const IndexSet& s) {
  std::vector<char> member(f.n(), 0);
  for (Index x : s) {
    if (x >= f.n()) {
      throw DomainError("vec_apply: element " + std::to_string(x) + " out of range");
    }
    for (Index y : f(x)) {
      member[y] = 1;
    }
  }
  return collect(member);
}

Index eval_pc(const PcInstance& inst) {
  Index x = 0;
  for (std::size_t i = inst.p(); i-- > 0;) {
    x = inst.func(i)(x);
  }
  return x;
}

IndexSet eval_sc(const ScInstance& inst) {
  IndexSet s{0};
  for (std::size_t i = inst.p(); i-- > 0;) {
    s = vec_apply(inst.func(i), s);
  }
  return s;
}

std::size_t max_preimage_count(const FunctionTable& f) {
  std::vector<std::size_t> count(f.n(), 0);
  std::size_t best = 0;
  for (Index y : f.image()) {
    best = std::max(best, ++count[y]);
  }
  return best;
}

bool is_r_non_injective(const FunctionTable& f, std::size_t r) {
  require(r >= 1, "is_r_non_injective: r must be positive");
  return max_preimage_count(f) >= r;
}

bool has_non_injective_table(const LpceInstance& inst) {
  const auto bad = [&](const FunctionTable& f) { return is_r_non_injective(f, inst.r); };
  return std::any_of(inst.left.funcs().begin(), inst.left.funcs().end(), bad) ||
         std::any_of(inst.right.funcs().begin(), inst.right.funcs().end(), bad);
}

bool eval_equal_pc(const PcInstance& left, const PcInstance& right) {
  require(left.n() == right.n() && left.p() == right.p(), "eval_equal_pc: mismatched n or p");
  return eval_pc(left) == eval_pc(right);
}

bool eval_lpce(const LpceInstance& inst) {
  return has_non_injective_table(inst) || eval_equal_pc(inst.left, inst.right);
}

IndexSet intersect_sets(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool eval_intersect_sc(const IntersectScInstance& inst) {
  return !intersect_sets(eval_sc(inst.left), eval_sc(inst.right)).empty();
}

bool eval_or_lpce(const OrLpceInstance& inst) {
  return std::any_of(inst.items().begin(), inst.items().end(),
                     [](const LpceInstance& it) { return eval_lpce(it); });
}

FunctionTable sample_uniform_function(std::size_t n, Rng& rng) {
  require(n >= 1, "sample_uniform_function: n must be positive");
  std::vector<Index> image(n);
  for (auto& y : image) {
    y = static_cast<Index>(rng.below(n));
  }
  return FunctionTable(std::move(image));
}

PcInstance sample_uniform_pc(std::size_t n, std::size_t p, Rng& rng) {
  require(p >= 1, "sample_uniform_pc: p must be positive");
  std::vector<FunctionTable> funcs;
  funcs.reserve(p);
  for (std::size_t i = 0; i < p; ++i) {
    funcs.push_back(sample_uniform_function(n, rng));
  }
  return PcInstance(std::move(funcs));
}

LpceInstance sample_uniform_lpce(std::size_t n, std::size_t p, std::size_t r, Rng& rng) {
  PcInstance left = sample_uniform_pc(n, p, rng);
  PcInstance right = sample_uniform_pc(n, p, rng);
  return LpceInstance(std::move(left), std::move(right), r);
}

OrLpceInstance sample_uniform_or_lpce(std::size_t n, std::size_t p, std::size_t r, std::size_t t,
                                      Rng& rng) {
  require(t >= 1, "sample_uniform_or_lpce: t must be positive");
  std::vector<LpceInstance> items;
  items.reserve(t);
  for (std::size_t j = 0; j < t; ++j) {
    items.push_back(sample_uniform_lpce(n, p, r, rng));
  }
  return OrLpceInstance(std::move(items));
}

SetFunctionTable sample_random_set_function(std::size_t n, double density, Rng& rng) {
  require(n >= 1, "sample_random_set_function: n must be positive");
  std::vector<IndexSet> image(n);
  for (auto& s : image) {
    for (std::size_t y = 0; y < n; ++y) {
      if (rng.bernoulli(density)) {
        s.push_back(static_cast<Index>(y));
      }
    }
  }
  return SetFunctionTable(std::move(image));
}

ScInstance sample_random_sc(std::size_t n, std::size_t p, double density, Rng& rng) {
  require(p >= 1, "sample_random_sc: p must be positive");
  std::vector<SetFunctionTable> funcs;
  funcs.reserve(p);
  for (std::size_t i = 0; i < p; ++i) {
    funcs.push_back(sample_random_set_function(n, density, rng));
  }
  return ScInstance(std::move(funcs));
}

IntersectScInstance sample_random_intersect_sc(std::size_t n, std::size_t p, double density,
                                               Rng& rng) {
  ScInstance left = sample_random_sc(n, p, density, rng);
  ScInstance right = sample_random_sc(n, p, density, rng);
  return IntersectScInstance(std::move(left), std::move(right));
}

IntersectScInstance identity_intersect_sc(std::size_t n, std::size_t p) {
  std::vector<SetFunctionTable> funcs(p, SetFunctionTable::identity(n));
  return IntersectScInstance(ScInstance(funcs), ScInstance(funcs));
}

}  // namespace chase

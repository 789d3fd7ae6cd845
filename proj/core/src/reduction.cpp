#include "chase/reduction.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <string>

#include "chase/errors.hpp"

namespace chase {
namespace {

using BigInt = boost::multiprecision::cpp_int;

BigInt power(std::size_t base, std::size_t exponent) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

std::string describe(const ReductionParams& p) {
  return "n=" + std::to_string(p.n) + " p=" + std::to_string(p.p) + " r=" + std::to_string(p.r) +
         " t=" + std::to_string(p.t);
}

}  // namespace

Permutation::Permutation(std::vector<Index> forward)
    : forward_(std::move(forward)), inverse_(forward_.size(), 0) {
  std::vector<char> hit(forward_.size(), 0);
  for (std::size_t x = 0; x < forward_.size(); ++x) {
    const Index y = forward_[x];
    if (y >= forward_.size() || hit[y]) {
      throw DomainError("Permutation: not a bijection of [0, n)");
    }
    hit[y] = 1;
    inverse_[y] = static_cast<Index>(x);
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Index> v(n);
  std::iota(v.begin(), v.end(), Index{0});
  return Permutation(std::move(v));
}

Permutation Permutation::sample(std::size_t n, Rng& rng) {
  std::vector<Index> v(n);
  std::iota(v.begin(), v.end(), Index{0});
  for (std::size_t i = n; i > 1; --i) {
    std::swap(v[i - 1], v[rng.below(i)]);
  }
  return Permutation(std::move(v));
}

PermutationFamily::PermutationFamily(std::vector<std::vector<Permutation>> pi,
                                     std::vector<std::vector<Permutation>> rho)
    : pi_(std::move(pi)), rho_(std::move(rho)) {
  if (pi_.empty() || pi_.size() != rho_.size()) {
    throw DomainError("PermutationFamily: pi and rho need the same positive t");
  }
  for (std::size_t j = 0; j < pi_.size(); ++j) {
    if (pi_[j].empty() || pi_[j].size() != pi_.front().size() || rho_[j].size() != pi_[j].size()) {
      throw DomainError("PermutationFamily: ragged p");
    }
    if (!(pi_[j][0] == rho_[j][0])) {
      throw DomainError("PermutationFamily: pi[j][0] must equal rho[j][0]");
    }
  }
}

PermutationFamily PermutationFamily::identity(std::size_t n, std::size_t p, std::size_t t) {
  std::vector<std::vector<Permutation>> id(t, std::vector<Permutation>(p, Permutation::identity(n)));
  return PermutationFamily(id, id);
}

PermutationFamily PermutationFamily::sample(std::size_t n, std::size_t p, std::size_t t, Rng& rng) {
  std::vector<std::vector<Permutation>> pi(t);
  std::vector<std::vector<Permutation>> rho(t);
  for (std::size_t j = 0; j < t; ++j) {
    for (std::size_t i = 0; i < p; ++i) pi[j].push_back(Permutation::sample(n, rng));
    rho[j].push_back(pi[j][0]);
    for (std::size_t i = 1; i < p; ++i) rho[j].push_back(Permutation::sample(n, rng));
  }
  return PermutationFamily(std::move(pi), std::move(rho));
}

PermutationFamily PermutationFamily::inverted() const {
  auto invert_all = [](const std::vector<std::vector<Permutation>>& family) {
    std::vector<std::vector<Permutation>> out(family.size());
    for (std::size_t j = 0; j < family.size(); ++j) {
      for (const auto& perm : family[j]) out[j].push_back(perm.inverted());
    }
    return out;
  };
  return PermutationFamily(invert_all(pi_), invert_all(rho_));
}

bool is_feasible(const ReductionParams& params) {
  if (params.n == 0 || params.p == 0 || params.r == 0 || params.t == 0) return false;
  // t^{2p} r^{p-1} <= n/10  <=>  10 t^{2p} r^{p-1} <= n
  const BigInt lhs = 10 * power(params.t, 2 * params.p) * power(params.r, params.p - 1);
  return lhs <= BigInt(params.n);
}

double intersection_bound(const ReductionParams& params) {
  const BigInt num = power(params.t, 2 * params.p) * power(params.r, params.p - 1);
  return num.convert_to<double>() / static_cast<double>(params.n);
}

ReductionParams choose_params(std::size_t n, std::size_t p, std::size_t r) {
  if (n == 0 || p == 0 || r == 0) {
    throw DomainError("choose_params: n, p and r must be positive");
  }
  const BigInt target(n);
  const auto fits = [&](std::size_t t) {
    const BigInt base = BigInt(10) * r * t * t;
    return boost::multiprecision::pow(base, static_cast<unsigned>(p)) <= target;
  };
  std::size_t lo = 0;  // fits(lo) holds
  std::size_t hi = 1;
  while (fits(hi)) hi *= 2;
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    (fits(mid) ? lo : hi) = mid;
  }
  ReductionParams params{n, p, r, lo};
  if (params.t < 1) {
    throw InfeasibleParams("choose_params: t = floor(n^{1/(2p)} / sqrt(10 r)) is 0 for " +
                           describe(params));
  }
  require_feasible(params);
  return params;
}

void require_feasible(const ReductionParams& params) {
  if (!is_feasible(params)) {
    throw InfeasibleParams("t^{2p} r^{p-1} > n/10 for " + describe(params));
  }
}

PcInstance scramble_side(const PcInstance& side, std::size_t j, const PermutationFamily& perms,
                         bool right_side) {
  const std::size_t p = side.p();
  const std::size_t n = side.n();
  if (perms.p() != p || j >= perms.t() || perms.pi(j, 0).n() != n) {
    throw DomainError("scramble: permutation family does not match the instance");
  }
  const auto perm = [&](std::size_t i) -> const Permutation& {
    return right_side ? perms.rho(j, i) : perms.pi(j, i);
  };
  std::vector<FunctionTable> out;
  out.reserve(p);
  for (std::size_t i = 0; i < p; ++i) {
    const FunctionTable& f = side.func(i);
    const Permutation& outer = perm(i);
    std::vector<Index> image(n);
    for (std::size_t x = 0; x < n; ++x) {
      const Index pre = i + 1 < p ? perm(i + 1).inverse(static_cast<Index>(x)) : static_cast<Index>(x);
      image[x] = outer(f(pre));
    }
    out.emplace_back(std::move(image));
  }
  return PcInstance(std::move(out));
}

ScrambledItem scramble(const LpceInstance& item, std::size_t j, const PermutationFamily& perms) {
  return {scramble_side(item.left, j, perms, false), scramble_side(item.right, j, perms, true)};
}

IntersectScInstance overlay(const std::vector<ScrambledItem>& items) {
  if (items.empty()) {
    throw DomainError("overlay: need at least one item");
  }
  const std::size_t n = items.front().left.n();
  const std::size_t p = items.front().left.p();
  auto stack = [&](bool right_side) {
    std::vector<SetFunctionTable> funcs;
    funcs.reserve(p);
    for (std::size_t i = 0; i < p; ++i) {
      std::vector<IndexSet> image(n);
      for (const auto& item : items) {
        const PcInstance& side = right_side ? item.right : item.left;
        if (side.n() != n || side.p() != p) {
          throw DomainError("overlay: items disagree on n or p");
        }
        for (std::size_t x = 0; x < n; ++x) {
          image[x].push_back(side.func(i)(static_cast<Index>(x)));
        }
      }
      funcs.emplace_back(std::move(image));  // canonicalizes, collapsing duplicates
    }
    return ScInstance(std::move(funcs));
  };
  ScInstance left = stack(false);
  ScInstance right = stack(true);
  return IntersectScInstance(std::move(left), std::move(right));
}

IntersectScInstance scramble_and_overlay(const OrLpceInstance& inst, const PermutationFamily& perms) {
  std::vector<ScrambledItem> scrambled;
  scrambled.reserve(inst.t());
  for (std::size_t j = 0; j < inst.t(); ++j) {
    scrambled.push_back(scramble(inst.item(j), j, perms));
  }
  return overlay(scrambled);
}

ReductionOutput reduce_or_lpce(const OrLpceInstance& inst, Rng& rng, ReduceOptions options) {
  if (options.require_feasible) {
    require_feasible({inst.n(), inst.p(), inst.r(), inst.t()});
  }
  const auto items = inst.items();
  if (std::any_of(items.begin(), items.end(),
                  [](const LpceInstance& it) { return has_non_injective_table(it); })) {
    ShortCircuit sc;
    sc.equality_also_holds = std::any_of(items.begin(), items.end(), [](const LpceInstance& it) {
      return eval_equal_pc(it.left, it.right);
    });
    return sc;
  }
  const auto perms = PermutationFamily::sample(inst.n(), inst.p(), inst.t(), rng);
  return scramble_and_overlay(inst, perms);
}

EndToEndResult end_to_end_solve(const OrLpceInstance& inst, const IntersectSolver& solver,
                                Rng& rng, ReduceOptions options) {
  const std::size_t pre_round_bits = 2 * inst.p();
  auto reduced = reduce_or_lpce(inst, rng, options);
  if (std::holds_alternative<ShortCircuit>(reduced)) {
    return {ShortCircuit::answer, true, pre_round_bits};
  }
  const ProtocolResult run = solver(std::get<IntersectScInstance>(reduced));
  return {run.answer, false, run.transcript.total_bits() + pre_round_bits};
}

}  // namespace chase

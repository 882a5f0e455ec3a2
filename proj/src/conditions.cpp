#include "cct/conditions.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "cct/errors.hpp"
#include "cct/linprog.hpp"

namespace cct {
namespace {

constexpr std::size_t kTransversalGuard = 10000000;

std::vector<Point> colour_union(const Configuration& config, int i, int j) {
  std::vector<Point> u = config.colours[static_cast<std::size_t>(i)];
  const auto& other = config.colours[static_cast<std::size_t>(j)];
  u.insert(u.end(), other.begin(), other.end());
  return u;
}

/// Index of the first x in S_k whose ray misses conv(S_i u S_j) beyond x,
/// or nullopt when every x passes.
std::optional<std::size_t> first_ray_failure(const Configuration& config, int i, int j, int k) {
  const std::vector<Point> hull = colour_union(config, i, j);
  const auto& sk = config.colours[static_cast<std::size_t>(k)];
  for (std::size_t idx = 0; idx < sk.size(); ++idx) {
    auto outcome = ray_hull_sup(hull, sk[idx]);
    if (!outcome || outcome->t == 0) return idx;
  }
  return std::nullopt;
}

using RayMemo = std::map<std::tuple<int, int, int>, std::optional<std::size_t>>;

std::optional<std::size_t> memo_ray_failure(RayMemo& memo, const Configuration& config, int i,
                                            int j, int k) {
  auto key = std::make_tuple(std::min(i, j), std::max(i, j), k);
  auto it = memo.find(key);
  if (it == memo.end())
    it = memo.emplace(key, first_ray_failure(config, std::get<0>(key), std::get<1>(key), k))
             .first;
  return it->second;
}

}  // namespace

ConditionVerdict check_barany(const Configuration& config) {
  validate_configuration(config);
  const Point zero = origin_point(config.dimension);
  ConditionVerdict verdict;
  for (int i = 0; i <= config.dimension; ++i) {
    if (!point_in_hull(config.colours[static_cast<std::size_t>(i)], zero)) {
      verdict.hull_counterexample = i;
      return verdict;
    }
  }
  verdict.holds = true;
  return verdict;
}

ConditionVerdict check_pairwise(const Configuration& config) {
  validate_configuration(config);
  const Point zero = origin_point(config.dimension);
  ConditionVerdict verdict;
  for (int i = 0; i <= config.dimension; ++i)
    for (int j = i + 1; j <= config.dimension; ++j) {
      if (!point_in_hull(colour_union(config, i, j), zero)) {
        verdict.pairwise_counterexample = {i, j};
        return verdict;
      }
    }
  verdict.holds = true;
  return verdict;
}

ConditionVerdict check_thm1(const Configuration& config) {
  validate_configuration(config);
  for (int c = 0; c <= config.dimension; ++c)
    if (config.colours[static_cast<std::size_t>(c)].empty())
      throw EmptyColour("check_thm1: colour " + std::to_string(c) + " has no points");

  RayMemo memo;
  ConditionVerdict verdict;
  std::vector<Thm1PairChoice> witness;
  for (int i = 0; i <= config.dimension; ++i)
    for (int j = i + 1; j <= config.dimension; ++j) {
      Thm1PairFailure failure;
      failure.i = i;
      failure.j = j;
      bool pair_ok = false;
      for (int k = 0; k <= config.dimension && !pair_ok; ++k) {
        if (k == i || k == j) continue;
        auto failing = memo_ray_failure(memo, config, i, j, k);
        if (!failing) {
          witness.push_back({i, j, k});
          pair_ok = true;
        } else {
          failure.failures.push_back({k, *failing});
        }
      }
      if (!pair_ok) {
        verdict.ray_counterexample = std::move(failure);
        return verdict;
      }
    }
  verdict.holds = true;
  verdict.ray_witness = std::move(witness);
  return verdict;
}

ConditionVerdict check_thm2(const Configuration& config) {
  validate_configuration(config);
  const bool generic = is_general_position(config).ok;

  // size guard across all missing colours
  std::size_t total = 0;
  for (int j = 0; j <= config.dimension; ++j) {
    std::size_t count = 1;
    for (int c = 0; c <= config.dimension; ++c) {
      if (c == j) continue;
      const std::size_t size = config.colours[static_cast<std::size_t>(c)].size();
      if (size == 0 || count > kTransversalGuard / size) {
        count = size == 0 ? 0 : kTransversalGuard + 1;
        break;
      }
      count *= size;
    }
    if (count > kTransversalGuard || total > kTransversalGuard - count)
      throw SizeBound("check_thm2: more than 10^7 transversals");
    total += count;
  }

  ConditionVerdict verdict;
  std::size_t admissible = 0;
  for (int j = 0; j <= config.dimension; ++j) {
    std::vector<std::size_t> sizes;
    for (int c = 0; c <= config.dimension; ++c)
      if (c != j) sizes.push_back(config.colours[static_cast<std::size_t>(c)].size());
    bool any = true;
    for (auto s : sizes) any = any && s > 0;
    if (!any) continue;

    std::vector<std::size_t> idx(sizes.size(), 0);
    for (;;) {
      Transversal t = make_transversal(config, j, idx);
      try {
        for (int i = 0; i <= config.dimension; ++i) {
          if (i == j) continue;
          bool hit = false;
          for (const Point& p : colour_union(config, i, j)) {
            if (side_of(t, p) == 1) {
              hit = true;
              break;
            }
          }
          if (!hit) {
            verdict.transversal_counterexample = Thm2Counterexample{std::move(t), i};
            return verdict;
          }
        }
        ++admissible;
      } catch (const DegenerateTransversal& e) {
        if (generic)
          throw InternalInvariantViolation(
              "check_thm2: degenerate transversal in a general-position configuration");
        verdict.warnings.push_back("skipped degenerate transversal (missing colour " +
                                   std::to_string(j) + "): " + e.what());
      }

      std::size_t pos = idx.size();
      bool done = true;
      while (pos > 0) {
        --pos;
        if (++idx[pos] < sizes[pos]) {
          done = false;
          break;
        }
        idx[pos] = 0;
      }
      if (done) break;
    }
  }
  if (admissible == 0)
    throw DegenerateInput("check_thm2: no admissible transversal in the configuration");
  verdict.holds = true;
  return verdict;
}

ConditionVerdict check_thm2d(const Configuration& config) {
  if (config.dimension != 2)
    throw WrongDimension("check_thm2d: requires dimension 2, got " +
                         std::to_string(config.dimension));
  validate_configuration(config);

  ConditionVerdict verdict;
  for (int k = 0; k <= 2; ++k) {
    int i = k == 0 ? 1 : 0;
    int j = k == 2 ? 1 : 2;
    const std::vector<Point> hull = colour_union(config, i, j);
    const auto& sk = config.colours[static_cast<std::size_t>(k)];
    for (std::size_t idx = 0; idx < sk.size(); ++idx) {
      if (!line_meets_hull(hull, sk[idx])) {
        verdict.line_counterexample = Thm2dCounterexample{i, j, k, idx};
        return verdict;
      }
    }
  }
  verdict.holds = true;
  return verdict;
}

ColourSet fixed_point_colours(const Configuration& config, const ColourSet& b0) {
  validate_configuration(config);
  ColourSet b;
  for (int c : b0)
    if (c >= 0 && c <= config.dimension) b.insert(c);

  RayMemo memo;
  for (;;) {
    ColourSet next;
    if (b.size() >= 2) {
      for (int k = 0; k <= config.dimension; ++k) {
        if (!b.count(k)) continue;  // next is F(b) ∩ b; only members can stay
        bool in_f = false;
        for (int i : b) {
          for (int j : b) {
            if (i == j) continue;
            if (!memo_ray_failure(memo, config, i, j, k)) {
              in_f = true;
              break;
            }
          }
          if (in_f) break;
        }
        if (in_f) next.insert(k);
      }
    }
    if (next == b) return b;
    b = std::move(next);
  }
}

}  // namespace cct

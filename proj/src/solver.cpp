#include "cct/solver.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "cct/errors.hpp"
#include "cct/generators.hpp"
#include "cct/linalg.hpp"
#include "cct/linprog.hpp"
#include "cct/pivot.hpp"
#include "cct/stats.hpp"
#include "cct/stream.hpp"

namespace cct {
namespace {

constexpr std::size_t kRayAttempts = 64;
constexpr std::size_t kRhoAttempts = 64;
constexpr std::size_t kStepCap = 2000000;

enum class RayHitKind { Miss, Hit, NonGeneric };

struct RayHit {
  RayHitKind kind = RayHitKind::Miss;
  Rational t;
};

/// Where the line {t*u : t in R} meets conv(points) for d points spanning a
/// hyperplane: solve sum(lambda_i p_i) = t u, sum(lambda_i) = 1. A Hit is a
/// unique solution with every lambda strictly positive (relative interior)
/// and t != 0; grazing or dependent systems are NonGeneric.
RayHit line_hits_interior(const std::vector<Point>& points, const Point& u) {
  const std::size_t d = u.size();
  Matrix a(d + 1, Row(points.size() + 1, Rational(0)));
  Row b(d + 1, Rational(0));
  for (std::size_t col = 0; col < points.size(); ++col) {
    for (std::size_t row = 0; row < d; ++row) a[row][col] = points[col][row];
    a[d][col] = 1;
  }
  for (std::size_t row = 0; row < d; ++row) a[row][points.size()] = -u[row];
  b[d] = 1;
  auto sol = solve_linear(a, b);
  if (!sol.consistent) return {RayHitKind::Miss, Rational(0)};
  if (!sol.unique) return {RayHitKind::NonGeneric, Rational(0)};
  for (std::size_t i = 0; i < points.size(); ++i)
    if (sol.solution[i] < 0) return {RayHitKind::Miss, Rational(0)};
  for (std::size_t i = 0; i < points.size(); ++i)
    if (sol.solution[i] == 0) return {RayHitKind::NonGeneric, Rational(0)};
  Rational t = sol.solution[points.size()];
  if (t == 0) return {RayHitKind::NonGeneric, Rational(0)};
  return {RayHitKind::Hit, std::move(t)};
}

std::vector<Point> transversal_points(const Transversal& t) {
  std::vector<Point> points;
  points.reserve(t.entries.size());
  for (const auto& e : t.entries) points.push_back(e.point);
  return points;
}

Transversal initial_transversal(const Configuration& config) {
  const int d = config.dimension;
  std::vector<std::size_t> indices(static_cast<std::size_t>(d), 0);
  return make_transversal(config, d, indices);
}

Point centroid_of(const std::vector<Point>& points) {
  Point c(points[0].size(), Rational(0));
  for (const auto& p : points)
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += p[i];
  const Rational n(points.size());
  for (auto& coord : c) coord /= n;
  return c;
}

/// Ray direction for the given restart attempt: the centroid of sigma, then
/// seeded perturbations of it. The caller re-checks interior incidence.
Point ray_for_attempt(const std::vector<Point>& sigma, std::uint64_t seed, std::size_t attempt) {
  Point u = centroid_of(sigma);
  if (attempt == 0) return u;
  Rational scale(0);
  for (const auto& coord : u) {
    Rational mag = coord < 0 ? Rational(-coord) : coord;
    if (mag > scale) scale = mag;
  }
  if (scale == 0) scale = 1;
  RationalStream stream(mix_seed(seed, 0xABCD0000 + attempt));
  for (auto& coord : u) coord += stream.unit() * scale / 8;
  return u;
}

ColourfulSimplex certified_simplex(const Configuration& config,
                                   const std::vector<std::size_t>& point_indices) {
  std::vector<Point> points;
  for (std::size_t c = 0; c < point_indices.size(); ++c)
    points.push_back(config.colours[c][point_indices[c]]);
  auto cert = point_in_hull(points, origin_point(config.dimension));
  if (!cert)
    throw InternalInvariantViolation("claimed colourful simplex does not contain the origin");
  return ColourfulSimplex{point_indices, std::move(*cert)};
}

SolveResult simplex_result(const Configuration& config,
                           const std::vector<std::size_t>& point_indices) {
  SolveResult result;
  result.kind = SolveKind::Simplex;
  result.simplex = certified_simplex(config, point_indices);
  return result;
}

/// Indices of the whole configuration, one per colour, matching a transversal
/// plus one extra point of the missing colour.
std::vector<std::size_t> indices_with(const Transversal& t, std::size_t extra_index) {
  std::vector<std::size_t> indices(t.entries.size() + 1, 0);
  for (const auto& e : t.entries) indices[static_cast<std::size_t>(e.colour)] = e.point_index;
  indices[static_cast<std::size_t>(t.missing_colour)] = extra_index;
  return indices;
}

Transversal replace_entry(const Transversal& t, std::size_t drop, int new_colour,
                          std::size_t new_index, const Point& new_point) {
  Transversal out;
  out.missing_colour = t.entries[drop].colour;
  for (std::size_t m = 0; m < t.entries.size(); ++m)
    if (m != drop) out.entries.push_back(t.entries[m]);
  out.entries.push_back(TransversalEntry{new_colour, new_index, new_point});
  std::sort(out.entries.begin(), out.entries.end(),
            [](const TransversalEntry& a, const TransversalEntry& b) { return a.colour < b.colour; });
  return out;
}

/// Case (c): auxiliary point x = -rho * u on the opposite ray, with rho
/// searched so x avoids every configuration point and the doubled
/// configuration passes its full validation.
struct WalkSetup {
  DoubledConfig doubled;
  std::vector<int> colour_map;           // doubled colour k < d -> config colour
  std::vector<std::size_t> prime_index;  // per doubled colour k < d
};

WalkSetup build_walk(const Configuration& config, const PivotState& state,
                     const std::vector<std::pair<std::size_t, Point>>& primes,
                     std::uint64_t seed) {
  const int j = state.sigma.missing_colour;
  WalkSetup setup;
  setup.doubled.dimension = config.dimension;
  for (std::size_t m = 0; m < state.sigma.entries.size(); ++m) {
    const auto& entry = state.sigma.entries[m];
    setup.colour_map.push_back(entry.colour);
    setup.prime_index.push_back(primes[m].first);
    setup.doubled.colours.push_back({entry.point, primes[m].second});
  }
  const Point& w = config.colours[static_cast<std::size_t>(j)][0];

  for (std::size_t attempt = 0; attempt < kRhoAttempts; ++attempt) {
    Rational rho;
    if (attempt < 32) {
      rho = 1;
      for (std::size_t k = 0; k < attempt; ++k) rho *= 2;
    } else {
      RationalStream stream(mix_seed(seed, 0xA0A0 + attempt));
      rho = stream.positive_unit() * (1 + Rational(attempt));
    }
    Point x(state.ray_direction.size(), Rational(0));
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = -rho * state.ray_direction[i];
    bool collides = false;
    for (const auto& colour : config.colours)
      for (const auto& p : colour) collides = collides || p == x;
    if (collides) continue;
    DoubledConfig candidate = setup.doubled;
    candidate.colours.push_back({x, w});
    try {
      validate_doubled(candidate);
    } catch (const InputError&) {
      continue;
    } catch (const DegenerateError&) {
      continue;
    }
    setup.doubled = std::move(candidate);
    return setup;
  }
  throw NonGenericDirection("no auxiliary point keeps the doubled configuration generic");
}

}  // namespace

PivotState initial_state(const Configuration& config) {
  validate_configuration(config);
  for (const auto& colour : config.colours)
    if (colour.empty()) throw EmptyColour("every colour needs at least one point");
  Transversal sigma = initial_transversal(config);
  auto points = transversal_points(sigma);
  if (!independent_with_origin(points))
    throw DegenerateInput("origin lies on the affine hull of the initial transversal");
  Point u = centroid_of(points);
  auto hit = line_hits_interior(points, u);
  if (hit.kind != RayHitKind::Hit || hit.t <= 0)
    throw DegenerateInput("centroid ray misses the initial simplex interior");
  return PivotState{std::move(sigma), std::move(u), std::move(hit.t)};
}

StepResult solver_step(const Configuration& config, const PivotState& state, std::uint64_t seed) {
  stats::count_pivot_step();
  const int j = state.sigma.missing_colour;
  const auto& s_j = config.colours[static_cast<std::size_t>(j)];

  // (a) first point of the missing colour strictly on the origin side
  for (std::size_t v_index = 0; v_index < s_j.size(); ++v_index) {
    const Point& v = s_j[v_index];
    if (side_of(state.sigma, v) != 1) continue;
    std::vector<Point> simplex = transversal_points(state.sigma);
    simplex.push_back(v);
    if (point_in_hull(simplex, origin_point(config.dimension))) {
      StepResult out;
      out.finished = simplex_result(config, indices_with(state.sigma, v_index));
      return out;
    }
    // the ray enters conv(sigma + v) through exactly one other facet, at a
    // parameter strictly between 0 and sigma_param
    for (std::size_t drop = 0; drop < state.sigma.entries.size(); ++drop) {
      std::vector<Point> facet;
      for (std::size_t m = 0; m < state.sigma.entries.size(); ++m)
        if (m != drop) facet.push_back(state.sigma.entries[m].point);
      facet.push_back(v);
      auto hit = line_hits_interior(facet, state.ray_direction);
      if (hit.kind == RayHitKind::NonGeneric)
        throw NonGenericDirection("ray grazes a candidate facet");
      if (hit.kind != RayHitKind::Hit || hit.t <= 0 || hit.t >= state.sigma_param) continue;
      StepResult out;
      out.next = PivotState{replace_entry(state.sigma, drop, j, v_index, v),
                            state.ray_direction, std::move(hit.t)};
      return out;
    }
    throw InternalInvariantViolation("no facet of the extended simplex meets the ray earlier");
  }

  // (b) no such point: collect one origin-side point per other colour
  std::vector<std::pair<std::size_t, Point>> primes;
  for (const auto& entry : state.sigma.entries) {
    const auto& s_i = config.colours[static_cast<std::size_t>(entry.colour)];
    bool found = false;
    for (std::size_t index = 0; index < s_i.size() && !found; ++index) {
      if (side_of(state.sigma, s_i[index]) == 1) {
        primes.emplace_back(index, s_i[index]);
        found = true;
      }
    }
    if (!found) {
      StepResult out;
      SolveResult result;
      result.kind = SolveKind::Refutation;
      result.refutation = Refutation{state.sigma, entry.colour};
      out.finished = std::move(result);
      return out;
    }
  }

  // (c) + (d) auxiliary point on the opposite ray, then one path walk
  WalkSetup setup = build_walk(config, state, primes, seed);
  const std::size_t d = static_cast<std::size_t>(config.dimension);
  std::vector<std::size_t> start;
  for (std::size_t k = 0; k <= d; ++k) start.push_back(2 * k);
  SecondSimplexResult walk;
  try {
    walk = second_simplex(setup.doubled, start);
  } catch (const DegeneratePivot&) {
    throw NonGenericDirection("path walk hit a degenerate pivot");
  }

  const std::size_t w_id = 2 * d + 1;
  if (std::find(walk.simplex.begin(), walk.simplex.end(), w_id) != walk.simplex.end()) {
    std::vector<std::size_t> indices(d + 1, 0);
    indices[static_cast<std::size_t>(j)] = 0;  // w is the first point of colour j
    for (auto id : walk.simplex) {
      const std::size_t k = static_cast<std::size_t>(id_colour(id));
      if (k == d) continue;
      const auto& entry = state.sigma.entries[k];
      indices[static_cast<std::size_t>(setup.colour_map[k])] =
          id_slot(id) == 0 ? entry.point_index : setup.prime_index[k];
    }
    StepResult out;
    out.finished = simplex_result(config, indices);
    return out;
  }

  // the walk ended on the auxiliary point: its other d vertices are a
  // transversal crossed by the ray strictly before sigma
  Transversal tau;
  tau.missing_colour = j;
  for (auto id : walk.simplex) {
    const std::size_t k = static_cast<std::size_t>(id_colour(id));
    if (k == d) continue;
    const auto& entry = state.sigma.entries[k];
    const std::size_t index = id_slot(id) == 0 ? entry.point_index : setup.prime_index[k];
    tau.entries.push_back(TransversalEntry{setup.colour_map[k], index,
                                           doubled_point(setup.doubled, id)});
  }
  std::sort(tau.entries.begin(), tau.entries.end(),
            [](const TransversalEntry& a, const TransversalEntry& b) { return a.colour < b.colour; });
  auto hit = line_hits_interior(transversal_points(tau), state.ray_direction);
  if (hit.kind == RayHitKind::NonGeneric)
    throw NonGenericDirection("ray grazes the walk's final transversal");
  if (hit.kind != RayHitKind::Hit || hit.t <= 0)
    throw InternalInvariantViolation("walk transversal misses the ray");
  if (hit.t >= state.sigma_param)
    throw InternalInvariantViolation("walk transversal does not improve the ray parameter");
  StepResult out;
  out.next = PivotState{std::move(tau), state.ray_direction, std::move(hit.t)};
  return out;
}

namespace {

/// Runs the full pivoting search once per ray attempt. Returns nothing when
/// every attempt died on a genericity check.
std::optional<SolveResult> run_attempts(const Configuration& config, std::uint64_t seed,
                                        const StepObserver& observer) {
  Transversal sigma0 = initial_transversal(config);
  auto sigma0_points = transversal_points(sigma0);
  if (!independent_with_origin(sigma0_points)) return std::nullopt;

  for (std::size_t attempt = 0; attempt < kRayAttempts; ++attempt) {
    Point u = ray_for_attempt(sigma0_points, seed, attempt);
    auto first = line_hits_interior(sigma0_points, u);
    if (first.kind != RayHitKind::Hit || first.t <= 0) continue;
    PivotState state{sigma0, u, first.t};
    if (observer)
      observer(StepRecord{0, "attempt", state.sigma_param, state.sigma.missing_colour});
    try {
      for (std::size_t iteration = 1; iteration <= kStepCap; ++iteration) {
        StepResult step = solver_step(config, state, mix_seed(seed, attempt));
        if (step.finished) {
          if (observer) {
            const char* action =
                step.finished->kind == SolveKind::Simplex ? "simplex" : "refutation";
            observer(StepRecord{iteration, action, state.sigma_param,
                                state.sigma.missing_colour});
          }
          return std::move(*step.finished);
        }
        if (step.next->sigma_param >= state.sigma_param)
          throw InternalInvariantViolation("ray parameter failed to decrease");
        // a facet pivot swaps the missing colour; the walk pivot keeps it
        const bool walk_pivot = step.next->sigma.missing_colour == state.sigma.missing_colour;
        state = std::move(*step.next);
        if (observer)
          observer(StepRecord{iteration, walk_pivot ? "walk-pivot" : "facet-pivot",
                              state.sigma_param, state.sigma.missing_colour});
      }
      throw InternalInvariantViolation("step cap exceeded despite strict progress");
    } catch (const NonGenericDirection&) {
      continue;
    }
  }
  return std::nullopt;
}

SolveResult census_fallback(const Configuration& config, std::string reason) {
  auto census = enumerate_containing(config);
  if (!census.empty()) {
    SolveResult result;
    result.kind = SolveKind::Simplex;
    result.simplex = census.front();
    return result;
  }
  SolveResult result;
  result.kind = SolveKind::Degenerate;
  result.degenerate = DegenerateReport{
      std::move(reason) +
      "; exhaustive search found no colourful simplex containing the origin and no "
      "refutation certificate survives exact re-verification; consider perturb"};
  return result;
}

}  // namespace

SolveResult find_colourful_simplex(const Configuration& config, std::uint64_t seed,
                                   const StepObserver& observer) {
  validate_configuration(config);
  for (const auto& colour : config.colours)
    if (colour.empty()) throw EmptyColour("every colour needs at least one point");

  const bool generic = is_general_position(config).ok;
  if (auto direct = run_attempts(config, seed, observer)) return std::move(*direct);
  if (generic)
    throw InternalInvariantViolation("generic input exhausted the ray retry budget");

  // Degenerate input: solve a perturbed copy, then re-verify on the original
  // points; perturbation can break the hypotheses, so nothing is trusted
  // without an exact check.
  if (observer) observer(StepRecord{0, "fallback", Rational(0), 0});
  for (std::uint64_t round = 0; round < 8; ++round) {
    Rational magnitude(1, 1024);
    for (std::uint64_t k = 0; k < round; ++k) magnitude /= 4;
    Configuration perturbed;
    try {
      perturbed = perturb(config, magnitude, mix_seed(seed, 0xFA11 + round));
    } catch (const DegenerateError&) {
      continue;
    }
    if (!is_general_position(perturbed).ok) continue;
    auto outcome = run_attempts(perturbed, mix_seed(seed, round), observer);
    if (!outcome) continue;
    if (outcome->kind == SolveKind::Simplex) {
      const auto& indices = outcome->simplex->point_indices;
      std::vector<Point> original;
      for (std::size_t c = 0; c < indices.size(); ++c)
        original.push_back(config.colours[c][indices[c]]);
      if (auto cert = point_in_hull(original, origin_point(config.dimension))) {
        SolveResult result;
        result.kind = SolveKind::Simplex;
        result.simplex = ColourfulSimplex{indices, std::move(*cert)};
        return result;
      }
      break;  // perturbed answer does not transfer; census decides
    }
    if (outcome->kind == SolveKind::Refutation) {
      Refutation original = outcome->refutation.value();
      std::vector<std::size_t> index_per_colour;
      for (const auto& entry : original.transversal.entries)
        index_per_colour.push_back(entry.point_index);
      original.transversal =
          make_transversal(config, original.transversal.missing_colour, index_per_colour);
      if (verify_refutation(config, original)) {
        SolveResult result;
        result.kind = SolveKind::Refutation;
        result.refutation = std::move(original);
        return result;
      }
      break;
    }
  }
  return census_fallback(config, "degenerate input");
}

bool verify_refutation(const Configuration& config, const Refutation& refutation) {
  const int j = refutation.transversal.missing_colour;
  const int i = refutation.colour;
  const auto colour_count = static_cast<int>(config.colours.size());
  if (j < 0 || j >= colour_count || i < 0 || i >= colour_count || i == j) return false;
  if (refutation.transversal.entries.size() != config.colours.size() - 1) return false;
  for (const auto& entry : refutation.transversal.entries) {
    if (entry.colour == j || entry.colour < 0 || entry.colour >= colour_count) return false;
    const auto& points = config.colours[static_cast<std::size_t>(entry.colour)];
    if (entry.point_index >= points.size()) return false;
    if (points[entry.point_index] != entry.point) return false;
  }
  try {
    for (int c : {i, j})
      for (const auto& p : config.colours[static_cast<std::size_t>(c)])
        if (side_of(refutation.transversal, p) == 1) return false;
  } catch (const DegenerateError&) {
    return false;
  }
  return true;
}

}  // namespace cct

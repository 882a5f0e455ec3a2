#include "cct/planar.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <utility>

#include "cct/errors.hpp"
#include "cct/linalg.hpp"
#include "cct/linprog.hpp"

namespace cct {
namespace {

std::vector<std::size_t> canonical_rotation(std::vector<std::size_t> circuit) {
  auto smallest = std::min_element(circuit.begin(), circuit.end());
  std::rotate(circuit.begin(), smallest, circuit.end());
  return circuit;
}

/// Shortest path to -> from via breadth-first search; nullopt when
/// unreachable. Neighbour lists are ascending, so the first path found is the
/// lexicographically smallest among shortest ones.
std::optional<std::vector<std::size_t>> bfs_path(const OrientedGraph& g, std::size_t from,
                                                 std::size_t to) {
  std::vector<std::size_t> parent(g.nodes.size(), g.nodes.size());
  std::deque<std::size_t> queue{from};
  std::vector<bool> seen(g.nodes.size(), false);
  seen[from] = true;
  while (!queue.empty()) {
    const std::size_t node = queue.front();
    queue.pop_front();
    if (node == to) break;
    for (auto next : g.out[node]) {
      if (seen[next]) continue;
      seen[next] = true;
      parent[next] = node;
      queue.push_back(next);
    }
  }
  if (!seen[to]) return std::nullopt;
  std::vector<std::size_t> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

OrientedGraph build_digraph(const Configuration& config) {
  if (config.dimension != 2) throw WrongDimension("orientation digraph requires dimension 2");
  validate_configuration(config);
  OrientedGraph g;
  for (std::size_t c = 0; c < config.colours.size(); ++c)
    for (std::size_t i = 0; i < config.colours[c].size(); ++i)
      g.nodes.push_back(GraphNode{static_cast<int>(c), i, config.colours[c][i]});
  g.out.resize(g.nodes.size());
  g.in.resize(g.nodes.size());
  const Point zero = origin_point(2);
  for (std::size_t a = 0; a < g.nodes.size(); ++a) {
    for (std::size_t b = a + 1; b < g.nodes.size(); ++b) {
      if (g.nodes[a].colour == g.nodes[b].colour) continue;
      const int side = orientation({g.nodes[a].point, g.nodes[b].point, zero});
      if (side == 0)
        throw DegenerateInput("origin lies on a line through two differently coloured points");
      // negative orientation = origin on the right of a -> b
      const std::size_t from = side < 0 ? a : b;
      const std::size_t to = side < 0 ? b : a;
      g.out[from].push_back(to);
      g.in[to].push_back(from);
    }
  }
  for (auto& adj : g.out) std::sort(adj.begin(), adj.end());
  for (auto& adj : g.in) std::sort(adj.begin(), adj.end());
  return g;
}

std::vector<std::size_t> shortest_circuit(const OrientedGraph& g) {
  std::optional<std::vector<std::size_t>> best;
  for (std::size_t from = 0; from < g.nodes.size(); ++from) {
    for (auto to : g.out[from]) {
      // a circuit through the arc from -> to needs the shortest way back
      auto back = bfs_path(g, to, from);
      if (!back) continue;
      std::vector<std::size_t> circuit{from};
      circuit.insert(circuit.end(), back->begin(), back->end() - 1);
      circuit = canonical_rotation(std::move(circuit));
      if (!best || circuit.size() < best->size() ||
          (circuit.size() == best->size() && circuit < *best))
        best = std::move(circuit);
    }
  }
  if (!best) throw NoCircuit("orientation digraph is acyclic");
  if (best->size() < 3 || best->size() > 4)
    throw InternalInvariantViolation("shortest circuit length outside {3, 4}");
  if (best->size() == 4) {
    std::set<int> colours;
    for (auto id : *best) colours.insert(g.nodes[id].colour);
    if (colours.size() != 2)
      throw InternalInvariantViolation("shortest 4-circuit is not 2-coloured");
  }
  return *best;
}

namespace {

ColourfulSimplex certify_triangle(const Configuration& config,
                                  const std::vector<std::size_t>& indices) {
  std::vector<Point> points;
  for (std::size_t c = 0; c < indices.size(); ++c)
    points.push_back(config.colours[c][indices[c]]);
  auto cert = point_in_hull(points, origin_point(2));
  if (!cert) throw InternalInvariantViolation("planar triangle does not contain the origin");
  return ColourfulSimplex{indices, std::move(*cert)};
}

/// Crossing of the ray {-t*w : t > 0} with the open segment (u, v): solve
/// alpha*(u - v) + t*w = -v. Boundary hits count as degenerate.
enum class SegmentHit { Miss, Hit, Degenerate };

SegmentHit ray_hits_segment(const Point& u, const Point& v, const Point& w) {
  Matrix a{{u[0] - v[0], w[0]}, {u[1] - v[1], w[1]}};
  Row b{-v[0], -v[1]};
  auto sol = solve_linear(a, b);
  if (!sol.consistent) return SegmentHit::Miss;
  if (!sol.unique) return SegmentHit::Degenerate;
  const Rational& alpha = sol.solution[0];
  const Rational& t = sol.solution[1];
  if (alpha == 0 || alpha == 1 || t == 0) return SegmentHit::Degenerate;
  if (alpha < 0 || alpha > 1 || t < 0) return SegmentHit::Miss;
  return SegmentHit::Hit;
}

}  // namespace

ColourfulSimplex find_triangle_2d(const Configuration& config) {
  OrientedGraph g = build_digraph(config);
  for (const auto& colour : config.colours)
    if (colour.empty()) throw EmptyColour("every colour needs at least one point");

  std::vector<std::size_t> circuit;
  try {
    circuit = shortest_circuit(g);
  } catch (const NoCircuit&) {
    throw ConditionViolated(
        "no circuit in the orientation digraph: some point's line misses the other colours' "
        "hull, so the planar line condition fails");
  }

  if (circuit.size() == 3) {
    std::vector<std::size_t> indices(3, 0);
    for (auto id : circuit) indices[static_cast<std::size_t>(g.nodes[id].colour)] =
        g.nodes[id].point_index;
    return certify_triangle(config, indices);
  }

  // 2-coloured 4-circuit: the ray opposite a missing-colour point w crosses
  // one of the arcs; that arc plus w is the triangle
  std::set<int> used;
  for (auto id : circuit) used.insert(g.nodes[id].colour);
  int missing = 0;
  while (used.count(missing)) ++missing;
  const auto& candidates = config.colours[static_cast<std::size_t>(missing)];

  for (std::size_t w_index = 0; w_index < candidates.size(); ++w_index) {
    const Point& w = candidates[w_index];
    bool degenerate = false;
    for (std::size_t m = 0; m < circuit.size() && !degenerate; ++m) {
      const GraphNode& from = g.nodes[circuit[m]];
      const GraphNode& to = g.nodes[circuit[(m + 1) % circuit.size()]];
      switch (ray_hits_segment(from.point, to.point, w)) {
        case SegmentHit::Miss:
          break;
        case SegmentHit::Degenerate:
          degenerate = true;  // try the next missing-colour point
          break;
        case SegmentHit::Hit: {
          std::vector<std::size_t> indices(3, 0);
          indices[static_cast<std::size_t>(from.colour)] = from.point_index;
          indices[static_cast<std::size_t>(to.colour)] = to.point_index;
          indices[static_cast<std::size_t>(missing)] = w_index;
          return certify_triangle(config, indices);
        }
      }
    }
    if (!degenerate)
      throw InternalInvariantViolation("ray opposite w misses every arc of the 4-circuit");
  }
  throw NonGenericDirection(
      "every missing-colour point gives a degenerate ray-arc crossing; perturb the input");
}

}  // namespace cct

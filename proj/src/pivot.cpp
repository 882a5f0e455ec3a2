#include "cct/pivot.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "cct/errors.hpp"
#include "cct/linalg.hpp"
#include "cct/stats.hpp"
#include "cct/stream.hpp"

namespace cct {
namespace {

std::vector<Point> points_of(const DoubledConfig& doubled, const std::vector<std::size_t>& ids) {
  std::vector<Point> pts;
  for (auto id : ids) pts.push_back(doubled_point(doubled, id));
  return pts;
}

void check_subset_ids(const DoubledConfig& doubled, const std::vector<std::size_t>& subset) {
  const std::size_t bound = 2 * doubled.colours.size();
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] >= bound) throw InputError("doubled subset: point id out of range");
    if (i > 0 && subset[i] <= subset[i - 1])
      throw InputError("doubled subset: ids must be strictly increasing");
  }
}

}  // namespace

Configuration DoubledConfig::as_configuration() const {
  Configuration config;
  config.dimension = dimension;
  for (const auto& pair : colours) config.colours.push_back({pair[0], pair[1]});
  return config;
}

void validate_doubled(const DoubledConfig& doubled) {
  if (doubled.dimension < 1) throw InputError("doubled config: dimension must be >= 1");
  if (doubled.colours.size() != static_cast<std::size_t>(doubled.dimension) + 1)
    throw InputError("doubled config: expected d+1 colour pairs");
  Configuration flat = doubled.as_configuration();
  validate_configuration(flat);
  auto report = is_general_position(flat);
  if (!report.ok)
    throw DegenerateInput("doubled config: points are not in general position with the origin");
}

const Point& doubled_point(const DoubledConfig& doubled, std::size_t id) {
  if (id >= 2 * doubled.colours.size()) throw InputError("doubled point id out of range");
  return doubled.colours[id_colour(id)][id_slot(id)];
}

NodeClass classify_node(const DoubledConfig& doubled, const std::vector<std::size_t>& subset) {
  check_subset_ids(doubled, subset);
  const int d = doubled.dimension;
  const std::size_t size = subset.size();
  NodeClass none;
  if (size != static_cast<std::size_t>(d) + 1 && size != static_cast<std::size_t>(d) + 2)
    return none;

  std::vector<int> count(d + 1, 0);
  for (auto id : subset) ++count[id_colour(id)];

  NodeKind kind = NodeKind::None;
  std::optional<int> missing;
  if (size == static_cast<std::size_t>(d) + 2) {
    bool shape = count[d] == 2;
    for (int c = 0; c < d && shape; ++c) shape = count[c] == 1;
    if (shape) kind = NodeKind::N1;
  } else if (count[d] == 2) {
    int absent = -1;
    bool shape = true;
    for (int c = 0; c < d && shape; ++c) {
      if (count[c] == 0) {
        if (absent >= 0) shape = false;
        absent = c;
      } else if (count[c] != 1) {
        shape = false;
      }
    }
    if (shape && absent >= 0) {
      kind = NodeKind::N2;
      missing = absent;
    }
  } else {
    bool shape = true;
    for (int c = 0; c <= d && shape; ++c) shape = count[c] == 1;
    if (shape) kind = NodeKind::N3;
  }
  if (kind == NodeKind::None) return none;
  if (!point_in_hull(points_of(doubled, subset), origin_point(d))) return none;

  NodeClass node;
  node.kind = kind;
  node.missing_colour = missing;
  return node;
}

std::pair<ContainingSubset, ContainingSubset> two_containing_subsets(
    const std::vector<Point>& nu) {
  if (nu.empty()) throw InputError("two_containing_subsets: empty input");
  const std::size_t d = nu[0].size();
  if (nu.size() != d + 2)
    throw InputError("two_containing_subsets: expected d+2 points, got " +
                     std::to_string(nu.size()));
  const Point zero = origin_point(static_cast<int>(d));

  std::vector<ContainingSubset> found;
  for (std::size_t skip = 0; skip < nu.size(); ++skip) {
    std::vector<Point> sub;
    std::vector<std::size_t> indices;
    for (std::size_t i = 0; i < nu.size(); ++i) {
      if (i == skip) continue;
      sub.push_back(nu[i]);
      indices.push_back(i);
    }
    if (auto cert = point_in_hull(sub, zero))
      found.push_back({std::move(indices), std::move(*cert)});
  }
  if (found.size() != 2)
    throw DegeneratePivot("expected exactly two containing subsets, found " +
                          std::to_string(found.size()));
  return {std::move(found[0]), std::move(found[1])};
}

SecondSimplexResult second_simplex(const DoubledConfig& doubled,
                                   const std::vector<std::size_t>& start) {
  if (doubled.dimension < 1) throw InputError("doubled config: dimension must be >= 1");
  if (doubled.colours.size() != static_cast<std::size_t>(doubled.dimension) + 1)
    throw InputError("doubled config: expected d+1 colour pairs");
  check_subset_ids(doubled, start);
  if (classify_node(doubled, start).kind != NodeKind::N3)
    throw InvalidStart("second_simplex: start is not a colourful simplex containing the origin");

  const int d = doubled.dimension;
  std::set<std::vector<std::size_t>> visited;
  visited.insert(start);

  auto note_visit = [&](const std::vector<std::size_t>& node) {
    if (!visited.insert(node).second)
      throw InternalInvariantViolation("second_simplex: node revisited; the path graph is broken");
  };

  // the unique N1 above an N3 node: add the other last-colour point
  auto last_partner = [&](const std::vector<std::size_t>& n3) {
    for (auto id : n3)
      if (id_colour(id) == d) return id ^ std::size_t{1};
    throw InternalInvariantViolation("second_simplex: N3 node without last-colour point");
  };

  std::vector<std::size_t> prev = start;
  std::vector<std::size_t> n1 = start;
  n1.push_back(last_partner(start));
  std::sort(n1.begin(), n1.end());
  note_visit(n1);
  std::size_t path_length = 1;

  for (;;) {
    stats::count_pivot_step();
    auto pair = two_containing_subsets(points_of(doubled, n1));
    auto to_ids = [&](const ContainingSubset& s) {
      std::vector<std::size_t> ids;
      for (auto pos : s.indices) ids.push_back(n1[pos]);
      return ids;
    };
    std::vector<std::size_t> first_ids = to_ids(pair.first);
    std::vector<std::size_t> second_ids = to_ids(pair.second);

    ContainingSubset* next_subset = nullptr;
    std::vector<std::size_t>* next_ids = nullptr;
    if (first_ids == prev) {
      next_subset = &pair.second;
      next_ids = &second_ids;
    } else if (second_ids == prev) {
      next_subset = &pair.first;
      next_ids = &first_ids;
    } else {
      throw InternalInvariantViolation(
          "second_simplex: arrival subset is not one of the two containing subsets");
    }
    ++path_length;

    NodeClass node = classify_node(doubled, *next_ids);
    if (node.kind == NodeKind::N3) {
      SecondSimplexResult result;
      result.simplex = *next_ids;
      result.certificate = std::move(next_subset->certificate);
      result.path_length = path_length;
      return result;
    }
    if (node.kind != NodeKind::N2)
      throw InternalInvariantViolation("second_simplex: containing subset is neither N2 nor N3");
    note_visit(*next_ids);

    // swap the absent colour's points: the N1 we came through used one of
    // them; continue through the other superset
    const int absent = *node.missing_colour;
    std::size_t used = 2 * doubled.colours.size();
    for (auto id : n1)
      if (id_colour(id) == absent) used = id;
    if (used >= 2 * doubled.colours.size())
      throw InternalInvariantViolation("second_simplex: N1 node missing the swap colour");
    std::vector<std::size_t> next_n1 = *next_ids;
    next_n1.push_back(used ^ std::size_t{1});
    std::sort(next_n1.begin(), next_n1.end());
    note_visit(next_n1);
    ++path_length;

    prev = *next_ids;
    n1 = next_n1;
  }
}

OctahedronComplex build_octahedron_complex(const Transversal& first, const Transversal& second) {
  if (first.missing_colour != second.missing_colour)
    throw InputError("octahedron: transversals must miss the same colour");
  if (first.entries.size() != second.entries.size() || first.entries.empty())
    throw InputError("octahedron: transversals must have the same positive size");
  const std::size_t d = first.entries.size();
  if (d > 20) throw SizeBound("octahedron: dimension too large for 2^d cells");
  for (std::size_t i = 0; i < d; ++i) {
    if (first.entries[i].colour != second.entries[i].colour)
      throw InputError("octahedron: transversals cover different colour sets");
    for (std::size_t j = 0; j < d; ++j)
      if (first.entries[i].point == second.entries[j].point)
        throw InputError("octahedron: transversal point sets overlap");
  }

  OctahedronComplex complex;
  complex.dimension = static_cast<int>(d);
  complex.missing_colour = first.missing_colour;
  complex.first = first;
  complex.second = second;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << d); ++mask)
    complex.cells.push_back(mask);
  return complex;
}

std::vector<Point> octahedron_cell(const OctahedronComplex& complex, std::uint32_t mask) {
  std::vector<Point> cell;
  for (std::size_t i = 0; i < complex.first.entries.size(); ++i)
    cell.push_back((mask >> i) & 1 ? complex.second.entries[i].point
                                   : complex.first.entries[i].point);
  return cell;
}

CrossingParity ray_crossing_parity(const OctahedronComplex& complex, const Point& direction) {
  const std::size_t d = complex.first.entries.size();
  if (direction.size() != d) throw DimensionMismatch("ray direction has wrong dimension");
  bool zero = true;
  for (const auto& c : direction) zero = zero && c == 0;
  if (zero) throw ZeroPoint("ray direction must be nonzero");

  std::vector<Rational> hits;
  for (auto mask : complex.cells) {
    std::vector<Point> cell = octahedron_cell(complex, mask);
    // lambda_1..lambda_d, t with sum(lambda v) = t * direction, sum(lambda) = 1
    Matrix a(d + 1, Row(d + 1, Rational(0)));
    Row b(d + 1, Rational(0));
    for (std::size_t row = 0; row < d; ++row) {
      for (std::size_t col = 0; col < d; ++col) a[row][col] = cell[col][row];
      a[row][d] = -direction[row];
    }
    for (std::size_t col = 0; col < d; ++col) a[d][col] = 1;
    b[d] = 1;
    auto sol = solve_linear(a, b);
    if (!sol.consistent) continue;  // the line misses the cell's affine hull
    if (!sol.unique)
      throw NonGenericDirection("ray lies inside a cell's affine hull");
    bool negative = false;
    bool boundary = false;
    for (std::size_t i = 0; i < d; ++i) {
      if (sol.solution[i] < 0) negative = true;
      if (sol.solution[i] == 0) boundary = true;
    }
    if (negative) continue;
    const Rational& t = sol.solution[d];
    if (t < 0) continue;
    if (t == 0) throw NonGenericDirection("ray crossing at parameter zero");
    if (boundary) throw NonGenericDirection("ray grazes a cell boundary face");
    hits.push_back(t);
  }
  std::sort(hits.begin(), hits.end());
  for (std::size_t i = 1; i < hits.size(); ++i)
    if (hits[i] == hits[i - 1])
      throw NonGenericDirection("two cells crossed at the same parameter");

  CrossingParity parity;
  parity.count = hits.size();
  parity.odd = hits.size() % 2 == 1;
  return parity;
}

bool octahedron_covers(const Transversal& first, const Transversal& second, std::uint64_t seed) {
  OctahedronComplex complex = build_octahedron_complex(first, second);
  for (auto mask : complex.cells)
    if (!independent_with_origin(octahedron_cell(complex, mask)))
      throw DegenerateInput("octahedron: a cell's affine hull contains the origin");

  const std::size_t d = complex.first.entries.size();
  for (int attempt = 0; attempt < 64; ++attempt) {
    RationalStream stream(mix_seed(seed, attempt));
    Point direction;
    for (std::size_t c = 0; c < d; ++c) direction.push_back(stream.unit());
    bool zero = true;
    for (const auto& c : direction) zero = zero && c == 0;
    if (zero) continue;
    try {
      return ray_crossing_parity(complex, direction).odd;
    } catch (const NonGenericDirection&) {
      // perturbed retry via the next mixed seed
    }
  }
  throw NonGenericDirection("octahedron_covers: no generic direction found");
}

}  // namespace cct

#ifndef CCT_GEOMETRY_HPP
#define CCT_GEOMETRY_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "cct/rational.hpp"

namespace cct {

/// A point in R^d with exact rational coordinates.
using Point = std::vector<Rational>;

/// d+1 coloured finite point sets in R^d. Colour indices are 0-based
/// throughout the library (colour c is colours[c]).
struct Configuration {
  int dimension = 0;
  std::vector<std::vector<Point>> colours;

  std::size_t total_points() const {
    std::size_t n = 0;
    for (const auto& s : colours) n += s.size();
    return n;
  }
};

/// Checks the structural invariants: exactly d+1 colour classes, every point
/// of dimension d, points pairwise distinct across the whole configuration,
/// and no point equal to the origin. Throws InputError describing the first
/// violation; never repairs anything.
void validate_configuration(const Configuration& config);

/// Reference to a configuration point, or to the origin (is_origin = true).
struct PointRef {
  int colour = 0;
  std::size_t index = 0;
  bool is_origin = false;

  friend bool operator==(const PointRef&, const PointRef&) = default;
};

/// A colourful set of d points missing exactly one colour.
struct TransversalEntry {
  int colour = 0;
  std::size_t point_index = 0;
  Point point;
};

struct Transversal {
  int missing_colour = 0;
  std::vector<TransversalEntry> entries;  // sorted by colour, one per colour != missing
};

/// Builds a transversal from per-colour point indices. `index_per_colour`
/// has one entry per colour != missing, in increasing colour order.
Transversal make_transversal(const Configuration& config, int missing_colour,
                             const std::vector<std::size_t>& index_per_colour);

/// Sign of the determinant of the d x d matrix with rows points[i] - points[0].
/// Zero iff the d+1 points are affinely dependent.
int orientation(const std::vector<Point>& points);

/// Side of aff(T) a point lies on, normalized so the origin's side is +1:
/// +1 inside the open half-space H+(T) containing the origin, 0 on aff(T),
/// -1 on the far side. Throws DegenerateTransversal if T's points are
/// affinely dependent or the origin lies on aff(T).
int side_of(const Transversal& transversal, const Point& p);

struct GeneralPositionReport {
  bool ok = false;
  /// On failure, one affinely dependent subset of the points plus origin.
  std::vector<PointRef> witness;
};

/// True iff every subset of the configuration's points together with the
/// origin, of cardinality at most d+1, is affinely independent.
GeneralPositionReport is_general_position(const Configuration& config);

struct ColourfulRank {
  std::size_t a = 0;
  std::vector<PointRef> witness;  // one maximizing colourful set (empty when a = 0)
};

/// Maximum cardinality of an affinely independent colourful set whose affine
/// hull does not contain the origin, with one maximizer.
ColourfulRank max_independent_colourful(const Configuration& config);

// Shared low-level helpers.

/// True iff the given points together with the origin are affinely
/// independent, i.e. the points are linearly independent as vectors.
bool independent_with_origin(const std::vector<Point>& points);

/// True iff the points are affinely independent.
bool affinely_independent(const std::vector<Point>& points);

const Point& transversal_point(const Transversal& t, std::size_t i);

Point origin_point(int dimension);

}  // namespace cct

#endif  // CCT_GEOMETRY_HPP

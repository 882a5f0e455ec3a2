#ifndef CCT_PIVOT_HPP
#define CCT_PIVOT_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cct/geometry.hpp"
#include "cct/linprog.hpp"

namespace cct {

/// A configuration with exactly two points per colour, the setting of the
/// "second simplex" path-following argument.
struct DoubledConfig {
  int dimension = 0;
  std::vector<std::array<Point, 2>> colours;  // size dimension + 1

  Configuration as_configuration() const;
};

/// Structural checks plus general position of the 2(d+1) points with the
/// origin. Throws InputError / DegenerateInput. Generators and the CLI call
/// this; the walk itself only needs the structural part.
void validate_doubled(const DoubledConfig& doubled);

/// Subsets of a doubled configuration are sorted lists of point ids,
/// id = 2 * colour + slot.
inline int id_colour(std::size_t id) { return static_cast<int>(id / 2); }
inline int id_slot(std::size_t id) { return static_cast<int>(id % 2); }
const Point& doubled_point(const DoubledConfig& doubled, std::size_t id);

enum class NodeKind { None, N1, N2, N3 };

struct NodeClass {
  NodeKind kind = NodeKind::None;
  /// For N2: the one colour < d with no point in the subset.
  std::optional<int> missing_colour;
};

/// Classifies a subset of point ids against the three node patterns of the
/// path-following graph:
///   N1: size d+2, origin in hull, both last-colour points, one of each other
///   N2: size d+1, origin in hull, both last-colour points, one colour < d absent
///   N3: size d+1, origin in hull, exactly one point per colour
NodeClass classify_node(const DoubledConfig& doubled, const std::vector<std::size_t>& subset);

struct ContainingSubset {
  std::vector<std::size_t> indices;  // positions into nu, sorted
  HullCertificate certificate;
};

/// For d+2 points nu in general position with 0 in conv(nu), exactly two of
/// the (d+1)-point subsets contain the origin; returns both. Throws
/// DegeneratePivot when the count differs (a general-position violation).
std::pair<ContainingSubset, ContainingSubset> two_containing_subsets(const std::vector<Point>& nu);

struct SecondSimplexResult {
  std::vector<std::size_t> simplex;  // sorted ids, one per colour
  HullCertificate certificate;
  std::size_t path_length = 0;  // edges traversed in the node graph
};

/// Follows the path of the prop-style graph from a colourful simplex
/// containing the origin to the other endpoint: a different colourful simplex
/// containing the origin. Throws InvalidStart when `start` is not such a
/// simplex and DegeneratePivot when general position fails along the way.
SecondSimplexResult second_simplex(const DoubledConfig& doubled,
                                   const std::vector<std::size_t>& start);

/// The 2^d mixed colourful cells spanned by two disjoint transversals missing
/// the same colour. Cell masks select, per non-missing colour in increasing
/// order, the point of `first` (bit clear) or `second` (bit set).
struct OctahedronComplex {
  int dimension = 0;
  int missing_colour = 0;
  Transversal first;
  Transversal second;
  std::vector<std::uint32_t> cells;  // all 2^d masks, ascending
};

OctahedronComplex build_octahedron_complex(const Transversal& first, const Transversal& second);

/// Points of one cell, ordered by colour.
std::vector<Point> octahedron_cell(const OctahedronComplex& complex, std::uint32_t mask);

struct CrossingParity {
  std::size_t count = 0;
  bool odd = false;
};

/// Exact number of cells of the complex crossed by the open ray
/// {t * direction : t > 0}. Throws NonGenericDirection when the ray grazes a
/// cell boundary, runs inside a cell's affine hull, hits two cells at the
/// same parameter, or passes through the origin-side degeneracy t = 0.
CrossingParity ray_crossing_parity(const OctahedronComplex& complex, const Point& direction);

/// True iff the pair covers every direction: crossing parity of a generic ray
/// is odd. Deterministic retry chain (seeded) for non-generic directions.
bool octahedron_covers(const Transversal& first, const Transversal& second,
                       std::uint64_t seed = 0);

}  // namespace cct

#endif  // CCT_PIVOT_HPP

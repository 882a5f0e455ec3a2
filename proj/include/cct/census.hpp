#ifndef CCT_CENSUS_HPP
#define CCT_CENSUS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cct/geometry.hpp"
#include "cct/linprog.hpp"

namespace cct {

/// One point per colour, by index into its colour class, with a certificate
/// that the simplex contains the origin.
struct ColourfulSimplex {
  std::vector<std::size_t> point_indices;  // size d+1, entry c indexes colours[c]
  HullCertificate certificate;             // aligned with the points in colour order
};

inline constexpr std::size_t kDefaultCensusBound = 1000000;

/// Exhaustively lists every colourful system containing the origin, in
/// lexicographic index order. Ground truth for everything else; uses only
/// point_in_hull. Throws SizeBound when the product of class sizes exceeds
/// `bound`. `jobs` > 1 splits the enumeration; output order is identical.
std::vector<ColourfulSimplex> enumerate_containing(const Configuration& config,
                                                   std::size_t bound = kDefaultCensusBound,
                                                   int jobs = 1);

struct AtLeastReport {
  bool holds = false;
  std::size_t count = 0;
  std::size_t floor = 0;
};

/// Checks count >= min_i |S_i| whenever count > 0 (vacuous at zero).
AtLeastReport check_atleast(const Configuration& config,
                            std::size_t bound = kDefaultCensusBound, int jobs = 1);

struct OctahedronPair {
  Transversal first;
  Transversal second;
};

/// First (lexicographic by missing colour, then index vectors) pair of
/// disjoint transversals with the same missing colour whose octahedron covers
/// all directions, if any. The seed drives only the generic-direction retry
/// chain inside the covering test.
std::optional<OctahedronPair> find_covering_octahedron(const Configuration& config,
                                                       std::uint64_t seed = 0,
                                                       std::size_t bound = kDefaultCensusBound);

/// Checks count >= min_{i != j} |S_i| + |S_j| - 2 whenever a covering
/// octahedron exists (vacuous otherwise).
AtLeastReport check_atleast2(const Configuration& config, std::uint64_t seed = 0,
                             std::size_t bound = kDefaultCensusBound, int jobs = 1);

}  // namespace cct

#endif  // CCT_CENSUS_HPP

#ifndef CCT_GENERATORS_HPP
#define CCT_GENERATORS_HPP

#include <cstdint>

#include "cct/geometry.hpp"
#include "cct/pivot.hpp"
#include "cct/rational.hpp"

namespace cct {

/// Reference simplex used by all generators: V_c = e_c for c < d and
/// V_d = -(e_0 + ... + e_{d-1}). The origin is the centroid of {V_0..V_d}.
Point simplex_vertex(int dimension, int colour);

/// Colour c clustered within `radius` (max-norm) of V_c. Rejects radius >= 1
/// (a cluster could then reach the origin). General position enforced by a
/// seeded repair loop; identical arguments give identical output.
Configuration gen_simplex_cluster(int dimension, std::size_t per_colour, const Rational& radius,
                                  std::uint64_t seed);

/// Every colour contains a perturbed scaled copy of {V_0..V_d} (so its hull
/// holds the origin strictly) plus per_colour - (d+1) extra points in the
/// max-norm ball of radius 2. Requires per_colour >= d+1.
Configuration gen_random_barany(int dimension, std::size_t per_colour, std::uint64_t seed);

/// Two points per colour, both near the ray through V_c, so that every
/// colourful system contains the origin. Post-verified: at least one
/// colourful simplex contains 0 and the flattened configuration is in
/// general position.
DoubledConfig gen_doubled(int dimension, std::uint64_t seed);

/// Shifts every coordinate by a seeded rational in (-magnitude, magnitude)
/// and repairs (re-seeding) until the result is a valid general-position
/// configuration. The input is left untouched.
Configuration perturb(const Configuration& config, const Rational& magnitude, std::uint64_t seed);

}  // namespace cct

#endif  // CCT_GENERATORS_HPP

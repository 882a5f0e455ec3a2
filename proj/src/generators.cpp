#include "cct/generators.hpp"

#include <string>

#include "cct/errors.hpp"
#include "cct/linprog.hpp"
#include "cct/stream.hpp"

namespace cct {
namespace {

constexpr int kMaxRepair = 256;

Rational open_unit(RationalStream& stream) {
  // uniform in (-1, 1): reject the closed endpoint of unit()
  for (;;) {
    Rational u = stream.unit();
    if (u != -1) return u;
  }
}

Point random_offset(RationalStream& stream, int dimension, const Rational& magnitude) {
  Point p;
  for (int c = 0; c < dimension; ++c) p.push_back(magnitude * open_unit(stream));
  return p;
}

Point add(const Point& a, const Point& b) {
  Point r = a;
  for (std::size_t c = 0; c < r.size(); ++c) r[c] += b[c];
  return r;
}

Point scale(const Rational& s, const Point& a) {
  Point r = a;
  for (auto& coord : r) coord *= s;
  return r;
}

bool origin_in_every_colour(const Configuration& config) {
  const Point zero = origin_point(config.dimension);
  for (const auto& colour : config.colours)
    if (!point_in_hull(colour, zero)) return false;
  return true;
}

bool valid_general_position(const Configuration& config) {
  try {
    validate_configuration(config);
  } catch (const InputError&) {
    return false;
  }
  return is_general_position(config).ok;
}

}  // namespace

Point simplex_vertex(int dimension, int colour) {
  if (dimension < 1 || colour < 0 || colour > dimension)
    throw InputError("simplex_vertex: colour out of range");
  Point v(dimension, Rational(0));
  if (colour < dimension) {
    v[colour] = 1;
  } else {
    for (int c = 0; c < dimension; ++c) v[c] = -1;
  }
  return v;
}

Configuration gen_simplex_cluster(int dimension, std::size_t per_colour, const Rational& radius,
                                  std::uint64_t seed) {
  if (dimension < 1) throw InputError("gen_simplex_cluster: dimension must be >= 1");
  if (per_colour < 1) throw InputError("gen_simplex_cluster: need at least one point per colour");
  if (radius <= 0) throw InputError("gen_simplex_cluster: radius must be positive");
  if (radius >= 1)
    throw InputError("gen_simplex_cluster: radius " + to_string(radius) +
                     " would let a cluster reach the origin");

  for (int attempt = 0; attempt < kMaxRepair; ++attempt) {
    RationalStream stream(mix_seed(seed, attempt));
    Configuration config;
    config.dimension = dimension;
    config.colours.assign(dimension + 1, {});
    for (int colour = 0; colour <= dimension; ++colour) {
      const Point vertex = simplex_vertex(dimension, colour);
      for (std::size_t i = 0; i < per_colour; ++i)
        config.colours[colour].push_back(add(vertex, random_offset(stream, dimension, radius)));
    }
    if (valid_general_position(config)) return config;
  }
  throw InternalInvariantViolation("gen_simplex_cluster: repair loop exhausted");
}

Configuration gen_random_barany(int dimension, std::size_t per_colour, std::uint64_t seed) {
  if (dimension < 1) throw InputError("gen_random_barany: dimension must be >= 1");
  if (per_colour < static_cast<std::size_t>(dimension) + 1)
    throw InputError("gen_random_barany: need at least d+1 points per colour");

  for (int attempt = 0; attempt < kMaxRepair; ++attempt) {
    RationalStream stream(mix_seed(seed, attempt));
    Configuration config;
    config.dimension = dimension;
    config.colours.assign(dimension + 1, {});
    for (int colour = 0; colour <= dimension; ++colour) {
      // scaled perturbed simplex copy; the perturbation is small enough that
      // the origin stays strictly inside (post-verified below regardless)
      const Rational copy_scale = Rational(1, 2) + stream.positive_unit();
      for (int k = 0; k <= dimension; ++k) {
        Point p = scale(copy_scale, simplex_vertex(dimension, k));
        p = add(p, random_offset(stream, dimension, Rational(1, 8) * copy_scale));
        config.colours[colour].push_back(p);
      }
      for (std::size_t i = dimension + 1; i < per_colour; ++i)
        config.colours[colour].push_back(random_offset(stream, dimension, Rational(2)));
    }
    if (valid_general_position(config) && origin_in_every_colour(config)) return config;
  }
  throw InternalInvariantViolation("gen_random_barany: repair loop exhausted");
}

DoubledConfig gen_doubled(int dimension, std::uint64_t seed) {
  if (dimension < 1) throw InputError("gen_doubled: dimension must be >= 1");

  for (int attempt = 0; attempt < kMaxRepair; ++attempt) {
    RationalStream stream(mix_seed(seed, attempt));
    DoubledConfig doubled;
    doubled.dimension = dimension;
    for (int colour = 0; colour <= dimension; ++colour) {
      const Point vertex = simplex_vertex(dimension, colour);
      // one point near V_c, one near s * V_c on the same side of the origin;
      // any colourful choice then surrounds 0
      const Rational inner = Rational(1, 4) + Rational(1, 2) * stream.positive_unit();
      const Rational wiggle(1, 16);
      Point far = add(vertex, random_offset(stream, dimension, wiggle));
      Point near = add(scale(inner, vertex), random_offset(stream, dimension, wiggle * inner));
      doubled.colours.push_back({far, near});
    }
    try {
      validate_doubled(doubled);
    } catch (const Error&) {
      continue;
    }
    std::vector<Point> first_system;
    for (const auto& pair : doubled.colours) first_system.push_back(pair[0]);
    if (!point_in_hull(first_system, origin_point(dimension))) continue;
    return doubled;
  }
  throw InternalInvariantViolation("gen_doubled: repair loop exhausted");
}

Configuration perturb(const Configuration& config, const Rational& magnitude,
                      std::uint64_t seed) {
  if (magnitude <= 0) throw InputError("perturb: magnitude must be positive");
  validate_configuration(config);

  for (int attempt = 0; attempt < kMaxRepair; ++attempt) {
    RationalStream stream(mix_seed(seed, attempt));
    Configuration out = config;
    for (auto& colour : out.colours)
      for (auto& p : colour) p = add(p, random_offset(stream, config.dimension, magnitude));
    if (valid_general_position(out)) return out;
  }
  throw InternalInvariantViolation("perturb: repair loop exhausted");
}

}  // namespace cct

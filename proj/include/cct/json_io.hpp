#ifndef CCT_JSON_IO_HPP
#define CCT_JSON_IO_HPP

#include <string>

#include "cct/geometry.hpp"
#include "cct/pivot.hpp"

namespace cct {

/// Parses {"dimension": d, "colours": [[[coord,...],...] x (d+1)]} where a
/// coordinate is a JSON integer, a "p/q" string, or a decimal string.
/// Non-integer JSON numbers are rejected (they would lose precision).
/// Throws InputError with a path-annotated message on schema violations.
Configuration parse_config(const std::string& text);

/// Exact serialization; parse_config(serialize_config(c)) == c.
std::string serialize_config(const Configuration& config);

/// Reinterprets a configuration with exactly two points per colour as a
/// doubled configuration (structure checked, not general position).
DoubledConfig configuration_to_doubled(const Configuration& config);

}  // namespace cct

#endif  // CCT_JSON_IO_HPP

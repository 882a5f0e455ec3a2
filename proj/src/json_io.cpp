#include "cct/json_io.hpp"

#include <string>
#include <utility>

#include "json.hpp"

#include "cct/errors.hpp"
#include "cct/rational.hpp"

namespace cct {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InputError(path + ": " + what);
}

Rational parse_coord(const json& value, const std::string& path) {
  if (value.is_number_integer()) return Rational(value.get<long long>());
  if (value.is_number())
    fail(path, "non-integer numbers lose precision; quote the value as a string");
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const InputError& e) {
      fail(path, e.what());
    }
  }
  fail(path, "expected an integer, \"p/q\" or decimal string");
}

}  // namespace

Configuration parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) fail("$", "expected a JSON object");
  if (!root.contains("dimension")) fail("$", "missing \"dimension\"");
  if (!root["dimension"].is_number_integer()) fail("dimension", "expected an integer");
  const long long d = root["dimension"].get<long long>();
  if (d < 1) fail("dimension", "expected a positive dimension");
  if (!root.contains("colours")) fail("$", "missing \"colours\"");
  const json& colours = root["colours"];
  if (!colours.is_array()) fail("colours", "expected an array");
  if (colours.size() != static_cast<std::size_t>(d) + 1)
    fail("colours", "expected " + std::to_string(d + 1) + " colour classes, got " +
                        std::to_string(colours.size()));

  Configuration config;
  config.dimension = static_cast<int>(d);
  for (std::size_t c = 0; c < colours.size(); ++c) {
    const std::string cpath = "colours[" + std::to_string(c) + "]";
    if (!colours[c].is_array()) fail(cpath, "expected an array of points");
    std::vector<Point> points;
    for (std::size_t p = 0; p < colours[c].size(); ++p) {
      const std::string ppath = cpath + "[" + std::to_string(p) + "]";
      const json& point = colours[c][p];
      if (!point.is_array()) fail(ppath, "expected a coordinate array");
      if (point.size() != static_cast<std::size_t>(d))
        fail(ppath, "expected " + std::to_string(d) + " coordinates, got " +
                        std::to_string(point.size()));
      Point coords;
      for (std::size_t k = 0; k < point.size(); ++k)
        coords.push_back(parse_coord(point[k], ppath + "[" + std::to_string(k) + "]"));
      points.push_back(std::move(coords));
    }
    config.colours.push_back(std::move(points));
  }
  validate_configuration(config);
  return config;
}

std::string serialize_config(const Configuration& config) {
  json colours = json::array();
  for (const auto& colour : config.colours) {
    json points = json::array();
    for (const auto& point : colour) {
      json coords = json::array();
      for (const auto& coord : point) coords.push_back(to_string(coord));
      points.push_back(std::move(coords));
    }
    colours.push_back(std::move(points));
  }
  json root{{"dimension", config.dimension}, {"colours", std::move(colours)}};
  return root.dump(2) + "\n";
}

DoubledConfig configuration_to_doubled(const Configuration& config) {
  validate_configuration(config);
  DoubledConfig doubled;
  doubled.dimension = config.dimension;
  for (std::size_t c = 0; c < config.colours.size(); ++c) {
    if (config.colours[c].size() != 2)
      throw InputError("colour " + std::to_string(c) +
                       ": doubled configurations need exactly 2 points per colour");
    doubled.colours.push_back({config.colours[c][0], config.colours[c][1]});
  }
  return doubled;
}

}  // namespace cct

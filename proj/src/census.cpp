#include "cct/census.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "cct/errors.hpp"
#include "cct/pivot.hpp"

namespace cct {
namespace {

std::size_t system_count(const Configuration& config, std::size_t bound, const char* what) {
  std::size_t total = 1;
  for (const auto& colour : config.colours) {
    if (colour.empty()) return 0;
    if (total > bound / colour.size())
      throw SizeBound(std::string(what) + ": enumeration would exceed bound of " +
                      std::to_string(bound));
    total *= colour.size();
  }
  return total;
}

/// Decodes a linear index into one point index per colour (colour 0 most
/// significant), matching lexicographic enumeration order.
std::vector<std::size_t> system_at(const Configuration& config, std::size_t linear) {
  std::vector<std::size_t> indices(config.colours.size());
  for (std::size_t c = config.colours.size(); c-- > 0;) {
    indices[c] = linear % config.colours[c].size();
    linear /= config.colours[c].size();
  }
  return indices;
}

std::vector<ColourfulSimplex> scan_range(const Configuration& config, std::size_t begin,
                                         std::size_t end) {
  const Point zero = origin_point(config.dimension);
  std::vector<ColourfulSimplex> out;
  for (std::size_t linear = begin; linear < end; ++linear) {
    std::vector<std::size_t> indices = system_at(config, linear);
    std::vector<Point> system;
    for (std::size_t c = 0; c < indices.size(); ++c)
      system.push_back(config.colours[c][indices[c]]);
    if (auto cert = point_in_hull(system, zero))
      out.push_back({std::move(indices), std::move(*cert)});
  }
  return out;
}

}  // namespace

std::vector<ColourfulSimplex> enumerate_containing(const Configuration& config, std::size_t bound,
                                                   int jobs) {
  validate_configuration(config);
  const std::size_t total = system_count(config, bound, "enumerate_containing");
  if (total == 0) return {};

  if (jobs <= 1 || total < 64) return scan_range(config, 0, total);

  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), total);
  std::vector<std::vector<ColourfulSimplex>> parts(workers);
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = total * w / workers;
    const std::size_t end = total * (w + 1) / workers;
    threads.emplace_back(
        [&, w, begin, end] { parts[w] = scan_range(config, begin, end); });
  }
  for (auto& t : threads) t.join();

  std::vector<ColourfulSimplex> out;
  for (auto& part : parts)
    for (auto& simplex : part) out.push_back(std::move(simplex));
  return out;
}

AtLeastReport check_atleast(const Configuration& config, std::size_t bound, int jobs) {
  AtLeastReport report;
  report.count = enumerate_containing(config, bound, jobs).size();
  report.floor = config.colours.empty() ? 0 : config.colours[0].size();
  for (const auto& colour : config.colours)
    report.floor = std::min(report.floor, colour.size());
  report.holds = report.count == 0 || report.count >= report.floor;
  return report;
}

std::optional<OctahedronPair> find_covering_octahedron(const Configuration& config,
                                                       std::uint64_t seed, std::size_t bound) {
  validate_configuration(config);
  const std::size_t d = static_cast<std::size_t>(config.dimension);

  for (int missing = 0; missing <= config.dimension; ++missing) {
    std::vector<std::size_t> sizes;
    for (int c = 0; c <= config.dimension; ++c)
      if (c != missing) sizes.push_back(config.colours[static_cast<std::size_t>(c)].size());
    std::size_t transversals = 1;
    bool any = true;
    for (auto s : sizes) {
      if (s == 0) {
        any = false;
        break;
      }
      if (transversals > bound / s)
        throw SizeBound("find_covering_octahedron: too many transversal pairs");
      transversals *= s;
    }
    if (!any) continue;

    auto transversal_at = [&](std::size_t linear) {
      std::vector<std::size_t> idx(sizes.size());
      for (std::size_t c = sizes.size(); c-- > 0;) {
        idx[c] = linear % sizes[c];
        linear /= sizes[c];
      }
      return make_transversal(config, missing, idx);
    };

    for (std::size_t a = 0; a < transversals; ++a) {
      Transversal first = transversal_at(a);
      for (std::size_t b = a + 1; b < transversals; ++b) {
        Transversal second = transversal_at(b);
        bool disjoint = true;
        for (std::size_t i = 0; i < d && disjoint; ++i)
          disjoint = first.entries[i].point_index != second.entries[i].point_index;
        if (!disjoint) continue;
        try {
          if (octahedron_covers(first, second, seed))
            return OctahedronPair{std::move(first), std::move(second)};
        } catch (const DegenerateError&) {
          // inadmissible pair (degenerate cell); keep searching
        }
      }
    }
  }
  return std::nullopt;
}

AtLeastReport check_atleast2(const Configuration& config, std::uint64_t seed, std::size_t bound,
                             int jobs) {
  AtLeastReport report;
  report.count = enumerate_containing(config, bound, jobs).size();
  std::size_t best = 0;
  bool first_pair = true;
  for (std::size_t i = 0; i < config.colours.size(); ++i)
    for (std::size_t j = i + 1; j < config.colours.size(); ++j) {
      const std::size_t size = config.colours[i].size() + config.colours[j].size();
      if (first_pair || size < best) best = size;
      first_pair = false;
    }
  report.floor = best >= 2 ? best - 2 : 0;
  const bool covering = find_covering_octahedron(config, seed, bound).has_value();
  report.holds = !covering || report.count >= report.floor;
  return report;
}

}  // namespace cct

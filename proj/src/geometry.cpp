#include "cct/geometry.hpp"

#include <algorithm>
#include <string>

#include "cct/errors.hpp"
#include "cct/linalg.hpp"

namespace cct {

namespace {

bool is_zero(const Point& p) {
  return std::all_of(p.begin(), p.end(), [](const Rational& c) { return c == 0; });
}

std::string point_label(const PointRef& ref) {
  if (ref.is_origin) return "origin";
  return "colour " + std::to_string(ref.colour) + " point " + std::to_string(ref.index);
}

/// det of the d x d matrix with rows pts[i] - base; pts must have d entries.
Rational orientation_det(const std::vector<const Point*>& pts, const Point& base) {
  const std::size_t d = base.size();
  Matrix m(pts.size(), Row(d));
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t c = 0; c < d; ++c) m[i][c] = (*pts[i])[c] - base[c];
  return determinant(m);
}

/// Enumerates k-combinations of [0, n); calls f with the index vector.
/// f returns true to stop early; returns whether f stopped the scan.
template <typename F>
bool for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (f(idx)) return true;
    // next combination
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (idx[i] != i + n - k) break;
      if (i == 0) return false;
    }
    ++idx[i];
    for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

void validate_configuration(const Configuration& config) {
  if (config.dimension < 1) throw InputError("dimension must be >= 1");
  const std::size_t d = static_cast<std::size_t>(config.dimension);
  if (config.colours.size() != d + 1)
    throw InputError("expected " + std::to_string(d + 1) + " colour classes, got " +
                     std::to_string(config.colours.size()));

  std::vector<std::pair<PointRef, const Point*>> all;
  for (std::size_t c = 0; c < config.colours.size(); ++c) {
    for (std::size_t i = 0; i < config.colours[c].size(); ++i) {
      const Point& p = config.colours[c][i];
      PointRef ref{static_cast<int>(c), i, false};
      if (p.size() != d)
        throw InputError(point_label(ref) + " has " + std::to_string(p.size()) +
                         " coordinates, expected " + std::to_string(d));
      if (is_zero(p)) throw InputError(point_label(ref) + " equals the origin");
      all.emplace_back(ref, &p);
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (*all[i].second == *all[j].second)
        throw InputError("duplicate point: " + point_label(all[i].first) + " equals " +
                         point_label(all[j].first));
}

Transversal make_transversal(const Configuration& config, int missing_colour,
                             const std::vector<std::size_t>& index_per_colour) {
  const std::size_t d = static_cast<std::size_t>(config.dimension);
  if (missing_colour < 0 || static_cast<std::size_t>(missing_colour) > d)
    throw InputError("missing colour out of range");
  if (index_per_colour.size() != d)
    throw InputError("transversal needs " + std::to_string(d) + " point indices");
  Transversal t;
  t.missing_colour = missing_colour;
  std::size_t slot = 0;
  for (int c = 0; c <= config.dimension; ++c) {
    if (c == missing_colour) continue;
    const auto& points = config.colours[static_cast<std::size_t>(c)];
    std::size_t idx = index_per_colour[slot++];
    if (idx >= points.size())
      throw InputError("point index " + std::to_string(idx) + " out of range for colour " +
                       std::to_string(c));
    t.entries.push_back({c, idx, points[idx]});
  }
  return t;
}

int orientation(const std::vector<Point>& points) {
  if (points.empty()) throw DimensionMismatch("orientation: no points");
  const std::size_t d = points[0].size();
  if (points.size() != d + 1)
    throw DimensionMismatch("orientation: expected " + std::to_string(d + 1) + " points in R^" +
                            std::to_string(d) + ", got " + std::to_string(points.size()));
  for (const Point& p : points)
    if (p.size() != d) throw DimensionMismatch("orientation: inconsistent point dimensions");

  std::vector<const Point*> rest;
  for (std::size_t i = 1; i < points.size(); ++i) rest.push_back(&points[i]);
  return sign(orientation_det(rest, points[0]));
}

int side_of(const Transversal& transversal, const Point& p) {
  const std::size_t d = transversal.entries.size();
  if (p.size() != d) throw DimensionMismatch("side_of: point dimension mismatch");
  std::vector<const Point*> pts;
  for (const auto& e : transversal.entries) {
    if (e.point.size() != d) throw DimensionMismatch("side_of: transversal dimension mismatch");
    pts.push_back(&e.point);
  }
  // g(y) = det(rows T_i - y) is affine in y and vanishes exactly on aff(T).
  const Rational at_origin = orientation_det(pts, origin_point(static_cast<int>(d)));
  if (at_origin == 0) {
    std::vector<Point> copy;
    for (const auto* q : pts) copy.push_back(*q);
    if (!affinely_independent(copy))
      throw DegenerateTransversal("side_of: transversal points affinely dependent");
    throw DegenerateTransversal("side_of: origin lies on aff(T)");
  }
  return sign(orientation_det(pts, p)) * sign(at_origin);
}

bool affinely_independent(const std::vector<Point>& points) {
  if (points.size() <= 1) return true;
  const std::size_t d = points[0].size();
  Matrix m(points.size() - 1, Row(d));
  for (std::size_t i = 1; i < points.size(); ++i)
    for (std::size_t c = 0; c < d; ++c) m[i - 1][c] = points[i][c] - points[0][c];
  return rank(std::move(m)) == points.size() - 1;
}

bool independent_with_origin(const std::vector<Point>& points) {
  if (points.empty()) return true;
  Matrix m;
  m.reserve(points.size());
  for (const Point& p : points) m.push_back(p);
  return rank(std::move(m)) == points.size();
}

GeneralPositionReport is_general_position(const Configuration& config) {
  const std::size_t d = static_cast<std::size_t>(config.dimension);

  std::vector<PointRef> refs;
  std::vector<const Point*> pts;
  for (std::size_t c = 0; c < config.colours.size(); ++c)
    for (std::size_t i = 0; i < config.colours[c].size(); ++i) {
      refs.push_back({static_cast<int>(c), i, false});
      pts.push_back(&config.colours[c][i]);
    }
  const Point origin = origin_point(config.dimension);
  refs.push_back({0, 0, true});
  pts.push_back(&origin);

  // A dependent subset stays dependent in any superset, so checking all
  // subsets of size min(N, d+1) covers every smaller cardinality too.
  const std::size_t m = std::min(pts.size(), d + 1);

  GeneralPositionReport report;
  report.ok = true;
  for_each_combination(pts.size(), m, [&](const std::vector<std::size_t>& idx) {
    bool independent;
    if (m == d + 1) {
      std::vector<const Point*> rest;
      for (std::size_t i = 1; i < m; ++i) rest.push_back(pts[idx[i]]);
      independent = orientation_det(rest, *pts[idx[0]]) != 0;
    } else {
      std::vector<Point> subset;
      for (std::size_t i : idx) subset.push_back(*pts[i]);
      independent = affinely_independent(subset);
    }
    if (!independent) {
      report.ok = false;
      for (std::size_t i : idx) report.witness.push_back(refs[i]);
      return true;
    }
    return false;
  });
  return report;
}

ColourfulRank max_independent_colourful(const Configuration& config) {
  const std::size_t d = static_cast<std::size_t>(config.dimension);
  const std::size_t n_colours = config.colours.size();

  // An affinely independent set avoiding the origin in its affine hull is
  // exactly a linearly independent set of vectors, so its size is at most d.
  for (std::size_t k = std::min(d, n_colours); k >= 1; --k) {
    ColourfulRank found;
    bool done = for_each_combination(n_colours, k, [&](const std::vector<std::size_t>& cols) {
      for (std::size_t c : cols)
        if (config.colours[c].empty()) return false;
      // odometer over point choices within the chosen colours
      std::vector<std::size_t> choice(k, 0);
      while (true) {
        std::vector<Point> pts;
        for (std::size_t i = 0; i < k; ++i)
          pts.push_back(config.colours[cols[i]][choice[i]]);
        if (independent_with_origin(pts)) {
          found.a = k;
          for (std::size_t i = 0; i < k; ++i)
            found.witness.push_back({static_cast<int>(cols[i]), choice[i], false});
          return true;
        }
        std::size_t pos = k;
        while (pos > 0) {
          --pos;
          if (++choice[pos] < config.colours[cols[pos]].size()) break;
          choice[pos] = 0;
          if (pos == 0) return false;
        }
      }
    });
    if (done) return found;
  }
  return ColourfulRank{};
}

const Point& transversal_point(const Transversal& t, std::size_t i) {
  return t.entries.at(i).point;
}

Point origin_point(int dimension) { return Point(static_cast<std::size_t>(dimension), Rational(0)); }

}  // namespace cct

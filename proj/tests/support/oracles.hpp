#ifndef CCT_TEST_ORACLES_HPP
#define CCT_TEST_ORACLES_HPP

// Brute-force reference implementations used to cross-check the library.
// Everything here goes through subset enumeration and dense linear solves,
// deliberately avoiding the simplex engine and the pivoting machinery.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "cct/geometry.hpp"
#include "cct/linalg.hpp"
#include "cct/rational.hpp"

namespace cct::test {

inline void for_each_subset(std::size_t n, std::size_t max_size,
                            const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> chosen;
  auto rec = [&](auto&& self, std::size_t next) -> void {
    if (!chosen.empty()) fn(chosen);
    if (chosen.size() == max_size) return;
    for (std::size_t i = next; i < n; ++i) {
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
}

/// Caratheodory membership: q ∈ conv(P) iff some affinely independent subset
/// of at most d+1 points contains q with nonnegative barycentric coordinates.
inline bool membership_oracle(const std::vector<Point>& p, const Point& q) {
  if (p.empty()) return false;
  const std::size_t d = q.size();
  bool found = false;
  for_each_subset(p.size(), d + 1, [&](const std::vector<std::size_t>& idx) {
    if (found) return;
    std::vector<Point> sub;
    for (auto i : idx) sub.push_back(p[i]);
    if (!affinely_independent(sub)) return;
    Matrix a(d + 1, Row(sub.size(), Rational(0)));
    Row b(d + 1, Rational(0));
    for (std::size_t col = 0; col < sub.size(); ++col) {
      for (std::size_t row = 0; row < d; ++row) a[row][col] = sub[col][row];
      a[d][col] = 1;
    }
    for (std::size_t row = 0; row < d; ++row) b[row] = q[row];
    b[d] = 1;
    auto sol = solve_linear(a, b);
    if (!sol.consistent) return;
    for (const auto& lam : sol.solution)
      if (lam < 0) return;
    found = true;
  });
  return found;
}

/// Candidate intersection parameters of the line {(1-t)x : t} with conv(P),
/// collected from every affinely independent subset whose joint system has a
/// unique solution. The extreme feasible t values always appear among these.
inline std::vector<Rational> line_candidates(const std::vector<Point>& p, const Point& x) {
  const std::size_t d = x.size();
  std::vector<Rational> ts;
  for_each_subset(p.size(), d + 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<Point> sub;
    for (auto i : idx) sub.push_back(p[i]);
    if (!affinely_independent(sub)) return;
    // unknowns: lambda_1..lambda_k, t with sum(lambda p) + t x = x, sum = 1
    Matrix a(d + 1, Row(sub.size() + 1, Rational(0)));
    Row b(d + 1, Rational(0));
    for (std::size_t col = 0; col < sub.size(); ++col) {
      for (std::size_t row = 0; row < d; ++row) a[row][col] = sub[col][row];
      a[d][col] = 1;
    }
    for (std::size_t row = 0; row < d; ++row) {
      a[row][sub.size()] = x[row];
      b[row] = x[row];
    }
    b[d] = 1;
    auto sol = solve_linear(a, b);
    if (!sol.consistent || !sol.unique) return;
    for (std::size_t i = 0; i < sub.size(); ++i)
      if (sol.solution[i] < 0) return;
    ts.push_back(sol.solution[sub.size()]);
  });
  return ts;
}

/// Reference for ray_hull_sup: max{t >= 0 : (1-t)x ∈ conv(P)}, nullopt if the
/// ray misses the hull.
inline std::optional<Rational> ray_oracle(const std::vector<Point>& p, const Point& x) {
  std::optional<Rational> best;
  if (membership_oracle(p, x)) best = Rational(0);
  for (const auto& t : line_candidates(p, x)) {
    if (t < 0) continue;
    if (!best || t > *best) best = t;
  }
  return best;
}

/// Reference for line_meets_hull (t unrestricted in sign).
inline bool line_oracle(const std::vector<Point>& p, const Point& x) {
  if (membership_oracle(p, x)) return true;
  return !line_candidates(p, x).empty();
}

/// True iff the open ray {s*direction : s > 0} meets conv(P), i.e. the cone
/// spanned by P covers the direction. A candidate parameter t corresponds to
/// the ray point at s = 1-t, so any candidate with t < 1 is a hit.
inline bool cone_hits_direction(const std::vector<Point>& p, const Point& direction) {
  for (const auto& t : line_candidates(p, direction))
    if (t < 1) return true;
  return false;
}

/// Membership via supporting-facet enumeration; only meaningful when conv(P)
/// is full-dimensional, so callers must check that first.
inline bool facet_membership_oracle(const std::vector<Point>& p, const Point& q) {
  const std::size_t d = q.size();
  bool inside = true;
  for_each_subset(p.size(), d, [&](const std::vector<std::size_t>& idx) {
    if (!inside || idx.size() != d) return;
    std::vector<Point> sub;
    for (auto i : idx) sub.push_back(p[i]);
    if (!affinely_independent(sub)) return;
    int side = 0;
    bool supporting = true;
    for (const auto& other : p) {
      std::vector<Point> simplex = sub;
      simplex.push_back(other);
      int s = orientation(simplex);
      if (s == 0) continue;
      if (side == 0) side = s;
      else if (side != s) {
        supporting = false;
        break;
      }
    }
    if (!supporting || side == 0) return;
    std::vector<Point> simplex = sub;
    simplex.push_back(q);
    if (orientation(simplex) == -side) inside = false;
  });
  return inside;
}

/// True iff conv(P) has affine dimension d (needed before trusting the facet
/// enumeration oracle).
inline bool full_dimensional(const std::vector<Point>& p, std::size_t d) {
  if (p.size() < d + 1) return false;
  bool found = false;
  for_each_subset(p.size(), d + 1, [&](const std::vector<std::size_t>& idx) {
    if (found || idx.size() != d + 1) return;
    std::vector<Point> sub;
    for (auto i : idx) sub.push_back(p[i]);
    if (affinely_independent(sub)) found = true;
  });
  return found;
}

}  // namespace cct::test

#endif  // CCT_TEST_ORACLES_HPP

#ifndef CCT_LINPROG_HPP
#define CCT_LINPROG_HPP

#include <optional>
#include <vector>

#include "cct/geometry.hpp"
#include "cct/linalg.hpp"
#include "cct/rational.hpp"

namespace cct {

/// Convex coefficients certifying hull membership: nonnegative, summing to
/// one, and recombining exactly to the query point. Aligned with the input
/// point list.
struct HullCertificate {
  std::vector<Rational> coefficients;
};

/// Exact recombination check: sum_i coeff[i] * P[i] == q, coeff >= 0, sum == 1.
bool verify_certificate(const std::vector<Point>& points, const HullCertificate& certificate,
                        const Point& q);

/// Certificate for q in conv(P), or nullopt if q lies outside (always outside
/// for empty P).
std::optional<HullCertificate> point_in_hull(const std::vector<Point>& points, const Point& q);

/// Maximal ray parameter: t_max = max { t >= 0 : (1-t)x in conv(P) }, with a
/// certificate for the attaining point.
struct RayMax {
  Rational t;
  HullCertificate certificate;
};

/// nullopt == the ray { (1-t)x : t >= 0 } misses conv(P) entirely.
using RayOutcome = std::optional<RayMax>;

RayOutcome ray_hull_sup(const std::vector<Point>& points, const Point& x);

/// True iff conv(P) intersects the full line { (1-t)x : t real }.
/// Throws ZeroPoint when x = 0 (the line through x and 0 is undefined).
bool line_meets_hull(const std::vector<Point>& points, const Point& x);

// Low-level exact simplex solver, exposed for reuse and testing.

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational objective;        // valid when Optimal
  std::vector<Rational> solution;  // valid when Optimal
};

/// Solves: maximize c.x subject to A x = b, x >= 0, by a Phase-I/Phase-II
/// tableau simplex with Bland's rule over exact rationals.
LpResult solve_lp(const Matrix& a, const Row& b, const Row& c);

}  // namespace cct

#endif  // CCT_LINPROG_HPP

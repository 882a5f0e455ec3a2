#ifndef CCT_SOLVER_HPP
#define CCT_SOLVER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "cct/census.hpp"
#include "cct/geometry.hpp"
#include "cct/rational.hpp"

namespace cct {

/// State of the pivoting search: a colourful (d-1)-simplex sigma, a fixed ray
/// r = {t * ray_direction : t >= 0}, and the parameter at which r crosses the
/// relative interior of conv(sigma). The parameter strictly decreases across
/// steps, which is what forces termination.
struct PivotState {
  Transversal sigma;
  Point ray_direction;
  Rational sigma_param;
};

/// A transversal T missing colour j together with a colour i != j such that
/// no point of S_i or S_j lies strictly on the origin side of aff(T). This
/// refutes the half-space condition checked by check_thm2.
struct Refutation {
  Transversal transversal;
  int colour = 0;
};

struct DegenerateReport {
  std::string message;
};

enum class SolveKind { Simplex, Refutation, Degenerate };

struct SolveResult {
  SolveKind kind = SolveKind::Degenerate;
  std::optional<ColourfulSimplex> simplex;
  std::optional<Refutation> refutation;
  std::optional<DegenerateReport> degenerate;
};

/// One trace record per solver event; `action` is one of "attempt",
/// "facet-pivot", "walk-pivot", "simplex", "refutation", "fallback".
struct StepRecord {
  std::size_t iteration = 0;
  std::string action;
  Rational sigma_param;
  int missing_colour = 0;
};
using StepObserver = std::function<void(const StepRecord&)>;

/// Starting state: the transversal of the first point of each colour except
/// the last, with the ray aimed at its centroid (an interior point whenever
/// the origin avoids aff(sigma)). Throws DegenerateInput when the origin lies
/// on that affine hull, or when the centroid ray fails the genericity checks.
PivotState initial_state(const Configuration& config);

/// Exactly one of the two members is engaged.
struct StepResult {
  std::optional<SolveResult> finished;
  std::optional<PivotState> next;
};

/// One outer iteration: scan the missing colour's points on the origin side
/// of aff(sigma); finish or pivot to a closer facet. With no such point,
/// either refute or run one doubled-configuration walk against an auxiliary
/// point on the opposite ray, which again finishes or pivots closer. On
/// Continue the new sigma_param is strictly smaller. Throws
/// NonGenericDirection when a genericity check fails (callers restart with a
/// fresh ray) and InternalInvariantViolation when the geometry contradicts
/// the case analysis.
StepResult solver_step(const Configuration& config, const PivotState& state, std::uint64_t seed);

/// Full search: returns a colourful simplex containing the origin (exact
/// certificate) or a refutation transversal. Restarts with perturbed rays on
/// genericity failures. Degenerate inputs are retried on a perturbed copy and
/// every result is re-verified on the original points, falling back to the
/// exhaustive census; Degenerate is returned only when all of that fails to
/// certify anything.
SolveResult find_colourful_simplex(const Configuration& config, std::uint64_t seed = 0,
                                   const StepObserver& observer = {});

/// Exact re-check of a refutation: the transversal matches the configuration
/// and no point of the two named colours lies strictly on the origin side.
bool verify_refutation(const Configuration& config, const Refutation& refutation);

}  // namespace cct

#endif  // CCT_SOLVER_HPP

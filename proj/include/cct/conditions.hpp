#ifndef CCT_CONDITIONS_HPP
#define CCT_CONDITIONS_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cct/geometry.hpp"

namespace cct {

/// One choice of helper colour k for a pair (i, j) in the ray condition.
struct Thm1PairChoice {
  int i = 0;
  int j = 0;
  int k = 0;
};

/// A pair (i, j) for which every admissible k fails, with one failing point
/// of S_k recorded per k.
struct Thm1PairFailure {
  int i = 0;
  int j = 0;
  struct KFailure {
    int k = 0;
    std::size_t point_index = 0;  // x_k whose ray misses conv(S_i u S_j) \ {x_k}
  };
  std::vector<KFailure> failures;
};

/// A transversal T (missing colour j) and a colour i != j with no point of
/// S_i u S_j strictly on the origin side of aff(T).
struct Thm2Counterexample {
  Transversal transversal;
  int colour = 0;
};

/// A triple (i, j, k) and a point x_k whose line through the origin misses
/// conv(S_i u S_j).
struct Thm2dCounterexample {
  int i = 0;
  int j = 0;
  int k = 0;
  std::size_t point_index = 0;
};

/// Uniform verdict for all condition checkers. Exactly one evidence field is
/// populated, matching `holds` and the checker that produced it.
struct ConditionVerdict {
  bool holds = false;
  std::vector<Thm1PairChoice> ray_witness;                       // ray-condition checker, holds
  std::optional<int> hull_counterexample;                        // per-colour hull checker
  std::optional<std::pair<int, int>> pairwise_counterexample;    // pairwise hull checker
  std::optional<Thm1PairFailure> ray_counterexample;             // ray-condition checker
  std::optional<Thm2Counterexample> transversal_counterexample;  // transversal checker
  std::optional<Thm2dCounterexample> line_counterexample;        // planar line checker
  std::vector<std::string> warnings;  // e.g. transversals skipped as degenerate
};

/// 0 in conv(S_i) for every colour i; counterexample = first failing colour.
ConditionVerdict check_barany(const Configuration& config);

/// 0 in conv(S_i u S_j) for every pair i < j; counterexample = first failing
/// pair.
ConditionVerdict check_pairwise(const Configuration& config);

/// For every pair i < j there is a k outside {i, j} such that for all
/// x in S_k the ray from x through the origin meets conv(S_i u S_j) in a
/// point other than x. Requires every colour class nonempty (EmptyColour).
ConditionVerdict check_thm1(const Configuration& config);

/// For every transversal T (missing colour j) and every i != j, some point of
/// S_i u S_j lies strictly on the origin side of aff(T). Under general
/// position every transversal is admissible; otherwise transversals whose
/// affine hull is degenerate or passes through the origin are skipped with a
/// warning, and DegenerateInput is thrown when none is admissible. Aborts
/// with SizeBound above 10^7 transversals.
ConditionVerdict check_thm2(const Configuration& config);

/// d = 2 only (WrongDimension otherwise): for all pairwise distinct i, j, k
/// and all x in S_k the line through x and the origin meets conv(S_i u S_j).
ConditionVerdict check_thm2d(const Configuration& config);

using ColourSet = std::set<int>;

/// Iterates B <- F(B) ∩ B until stable, where F(B) is the set of colours k
/// such that some ordered pair (i, j) of distinct colours in B has every
/// x in S_k's ray meeting conv(S_i u S_j) beyond x; F(B) is empty for
/// |B| < 2. Returns the fixed point.
ColourSet fixed_point_colours(const Configuration& config, const ColourSet& b0);

}  // namespace cct

#endif  // CCT_CONDITIONS_HPP

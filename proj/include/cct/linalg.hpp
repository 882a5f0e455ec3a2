#ifndef CCT_LINALG_HPP
#define CCT_LINALG_HPP

#include <vector>

#include "cct/rational.hpp"

namespace cct {

using Row = std::vector<Rational>;
using Matrix = std::vector<Row>;

/// Exact determinant of a square matrix (Gaussian elimination).
Rational determinant(Matrix m);

/// Rank of an arbitrary matrix.
std::size_t rank(Matrix m);

struct LinearSolve {
  bool consistent = false;
  bool unique = false;
  /// One solution when consistent (free variables set to zero).
  Row solution;
};

/// Solves A x = b exactly for a general (possibly non-square) system.
LinearSolve solve_linear(Matrix a, Row b);

}  // namespace cct

#endif  // CCT_LINALG_HPP

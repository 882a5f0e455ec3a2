#include "cct/linprog.hpp"

#include <cstddef>
#include <string>

#include "cct/errors.hpp"
#include "cct/stats.hpp"

namespace cct {

namespace {

/// Dense tableau with an explicit basis; columns of basic variables are kept
/// as identity columns by the pivot operation.
class Tableau {
 public:
  Tableau(const Matrix& a, const Row& b)
      : m_(a.size()), n_(a.empty() ? 0 : a[0].size()), a_(a), b_(b), basis_(m_) {
    // append one artificial per row, flipping rows with negative rhs first
    for (std::size_t i = 0; i < m_; ++i) {
      if (b_[i] < 0) {
        b_[i] = -b_[i];
        for (auto& v : a_[i]) v = -v;
      }
      a_[i].resize(n_ + m_, Rational(0));
      a_[i][n_ + i] = 1;
      basis_[i] = n_ + i;
    }
  }

  std::size_t structural_count() const { return n_; }
  std::size_t column_count() const { return n_ + m_; }
  std::size_t row_count() const { return m_; }
  const std::vector<std::size_t>& basis() const { return basis_; }

  bool is_artificial(std::size_t col) const { return col >= n_; }

  /// Bland's rule simplex on the current basis: maximize cost over columns
  /// for which allowed(col) is true. Returns false on unbounded.
  template <typename CostFn, typename AllowFn>
  bool maximize(CostFn cost, AllowFn allowed) {
    const std::size_t max_iterations = 4096 * (column_count() + 1);
    for (std::size_t iter = 0; iter <= max_iterations; ++iter) {
      // entering column: lowest index with positive reduced cost
      std::size_t entering = column_count();
      for (std::size_t j = 0; j < column_count(); ++j) {
        if (!allowed(j) || is_basic(j)) continue;
        Rational rc = cost(j);
        for (std::size_t i = 0; i < m_; ++i) {
          if (a_[i][j] == 0) continue;
          Rational cb = cost(basis_[i]);
          if (cb != 0) rc -= cb * a_[i][j];
        }
        if (rc > 0) {
          entering = j;
          break;
        }
      }
      if (entering == column_count()) return true;  // optimal

      // leaving row: min ratio, ties by lowest basis index
      std::size_t leaving = m_;
      Rational best_ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        if (a_[i][entering] <= 0) continue;
        Rational ratio = b_[i] / a_[i][entering];
        if (leaving == m_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving == m_) return false;  // unbounded
      pivot(leaving, entering);
    }
    throw InternalInvariantViolation("simplex exceeded iteration bound with Bland's rule");
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = a_[row][col];
    for (auto& v : a_[row]) v /= inv;
    b_[row] /= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || a_[i][col] == 0) continue;
      const Rational factor = a_[i][col];
      for (std::size_t j = 0; j < column_count(); ++j) a_[i][j] -= factor * a_[row][j];
      b_[i] -= factor * b_[row];
    }
    basis_[row] = col;
  }

  /// After a zero-value Phase I, pivots artificials out of the basis where
  /// possible and drops rows that turn out redundant.
  void purge_artificials() {
    for (std::size_t i = 0; i < m_;) {
      if (!is_artificial(basis_[i])) {
        ++i;
        continue;
      }
      std::size_t col = n_;
      for (std::size_t j = 0; j < n_; ++j) {
        if (a_[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col < n_) {
        pivot(i, col);  // b_[i] is zero, so rhs stays nonnegative
        ++i;
      } else {
        drop_row(i);
      }
    }
  }

  std::vector<Rational> structural_solution() const {
    std::vector<Rational> x(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = b_[i];
    return x;
  }

  Rational basic_value_sum_artificial() const {
    Rational s = 0;
    for (std::size_t i = 0; i < m_; ++i)
      if (is_artificial(basis_[i])) s += b_[i];
    return s;
  }

 private:
  bool is_basic(std::size_t col) const {
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] == col) return true;
    return false;
  }

  void drop_row(std::size_t row) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(row));
    b_.erase(b_.begin() + static_cast<std::ptrdiff_t>(row));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
    --m_;
  }

  std::size_t m_, n_;
  Matrix a_;
  Row b_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult solve_lp(const Matrix& a, const Row& b, const Row& c) {
  stats::count_lp_call();
  if (a.size() != b.size()) throw DimensionMismatch("solve_lp: A and b row counts differ");
  const std::size_t n = a.empty() ? c.size() : a[0].size();
  if (c.size() != n) throw DimensionMismatch("solve_lp: cost vector length mismatch");

  Tableau tab(a, b);

  // Phase I: maximize minus the sum of artificials.
  bool bounded = tab.maximize(
      [&](std::size_t j) { return tab.is_artificial(j) ? Rational(-1) : Rational(0); },
      [](std::size_t) { return true; });
  if (!bounded)
    throw InternalInvariantViolation("solve_lp: Phase I unbounded");
  if (tab.basic_value_sum_artificial() != 0) return LpResult{LpStatus::Infeasible, 0, {}};
  tab.purge_artificials();

  // Phase II over structural columns only.
  bounded = tab.maximize([&](std::size_t j) { return tab.is_artificial(j) ? Rational(0) : c[j]; },
                         [&](std::size_t j) { return !tab.is_artificial(j); });
  if (!bounded) return LpResult{LpStatus::Unbounded, 0, {}};

  LpResult result;
  result.status = LpStatus::Optimal;
  result.solution = tab.structural_solution();
  result.objective = 0;
  for (std::size_t j = 0; j < n; ++j)
    if (result.solution[j] != 0) result.objective += c[j] * result.solution[j];
  return result;
}

bool verify_certificate(const std::vector<Point>& points, const HullCertificate& certificate,
                        const Point& q) {
  if (certificate.coefficients.size() != points.size()) return false;
  Rational total = 0;
  Point combo(q.size(), Rational(0));
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Rational& coeff = certificate.coefficients[i];
    if (coeff < 0) return false;
    if (coeff == 0) continue;
    total += coeff;
    if (points[i].size() != q.size()) return false;
    for (std::size_t r = 0; r < q.size(); ++r) combo[r] += coeff * points[i][r];
  }
  return total == 1 && combo == q;
}

namespace {

void check_dimensions(const std::vector<Point>& points, const Point& x, const char* who) {
  for (const Point& p : points)
    if (p.size() != x.size())
      throw DimensionMismatch(std::string(who) + ": point dimension mismatch");
}

}  // namespace

std::optional<HullCertificate> point_in_hull(const std::vector<Point>& points, const Point& q) {
  if (points.empty()) return std::nullopt;
  check_dimensions(points, q, "point_in_hull");
  const std::size_t d = q.size();
  const std::size_t n = points.size();

  Matrix a(d + 1, Row(n));
  Row b(d + 1);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t i = 0; i < n; ++i) a[r][i] = points[i][r];
    b[r] = q[r];
  }
  for (std::size_t i = 0; i < n; ++i) a[d][i] = 1;
  b[d] = 1;

  LpResult lp = solve_lp(a, b, Row(n, Rational(0)));
  if (lp.status != LpStatus::Optimal) return std::nullopt;
  HullCertificate cert{std::move(lp.solution)};
  if (!verify_certificate(points, cert, q))
    throw InternalInvariantViolation("point_in_hull: certificate failed exact recombination");
  return cert;
}

RayOutcome ray_hull_sup(const std::vector<Point>& points, const Point& x) {
  if (points.empty()) return std::nullopt;
  check_dimensions(points, x, "ray_hull_sup");
  const std::size_t d = x.size();
  const std::size_t n = points.size();

  // variables: lambda_0..lambda_{n-1}, t;  sum lambda_i p_i + t x = x
  Matrix a(d + 1, Row(n + 1));
  Row b(d + 1);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t i = 0; i < n; ++i) a[r][i] = points[i][r];
    a[r][n] = x[r];
    b[r] = x[r];
  }
  for (std::size_t i = 0; i < n; ++i) a[d][i] = 1;
  a[d][n] = 0;
  b[d] = 1;

  Row c(n + 1, Rational(0));
  c[n] = 1;

  LpResult lp = solve_lp(a, b, c);
  if (lp.status == LpStatus::Infeasible) return std::nullopt;
  if (lp.status == LpStatus::Unbounded)
    throw InternalInvariantViolation("ray_hull_sup: unbounded over a compact hull");

  RayMax out;
  out.t = lp.objective;
  out.certificate.coefficients.assign(lp.solution.begin(), lp.solution.begin() + n);
  Point target(d);
  for (std::size_t r = 0; r < d; ++r) target[r] = (1 - out.t) * x[r];
  if (!verify_certificate(points, out.certificate, target))
    throw InternalInvariantViolation("ray_hull_sup: certificate failed exact recombination");
  return out;
}

bool line_meets_hull(const std::vector<Point>& points, const Point& x) {
  bool zero = true;
  for (const Rational& coord : x)
    if (coord != 0) zero = false;
  if (zero) throw ZeroPoint("line_meets_hull: x must be nonzero");
  if (points.empty()) return false;
  check_dimensions(points, x, "line_meets_hull");
  const std::size_t d = x.size();
  const std::size_t n = points.size();

  // variables: lambda..., t_plus, t_minus with t = t_plus - t_minus free
  Matrix a(d + 1, Row(n + 2));
  Row b(d + 1);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t i = 0; i < n; ++i) a[r][i] = points[i][r];
    a[r][n] = x[r];
    a[r][n + 1] = -x[r];
    b[r] = x[r];
  }
  for (std::size_t i = 0; i < n; ++i) a[d][i] = 1;
  b[d] = 1;

  LpResult lp = solve_lp(a, b, Row(n + 2, Rational(0)));
  return lp.status == LpStatus::Optimal;
}

}  // namespace cct

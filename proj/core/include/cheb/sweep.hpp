#pragma once

#include <cheb/algorithms.hpp>
#include <cheb/stability.hpp>

#include <optional>
#include <span>
#include <vector>

namespace cheb::sweep {

/// A uniform grid on [a, b], -1 <= a < b <= 1, given either by a point count
/// (p >= 2) or by a step h > 0.  Exactly one of the two must be set.
struct GridSpec {
  double a = -1.0;
  double b = 1.0;
  std::optional<int> point_count;
  std::optional<double> step;

  static GridSpec with_points(double a, double b, int p);
  static GridSpec with_step(double a, double b, double h);

  /// Throws std::invalid_argument describing the violated constraint.
  void validate() const;

  int resolved_point_count() const;
  double resolved_step() const;
};

/// The points t_i = a + (i-1) h, i = 1..p, evaluated in that floating-point
/// form; the last point is pinned to b exactly.  When the spec carries a
/// step, p = 1 + ceil((b-a)/h) with a small tolerance so that an h dividing
/// the interval evenly is not pushed to an extra point.
std::vector<double> make_grid(const GridSpec& spec);

/// Parallelism cap for sweeps: hardware concurrency, further capped by the
/// CHEB_THREADS environment variable when it parses as a positive integer.
int max_threads();

/// One algorithm at one degree over one grid.  e_n is the largest forward
/// error on the grid in units of eps; it is +infinity exactly when the
/// scheme produced a non-finite value (counted in nonfinite_count).
struct SweepReport {
  Algorithm algorithm;
  int degree = 0;
  GridSpec grid;
  double e_n = 0.0;
  double worst_x = 0.0;  ///< first grid point attaining e_n
  int nonfinite_count = 0;
  stability::StabilityCertificate certificate;
};

/// Runs the scheme over the grid, comparing every value against the exact
/// oracle; the certificate is assembled from the same per-point evaluations.
SweepReport run(Algorithm alg, int degree, const GridSpec& spec);

/// A sweep per (degree, algorithm) pair over a shared grid.  Rows are
/// degrees in increasing order, columns follow the given algorithm order;
/// pairs the scheme cannot evaluate (DOUBLING at a non-power-of-two degree)
/// are left empty rather than failing the table.
struct TableReport {
  std::vector<int> degrees;
  std::vector<Algorithm> algorithms;
  GridSpec grid;
  std::vector<std::optional<SweepReport>> cells;  // row-major

  const std::optional<SweepReport>& cell(std::size_t row,
                                         std::size_t col) const {
    return cells[row * algorithms.size() + col];
  }
};

TableReport compare_table(std::span<const Algorithm> algorithms,
                          std::span<const int> degrees, const GridSpec& spec);

}  // namespace cheb::sweep

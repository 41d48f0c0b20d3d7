#include "cheb/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

namespace cheb::sweep {

namespace {

// Hard cap on grid sizes; a step small enough to exceed it is almost
// certainly a typo and would otherwise exhaust memory.
constexpr long kMaxGridPoints = 20'000'000;

struct ResolvedGrid {
  int points;
  double step;
};

ResolvedGrid resolve(const GridSpec& spec) {
  spec.validate();
  if (spec.point_count) {
    const int p = *spec.point_count;
    return {p, (spec.b - spec.a) / (p - 1)};
  }
  const double h = *spec.step;
  // ceil with a relative tolerance: a step that divides the interval to
  // within 1e-9 of an integer count keeps that count.
  const double ratio = (spec.b - spec.a) / h;
  long p = 1 + static_cast<long>(std::ceil(ratio - 1e-9));
  if (p < 2) {
    p = 2;
  }
  return {static_cast<int>(p), h};
}

}  // namespace

GridSpec GridSpec::with_points(double a, double b, int p) {
  GridSpec spec;
  spec.a = a;
  spec.b = b;
  spec.point_count = p;
  spec.validate();
  return spec;
}

GridSpec GridSpec::with_step(double a, double b, double h) {
  GridSpec spec;
  spec.a = a;
  spec.b = b;
  spec.step = h;
  spec.validate();
  return spec;
}

void GridSpec::validate() const {
  if (!(a >= -1.0) || !(b <= 1.0)) {
    throw std::invalid_argument("GridSpec: interval must lie inside [-1, 1]");
  }
  if (!(a < b)) {
    throw std::invalid_argument("GridSpec: interval requires a < b");
  }
  if (point_count.has_value() == step.has_value()) {
    throw std::invalid_argument(
        "GridSpec: exactly one of point_count and step must be set");
  }
  if (point_count && *point_count < 2) {
    throw std::invalid_argument("GridSpec: need at least 2 points");
  }
  if (step && !(*step > 0.0)) {
    throw std::invalid_argument("GridSpec: step must be positive");
  }
  if (step && (b - a) / *step > static_cast<double>(kMaxGridPoints)) {
    throw std::invalid_argument("GridSpec: step yields more than " +
                                std::to_string(kMaxGridPoints) + " points");
  }
}

int GridSpec::resolved_point_count() const { return resolve(*this).points; }

double GridSpec::resolved_step() const { return resolve(*this).step; }

std::vector<double> make_grid(const GridSpec& spec) {
  const ResolvedGrid g = resolve(spec);
  std::vector<double> points(static_cast<std::size_t>(g.points));
  for (int i = 0; i < g.points; ++i) {
    points[static_cast<std::size_t>(i)] = spec.a + i * g.step;
  }
  points.back() = spec.b;
  return points;
}

int max_threads() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) {
    hw = 1;
  }
  if (const char* env = std::getenv("CHEB_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed > 0) {
      return static_cast<int>(std::min<long>(parsed, hw));
    }
  }
  return hw;
}

SweepReport run(Algorithm alg, int degree, const GridSpec& spec) {
  const std::vector<double> points = make_grid(spec);
  const auto evals = stability::detail::evaluate_points(alg, degree, points);

  SweepReport report;
  report.algorithm = alg;
  report.degree = degree;
  report.grid = spec;

  std::size_t worst = 0;
  for (std::size_t i = 0; i < evals.size(); ++i) {
    if (evals[i].nonfinite) {
      ++report.nonfinite_count;
    }
    if (evals[i].error_eps > evals[worst].error_eps) {
      worst = i;
    }
  }
  report.e_n = evals[worst].error_eps;
  report.worst_x = points[worst];
  report.certificate =
      stability::detail::certificate_from_points(alg, degree, points, evals);
  return report;
}

TableReport compare_table(std::span<const Algorithm> algorithms,
                          std::span<const int> degrees, const GridSpec& spec) {
  if (algorithms.empty() || degrees.empty()) {
    throw std::invalid_argument("compare_table: nothing to tabulate");
  }
  TableReport table;
  table.algorithms.assign(algorithms.begin(), algorithms.end());
  table.degrees.assign(degrees.begin(), degrees.end());
  std::sort(table.degrees.begin(), table.degrees.end());
  table.grid = spec;
  table.cells.reserve(table.degrees.size() * table.algorithms.size());
  for (int degree : table.degrees) {
    for (Algorithm alg : table.algorithms) {
      if (!algorithm_accepts_degree(alg, degree)) {
        table.cells.emplace_back(std::nullopt);
      } else {
        table.cells.emplace_back(run(alg, degree, spec));
      }
    }
  }
  return table;
}

}  // namespace cheb::sweep

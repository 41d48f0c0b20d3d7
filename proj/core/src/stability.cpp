#include "cheb/stability.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cheb/oracle.hpp"
#include "cheb/sweep.hpp"
#include "parallel_for.hpp"

namespace cheb::stability {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_degree_at_least(int degree, int least, const char* where) {
  if (degree < least) {
    throw std::invalid_argument(std::string(where) + ": degree out of range");
  }
}

// The |x|-free factor of the odd small-|x| bound.
double small_x_odd_factor(int degree) {
  const double n = degree;
  return 5.0 * (n - 1.0) * (n + 7.0) / 8.0;
}

}  // namespace

double threshold_s(int degree) {
  require_degree_at_least(degree, 1, "threshold_s");
  const double n = degree;
  return 1.0 / std::sqrt(n * n + 1.0);
}

double bound_alg1_global(int degree) {
  require_degree_at_least(degree, 2, "bound_alg1_global");
  const double n = degree;
  return 1.5 * n * (n - 1.0);
}

double bound_alg1_small_x(int degree) {
  require_degree_at_least(degree, 2, "bound_alg1_small_x");
  return 4.5 * (degree - 1.0);
}

double bound_alg1_small_x_odd(int degree, double x) {
  require_degree_at_least(degree, 3, "bound_alg1_small_x_odd");
  if (degree % 2 == 0) {
    throw std::invalid_argument("bound_alg1_small_x_odd: degree must be odd");
  }
  if (!(std::abs(x) <= threshold_s(degree))) {
    throw std::invalid_argument("bound_alg1_small_x_odd: |x| above s_N");
  }
  return small_x_odd_factor(degree) * std::abs(x);
}

double bound_alg2(int degree) {
  if (!is_power_of_two(degree)) {
    throw std::invalid_argument("bound_alg2: degree must be a power of two");
  }
  const double n = degree;
  return n * n;
}

double backward_constant_from_forward(int degree, Region region, double l1,
                                      std::optional<double> l2) {
  require_degree_at_least(degree, 2, "backward_constant_from_forward");
  if (!(l1 >= 0.0)) {
    throw std::invalid_argument("backward_constant_from_forward: l1 < 0");
  }
  const bool odd = degree % 2 != 0;
  if (odd && region == Region::small_x) {
    if (!l2) {
      throw std::invalid_argument(
          "backward_constant_from_forward: odd degree on the small-|x| "
          "region needs the |x|-proportional constant");
    }
    return *l2 / degree;
  }
  return l1;
}

namespace detail {

std::vector<PointEvaluation> evaluate_points(Algorithm alg, int degree,
                                             std::span<const double> points) {
  const auto evaluator = make_evaluator(alg, degree);
  std::vector<PointEvaluation> evals(points.size());
  static const BigInt two52_int = BigInt(1) << 52;
  const exact::Rational two52{two52_int};
  cheb::detail::parallel_for(
      points.size(), sweep::max_threads(), [&](std::size_t i) {
        const double x = points[i];
        PointEvaluation& pe = evals[i];
        pe.computed = evaluator(x);
        pe.nonfinite = !std::isfinite(pe.computed);

        const exact::ExactEval ev =
            exact::exact_t_and_u(exact::rational_of_float(x), degree);
        const exact::Rational c = exact::condition_from_eval(ev).total();
        if (pe.nonfinite) {
          pe.error_eps = kInf;
          pe.l_contribution = kInf;
          return;
        }
        const exact::Rational diff =
            abs(exact::rational_of_float(pe.computed) - ev.t);
        pe.error_eps = exact::float_of_rational(diff * two52);
        if (c.is_zero()) {
          pe.l_contribution = diff.is_zero() ? 0.0 : kInf;
        } else {
          pe.l_contribution = exact::float_of_rational(diff * two52 / c);
        }
      });
  return evals;
}

StabilityCertificate certificate_from_points(
    Algorithm alg, int degree, std::span<const double> points,
    std::span<const PointEvaluation> evals) {
  StabilityCertificate cert;
  cert.algorithm = alg;
  cert.degree = degree;
  cert.point_count = static_cast<int>(points.size());

  bool bad_point = false;
  std::size_t worst = 0;
  for (std::size_t i = 0; i < evals.size(); ++i) {
    if (evals[i].nonfinite) {
      bad_point = true;  // the condition quantity is always finite
    }
    if (evals[i].l_contribution > evals[worst].l_contribution) {
      worst = i;
    }
  }
  if (!points.empty()) {
    cert.l_observed = evals[worst].l_contribution;
    cert.worst_point = points[worst];
  }

  cert.l_theoretical = [&]() -> std::optional<double> {
    if (alg == Algorithm::trig || alg == Algorithm::horner) {
      return std::nullopt;
    }
    if (degree <= 1) {
      return 0.0;  // T_0 and T_1 are computed exactly
    }
    if (alg == Algorithm::doubling) {
      return bound_alg2(degree);
    }
    // Recurrence: combine the constants of the regions the points occupy.
    const double s = threshold_s(degree);
    bool small = false;
    bool large = false;
    for (double x : points) {
      (std::abs(x) <= s ? small : large) = true;
    }
    double l = 0.0;
    if (large) {
      l = std::max(l, backward_constant_from_forward(
                          degree, Region::large_x, bound_alg1_global(degree)));
    }
    if (small) {
      if (degree % 2 == 0) {
        l = std::max(l, backward_constant_from_forward(
                            degree, Region::small_x,
                            bound_alg1_small_x(degree)));
      } else {
        l = std::max(l, backward_constant_from_forward(
                            degree, Region::small_x,
                            bound_alg1_small_x(degree),
                            small_x_odd_factor(degree)));
      }
    }
    return l;
  }();

  cert.passed = !bad_point &&
                (!cert.l_theoretical ||
                 cert.l_observed <= *cert.l_theoretical * (1.0 + order_eps2_slack));
  return cert;
}

}  // namespace detail

StabilityCertificate certify(Algorithm alg, int degree,
                             std::span<const double> points) {
  for (double x : points) {
    if (!(std::abs(x) <= 1.0)) {
      throw std::invalid_argument("certify: point outside [-1, 1]");
    }
  }
  const auto evals = detail::evaluate_points(alg, degree, points);
  return detail::certificate_from_points(alg, degree, points, evals);
}

}  // namespace cheb::stability

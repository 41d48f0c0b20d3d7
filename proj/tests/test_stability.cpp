#include <catch2/catch_amalgamated.hpp>

#include <cheb/oracle.hpp>
#include <cheb/stability.hpp>
#include <cheb/sweep.hpp>

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

using namespace cheb;
using namespace cheb::stability;

TEST_CASE("threshold") {
  CHECK(threshold_s(1) == 1.0 / std::sqrt(2.0));
  CHECK(threshold_s(2) == 1.0 / std::sqrt(5.0));
  CHECK_THROWS_AS(threshold_s(0), std::invalid_argument);

  double prev = threshold_s(1);
  for (int n = 2; n <= 10000; ++n) {
    const double s = threshold_s(n);
    REQUIRE(s < prev);
    prev = s;
  }
}

TEST_CASE("forward-error constants") {
  CHECK(bound_alg1_global(2) == 3.0);
  CHECK(bound_alg1_global(8) == 84.0);
  CHECK(bound_alg1_global(1024) == 1571328.0);
  CHECK_THROWS_AS(bound_alg1_global(1), std::invalid_argument);

  CHECK(bound_alg1_small_x(3) == 9.0);
  CHECK(bound_alg1_small_x(101) == 450.0);
  CHECK_THROWS_AS(bound_alg1_small_x(1), std::invalid_argument);

  CHECK(bound_alg1_small_x_odd(3, 0.1) == 1.25);
  CHECK(bound_alg1_small_x_odd(9, 0.05) == 4.0);
  CHECK(bound_alg1_small_x_odd(9, -0.05) == 4.0);
  CHECK_THROWS_AS(bound_alg1_small_x_odd(4, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(bound_alg1_small_x_odd(9, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(bound_alg1_small_x_odd(1, 0.0), std::invalid_argument);

  CHECK(bound_alg2(2) == 4.0);
  CHECK(bound_alg2(256) == 65536.0);
  CHECK(bound_alg2(1024) == 1048576.0);
  CHECK_THROWS_AS(bound_alg2(12), std::invalid_argument);
}

TEST_CASE("backward constant from forward constants") {
  CHECK(backward_constant_from_forward(4, Region::small_x, 18.0) == 18.0);
  CHECK(backward_constant_from_forward(5, Region::large_x, 30.0) == 30.0);
  CHECK(backward_constant_from_forward(3, Region::small_x, 9.0, 12.5) ==
        12.5 / 3.0);
  CHECK_THROWS_AS(backward_constant_from_forward(3, Region::small_x, 9.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(backward_constant_from_forward(4, Region::small_x, -1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(backward_constant_from_forward(1, Region::large_x, 1.0),
                  std::invalid_argument);
}

TEST_CASE("certificates for the bounded schemes") {
  const auto grid = sweep::make_grid(sweep::GridSpec::with_step(-1, 1, 0.01));

  const StabilityCertificate rec = certify(Algorithm::recurrence, 8, grid);
  CHECK(rec.algorithm == Algorithm::recurrence);
  CHECK(rec.degree == 8);
  CHECK(rec.point_count == 201);
  REQUIRE(rec.l_theoretical.has_value());
  CHECK(*rec.l_theoretical == 84.0);
  CHECK(rec.l_observed > 0.0);
  CHECK(rec.l_observed < 10.0);
  CHECK(std::abs(rec.worst_point) <= 1.0);
  CHECK(rec.passed);

  const auto coarse = sweep::make_grid(sweep::GridSpec::with_points(-1, 1, 41));
  const StabilityCertificate dbl = certify(Algorithm::doubling, 256, coarse);
  REQUIRE(dbl.l_theoretical.has_value());
  CHECK(*dbl.l_theoretical == 65536.0);
  CHECK(dbl.passed);
}

TEST_CASE("certificates for the unbounded schemes") {
  const auto grid = sweep::make_grid(sweep::GridSpec::with_points(-1, 1, 41));

  const StabilityCertificate trg = certify(Algorithm::trig, 50, grid);
  CHECK(!trg.l_theoretical.has_value());
  CHECK(trg.l_observed > 0.0);
  CHECK(trg.passed);  // finite everywhere, no bound to violate

  const StabilityCertificate hor = certify(Algorithm::horner, 64, grid);
  CHECK(!hor.l_theoretical.has_value());
  CHECK(hor.passed);
  CHECK(hor.l_observed > 1e4);  // far beyond any backward-stable constant

  const auto few = sweep::make_grid(sweep::GridSpec::with_points(-1, 1, 21));
  const StabilityCertificate bad = certify(Algorithm::horner, 1024, few);
  CHECK(!bad.passed);  // non-finite values at finite condition quantity
  CHECK(std::isinf(bad.l_observed));
}

TEST_CASE("zero of the condition quantity") {
  // x = 0 with odd degree: the scheme returns the exact value 0, so the
  // 0/0 ratio counts as 0 and cannot poison the certificate.
  const std::vector<double> pts{-0.5, 0.0, 0.5};
  const StabilityCertificate cert = certify(Algorithm::recurrence, 3, pts);
  CHECK(cert.passed);
  CHECK(std::isfinite(cert.l_observed));
}

TEST_CASE("degree one and zero have exact evaluations") {
  const std::vector<double> pts{-1.0, -0.3, 0.2, 1.0};
  for (int degree : {0, 1}) {
    const StabilityCertificate cert =
        certify(Algorithm::recurrence, degree, pts);
    REQUIRE(cert.l_theoretical.has_value());
    CHECK(*cert.l_theoretical == 0.0);
    CHECK(cert.l_observed == 0.0);
    CHECK(cert.passed);
  }
  const StabilityCertificate one = certify(Algorithm::doubling, 1, pts);
  CHECK(*one.l_theoretical == 0.0);
  CHECK(one.passed);
}

TEST_CASE("theoretical constant follows the sampled regions") {
  // Only large |x|: the global constant.  N = 9 is odd, s_9 ~ 0.11.
  const std::vector<double> large{-0.9, 0.5, 0.2};
  const auto c_large = certify(Algorithm::recurrence, 9, large);
  CHECK(*c_large.l_theoretical == bound_alg1_global(9));

  // Only small |x|, odd N: the |x|-proportional constant divided by N.
  const std::vector<double> small{-0.05, 0.0, 0.1};
  const auto c_small = certify(Algorithm::recurrence, 9, small);
  CHECK(*c_small.l_theoretical == 5.0 * 8.0 * 16.0 / 8.0 / 9.0);

  // Mixed: the larger of the two.
  const std::vector<double> mixed{-0.9, 0.0, 0.1, 0.5};
  const auto c_mixed = certify(Algorithm::recurrence, 9, mixed);
  CHECK(*c_mixed.l_theoretical == bound_alg1_global(9));

  // Small |x|, even N: the flat small-x constant.
  const std::vector<double> small_even{-0.05, 0.0, 0.05};
  const auto c_even = certify(Algorithm::recurrence, 10, small_even);
  CHECK(*c_even.l_theoretical == bound_alg1_small_x(10));
}

TEST_CASE("certificate is monotone in the point set") {
  const auto base = sweep::make_grid(sweep::GridSpec::with_points(-1, 1, 11));
  auto extended = base;
  const auto fill = sweep::make_grid(sweep::GridSpec::with_points(-1, 1, 21));
  extended.insert(extended.end(), fill.begin(), fill.end());

  const auto small = certify(Algorithm::recurrence, 16, base);
  const auto large = certify(Algorithm::recurrence, 16, extended);
  CHECK(large.l_observed >= small.l_observed);
}

TEST_CASE("certificate does not depend on point order") {
  auto grid = sweep::make_grid(sweep::GridSpec::with_points(-1, 1, 51));
  const auto forward = certify(Algorithm::recurrence, 12, grid);
  std::reverse(grid.begin(), grid.end());
  const auto backward = certify(Algorithm::recurrence, 12, grid);
  CHECK(std::bit_cast<std::uint64_t>(forward.l_observed) ==
        std::bit_cast<std::uint64_t>(backward.l_observed));
}

TEST_CASE("per-point evaluations agree with the scalar oracle entry points") {
  const std::vector<double> pts{-0.77, 0.3};
  const auto evals = detail::evaluate_points(Algorithm::recurrence, 4, pts);
  REQUIRE(evals.size() == 2);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double computed = eval_recurrence(pts[i], 4);
    CHECK(evals[i].computed == computed);
    CHECK(evals[i].error_eps ==
          exact::forward_error_in_eps(
              computed,
              exact::exact_t_and_u(exact::rational_of_float(pts[i]), 4).t));
    CHECK(!evals[i].nonfinite);
  }
}

TEST_CASE("certify validates its inputs") {
  const std::vector<double> outside{0.0, 1.5};
  CHECK_THROWS_AS(certify(Algorithm::recurrence, 4, outside),
                  std::invalid_argument);
  const std::vector<double> fine{0.0, 0.5};
  CHECK_THROWS_AS(certify(Algorithm::doubling, 12, fine),
                  std::invalid_argument);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "cedct/experiments.hpp"
#include "cedct/spectral.hpp"
#include "cedct/tolerances.hpp"
#include "test_util.hpp"

using namespace cedct;

namespace {
constexpr double kPi = std::numbers::pi;

GridFunction1D gauss_third_grid() {
  return GridFunction1D::sample(Gauss{1.0 / 3.0}, 3, 1.0);
}
}  // namespace

TEST_CASE("class_weight is 1 at the ends and 2 inside") {
  CHECK(class_weight(4, 0) == 1);
  CHECK(class_weight(4, 4) == 1);
  CHECK(class_weight(4, 2) == 2);
  CHECK(class_weight(1, 1) == 1);
  CHECK_THROWS_AS(class_weight(4, -1), std::domain_error);
  CHECK_THROWS_AS(class_weight(4, 5), std::domain_error);
  CHECK_THROWS_AS(class_weight(0, 0), std::domain_error);
}

TEST_CASE("dct_matrix reproduces the small closed-form matrices") {
  const double r2 = std::sqrt(2.0);
  const std::vector<std::vector<double>> d1 = {{0.5, 0.5}, {0.5, -0.5}};
  const std::vector<std::vector<double>> d2 = {
      {0.25, 0.5, 0.25}, {0.5, 0.0, -0.5}, {0.25, -0.5, 0.25}};
  const std::vector<std::vector<double>> d3 = {{0.5 / 3, 1.0 / 3, 1.0 / 3, 0.5 / 3},
                                               {1.0 / 3, 1.0 / 3, -1.0 / 3, -1.0 / 3},
                                               {1.0 / 3, -1.0 / 3, -1.0 / 3, 1.0 / 3},
                                               {0.5 / 3, -1.0 / 3, 1.0 / 3, -0.5 / 3}};
  const std::vector<std::vector<double>> d4 = {{0.125, 0.25, 0.25, 0.25, 0.125},
                                               {0.25, r2 / 4, 0.0, -r2 / 4, -0.25},
                                               {0.25, 0.0, -0.5, 0.0, 0.25},
                                               {0.25, -r2 / 4, 0.0, r2 / 4, -0.25},
                                               {0.125, -0.25, 0.25, -0.25, 0.125}};
  const std::vector<std::vector<std::vector<double>>> golden = {d1, d2, d3, d4};
  for (int n = 1; n <= 4; ++n) {
    const Matrix d = dct_matrix(n);
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k <= n; ++k) {
        CAPTURE(n); CAPTURE(j); CAPTURE(k);
        CHECK(std::abs(d(j, k) - golden[n - 1][j][k]) < 1e-12);
      }
  }
  CHECK_THROWS_AS(dct_matrix(0), std::domain_error);
}

TEST_CASE("dct_matrix is symmetric") {
  const Matrix d = dct_matrix(7);
  for (int j = 0; j <= 7; ++j)
    for (int k = 0; k <= 7; ++k) CHECK(d(j, k) == d(k, j));
}

TEST_CASE("transform matrices are mutual inverses up to N = 64") {
  double worst = 0.0;
  for (int n = 1; n <= 64; ++n) {
    const Matrix prod = dct_matrix(n) * cosine_matrix(n);
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k <= n; ++k)
        worst = std::max(worst, std::abs(prod(j, k) - (j == k ? 1.0 : 0.0)));
  }
  CHECK(worst < tol::kMatrixInverse);
}

TEST_CASE("forward transform of the coarse Gaussian grid") {
  const DctCoefficients a = forward(gauss_third_grid());
  const std::vector<double> expected = {0.415807, 0.486695, 0.089748, 0.007750};
  REQUIRE(a.n_intervals() == 3);
  for (int j = 0; j <= 3; ++j) CHECK(std::abs(a[j] - expected[j]) < 1e-6);
}

TEST_CASE("forward transform of a constant keeps only the leading term") {
  for (int n : {1, 2, 7, 33}) {
    const DctCoefficients a = forward(GridFunction1D(std::vector<double>(n + 1, 3.25), 1.0));
    CHECK(std::abs(a[0] - 3.25) < tol::kConstantAnnihilation);
    for (int j = 1; j <= n; ++j) CHECK(std::abs(a[j]) < tol::kConstantAnnihilation);
  }
}

TEST_CASE("forward agrees with a dense linear solve against the synthesis matrix") {
  std::mt19937 rng(20240517);
  const std::vector<double> samples = testutil::random_vector(rng, 6);
  const DctCoefficients a = forward(GridFunction1D(samples, 1.0));
  const std::vector<double> oracle = testutil::solve(cosine_matrix(5), samples);
  for (int j = 0; j <= 5; ++j) CHECK(std::abs(a[j] - oracle[j]) < 1e-10);
}

TEST_CASE("forward equals applying dct_matrix to the samples") {
  std::mt19937 rng(99);
  const std::vector<double> samples = testutil::random_vector(rng, 12);
  const DctCoefficients a = forward(GridFunction1D(samples, 1.0));
  const std::vector<double> applied = dct_matrix(11).apply(samples);
  for (int j = 0; j <= 11; ++j) CHECK(std::abs(a[j] - applied[j]) < 1e-13);
}

TEST_CASE("inverse_on_grid recovers samples") {
  SUBCASE("leading coefficient only gives a constant") {
    const GridFunction1D g = inverse_on_grid(DctCoefficients({2.5, 0.0, 0.0, 0.0, 0.0}, 1.0));
    for (int k = 0; k <= 4; ++k) CHECK(std::abs(g[k] - 2.5) < 1e-12);
  }
  SUBCASE("coarse Gaussian coefficients give back the exponential samples") {
    const GridFunction1D g = inverse_on_grid(forward(gauss_third_grid()));
    const std::vector<double> printed = {1.0, 0.606531, 0.135335, 0.011109};
    for (int k = 0; k <= 3; ++k) {
      CHECK(std::abs(g[k] - std::exp(-4.5 * k * k / 9.0)) < 1e-9);
      CHECK(std::abs(g[k] - printed[k]) < 1e-6);
    }
  }
  SUBCASE("round trip in both orders is the identity") {
    std::mt19937 rng(7);
    const std::vector<double> samples = testutil::random_vector(rng, 8);
    const GridFunction1D g(samples, 1.0);
    const GridFunction1D back = inverse_on_grid(forward(g));
    for (int k = 0; k <= 7; ++k) CHECK(std::abs(back[k] - samples[k]) < 1e-10);

    const std::vector<double> coeffs = testutil::random_vector(rng, 8);
    const DctCoefficients a(coeffs, 1.0);
    const DctCoefficients again = forward(inverse_on_grid(a));
    for (int j = 0; j <= 7; ++j) CHECK(std::abs(again[j] - coeffs[j]) < 1e-10);
  }
}

TEST_CASE("evaluate matches the worked midpoint values") {
  const DctCoefficients a = forward(gauss_third_grid());
  CHECK(std::abs(evaluate(a, 1.0 / 6.0) - 0.882171) < 1e-6);
  CHECK(std::abs(evaluate(a, 0.5) - 0.326059) < 1e-6);
  CHECK(std::abs(evaluate(a, 5.0 / 6.0) - 0.039191) < 1e-6);
}

TEST_CASE("evaluate at zero is the coefficient sum") {
  std::mt19937 rng(3);
  const std::vector<double> coeffs = testutil::random_vector(rng, 9);
  const DctCoefficients a(coeffs, 1.0);
  double sum = 0.0;
  for (double c : coeffs) sum += c;
  CHECK(std::abs(evaluate(a, 0.0) - sum) < 1e-12);
}

TEST_CASE("evaluate rejects points outside the interval") {
  const DctCoefficients a({1.0, 0.5}, 2.0);
  CHECK_THROWS_AS(evaluate(a, -1e-12), std::domain_error);
  CHECK_THROWS_AS(evaluate(a, 2.0 + 1e-12), std::domain_error);
  CHECK_NOTHROW(evaluate(a, 0.0));
  CHECK_NOTHROW(evaluate(a, 2.0));
}

TEST_CASE("evaluate honors a non-unit interval length") {
  const GridFunction1D g = GridFunction1D::sample(Gauss{0.5}, 6, 2.0);
  const DctCoefficients a = forward(g);
  const double t = 0.73;
  double manual = 0.0;
  for (int j = 0; j <= 6; ++j) manual += a[j] * std::cos(kPi * j * t / 2.0);
  CHECK(std::abs(evaluate(a, t) - manual) < 1e-13);
  for (int k = 0; k <= 6; ++k) CHECK(std::abs(evaluate(a, g.knot(k)) - g[k]) < tol::kGridExactness);
}

TEST_CASE("kernel evaluation") {
  std::mt19937 rng(11);
  const std::vector<double> samples = testutil::random_vector(rng, 9);
  const GridFunction1D g(samples, 1.0);
  const DctCoefficients a = forward(g);

  SUBCASE("constant samples give the constant everywhere") {
    const GridFunction1D c(std::vector<double>(9, 4.0), 1.0);
    for (double t : {0.0, 0.1234, 0.5, 0.77, 1.0})
      CHECK(std::abs(evaluate_kernel(c, t) - 4.0) < 1e-12);
  }
  SUBCASE("agrees with the series away from knots") {
    CHECK(std::abs(evaluate_kernel(g, 0.37) - evaluate(a, 0.37)) < 1e-10);
  }
  SUBCASE("exact at a knot") {
    CHECK(evaluate_kernel(g, 3.0 / 8.0) == doctest::Approx(samples[3]).epsilon(1e-12));
  }
  SUBCASE("agrees inside the near-knot guard band") {
    for (int k = 1; k <= 7; ++k)
      for (double eps : {1e-9, 1e-7, 9e-7}) {
        const double t = k / 8.0 + eps;
        CHECK(std::abs(evaluate_kernel(g, t) - evaluate(a, t)) < tol::kKernelEquivalence);
      }
  }
  SUBCASE("agrees just outside the guard band") {
    for (int k = 0; k <= 8; ++k)
      for (double eps : {2e-6, 1e-5, 1e-4}) {
        const double t = k / 8.0 + eps;
        if (t > 1.0) continue;
        CHECK(std::abs(evaluate_kernel(g, t) - evaluate(a, t)) < tol::kKernelEquivalence);
      }
  }
  SUBCASE("interval endpoints reproduce the boundary samples") {
    CHECK(std::abs(evaluate_kernel(g, 0.0) - samples[0]) < 1e-12);
    CHECK(std::abs(evaluate_kernel(g, 1.0) - samples[8]) < 1e-12);
  }
  SUBCASE("non-unit interval lengths are normalized") {
    const GridFunction1D h(samples, 2.5);
    const DctCoefficients ah = forward(h);
    for (double t : {0.31, 0.925, 2.2})
      CHECK(std::abs(evaluate_kernel(h, t) - evaluate(ah, t)) < tol::kKernelEquivalence);
    CHECK(evaluate_kernel(h, h.knot(5)) == doctest::Approx(samples[5]).epsilon(1e-12));
  }
  SUBCASE("rejects out-of-range points") {
    CHECK_THROWS_AS(evaluate_kernel(g, -0.5), std::domain_error);
    CHECK_THROWS_AS(evaluate_kernel(g, 1.5), std::domain_error);
  }
}

TEST_CASE("kernel equivalence at random points") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (int n : {8, 33}) {
    const GridFunction1D g(testutil::random_vector(rng, n + 1), 1.0);
    const DctCoefficients a = forward(g);
    for (int i = 0; i < 100; ++i) {
      const double t = dist(rng);
      CAPTURE(n); CAPTURE(t);
      CHECK(std::abs(evaluate_kernel(g, t) - evaluate(a, t)) < tol::kKernelEquivalence);
    }
  }
}

TEST_CASE("derivative at interior knots") {
  SUBCASE("constant samples have zero derivative") {
    const GridFunction1D c(std::vector<double>(13, 5.5), 1.0);
    for (int m = 1; m <= 11; ++m) CHECK(std::abs(derivative_at_knot(c, m)) < 1e-12);
  }
  SUBCASE("pure first harmonic has the analytic derivative") {
    for (double t0 : {1.0, 2.0}) {
      const int n = 12;
      const GridFunction1D g = GridFunction1D::sample(
          [t0](double t) { return std::cos(kPi * t / t0); }, n, t0);
      for (int m = 1; m <= n - 1; ++m) {
        const double expected = -(kPi / t0) * std::sin(kPi * m / n);
        CHECK(std::abs(derivative_at_knot(g, m) - expected) < 1e-10);
      }
    }
  }
  SUBCASE("matches a central finite difference of the series") {
    std::mt19937 rng(5);
    const GridFunction1D g(testutil::random_vector(rng, 11), 1.0);
    const DctCoefficients a = forward(g);
    const int m = 4;
    const double h = 1e-6;
    const double fd = (evaluate(a, 0.4 + h) - evaluate(a, 0.4 - h)) / (2.0 * h);
    CHECK(std::abs(derivative_at_knot(g, m) - fd) < 1e-4);
  }
  SUBCASE("endpoint knots are rejected") {
    const GridFunction1D g(std::vector<double>(5, 1.0), 1.0);
    CHECK_THROWS_AS(derivative_at_knot(g, 0), std::domain_error);
    CHECK_THROWS_AS(derivative_at_knot(g, 4), std::domain_error);
  }
}

TEST_CASE("derivative of the series") {
  SUBCASE("constant series has zero derivative") {
    const DctCoefficients a({4.0, 0.0, 0.0, 0.0}, 1.0);
    for (double t : {0.1, 0.5, 0.9}) CHECK(std::abs(derivative_series(a, t)) < 1e-12);
  }
  SUBCASE("single first harmonic at the midpoint") {
    for (double t0 : {1.0, 2.0}) {
      const DctCoefficients a({0.0, 1.0, 0.0, 0.0, 0.0}, t0);
      CHECK(std::abs(derivative_series(a, t0 / 2.0) + kPi / t0) < 1e-12);
    }
  }
  SUBCASE("matches the knot formula for the coarse Gaussian") {
    const GridFunction1D g = gauss_third_grid();
    const DctCoefficients a = forward(g);
    CHECK(std::abs(derivative_series(a, 1.0 / 3.0) - derivative_at_knot(g, 1)) < 1e-10);
  }
  SUBCASE("interval endpoints are rejected") {
    const DctCoefficients a({1.0, 1.0}, 1.0);
    CHECK_THROWS_AS(derivative_series(a, 0.0), std::domain_error);
    CHECK_THROWS_AS(derivative_series(a, 1.0), std::domain_error);
  }
}

TEST_CASE("derivative formulations agree at every interior knot") {
  std::mt19937 rng(31);
  for (int n : {4, 9, 32}) {
    const GridFunction1D g(testutil::random_vector(rng, n + 1), 1.0);
    const DctCoefficients a = forward(g);
    for (int m = 1; m <= n - 1; ++m) {
      CAPTURE(n); CAPTURE(m);
      CHECK(std::abs(derivative_series(a, static_cast<double>(m) / n) - derivative_at_knot(g, m)) <
            tol::kDerivativeConsistency);
    }
  }
}

TEST_CASE("discrete form of sampled cosines") {
  auto basis = [](int m, int n) {
    return GridFunction1D::sample([m](double t) { return std::cos(kPi * m * t); }, n, 1.0);
  };
  CHECK(discrete_form(basis(0, 4), basis(0, 4)) == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(std::abs(discrete_form(basis(1, 4), basis(2, 4))) < 1e-12);
  CHECK(discrete_form(basis(2, 6), basis(2, 6)) == doctest::Approx(6.0).epsilon(1e-12));

  CHECK_THROWS_AS(discrete_form(basis(0, 4), basis(0, 5)), std::domain_error);
  const GridFunction1D other(std::vector<double>(5, 1.0), 2.0);
  CHECK_THROWS_AS(discrete_form(basis(0, 4), other), std::domain_error);
}

TEST_CASE("orthogonality of the weighted cosine basis up to N = 32") {
  double worst = 0.0;
  for (int n = 1; n <= 32; ++n) {
    std::vector<GridFunction1D> basis;
    for (int m = 0; m <= n; ++m)
      basis.push_back(GridFunction1D::sample(
          [m](double t) { return std::cos(kPi * m * t); }, n, 1.0));
    for (int k = 0; k <= n; ++k)
      for (int m = 0; m <= n; ++m) {
        const double expected = (k == m) ? 2.0 * n / class_weight(n, k) : 0.0;
        worst = std::max(worst, std::abs(discrete_form(basis[k], basis[m]) - expected));
      }
  }
  CHECK(worst < tol::kOrthogonality);
}

TEST_CASE("series interpolates random samples at every knot") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> pick_n(1, 64);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = pick_n(rng);
    const GridFunction1D g(testutil::random_vector(rng, n + 1), 1.0);
    const DctCoefficients a = forward(g);
    for (int k = 0; k <= n; ++k) {
      CAPTURE(n); CAPTURE(k);
      CHECK(std::abs(evaluate(a, g.knot(k)) - g[k]) < tol::kGridExactness);
    }
  }
}

TEST_CASE("adding a constant shifts the extension by that constant") {
  std::mt19937 rng(23);
  const int n = 16;
  std::vector<double> samples = testutil::random_vector(rng, n + 1);
  const GridFunction1D g(samples, 1.0);
  for (double& s : samples) s += 7.5;
  const GridFunction1D shifted(samples, 1.0);

  const DctCoefficients a = forward(g), b = forward(shifted);
  CHECK(std::abs(b[0] - a[0] - 7.5) < tol::kConstantAnnihilation * (n + 1));
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (int i = 0; i < 25; ++i) {
    const double t = dist(rng);
    CHECK(std::abs(evaluate(b, t) - evaluate(a, t) - 7.5) < 1e-10);
  }
}

TEST_CASE("basis functions are symmetric or antisymmetric about the midpoint") {
  const int n = 10;
  for (int m = 0; m <= n; ++m) {
    std::vector<double> e(n + 1, 0.0);
    e[m] = 1.0;
    const DctCoefficients a(e, 1.0);
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    for (double t : {0.05, 0.21, 0.37, 0.49}) {
      CAPTURE(m); CAPTURE(t);
      CHECK(std::abs(evaluate(a, 1.0 - t) - sign * evaluate(a, t)) < 1e-10);
    }
  }
}

TEST_CASE("forward is linear") {
  std::mt19937 rng(41);
  const int n = 12;
  const std::vector<double> fs = testutil::random_vector(rng, n + 1);
  const std::vector<double> gs = testutil::random_vector(rng, n + 1);
  const double alpha = 1.75, beta = -0.6;
  std::vector<double> mix(n + 1);
  for (int k = 0; k <= n; ++k) mix[k] = alpha * fs[k] + beta * gs[k];

  const DctCoefficients af = forward(GridFunction1D(fs, 1.0));
  const DctCoefficients ag = forward(GridFunction1D(gs, 1.0));
  const DctCoefficients am = forward(GridFunction1D(mix, 1.0));
  for (int j = 0; j <= n; ++j)
    CHECK(std::abs(am[j] - alpha * af[j] - beta * ag[j]) < tol::kLinearity);
}

TEST_CASE("grid function construction rejects bad input") {
  CHECK_THROWS_AS(GridFunction1D({1.0}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(GridFunction1D({1.0, 2.0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(GridFunction1D({1.0, 2.0}, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(GridFunction1D({1.0, std::nan("")}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(DctCoefficients({1.0}, 1.0), std::invalid_argument);
}

#include "cedct/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cedct/tolerances.hpp"

namespace cedct {

namespace {

constexpr double kPi = std::numbers::pi;

void require_finite(std::span<const double> values, const char* what) {
  for (double v : values)
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be finite");
}

}  // namespace

GridFunction1D::GridFunction1D(std::vector<double> samples, double interval_length)
    : samples_(std::move(samples)), interval_length_(interval_length) {
  if (samples_.size() < 2) throw std::invalid_argument("grid function needs at least 2 samples");
  if (!(interval_length_ > 0.0) || !std::isfinite(interval_length_))
    throw std::invalid_argument("interval length must be positive");
  require_finite(samples_, "samples");
}

GridFunction1D GridFunction1D::sample(const std::function<double(double)>& g, int n_intervals,
                                      double interval_length) {
  if (n_intervals < 1) throw std::invalid_argument("need at least one grid interval");
  std::vector<double> values(n_intervals + 1);
  for (int k = 0; k <= n_intervals; ++k)
    values[k] = g(interval_length * k / n_intervals);
  return GridFunction1D(std::move(values), interval_length);
}

DctCoefficients::DctCoefficients(std::vector<double> coefficients, double interval_length)
    : coefficients_(std::move(coefficients)), interval_length_(interval_length) {
  if (coefficients_.size() < 2)
    throw std::invalid_argument("coefficient vector needs at least 2 entries");
  if (!(interval_length_ > 0.0) || !std::isfinite(interval_length_))
    throw std::invalid_argument("interval length must be positive");
  require_finite(coefficients_, "coefficients");
}

int class_weight(int n_intervals, int index) {
  if (n_intervals < 1) throw std::domain_error("class_weight: need at least one interval");
  if (index < 0 || index > n_intervals)
    throw std::domain_error("class_weight: index out of [0, N]");
  return (index == 0 || index == n_intervals) ? 1 : 2;
}

double grid_cosine(long long numerator, long long denominator) {
  // cos(pi x / d) has period 2d in x; reduce in exact integer arithmetic.
  const long long period = 2 * denominator;
  long long r = numerator % period;
  if (r < 0) r += period;
  return std::cos(kPi * static_cast<double>(r) / static_cast<double>(denominator));
}

Matrix dct_matrix(int n_intervals) {
  if (n_intervals < 1) throw std::domain_error("dct_matrix: need at least one interval");
  const int n = n_intervals;
  Matrix d(n + 1, n + 1);
  for (int j = 0; j <= n; ++j)
    for (int k = 0; k <= n; ++k)
      d(j, k) = class_weight(n, j) * class_weight(n, k) / (2.0 * n) *
                grid_cosine(static_cast<long long>(j) * k, n);
  return d;
}

Matrix cosine_matrix(int n_intervals) {
  if (n_intervals < 1) throw std::domain_error("cosine_matrix: need at least one interval");
  const int n = n_intervals;
  Matrix psi(n + 1, n + 1);
  for (int j = 0; j <= n; ++j)
    for (int k = 0; k <= n; ++k) psi(j, k) = grid_cosine(static_cast<long long>(j) * k, n);
  return psi;
}

DctCoefficients forward(const GridFunction1D& g) {
  const int n = g.n_intervals();
  std::vector<double> a(n + 1, 0.0);
  for (int j = 0; j <= n; ++j) {
    double acc = 0.0;
    for (int k = 0; k <= n; ++k)
      acc += class_weight(n, j) * class_weight(n, k) / (2.0 * n) *
             grid_cosine(static_cast<long long>(j) * k, n) * g[k];
    a[j] = acc;
  }
  return DctCoefficients(std::move(a), g.interval_length());
}

GridFunction1D inverse_on_grid(const DctCoefficients& a) {
  const int n = a.n_intervals();
  std::vector<double> g(n + 1, 0.0);
  for (int k = 0; k <= n; ++k) {
    double acc = 0.0;
    for (int j = 0; j <= n; ++j) acc += a[j] * grid_cosine(static_cast<long long>(j) * k, n);
    g[k] = acc;
  }
  return GridFunction1D(std::move(g), a.interval_length());
}

double evaluate(const DctCoefficients& a, double t) {
  const double t0 = a.interval_length();
  if (!(t >= 0.0 && t <= t0)) throw std::domain_error("evaluate: t outside [0, T0]");
  const double u = t / t0;
  const int n = a.n_intervals();
  double acc = 0.0;
  for (int j = 0; j <= n; ++j) acc += a[j] * std::cos(kPi * j * u);
  return acc;
}

double evaluate_kernel(const GridFunction1D& g, double t) {
  const double t0 = g.interval_length();
  if (!(t >= 0.0 && t <= t0)) throw std::domain_error("evaluate_kernel: t outside [0, T0]");
  const int n = g.n_intervals();
  const double u = t / t0;
  const double cos_u = std::cos(kPi * u);

  bool near_knot = false;
  for (int k = 0; k <= n && !near_knot; ++k) {
    if (std::abs(u - static_cast<double>(k) / n) <= tol::kKernelKnotBand ||
        std::abs(grid_cosine(k, n) - cos_u) <= tol::kKernelCosineBand)
      near_knot = true;
  }
  if (near_knot) return evaluate(forward(g), t);

  const double scale = std::sin(kPi * n * u) * std::sin(kPi * u) / (2.0 * n);
  double acc = 0.0;
  double sign = 1.0;
  for (int k = 0; k <= n; ++k) {
    acc += sign * class_weight(n, k) * g[k] / (grid_cosine(k, n) - cos_u);
    sign = -sign;
  }
  return scale * acc;
}

double derivative_at_knot(const GridFunction1D& g, int m) {
  const int n = g.n_intervals();
  if (m < 1 || m > n - 1)
    throw std::domain_error("derivative_at_knot: knot must be interior (1 <= m <= N-1)");
  const double u = static_cast<double>(m) / n;
  const double sin_u = std::sin(kPi * u);
  const double cos_m = grid_cosine(m, n);

  double acc = 0.0;
  for (int k = 0; k <= n; ++k) {
    if (k == m) continue;
    const double term = class_weight(n, k) * g[k] / (grid_cosine(k, n) - cos_m);
    acc += ((k - m) % 2 == 0) ? term : -term;
  }
  const double value = kPi / 2.0 * sin_u * acc + kPi * std::cos(kPi * u) / (2.0 * sin_u) * g[m];
  return value / g.interval_length();
}

double derivative_series(const DctCoefficients& a, double t) {
  const double t0 = a.interval_length();
  if (!(t > 0.0 && t < t0))
    throw std::domain_error("derivative_series: t must be strictly inside (0, T0)");
  const double u = t / t0;
  const int n = a.n_intervals();
  double acc = 0.0;
  for (int j = 1; j <= n; ++j) acc -= a[j] * (kPi * j / t0) * std::sin(kPi * j * u);
  return acc;
}

double discrete_form(const GridFunction1D& f, const GridFunction1D& g) {
  if (f.n_intervals() != g.n_intervals())
    throw std::domain_error("discrete_form: grid functions have different interval counts");
  if (f.interval_length() != g.interval_length())
    throw std::domain_error("discrete_form: grid functions have different interval lengths");
  const int n = f.n_intervals();
  double acc = 0.0;
  for (int k = 0; k <= n; ++k) acc += class_weight(n, k) * f[k] * g[k];
  return acc;
}

}  // namespace cedct

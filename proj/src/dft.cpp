#include "cedct/dft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cedct {

namespace {

constexpr double kPi = std::numbers::pi;

// exp(2 pi i numerator / denominator) with exact integer reduction
std::complex<double> unit_root(long long numerator, long long denominator) {
  long long r = numerator % denominator;
  if (r < 0) r += denominator;
  const double arg = 2.0 * kPi * static_cast<double>(r) / static_cast<double>(denominator);
  return {std::cos(arg), std::sin(arg)};
}

void check_finite(const std::vector<std::complex<double>>& values, const char* what) {
  for (const auto& v : values)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument(std::string(what) + " must be finite");
}

}  // namespace

DftCoefficients::DftCoefficients(std::vector<std::complex<double>> coefficients,
                                 double interval_length)
    : coefficients_(std::move(coefficients)), interval_length_(interval_length) {
  if (coefficients_.empty()) throw std::invalid_argument("DFT coefficients must be non-empty");
  if (!(interval_length_ > 0.0) || !std::isfinite(interval_length_))
    throw std::invalid_argument("interval length must be positive");
  check_finite(coefficients_, "DFT coefficients");
}

CftCoefficients::CftCoefficients(std::vector<std::complex<double>> coefficients,
                                 double interval_length, bool conjugate_symmetric)
    : coefficients_(std::move(coefficients)),
      interval_length_(interval_length),
      conjugate_symmetric_(conjugate_symmetric) {
  if (coefficients_.empty()) throw std::invalid_argument("CFT coefficients must be non-empty");
  if (!(interval_length_ > 0.0) || !std::isfinite(interval_length_))
    throw std::invalid_argument("interval length must be positive");
  check_finite(coefficients_, "CFT coefficients");
}

DftCoefficients dft_forward(const GridFunction1D& g) {
  const int n = g.n_intervals();
  std::vector<std::complex<double>> u(n);
  for (int j = 0; j < n; ++j) {
    std::complex<double> acc = 0.0;
    for (int k = 0; k < n; ++k)
      acc += g[k] * std::conj(unit_root(static_cast<long long>(k) * j, n));
    u[j] = acc / static_cast<double>(n);
  }
  return DftCoefficients(std::move(u), g.interval_length());
}

std::vector<std::complex<double>> dft_inverse_on_grid(const DftCoefficients& u) {
  const int n = u.size();
  std::vector<std::complex<double>> g(n);
  for (int k = 0; k < n; ++k) {
    std::complex<double> acc = 0.0;
    for (int j = 0; j < n; ++j) acc += u[j] * unit_root(static_cast<long long>(k) * j, n);
    g[k] = acc;
  }
  return g;
}

std::complex<double> cedft_evaluate(const DftCoefficients& u, double t) {
  const double t0 = u.interval_length();
  if (!(t >= 0.0 && t <= t0)) throw std::domain_error("cedft_evaluate: t outside [0, T0]");
  const int n = u.size();
  std::complex<double> acc = 0.0;
  for (int j = 0; j < n; ++j) {
    const double arg = 2.0 * kPi * j * t / t0;
    acc += u[j] * std::complex<double>(std::cos(arg), std::sin(arg));
  }
  return acc;
}

double truncated_series(const DftCoefficients& u, int harmonic_order, double t) {
  const int n = u.size();
  if (harmonic_order < 1 || 2 * harmonic_order > n)
    throw std::domain_error("truncated_series: harmonic order must satisfy 1 <= K <= N/2");
  const double t0 = u.interval_length();
  double acc = u[0].real();
  for (int j = 1; j <= harmonic_order; ++j) {
    const double arg = 2.0 * kPi * j * t / t0;
    acc += 2.0 * (u[j].real() * std::cos(arg) - u[j].imag() * std::sin(arg));
  }
  return acc;
}

double truncated_series_derivative(const DftCoefficients& u, int harmonic_order, double t) {
  const int n = u.size();
  if (harmonic_order < 1 || 2 * harmonic_order > n)
    throw std::domain_error("truncated_series_derivative: harmonic order must satisfy 1 <= K <= N/2");
  const double t0 = u.interval_length();
  double acc = 0.0;
  for (int j = 1; j <= harmonic_order; ++j) {
    const double omega = 2.0 * kPi * j / t0;
    const double arg = omega * t;
    // d/dt 2 Re[u e^{i arg}] = -2 omega Im[u e^{i arg}]
    acc -= 2.0 * omega * (u[j].real() * std::sin(arg) + u[j].imag() * std::cos(arg));
  }
  return acc;
}

CftCoefficients cft_coefficients(const std::function<double(double)>& g, int harmonic_order,
                                 int quadrature_points, double interval_length) {
  if (harmonic_order < 0) throw std::domain_error("cft_coefficients: harmonic order must be >= 0");
  if (!(interval_length > 0.0))
    throw std::domain_error("cft_coefficients: interval length must be positive");
  const int min_points = std::max(2, 8 * harmonic_order);
  if (quadrature_points < min_points)
    throw std::domain_error("cft_coefficients: too few quadrature points (need >= 8K)");
  if (quadrature_points % 2 != 0)
    throw std::domain_error("cft_coefficients: Simpson rule needs an even number of subintervals");

  const int q = quadrature_points;
  const double t0 = interval_length;
  const double h = t0 / q;
  std::vector<double> samples(q + 1);
  for (int i = 0; i <= q; ++i) samples[i] = g(t0 * i / q);

  std::vector<std::complex<double>> c(harmonic_order + 1);
  for (int j = 0; j <= harmonic_order; ++j) {
    std::complex<double> acc = 0.0;
    for (int i = 0; i <= q; ++i) {
      const double w = (i == 0 || i == q) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
      const double arg = -2.0 * kPi * j * (t0 * i / q) / t0;
      acc += w * samples[i] * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    c[j] = acc * (h / 3.0) / t0;
  }
  return CftCoefficients(std::move(c), t0, true);
}

double cft_evaluate(const CftCoefficients& c, double t) {
  const double t0 = c.interval_length();
  double acc = c[0].real();
  for (int j = 1; j <= c.harmonic_order(); ++j) {
    const double arg = 2.0 * kPi * j * t / t0;
    acc += 2.0 * (c[j].real() * std::cos(arg) - c[j].imag() * std::sin(arg));
  }
  return acc;
}

}  // namespace cedct

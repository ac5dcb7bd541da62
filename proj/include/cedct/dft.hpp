#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "cedct/spectral.hpp"

namespace cedct {

/// Standard DFT coefficients u_0..u_{N-1} of the first N grid samples.
class DftCoefficients {
 public:
  DftCoefficients(std::vector<std::complex<double>> coefficients, double interval_length);

  int size() const { return static_cast<int>(coefficients_.size()); }
  double interval_length() const { return interval_length_; }
  const std::vector<std::complex<double>>& values() const { return coefficients_; }
  std::complex<double> operator[](int j) const { return coefficients_[j]; }

 private:
  std::vector<std::complex<double>> coefficients_;
  double interval_length_;
};

/// Fourier-integral coefficients c_0..c_K of a real function on [0, T0];
/// the negative-order half follows from c_{-j} = conj(c_j).
class CftCoefficients {
 public:
  CftCoefficients(std::vector<std::complex<double>> coefficients, double interval_length,
                  bool conjugate_symmetric = true);

  int harmonic_order() const { return static_cast<int>(coefficients_.size()) - 1; }
  double interval_length() const { return interval_length_; }
  bool conjugate_symmetric() const { return conjugate_symmetric_; }
  const std::vector<std::complex<double>>& values() const { return coefficients_; }
  std::complex<double> operator[](int j) const { return coefficients_[j]; }

 private:
  std::vector<std::complex<double>> coefficients_;
  double interval_length_;
  bool conjugate_symmetric_;
};

/// u_j = (1/N) sum_{k=0}^{N-1} g_k exp(-2 pi i k j / N).
/// Only the first N of the N+1 grid samples enter; g_N is ignored (it is
/// redundant for periodic data and simply dropped otherwise).
DftCoefficients dft_forward(const GridFunction1D& g);

/// g_k = sum_j u_j exp(2 pi i k j / N) for k = 0..N-1. Complex in general,
/// real up to roundoff when the coefficients came from real samples.
std::vector<std::complex<double>> dft_inverse_on_grid(const DftCoefficients& u);

/// Continuous extension h_N(t) = sum_{j=0}^{N-1} u_j exp(2 pi i j t / T0).
/// Matches the samples at the grid knots but is genuinely complex (and
/// strongly oscillatory) between them.
std::complex<double> cedft_evaluate(const DftCoefficients& u, double t);

/// Half-spectrum series s_K(t) = u_0 + 2 Re sum_{j=1}^{K} u_j exp(2 pi i j t / T0),
/// 1 <= K <= N/2. Not an interpolant: s_K(t_k) != g_k in general.
double truncated_series(const DftCoefficients& u, int harmonic_order, double t);

/// Term-by-term derivative of truncated_series.
double truncated_series_derivative(const DftCoefficients& u, int harmonic_order, double t);

/// c_j = (1/T0) integral_0^T0 g(t) exp(-2 pi i j t / T0) dt for j = 0..K,
/// by composite Simpson quadrature with the given (even) number of
/// subintervals; requires quadrature_points >= max(2, 8K).
CftCoefficients cft_coefficients(const std::function<double(double)>& g, int harmonic_order,
                                 int quadrature_points = 4096, double interval_length = 1.0);

/// P_K(t) = c_0 + 2 Re sum_{j=1}^{K} c_j exp(2 pi i j t / T0).
double cft_evaluate(const CftCoefficients& c, double t);

}  // namespace cedct

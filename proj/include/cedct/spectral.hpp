#pragma once

#include <functional>
#include <span>
#include <vector>

#include "cedct/matrix.hpp"

namespace cedct {

/// Real samples g_0..g_N of a function on the equidistant grid
/// t_k = k*T0/N over [0, T0].
class GridFunction1D {
 public:
  /// Takes N+1 finite samples (N >= 1) and the interval length T0 > 0.
  GridFunction1D(std::vector<double> samples, double interval_length);

  /// Samples a callable at the N+1 grid knots.
  static GridFunction1D sample(const std::function<double(double)>& g, int n_intervals,
                               double interval_length);

  int n_intervals() const { return static_cast<int>(samples_.size()) - 1; }
  double interval_length() const { return interval_length_; }
  double knot(int k) const { return interval_length_ * k / n_intervals(); }

  const std::vector<double>& samples() const { return samples_; }
  double operator[](int k) const { return samples_[k]; }

 private:
  std::vector<double> samples_;
  double interval_length_;
};

/// Coefficients a_0..a_N of the finite cosine series
/// f_N(t) = sum_j a_j cos(pi j t / T0).
class DctCoefficients {
 public:
  DctCoefficients(std::vector<double> coefficients, double interval_length);

  int n_intervals() const { return static_cast<int>(coefficients_.size()) - 1; }
  double interval_length() const { return interval_length_; }

  const std::vector<double>& values() const { return coefficients_; }
  double operator[](int j) const { return coefficients_[j]; }

 private:
  std::vector<double> coefficients_;
  double interval_length_;
};

/// Weight of grid index k: 1 at the interval ends (k = 0 or k = N), 2 inside.
/// These weights make the sampled cosines orthogonal under discrete_form.
int class_weight(int n_intervals, int index);

/// cos(pi * numerator / denominator) with the argument reduced exactly in
/// integer arithmetic, so grid cosines stay accurate for large index products.
double grid_cosine(long long numerator, long long denominator);

/// Analysis matrix D_N with entries C_j C_k / (2N) * cos(pi j k / N).
/// Symmetric, and the exact inverse of cosine_matrix(N).
Matrix dct_matrix(int n_intervals);

/// Synthesis matrix Psi_N with entries cos(pi j k / N).
Matrix cosine_matrix(int n_intervals);

/// Forward transform: a_j = sum_k C_j C_k / (2N) * g_k cos(pi j k / N).
/// Equivalent to applying dct_matrix(N) to the sample vector.
DctCoefficients forward(const GridFunction1D& g);

/// Inverse transform on the grid knots: g_k = sum_j a_j cos(pi j k / N).
/// Exact: composing with forward reproduces the input.
GridFunction1D inverse_on_grid(const DctCoefficients& a);

/// Continuous extension f_N(t) = sum_j a_j cos(pi j t / T0), t in [0, T0].
/// Interpolates the originating samples at every grid knot.
double evaluate(const DctCoefficients& a, double t);

/// f_N(t) through the closed-form kernel
///   f_N(t) = sum_k (-1)^k C_k / (2N) * sin(pi N u) sin(pi u)
///            / (cos(pi k/N) - cos(pi u)) * g_k,      u = t/T0,
/// which avoids computing the coefficients. Inside a narrow band around any
/// knot the denominator cancellation is avoided by evaluating the cosine
/// series instead, so evaluate_kernel(g, t_k) == g_k holds at the knots.
double evaluate_kernel(const GridFunction1D& g, double t);

/// Derivative of the continuous extension at the interior knot t_m
/// (1 <= m <= N-1), via the closed-form expression
///   f'_N(t_m) = pi/2 sin(pi u_m) sum_{k != m} (-1)^{k-m} C_k U_k
///               + pi cos(pi u_m) / (2 sin(pi u_m)) * g_m,
/// with U_k = g_k / (cos(pi k/N) - cos(pi u_m)), scaled by 1/T0.
double derivative_at_knot(const GridFunction1D& g, int m);

/// Term-by-term derivative sum_j a_j (-pi j / T0) sin(pi j t / T0)
/// at any t strictly inside (0, T0).
double derivative_series(const DctCoefficients& a, double t);

/// Weighted grid product sum_k C_k f_k g_k. The sampled cosine basis is
/// orthogonal under this form: <psi_k, psi_m> = (2N / C_k) delta_km.
double discrete_form(const GridFunction1D& f, const GridFunction1D& g);

}  // namespace cedct

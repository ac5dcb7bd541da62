#pragma once

#include <vector>

#include "cedct/image.hpp"
#include "cedct/multidim.hpp"

namespace cedct {

// Analytic test signals used by the demo figures and the test suites.
// All live on [0, 1] unless sampled with another interval length.

/// exp(-(t/sigma)^2 / 2)
struct Gauss {
  double sigma;
  double operator()(double t) const;
  double derivative(double t) const;
};

/// a1 exp(-((t-t1)/s1)^2/2) + a2 exp(-((t-t2)/s2)^2/2)
struct TwoGauss {
  double a1, a2, s1, s2, t1, t2;
  double operator()(double t) const;
  double derivative(double t) const;
};

/// amplitude * exp(-((t-center)/width)^power); steep flanks for even power >= 4
struct FlatTop {
  double amplitude, width;
  int power;
  double center = 0.5;
  double operator()(double t) const;
  double derivative(double t) const;
};

/// exp(-4t) + exp(-((t-0.5)/sigma)^2/2) / 2
struct ExpPlusGauss {
  double sigma;
  double operator()(double t) const;
  double derivative(double t) const;
};

/// Anisotropic 2-D Gaussian with the major axis rotated by angle_rad.
struct GaussianEllipse {
  double cx, cy;
  double sigma_major, sigma_minor;
  double angle_rad;
  double operator()(double x, double y) const;
};

/// Sum of two Gaussian ellipses on the unit square.
struct TwoEllipseField {
  GaussianEllipse first, second;
  double operator()(double x, double y) const;
};

/// Two narrow ellipses (sigma_minor = sigma_perp) with perpendicular major axes.
TwoEllipseField crossed_ellipses(double sigma_perp = 0.025);

/// Two ellipses with major axes 20 degrees apart and nearby peaks.
TwoEllipseField tilted_ellipses(double sigma_perp = 0.05);

/// Samples a field on the (m x n)-interval unit-square lattice
/// (axis 0 = y, axis 1 = x).
GridFunctionND sample_field(const TwoEllipseField& field, int y_intervals, int x_intervals);

/// Renders a field into an 8-bit image: the unit square is mapped onto the
/// pixel lattice and values are scaled by 255 and rounded.
GrayImage render_field_image(const TwoEllipseField& field, int width, int height);

}  // namespace cedct

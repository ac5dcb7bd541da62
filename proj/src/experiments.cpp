#include "cedct/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cedct {

double Gauss::operator()(double t) const { return std::exp(-0.5 * (t / sigma) * (t / sigma)); }

double Gauss::derivative(double t) const { return (*this)(t) * (-t / (sigma * sigma)); }

double TwoGauss::operator()(double t) const {
  const double z1 = (t - t1) / s1, z2 = (t - t2) / s2;
  return a1 * std::exp(-0.5 * z1 * z1) + a2 * std::exp(-0.5 * z2 * z2);
}

double TwoGauss::derivative(double t) const {
  const double z1 = (t - t1) / s1, z2 = (t - t2) / s2;
  return a1 * std::exp(-0.5 * z1 * z1) * (-z1 / s1) + a2 * std::exp(-0.5 * z2 * z2) * (-z2 / s2);
}

double FlatTop::operator()(double t) const {
  return amplitude * std::exp(-std::pow((t - center) / width, power));
}

double FlatTop::derivative(double t) const {
  const double z = (t - center) / width;
  return (*this)(t) * (-power * std::pow(z, power - 1) / width);
}

double ExpPlusGauss::operator()(double t) const {
  const double z = (t - 0.5) / sigma;
  return std::exp(-4.0 * t) + 0.5 * std::exp(-0.5 * z * z);
}

double ExpPlusGauss::derivative(double t) const {
  const double z = (t - 0.5) / sigma;
  return -4.0 * std::exp(-4.0 * t) + 0.5 * std::exp(-0.5 * z * z) * (-z / sigma);
}

double GaussianEllipse::operator()(double x, double y) const {
  const double ca = std::cos(angle_rad), sa = std::sin(angle_rad);
  const double dx = x - cx, dy = y - cy;
  const double along = ca * dx + sa * dy;
  const double across = -sa * dx + ca * dy;
  return std::exp(-0.5 * (along / sigma_major) * (along / sigma_major) -
                  0.5 * (across / sigma_minor) * (across / sigma_minor));
}

double TwoEllipseField::operator()(double x, double y) const {
  return first(x, y) + second(x, y);
}

TwoEllipseField crossed_ellipses(double sigma_perp) {
  return {{0.35, 0.5, 0.15, sigma_perp, 0.0},
          {0.65, 0.5, 0.15, sigma_perp, std::numbers::pi / 2}};
}

TwoEllipseField tilted_ellipses(double sigma_perp) {
  return {{0.45, 0.5, 0.15, sigma_perp, 0.0},
          {0.55, 0.5, 0.15, sigma_perp, std::numbers::pi / 9}};
}

GridFunctionND sample_field(const TwoEllipseField& field, int y_intervals, int x_intervals) {
  std::vector<double> samples(static_cast<std::size_t>(y_intervals + 1) * (x_intervals + 1));
  for (int j = 0; j <= y_intervals; ++j)
    for (int i = 0; i <= x_intervals; ++i)
      samples[static_cast<std::size_t>(j) * (x_intervals + 1) + i] =
          field(static_cast<double>(i) / x_intervals, static_cast<double>(j) / y_intervals);
  return GridFunctionND({y_intervals, x_intervals}, {1.0, 1.0}, std::move(samples));
}

GrayImage render_field_image(const TwoEllipseField& field, int width, int height) {
  std::vector<std::uint8_t> pixels(static_cast<std::size_t>(width) * height);
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x) {
      const double u = width > 1 ? static_cast<double>(x) / (width - 1) : 0.0;
      const double v = height > 1 ? static_cast<double>(y) / (height - 1) : 0.0;
      const double value = std::clamp(field(u, v), 0.0, 1.0) * 255.0;
      pixels[static_cast<std::size_t>(y) * width + x] =
          static_cast<std::uint8_t>(std::llround(value));
    }
  return GrayImage(width, height, std::move(pixels));
}

}  // namespace cedct

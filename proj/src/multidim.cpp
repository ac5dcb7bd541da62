#include "cedct/multidim.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cedct/matrix.hpp"
#include "cedct/spectral.hpp"

namespace cedct {

namespace detail {

LatticeShape::LatticeShape(std::vector<int> intervals, std::vector<double> extents)
    : intervals_(std::move(intervals)), extents_(std::move(extents)) {
  if (intervals_.empty()) throw std::invalid_argument("lattice needs at least one axis");
  if (intervals_.size() != extents_.size())
    throw std::invalid_argument("one extent per axis required");
  for (int m : intervals_)
    if (m < 1) throw std::invalid_argument("every axis needs at least one interval");
  for (double x : extents_)
    if (!(x > 0.0) || !std::isfinite(x))
      throw std::invalid_argument("axis extents must be positive");
}

std::size_t LatticeShape::total_points() const {
  std::size_t n = 1;
  for (int m : intervals_) n *= static_cast<std::size_t>(m) + 1;
  return n;
}

namespace {

void check_payload(const LatticeShape& shape, const std::vector<double>& data) {
  if (data.size() != shape.total_points())
    throw std::invalid_argument("data size does not match the lattice shape");
  for (double v : data)
    if (!std::isfinite(v)) throw std::invalid_argument("lattice data must be finite");
}

std::size_t flat_offset(const LatticeShape& shape, std::span<const int> index) {
  if (static_cast<int>(index.size()) != shape.rank())
    throw std::invalid_argument("index rank mismatch");
  std::size_t off = 0;
  for (int a = 0; a < shape.rank(); ++a) {
    if (index[a] < 0 || index[a] > shape.intervals()[a])
      throw std::domain_error("lattice index out of range");
    off = off * (shape.intervals()[a] + 1) + index[a];
  }
  return off;
}

// Applies `op` along one axis of a dense row-major tensor, replacing that
// axis' length by op.rows(). Summation order inside each line is fixed.
std::vector<double> apply_along_axis(const std::vector<double>& src,
                                     const std::vector<int>& points, int axis, const Matrix& op) {
  const int len = points[axis];
  std::size_t outer = 1, inner = 1;
  for (int a = 0; a < axis; ++a) outer *= points[a];
  for (int a = axis + 1; a < static_cast<int>(points.size()); ++a) inner *= points[a];

  std::vector<double> out(outer * static_cast<std::size_t>(op.rows()) * inner, 0.0);
  std::vector<double> line(len), result;
  for (std::size_t o = 0; o < outer; ++o)
    for (std::size_t i = 0; i < inner; ++i) {
      for (int k = 0; k < len; ++k) line[k] = src[(o * len + k) * inner + i];
      result = op.apply(line);
      for (int r = 0; r < op.rows(); ++r)
        out[(o * op.rows() + r) * inner + i] = result[r];
    }
  return out;
}

}  // namespace
}  // namespace detail

GridFunctionND::GridFunctionND(std::vector<int> intervals, std::vector<double> extents,
                               std::vector<double> samples)
    : shape_(std::move(intervals), std::move(extents)), samples_(std::move(samples)) {
  detail::check_payload(shape_, samples_);
}

double GridFunctionND::at(std::span<const int> index) const {
  return samples_[detail::flat_offset(shape_, index)];
}

CoefficientTensorND::CoefficientTensorND(std::vector<int> intervals, std::vector<double> extents,
                                         std::vector<double> coefficients)
    : shape_(std::move(intervals), std::move(extents)), values_(std::move(coefficients)) {
  detail::check_payload(shape_, values_);
}

double CoefficientTensorND::at(std::span<const int> index) const {
  return values_[detail::flat_offset(shape_, index)];
}

CoefficientTensorND forward_nd(const GridFunctionND& g) {
  std::vector<int> points(g.rank());
  for (int a = 0; a < g.rank(); ++a) points[a] = g.axis_points(a);

  std::vector<double> data = g.samples();
  for (int a = 0; a < g.rank(); ++a)
    data = detail::apply_along_axis(data, points, a, dct_matrix(g.intervals()[a]));
  return CoefficientTensorND(g.intervals(), g.extents(), std::move(data));
}

double evaluate_nd(const CoefficientTensorND& a, std::span<const double> point) {
  if (static_cast<int>(point.size()) != a.rank())
    throw std::invalid_argument("evaluate_nd: point rank mismatch");
  for (int axis = 0; axis < a.rank(); ++axis)
    if (!(point[axis] >= 0.0 && point[axis] <= a.extents()[axis]))
      throw std::domain_error("evaluate_nd: coordinate outside [0, X_i]");

  constexpr double pi = std::numbers::pi;
  // Contract the fastest axis first; each pass shrinks the tensor by one axis.
  std::vector<double> data = a.values();
  for (int axis = a.rank() - 1; axis >= 0; --axis) {
    const int len = a.axis_points(axis);
    const double u = point[axis] / a.extents()[axis];
    std::vector<double> cosines(len);
    for (int j = 0; j < len; ++j) cosines[j] = std::cos(pi * j * u);

    const std::size_t blocks = data.size() / len;
    std::vector<double> reduced(blocks, 0.0);
    for (std::size_t b = 0; b < blocks; ++b) {
      double acc = 0.0;
      for (int j = 0; j < len; ++j) acc += data[b * len + j] * cosines[j];
      reduced[b] = acc;
    }
    data = std::move(reduced);
  }
  return data[0];
}

GridFunctionND evaluate_nd_grid(const CoefficientTensorND& a, std::span<const int> refinement) {
  if (static_cast<int>(refinement.size()) != a.rank())
    throw std::invalid_argument("evaluate_nd_grid: one refinement per axis required");
  for (int r : refinement)
    if (r < 1) throw std::domain_error("evaluate_nd_grid: refinement must be >= 1");

  std::vector<int> points(a.rank());
  std::vector<int> out_intervals(a.rank());
  for (int axis = 0; axis < a.rank(); ++axis) {
    points[axis] = a.axis_points(axis);
    out_intervals[axis] = a.intervals()[axis] * refinement[axis];
  }

  std::vector<double> data = a.values();
  for (int axis = 0; axis < a.rank(); ++axis) {
    const int m = a.intervals()[axis];
    const int rm = out_intervals[axis];
    Matrix synth(rm + 1, m + 1);
    for (int p = 0; p <= rm; ++p)
      for (int j = 0; j <= m; ++j)
        synth(p, j) = grid_cosine(static_cast<long long>(p) * j, rm);
    data = detail::apply_along_axis(data, points, axis, synth);
    points[axis] = rm + 1;
  }
  return GridFunctionND(std::move(out_intervals), a.extents(), std::move(data));
}

GridFunctionND evaluate_nd_grid(const CoefficientTensorND& a, int refinement) {
  std::vector<int> per_axis(a.rank(), refinement);
  return evaluate_nd_grid(a, per_axis);
}

}  // namespace cedct

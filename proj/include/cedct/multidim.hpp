#pragma once

#include <span>
#include <vector>

namespace cedct {

namespace detail {
// Shared shape bookkeeping for dense rectangular lattices.
// Layout is row-major with axis 0 slowest, so file formats stay bit-stable.
class LatticeShape {
 public:
  LatticeShape(std::vector<int> intervals, std::vector<double> extents);

  int rank() const { return static_cast<int>(intervals_.size()); }
  const std::vector<int>& intervals() const { return intervals_; }
  const std::vector<double>& extents() const { return extents_; }
  int axis_points(int axis) const { return intervals_[axis] + 1; }
  std::size_t total_points() const;

 private:
  std::vector<int> intervals_;
  std::vector<double> extents_;
};
}  // namespace detail

/// Samples of a function on a rectangular grid with M_i intervals
/// (M_i + 1 knots) along axis i spanning [0, X_i].
class GridFunctionND {
 public:
  GridFunctionND(std::vector<int> intervals, std::vector<double> extents,
                 std::vector<double> samples);

  int rank() const { return shape_.rank(); }
  const std::vector<int>& intervals() const { return shape_.intervals(); }
  const std::vector<double>& extents() const { return shape_.extents(); }
  int axis_points(int axis) const { return shape_.axis_points(axis); }
  const std::vector<double>& samples() const { return samples_; }

  double at(std::span<const int> index) const;

 private:
  detail::LatticeShape shape_;
  std::vector<double> samples_;
};

/// Tensor of cosine-series coefficients A_{m_1..m_n} on the same lattice
/// shape as the originating grid.
class CoefficientTensorND {
 public:
  CoefficientTensorND(std::vector<int> intervals, std::vector<double> extents,
                      std::vector<double> coefficients);

  int rank() const { return shape_.rank(); }
  const std::vector<int>& intervals() const { return shape_.intervals(); }
  const std::vector<double>& extents() const { return shape_.extents(); }
  int axis_points(int axis) const { return shape_.axis_points(axis); }
  const std::vector<double>& values() const { return values_; }

  double at(std::span<const int> index) const;

 private:
  detail::LatticeShape shape_;
  std::vector<double> values_;
};

/// Tensor-product transform: the 1-D weighted cosine analysis applied along
/// each axis in turn. Equals the explicit nested sum with weight product
/// prod_i C_{M_i,m_i} C_{M_i,j_i} / (2^n prod_i M_i).
CoefficientTensorND forward_nd(const GridFunctionND& g);

/// F(x_1..x_n) = sum A_{m_1..m_n} prod_i cos(pi m_i x_i / X_i).
/// Exact at every grid knot.
double evaluate_nd(const CoefficientTensorND& a, std::span<const double> point);

/// Samples F on the lattice with axis i subdivided refinement[i]-fold,
/// using one cosine synthesis matrix per axis. Refinement 1 reproduces the
/// original samples.
GridFunctionND evaluate_nd_grid(const CoefficientTensorND& a, std::span<const int> refinement);
GridFunctionND evaluate_nd_grid(const CoefficientTensorND& a, int refinement);

}  // namespace cedct

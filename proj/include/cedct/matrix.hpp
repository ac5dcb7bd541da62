#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace cedct {

// Minimal dense row-major matrix. Just enough for building, applying and
// checking the transform matrices; not a general linear-algebra type.
class Matrix {
 public:
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0.0) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be positive");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  double operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  std::span<const double> data() const { return data_; }

  std::vector<double> apply(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("matrix/vector size mismatch");
    std::vector<double> y(rows_, 0.0);
    for (int r = 0; r < rows_; ++r) {
      double acc = 0.0;
      for (int c = 0; c < cols_; ++c) acc += (*this)(r, c) * x[c];
      y[r] = acc;
    }
    return y;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product size mismatch");
    Matrix out(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r)
      for (int k = 0; k < a.cols_; ++k) {
        const double v = a(r, k);
        for (int c = 0; c < b.cols_; ++c) out(r, c) += v * b(k, c);
      }
    return out;
  }

 private:
  int rows_;
  int cols_;
  std::vector<double> data_;
};

}  // namespace cedct

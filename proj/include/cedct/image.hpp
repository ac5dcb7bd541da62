#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cedct/multidim.hpp"

namespace cedct {

/// Parse failure for PGM or coefficient files; the message carries the
/// byte offset (binary) or line number (text) of the problem.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 8-bit grayscale raster, rows stored top to bottom.
class GrayImage {
 public:
  GrayImage(int width, int height, std::vector<std::uint8_t> pixels);

  int width() const { return width_; }
  int height() const { return height_; }
  const std::vector<std::uint8_t>& pixels() const { return pixels_; }
  std::uint8_t pixel(int x, int y) const { return pixels_[static_cast<std::size_t>(y) * width_ + x]; }

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> pixels_;
};

/// Reads a PGM file, P5 (binary) or P2 (ASCII), maxval 255.
GrayImage load_pgm(const std::string& path);

/// Writes binary P5, maxval 255. save then load is the identity.
void save_pgm(const GrayImage& img, const std::string& path);

struct BlockTile {
  int x0, y0;          // origin in pixels
  int width, height;   // extent in pixels, always >= 2
};

/// Disjoint tiling of an image by nominally block_width x block_height
/// tiles, in row-major tile order. Trailing tiles shrink to fit; a trailing
/// remainder of a single pixel is merged into the preceding tile because a
/// one-pixel strip has no grid interval to transform.
class BlockPlan {
 public:
  static BlockPlan cover(int image_width, int image_height, int block_width, int block_height);

  int image_width() const { return image_width_; }
  int image_height() const { return image_height_; }
  int block_width() const { return block_width_; }
  int block_height() const { return block_height_; }
  const std::vector<BlockTile>& tiles() const { return tiles_; }
  const std::vector<int>& column_widths() const { return column_widths_; }
  const std::vector<int>& row_heights() const { return row_heights_; }

 private:
  BlockPlan() = default;
  int image_width_ = 0, image_height_ = 0;
  int block_width_ = 0, block_height_ = 0;
  std::vector<int> column_widths_;
  std::vector<int> row_heights_;
  std::vector<BlockTile> tiles_;
};

class CompressionPolicy {
 public:
  enum class Kind { lowpass, threshold };

  /// Zeroes every coefficient with either axis index above max_mode.
  static CompressionPolicy lowpass(int max_mode);

  /// Zeroes every coefficient (except the leading one) whose magnitude is
  /// at most fraction * max |A| over the non-leading entries.
  static CompressionPolicy threshold(double fraction);

  Kind kind() const { return kind_; }
  int max_mode() const { return max_mode_; }
  double fraction() const { return fraction_; }

 private:
  Kind kind_;
  int max_mode_ = 0;
  double fraction_ = 0.0;
};

struct CompressResult {
  CoefficientTensorND coefficients;
  std::int64_t retained_count;  // coefficients kept by the policy
};

/// Transforms each plan tile independently. A tile of P x Q pixels is a
/// (Q-1) x (P-1)-interval grid whose knots are the pixel centers (axis 0
/// runs down the rows). Returned in plan tile order.
std::vector<CoefficientTensorND> block_transform(const GrayImage& img, const BlockPlan& plan);

CompressResult compress(const CoefficientTensorND& coefficients, const CompressionPolicy& policy);

/// Evaluates every block on its refinement-fold subdivided lattice and
/// assembles the results. Per-axis output size is the sum over tiles of
/// r*(P-1)+1 refined knots, e.g. a 56x140 image in 28x28 tiles maps to
/// 164x410 at refinement 3. The assembled field is linearly rescaled onto
/// [0,255] only when it strays outside, then rounded half away from zero.
GrayImage reconstruct(const std::vector<CoefficientTensorND>& blocks, const BlockPlan& plan,
                      int refinement);

/// Real-valued variant of reconstruct: the assembled field before the
/// rescale/rounding step, in row-major order with its dimensions.
struct ReconstructedField {
  int width, height;
  std::vector<double> values;
};
ReconstructedField reconstruct_field(const std::vector<CoefficientTensorND>& blocks,
                                     const BlockPlan& plan, int refinement);

/// Binary coefficient dump for 2-D tensors: 8-byte magic "CEDCT1\0\0",
/// then u32 rows, u32 cols (little endian), then rows*cols float64
/// (little endian, row-major).
void write_coefficients(const CoefficientTensorND& coefficients, const std::string& path);
CoefficientTensorND read_coefficients(const std::string& path);

}  // namespace cedct

#include "cedct/image.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace cedct {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return data;
}

[[noreturn]] void parse_fail(const std::string& path, std::size_t offset, const std::string& what) {
  throw ParseError(path + ": " + what + " (byte " + std::to_string(offset) + ")");
}

bool is_pgm_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

// Whitespace and '#' comments between PGM header tokens.
void skip_pgm_separators(const std::string& data, std::size_t& pos) {
  while (pos < data.size()) {
    if (is_pgm_space(data[pos])) {
      ++pos;
    } else if (data[pos] == '#') {
      while (pos < data.size() && data[pos] != '\n') ++pos;
    } else {
      break;
    }
  }
}

int parse_pgm_int(const std::string& data, std::size_t& pos, const std::string& path,
                  const char* what) {
  skip_pgm_separators(data, pos);
  if (pos >= data.size() || data[pos] < '0' || data[pos] > '9')
    parse_fail(path, pos, std::string("expected ") + what);
  long value = 0;
  while (pos < data.size() && data[pos] >= '0' && data[pos] <= '9') {
    value = value * 10 + (data[pos] - '0');
    if (value > std::numeric_limits<int>::max()) parse_fail(path, pos, std::string(what) + " too large");
    ++pos;
  }
  return static_cast<int>(value);
}

}  // namespace

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width_ < 1 || height_ < 1) throw std::invalid_argument("image dimensions must be positive");
  if (pixels_.size() != static_cast<std::size_t>(width_) * height_)
    throw std::invalid_argument("pixel count does not match image dimensions");
}

GrayImage load_pgm(const std::string& path) {
  const std::string data = read_file(path);
  std::size_t pos = 0;
  if (data.size() < 2 || data[0] != 'P' || (data[1] != '5' && data[1] != '2'))
    parse_fail(path, 0, "not a P5/P2 PGM file");
  const bool binary = data[1] == '5';
  pos = 2;

  const int width = parse_pgm_int(data, pos, path, "width");
  const int height = parse_pgm_int(data, pos, path, "height");
  const int maxval = parse_pgm_int(data, pos, path, "maxval");
  if (width < 1 || height < 1) parse_fail(path, pos, "image dimensions must be positive");
  if (maxval != 255) parse_fail(path, pos, "unsupported maxval " + std::to_string(maxval));

  const std::size_t count = static_cast<std::size_t>(width) * height;
  std::vector<std::uint8_t> pixels(count);

  if (binary) {
    if (pos >= data.size() || !is_pgm_space(data[pos]))
      parse_fail(path, pos, "expected single whitespace before raster data");
    ++pos;
    if (data.size() - pos < count)
      parse_fail(path, data.size(), "truncated raster data: need " + std::to_string(count) +
                                        " bytes, have " + std::to_string(data.size() - pos));
    std::memcpy(pixels.data(), data.data() + pos, count);
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      const int v = parse_pgm_int(data, pos, path, "pixel value");
      if (v > 255) parse_fail(path, pos, "pixel value exceeds maxval");
      pixels[i] = static_cast<std::uint8_t>(v);
    }
  }
  return GrayImage(width, height, std::move(pixels));
}

void save_pgm(const GrayImage& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot open file for writing");
  out << "P5\n" << img.width() << " " << img.height() << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.pixels().data()),
            static_cast<std::streamsize>(img.pixels().size()));
  if (!out) throw std::runtime_error(path + ": write failed");
}

namespace {

std::vector<int> split_axis(int total, int block) {
  std::vector<int> sizes;
  int remaining = total;
  while (remaining >= block + 2) {
    sizes.push_back(block);
    remaining -= block;
  }
  // remaining is in [block, block+1] or the whole axis if it was short;
  // either way a single final tile keeps every tile at least 2 pixels wide.
  sizes.push_back(remaining);
  return sizes;
}

}  // namespace

BlockPlan BlockPlan::cover(int image_width, int image_height, int block_width, int block_height) {
  if (image_width < 2 || image_height < 2)
    throw std::invalid_argument("image must be at least 2x2 pixels to transform");
  if (block_width < 2 || block_height < 2)
    throw std::invalid_argument("blocks must be at least 2x2 pixels");

  BlockPlan plan;
  plan.image_width_ = image_width;
  plan.image_height_ = image_height;
  plan.block_width_ = block_width;
  plan.block_height_ = block_height;
  plan.column_widths_ = split_axis(image_width, block_width);
  plan.row_heights_ = split_axis(image_height, block_height);

  int y0 = 0;
  for (int h : plan.row_heights_) {
    int x0 = 0;
    for (int w : plan.column_widths_) {
      plan.tiles_.push_back({x0, y0, w, h});
      x0 += w;
    }
    y0 += h;
  }
  return plan;
}

CompressionPolicy CompressionPolicy::lowpass(int max_mode) {
  if (max_mode < 0) throw std::invalid_argument("lowpass cutoff must be >= 0");
  CompressionPolicy p;
  p.kind_ = Kind::lowpass;
  p.max_mode_ = max_mode;
  return p;
}

CompressionPolicy CompressionPolicy::threshold(double fraction) {
  if (!(fraction > 0.0) || !(fraction < 1.0))
    throw std::invalid_argument("threshold fraction must lie in (0, 1)");
  CompressionPolicy p;
  p.kind_ = Kind::threshold;
  p.fraction_ = fraction;
  return p;
}

std::vector<CoefficientTensorND> block_transform(const GrayImage& img, const BlockPlan& plan) {
  if (plan.image_width() != img.width() || plan.image_height() != img.height())
    throw std::domain_error("block plan does not match the image dimensions");

  std::vector<CoefficientTensorND> blocks;
  blocks.reserve(plan.tiles().size());
  for (const BlockTile& tile : plan.tiles()) {
    std::vector<double> samples(static_cast<std::size_t>(tile.width) * tile.height);
    for (int y = 0; y < tile.height; ++y)
      for (int x = 0; x < tile.width; ++x)
        samples[static_cast<std::size_t>(y) * tile.width + x] =
            static_cast<double>(img.pixel(tile.x0 + x, tile.y0 + y));
    GridFunctionND grid({tile.height - 1, tile.width - 1},
                        {static_cast<double>(tile.height - 1), static_cast<double>(tile.width - 1)},
                        std::move(samples));
    blocks.push_back(forward_nd(grid));
  }
  return blocks;
}

CompressResult compress(const CoefficientTensorND& coefficients, const CompressionPolicy& policy) {
  const std::vector<int>& intervals = coefficients.intervals();
  const int rank = coefficients.rank();
  std::vector<double> values = coefficients.values();

  // walk the multi-index alongside the flat position
  std::vector<int> index(rank, 0);
  auto advance = [&]() {
    for (int a = rank - 1; a >= 0; --a) {
      if (++index[a] <= intervals[a]) return true;
      index[a] = 0;
    }
    return false;
  };

  std::int64_t retained = 0;
  if (policy.kind() == CompressionPolicy::Kind::lowpass) {
    std::size_t flat = 0;
    do {
      bool keep = true;
      for (int a = 0; a < rank; ++a)
        if (index[a] > policy.max_mode()) keep = false;
      if (keep)
        ++retained;
      else
        values[flat] = 0.0;
      ++flat;
    } while (advance());
  } else {
    double amax = 0.0;
    for (std::size_t flat = 1; flat < values.size(); ++flat)
      amax = std::max(amax, std::abs(values[flat]));
    const double cut = policy.fraction() * amax;
    retained = 1;  // the leading coefficient is always kept
    for (std::size_t flat = 1; flat < values.size(); ++flat) {
      if (std::abs(values[flat]) <= cut)
        values[flat] = 0.0;
      else
        ++retained;
    }
  }
  return {CoefficientTensorND(intervals, coefficients.extents(), std::move(values)), retained};
}

ReconstructedField reconstruct_field(const std::vector<CoefficientTensorND>& blocks,
                                     const BlockPlan& plan, int refinement) {
  if (refinement < 1) throw std::domain_error("refinement must be >= 1");
  if (blocks.size() != plan.tiles().size())
    throw std::domain_error("block count does not match the plan");

  const int ncols = static_cast<int>(plan.column_widths().size());
  const int nrows = static_cast<int>(plan.row_heights().size());
  std::vector<int> xoff(ncols + 1, 0), yoff(nrows + 1, 0);
  for (int c = 0; c < ncols; ++c)
    xoff[c + 1] = xoff[c] + refinement * (plan.column_widths()[c] - 1) + 1;
  for (int r = 0; r < nrows; ++r)
    yoff[r + 1] = yoff[r] + refinement * (plan.row_heights()[r] - 1) + 1;

  ReconstructedField field{xoff[ncols], yoff[nrows],
                           std::vector<double>(static_cast<std::size_t>(xoff[ncols]) * yoff[nrows], 0.0)};

  for (int r = 0; r < nrows; ++r)
    for (int c = 0; c < ncols; ++c) {
      const std::size_t tile_index = static_cast<std::size_t>(r) * ncols + c;
      const CoefficientTensorND& block = blocks[tile_index];
      if (block.rank() != 2 || block.intervals()[0] != plan.row_heights()[r] - 1 ||
          block.intervals()[1] != plan.column_widths()[c] - 1)
        throw std::domain_error("block shape does not match its plan tile");

      const GridFunctionND refined = evaluate_nd_grid(block, refinement);
      const int bh = refined.axis_points(0);
      const int bw = refined.axis_points(1);
      for (int y = 0; y < bh; ++y)
        for (int x = 0; x < bw; ++x)
          field.values[static_cast<std::size_t>(yoff[r] + y) * field.width + (xoff[c] + x)] =
              refined.samples()[static_cast<std::size_t>(y) * bw + x];
    }
  return field;
}

GrayImage reconstruct(const std::vector<CoefficientTensorND>& blocks, const BlockPlan& plan,
                      int refinement) {
  ReconstructedField field = reconstruct_field(blocks, plan, refinement);

  const auto [lo_it, hi_it] = std::minmax_element(field.values.begin(), field.values.end());
  const double lo = *lo_it, hi = *hi_it;
  if (lo < 0.0 || hi > 255.0) {
    if (hi > lo) {
      for (double& v : field.values) v = (v - lo) * 255.0 / (hi - lo);
    } else {
      for (double& v : field.values) v = std::clamp(v, 0.0, 255.0);
    }
  }

  std::vector<std::uint8_t> pixels(field.values.size());
  for (std::size_t i = 0; i < field.values.size(); ++i) {
    const long long rounded = std::llround(field.values[i]);  // half away from zero
    pixels[i] = static_cast<std::uint8_t>(std::clamp(rounded, 0LL, 255LL));
  }
  return GrayImage(field.width, field.height, std::move(pixels));
}

namespace {

constexpr char kCoefficientMagic[8] = {'C', 'E', 'D', 'C', 'T', '1', '\0', '\0'};

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_f64(std::string& out, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, 8);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((bits >> (8 * i)) & 0xff));
}

std::uint32_t get_u32(const std::string& data, std::size_t pos) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(data[pos + i])) << (8 * i);
  return v;
}

double get_f64(const std::string& data, std::size_t pos) {
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(static_cast<unsigned char>(data[pos + i])) << (8 * i);
  double v;
  std::memcpy(&v, &bits, 8);
  return v;
}

}  // namespace

void write_coefficients(const CoefficientTensorND& coefficients, const std::string& path) {
  if (coefficients.rank() != 2)
    throw std::domain_error("coefficient dump files hold 2-D tensors only");
  const std::uint32_t rows = static_cast<std::uint32_t>(coefficients.axis_points(0));
  const std::uint32_t cols = static_cast<std::uint32_t>(coefficients.axis_points(1));

  std::string out(kCoefficientMagic, sizeof(kCoefficientMagic));
  put_u32(out, rows);
  put_u32(out, cols);
  for (double v : coefficients.values()) put_f64(out, v);

  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error(path + ": cannot open file for writing");
  file.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!file) throw std::runtime_error(path + ": write failed");
}

CoefficientTensorND read_coefficients(const std::string& path) {
  const std::string data = read_file(path);
  if (data.size() < 16) parse_fail(path, data.size(), "truncated header");
  if (std::memcmp(data.data(), kCoefficientMagic, sizeof(kCoefficientMagic)) != 0)
    parse_fail(path, 0, "bad magic");
  const std::uint32_t rows = get_u32(data, 8);
  const std::uint32_t cols = get_u32(data, 12);
  if (rows < 2 || cols < 2) parse_fail(path, 8, "dimensions must be at least 2x2");
  const std::size_t count = static_cast<std::size_t>(rows) * cols;
  if (data.size() != 16 + count * 8)
    parse_fail(path, data.size(),
               "payload size mismatch: expected " + std::to_string(16 + count * 8) + " bytes");

  std::vector<double> values(count);
  for (std::size_t i = 0; i < count; ++i) values[i] = get_f64(data, 16 + i * 8);
  return CoefficientTensorND({static_cast<int>(rows) - 1, static_cast<int>(cols) - 1},
                             {static_cast<double>(rows) - 1, static_cast<double>(cols) - 1},
                             std::move(values));
}

}  // namespace cedct

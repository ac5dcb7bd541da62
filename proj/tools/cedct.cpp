// cedct: cosine-series transforms, their continuous extensions, and the
// block image pipeline behind a small command-line front end.
//
//   cedct figure <fig1..fig6> [--n N] [--k K] [--points P] [--out DIR]
//   cedct transform <forward|inverse> --in FILE --out FILE [--t0 T]
//   cedct image <upsample|lowpass|threshold> --in FILE --out FILE
//         [--block WxH] [--r R] [--nmax M] [--frac F]
//
// All emitted CSV uses 17 significant digits, LF line endings, and a header
// row, so outputs are byte-deterministic and parse back losslessly.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "cedct/dft.hpp"
#include "cedct/experiments.hpp"
#include "cedct/image.hpp"
#include "cedct/multidim.hpp"
#include "cedct/spectral.hpp"

namespace fs = std::filesystem;
using namespace cedct;

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class CsvWriter {
 public:
  CsvWriter(const fs::path& path, const std::vector<std::string>& header)
      : out_(path, std::ios::binary) {
    if (!out_) throw std::runtime_error(path.string() + ": cannot open for writing");
    write_row(header);
  }

  void write_row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << cells[i];
    }
    out_ << '\n';
  }

  void close(const fs::path& path) {
    out_.flush();
    if (!out_) throw std::runtime_error(path.string() + ": write failed");
  }

 private:
  std::ofstream out_;
};

std::vector<double> uniform_grid(int points, double t0) {
  std::vector<double> t(points);
  for (int i = 0; i < points; ++i) t[i] = t0 * (static_cast<double>(i) / (points - 1));
  return t;
}

// ---------------------------------------------------------------- figures

struct FigureRequest {
  std::string which;
  int n = 0;       // 0 = per-figure defaults
  int k = 0;       // 0 = N/2 (fig3: secondary order, default 6)
  int points = 0;  // 0 = 20 per interval
  std::string out_dir = ".";
};

int eval_points(const FigureRequest& req, int n) {
  if (req.points == 0) return 20 * n + 1;
  if (req.points < n + 1) throw std::runtime_error("--points must be at least N+1");
  return req.points;
}

void emit_fig1(const FigureRequest& req, int n) {
  const TwoGauss g{2.0, 1.5, 0.05, 0.05, 0.42, 0.56};
  const int k = req.k ? req.k : n / 2;
  const DctCoefficients a = forward(GridFunction1D::sample(g, n, 1.0));
  const CftCoefficients c = cft_coefficients(g, k);

  const fs::path path = fs::path(req.out_dir) / ("fig1_N" + std::to_string(n) + ".csv");
  CsvWriter csv(path, {"t", "g", "f_n", "p_k"});
  for (double t : uniform_grid(eval_points(req, n), 1.0))
    csv.write_row({fmt(t), fmt(g(t)), fmt(evaluate(a, t)), fmt(cft_evaluate(c, t))});
  csv.close(path);
  std::cout << "wrote " << path.string() << "\n";
}

void emit_fig2(const FigureRequest& req, int n) {
  const FlatTop g{2.0, 0.15, 6};
  const GridFunction1D grid = GridFunction1D::sample(g, n, 1.0);
  const DctCoefficients a = forward(grid);
  const DftCoefficients u = dft_forward(grid);

  const fs::path path = fs::path(req.out_dir) / ("fig2_N" + std::to_string(n) + ".csv");
  CsvWriter csv(path, {"t", "g", "f_n", "h_re"});
  for (double t : uniform_grid(eval_points(req, n), 1.0))
    csv.write_row({fmt(t), fmt(g(t)), fmt(evaluate(a, t)), fmt(cedft_evaluate(u, t).real())});
  csv.close(path);
  std::cout << "wrote " << path.string() << "\n";
}

void emit_fig3(const FigureRequest& req, int n) {
  const TwoGauss g{2.0, 1.5, 0.07, 0.2, 0.42, 0.56};
  const int k_low = req.k ? req.k : 6;
  const int k_half = n / 2;
  const GridFunction1D grid = GridFunction1D::sample(g, n, 1.0);
  const DctCoefficients a = forward(grid);
  const DftCoefficients u = dft_forward(grid);

  const fs::path path = fs::path(req.out_dir) / ("fig3_N" + std::to_string(n) + ".csv");
  CsvWriter csv(path, {"t", "g", "f_n", "s_half", "s_low", "err_f", "err_s_half", "err_s_low"});
  for (double t : uniform_grid(eval_points(req, n), 1.0)) {
    const double gv = g(t);
    const double f = evaluate(a, t);
    const double sh = truncated_series(u, k_half, t);
    const double sl = truncated_series(u, k_low, t);
    csv.write_row(
        {fmt(t), fmt(gv), fmt(f), fmt(sh), fmt(sl), fmt(f - gv), fmt(sh - gv), fmt(sl - gv)});
  }
  csv.close(path);
  std::cout << "wrote " << path.string() << "\n";
}

void emit_fig4(const FigureRequest& req, int n) {
  const ExpPlusGauss g{0.07};
  const int k = req.k ? req.k : n / 2;
  const GridFunction1D grid = GridFunction1D::sample(g, n, 1.0);
  const DctCoefficients a = forward(grid);
  const DftCoefficients u = dft_forward(grid);

  const fs::path path = fs::path(req.out_dir) / ("fig4_N" + std::to_string(n) + ".csv");
  CsvWriter csv(path, {"t", "g", "f_n", "s_half", "dg", "df_n", "ds_half"});
  const int points = eval_points(req, n);
  const std::vector<double> ts = uniform_grid(points, 1.0);
  for (int i = 0; i < points; ++i) {
    const double t = ts[i];
    std::vector<std::string> row = {fmt(t), fmt(g(t)), fmt(evaluate(a, t)),
                                    fmt(truncated_series(u, k, t))};
    if (i == 0 || i == points - 1) {
      row.insert(row.end(), {"", "", ""});  // derivatives only at interior points
    } else {
      row.push_back(fmt(g.derivative(t)));
      row.push_back(fmt(derivative_series(a, t)));
      row.push_back(fmt(truncated_series_derivative(u, k, t)));
    }
    csv.write_row(row);
  }
  csv.close(path);
  std::cout << "wrote " << path.string() << "\n";
}

void emit_field_figure(const FigureRequest& req, const std::string& name,
                       const TwoEllipseField& field, int n) {
  const CoefficientTensorND a = forward_nd(sample_field(field, n, n));
  const GridFunctionND fine = evaluate_nd_grid(a, 3);
  const int pts = fine.axis_points(0);

  const fs::path path = fs::path(req.out_dir) / (name + ".csv");
  CsvWriter csv(path, {"x", "y", "g", "f"});
  for (int j = 0; j < pts; ++j)
    for (int i = 0; i < pts; ++i) {
      const double x = static_cast<double>(i) / (pts - 1);
      const double y = static_cast<double>(j) / (pts - 1);
      csv.write_row({fmt(x), fmt(y), fmt(field(x, y)),
                     fmt(fine.samples()[static_cast<std::size_t>(j) * pts + i])});
    }
  csv.close(path);
  std::cout << "wrote " << path.string() << "\n";
}

void run_figure(const FigureRequest& req) {
  fs::create_directories(req.out_dir);
  if (req.which == "fig1") {
    for (int n : req.n ? std::vector<int>{req.n} : std::vector<int>{10, 14}) emit_fig1(req, n);
  } else if (req.which == "fig2") {
    for (int n : req.n ? std::vector<int>{req.n} : std::vector<int>{16, 32}) emit_fig2(req, n);
  } else if (req.which == "fig3") {
    emit_fig3(req, req.n ? req.n : 16);
  } else if (req.which == "fig4") {
    for (int n : req.n ? std::vector<int>{req.n} : std::vector<int>{14, 140}) emit_fig4(req, n);
  } else if (req.which == "fig5") {
    emit_field_figure(req, "fig5", crossed_ellipses(), req.n ? req.n : 20);
  } else if (req.which == "fig6") {
    emit_field_figure(req, "fig6", tilted_ellipses(), req.n ? req.n : 20);
  } else {
    throw CLI::ValidationError("figure", "unknown figure id: " + req.which);
  }
}

// -------------------------------------------------------------- transform

std::string sniff(const std::string& path, std::size_t bytes) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open file");
  std::string head(bytes, '\0');
  in.read(head.data(), static_cast<std::streamsize>(bytes));
  head.resize(static_cast<std::size_t>(in.gcount()));
  return head;
}

struct Csv1D {
  std::vector<double> first, second;
};

Csv1D read_csv_pairs(const std::string& path, const std::string& expect_header) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::string line;
  int lineno = 0;
  Csv1D out;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (lineno == 1) {
      if (line != expect_header)
        throw ParseError(path + ":1: expected header '" + expect_header + "', got '" + line + "'");
      continue;
    }
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos)
      throw ParseError(path + ":" + std::to_string(lineno) +
                       ": expected two comma-separated values");
    char* end = nullptr;
    const std::string a = line.substr(0, comma), b = line.substr(comma + 1);
    const double va = std::strtod(a.c_str(), &end);
    if (a.empty() || end != a.c_str() + a.size())
      throw ParseError(path + ":" + std::to_string(lineno) + ": bad number '" + a + "'");
    const double vb = std::strtod(b.c_str(), &end);
    if (b.empty() || end != b.c_str() + b.size())
      throw ParseError(path + ":" + std::to_string(lineno) + ": bad number '" + b + "'");
    out.first.push_back(va);
    out.second.push_back(vb);
  }
  if (out.first.size() < 2) throw ParseError(path + ": need at least two data rows");
  return out;
}

GridFunction1D grid_from_csv(const std::string& path) {
  const Csv1D data = read_csv_pairs(path, "t,value");
  const int n = static_cast<int>(data.first.size()) - 1;
  const double t0 = data.first.back();
  if (!(t0 > 0.0)) throw ParseError(path + ": last t must be positive");
  if (std::abs(data.first.front()) > 1e-12 * t0) throw ParseError(path + ": t must start at 0");
  for (int k = 0; k <= n; ++k)
    if (std::abs(data.first[k] - t0 * k / n) > 1e-9 * t0)
      throw ParseError(path + ": t values must form an equidistant grid");
  return GridFunction1D(data.second, t0);
}

void run_transform(const std::string& direction, const std::string& in_path,
                   const std::string& out_path, double t0_flag) {
  const std::string head = sniff(in_path, 8);
  if (direction == "forward") {
    if (head.rfind("P5", 0) == 0 || head.rfind("P2", 0) == 0) {
      const GrayImage img = load_pgm(in_path);
      if (img.width() < 2 || img.height() < 2)
        throw std::runtime_error(in_path + ": image must be at least 2x2 pixels");
      std::vector<double> samples(img.pixels().begin(), img.pixels().end());
      const GridFunctionND grid(
          {img.height() - 1, img.width() - 1},
          {static_cast<double>(img.height() - 1), static_cast<double>(img.width() - 1)},
          std::move(samples));
      write_coefficients(forward_nd(grid), out_path);
      std::cout << "wrote " << out_path << " (" << img.height() << "x" << img.width()
                << " coefficients)\n";
    } else {
      const GridFunction1D g = grid_from_csv(in_path);
      const DctCoefficients a = forward(g);
      CsvWriter csv(out_path, {"j", "value"});
      for (int j = 0; j <= a.n_intervals(); ++j) csv.write_row({std::to_string(j), fmt(a[j])});
      csv.close(out_path);
      std::cout << "wrote " << out_path << " (" << a.n_intervals() + 1 << " coefficients)\n";
    }
  } else {  // inverse
    if (head.rfind("CEDCT1", 0) == 0) {
      const CoefficientTensorND a = read_coefficients(in_path);
      const BlockPlan plan = BlockPlan::cover(a.axis_points(1), a.axis_points(0),
                                              a.axis_points(1), a.axis_points(0));
      const GrayImage img = reconstruct({a}, plan, 1);
      save_pgm(img, out_path);
      std::cout << "wrote " << out_path << " (" << img.width() << "x" << img.height() << ")\n";
    } else {
      const Csv1D data = read_csv_pairs(in_path, "j,value");
      for (std::size_t j = 0; j < data.first.size(); ++j)
        if (data.first[j] != static_cast<double>(j))
          throw ParseError(in_path + ": coefficient indices must run 0,1,2,...");
      const DctCoefficients a(data.second, t0_flag);
      const GridFunction1D g = inverse_on_grid(a);
      CsvWriter csv(out_path, {"t", "value"});
      for (int k = 0; k <= g.n_intervals(); ++k) csv.write_row({fmt(g.knot(k)), fmt(g[k])});
      csv.close(out_path);
      std::cout << "wrote " << out_path << " (" << g.n_intervals() + 1 << " samples)\n";
    }
  }
}

// ------------------------------------------------------------------ image

struct ImageRequest {
  std::string action;
  std::string in_path, out_path;
  std::string block;   // "WxH", empty = whole image
  int refinement = 0;  // 0 = per-action default
  int nmax = -1;
  double fraction = 0.05;
};

void run_image(const ImageRequest& req) {
  const GrayImage img = load_pgm(req.in_path);

  int bw = img.width(), bh = img.height();
  if (!req.block.empty()) {
    if (std::sscanf(req.block.c_str(), "%dx%d", &bw, &bh) != 2)
      throw CLI::ValidationError("--block", "expected WxH, e.g. 28x28");
    if (bw > img.width() || bh > img.height())
      throw CLI::ValidationError("--block", "block larger than the image");
  }
  const BlockPlan plan = BlockPlan::cover(img.width(), img.height(), bw, bh);
  std::vector<CoefficientTensorND> blocks = block_transform(img, plan);

  const int refinement = req.refinement ? req.refinement : (req.action == "upsample" ? 3 : 1);

  if (req.action != "upsample") {
    CompressionPolicy policy = CompressionPolicy::lowpass(0);
    if (req.action == "lowpass") {
      if (req.nmax < 0) throw CLI::ValidationError("--nmax", "lowpass needs a cutoff mode");
      policy = CompressionPolicy::lowpass(req.nmax);
    } else {
      policy = CompressionPolicy::threshold(req.fraction);
    }
    std::int64_t retained = 0, total = 0;
    for (CoefficientTensorND& block : blocks) {
      CompressResult r = compress(block, policy);
      retained += r.retained_count;
      total += static_cast<std::int64_t>(block.values().size());
      block = std::move(r.coefficients);
    }
    char ratio[32];
    std::snprintf(ratio, sizeof ratio, "%.2f",
                  retained ? static_cast<double>(total) / retained : 0.0);
    std::cout << "retained " << retained << " of " << total << " coefficients (storage ratio "
              << ratio << ")\n";
  }

  const GrayImage out = reconstruct(blocks, plan, refinement);
  save_pgm(out, req.out_path);
  std::cout << "wrote " << req.out_path << " (" << out.width() << "x" << out.height() << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cosine-series transforms, continuous extensions, and image tools"};
  app.require_subcommand(1);

  FigureRequest fig;
  CLI::App* figure = app.add_subcommand("figure", "emit CSV data for the demo figures");
  figure->add_option("which", fig.which, "fig1..fig6")->required();
  figure->add_option("--n", fig.n, "interval count (default: per-figure set)");
  figure->add_option("--k", fig.k, "harmonic order override");
  figure->add_option("--points", fig.points, "evaluation points (default: 20 per interval)");
  figure->add_option("--out", fig.out_dir, "output directory (default .)");

  std::string direction, t_in, t_out;
  double t0_flag = 1.0;
  CLI::App* transform = app.add_subcommand("transform", "forward/inverse transform of files");
  transform->add_option("direction", direction, "forward|inverse")
      ->required()
      ->check(CLI::IsMember({"forward", "inverse"}));
  transform->add_option("--in", t_in, "input file (CSV, PGM, or coefficient dump)")->required();
  transform->add_option("--out", t_out, "output file")->required();
  transform->add_option("--t0", t0_flag, "interval length for 1-D inverse output (default 1)");

  ImageRequest imr;
  CLI::App* image = app.add_subcommand("image", "block transform pipeline on PGM images");
  image->add_option("action", imr.action, "upsample|lowpass|threshold")
      ->required()
      ->check(CLI::IsMember({"upsample", "lowpass", "threshold"}));
  image->add_option("--in", imr.in_path, "input PGM")->required();
  image->add_option("--out", imr.out_path, "output PGM")->required();
  image->add_option("--block", imr.block, "block size WxH (default: whole image)");
  image->add_option("--r", imr.refinement, "lattice refinement (default 3 for upsample, else 1)");
  image->add_option("--nmax", imr.nmax, "low-pass cutoff mode");
  image->add_option("--frac", imr.fraction, "threshold fraction (default 0.05)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (figure->parsed()) run_figure(fig);
    if (transform->parsed()) run_transform(direction, t_in, t_out, t0_flag);
    if (image->parsed()) run_image(imr);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "cedct: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

#include "mrai/mip.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "mrai/error.hpp"

namespace mrai {

namespace {

struct Selection {
  std::vector<double> norm;   // max norm per pixel
  std::vector<int> winner;    // k of the winning voxel
};

Selection select_voxels(const VelocityField& v) {
  const SpatialGrid& g = v.grid();
  const std::size_t n = static_cast<std::size_t>(g.nx()) * g.ny();
  Selection s{std::vector<double>(n, 0.0), std::vector<int>(n, 0)};
  for (int j = 0; j < g.ny(); ++j)
    for (int i = 0; i < g.nx(); ++i) {
      const std::size_t px = static_cast<std::size_t>(j) * g.nx() + i;
      double best = -1.0;
      for (int k = 0; k < g.nz(); ++k) {
        const double a = v.at(0, i, j, k), b = v.at(1, i, j, k), c = v.at(2, i, j, k);
        const double norm = std::sqrt(a * a + b * b + c * c);
        if (norm > best) {  // strict: ties keep the smallest k
          best = norm;
          s.winner[px] = k;
        }
      }
      s.norm[px] = best;
    }
  return s;
}

std::uint8_t quantize(double x, double scale) {
  return static_cast<std::uint8_t>(std::min(255.0, std::round(x * scale)));
}

template <typename Image>
void write_netpbm(const Image& image, const char* magic, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open image for writing: " + path.string());
  out << magic << '\n' << image.width << ' ' << image.height << '\n' << 255 << '\n';
  out.write(reinterpret_cast<const char*>(image.pixels.data()),
            static_cast<std::streamsize>(image.pixels.size()));
  if (!out) throw Error("failed writing image " + path.string());
}

}  // namespace

GrayImage norm_mip(const VelocityField& v) {
  const Selection s = select_voxels(v);
  GrayImage img{v.grid().nx(), v.grid().ny(), std::vector<std::uint8_t>(s.norm.size(), 0)};
  const double peak = *std::max_element(s.norm.begin(), s.norm.end());
  if (peak > 0.0) {
    const double scale = 255.0 / peak;
    for (std::size_t p = 0; p < s.norm.size(); ++p) img.pixels[p] = quantize(s.norm[p], scale);
  }
  return img;
}

RgbImage colour_mip(const VelocityField& v) {
  const SpatialGrid& g = v.grid();
  const Selection s = select_voxels(v);
  RgbImage img{g.nx(), g.ny(), std::vector<std::uint8_t>(3 * s.norm.size(), 0)};
  std::vector<double> rgb(3 * s.norm.size());
  for (int j = 0; j < g.ny(); ++j)
    for (int i = 0; i < g.nx(); ++i) {
      const std::size_t px = static_cast<std::size_t>(j) * g.nx() + i;
      for (int m = 0; m < 3; ++m) rgb[3 * px + m] = std::abs(v.at(m, i, j, s.winner[px]));
    }
  const double peak = *std::max_element(rgb.begin(), rgb.end());
  if (peak > 0.0) {
    const double scale = 255.0 / peak;
    for (std::size_t p = 0; p < rgb.size(); ++p) img.pixels[p] = quantize(rgb[p], scale);
  }
  return img;
}

void write_pgm(const GrayImage& image, const std::filesystem::path& path) {
  write_netpbm(image, "P5", path);
}

void write_ppm(const RgbImage& image, const std::filesystem::path& path) {
  write_netpbm(image, "P6", path);
}

void render_norm_mip(const VelocityField& v, const std::filesystem::path& path) {
  write_pgm(norm_mip(v), path);
}

void render_colour_mip(const VelocityField& v, const std::filesystem::path& path) {
  write_ppm(colour_mip(v), path);
}

}  // namespace mrai

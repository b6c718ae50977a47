#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "mrai/grid.hpp"

namespace mrai {

/// Row-major image, row 0 is j = 0, column i is x.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;
};

struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // interleaved r, g, b
};

/// Maximum over z of |v|, scaled so the global maximum maps to 255.
GrayImage norm_mip(const VelocityField& v);

/// Per pixel, takes |v1|, |v2|, |v3| of the voxel that wins the norm MIP
/// (smallest k on ties) as red, green, blue, all scaled by one factor that
/// maps the largest selected component to 255.
RgbImage colour_mip(const VelocityField& v);

void write_pgm(const GrayImage& image, const std::filesystem::path& path);
void write_ppm(const RgbImage& image, const std::filesystem::path& path);

void render_norm_mip(const VelocityField& v, const std::filesystem::path& path);
void render_colour_mip(const VelocityField& v, const std::filesystem::path& path);

}  // namespace mrai

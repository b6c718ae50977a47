#include "mrai/container.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "mrai/error.hpp"

namespace mrai {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json load_header(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open header " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError("header " + path.string() + " is not valid JSON: " + e.what());
  }
}

template <typename T>
T field(const json& h, const char* name) {
  if (!h.contains(name)) throw FormatError(std::string("header: missing field '") + name + "'");
  try {
    return h.at(name).get<T>();
  } catch (const json::exception&) {
    throw FormatError(std::string("header: field '") + name + "' has the wrong type");
  }
}

void expect_string(const json& h, const char* name, const char* expected) {
  const auto value = field<std::string>(h, name);
  if (value != expected) {
    throw FormatError(std::string("header: field '") + name + "' is '" + value + "', expected '" +
                      expected + "'");
  }
}

int extent(const json& h, const char* name, int min_value) {
  const auto n = field<std::int64_t>(h, name);
  if (n < min_value || n > (1 << 20)) {
    std::ostringstream os;
    os << "header: field '" << name << "' = " << n << " outside [" << min_value << ", 2^20]";
    throw FormatError(os.str());
  }
  return static_cast<int>(n);
}

double positive(const json& h, const char* name) {
  const auto x = field<double>(h, name);
  if (!std::isfinite(x) || x <= 0.0) {
    std::ostringstream os;
    os << "header: field '" << name << "' = " << x << " must be positive and finite";
    throw FormatError(os.str());
  }
  return x;
}

void check_common(const json& h, const char* format) {
  const auto fmt = field<std::string>(h, "format");
  if (fmt != format) {
    throw FormatError("header: field 'format' is '" + fmt + "', expected '" + format + "'");
  }
  expect_string(h, "dtype", "f64");
  expect_string(h, "byte_order", "little");
}

std::uint64_t to_little(std::uint64_t bits) {
  if constexpr (std::endian::native == std::endian::little) {
    return bits;
  } else {
    std::uint64_t out = 0;
    for (int b = 0; b < 8; ++b) out |= ((bits >> (8 * b)) & 0xffu) << (8 * (7 - b));
    return out;
  }
}

void write_payload(const fs::path& path, std::span<const double> values) {
  std::vector<std::uint64_t> raw(values.size());
  for (std::size_t n = 0; n < values.size(); ++n) raw[n] = to_little(std::bit_cast<std::uint64_t>(values[n]));
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open payload for writing: " + path.string());
  out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size() * 8));
  if (!out) throw FormatError("failed writing payload " + path.string());
}

std::vector<double> read_payload(const fs::path& path, std::size_t count) {
  std::error_code ec;
  const auto actual = fs::file_size(path, ec);
  if (ec) throw FormatError("cannot stat payload " + path.string() + ": " + ec.message());
  const std::uintmax_t expected = static_cast<std::uintmax_t>(count) * 8;
  if (actual != expected) {
    std::ostringstream os;
    os << "payload " << path.string() << ": size mismatch, expected " << expected
       << " bytes, got " << actual;
    throw FormatError(os.str());
  }
  std::vector<std::uint64_t> raw(count);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open payload " + path.string());
  in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(expected));
  if (!in) throw FormatError("failed reading payload " + path.string());
  std::vector<double> values(count);
  for (std::size_t n = 0; n < count; ++n) {
    values[n] = std::bit_cast<double>(to_little(raw[n]));
    if (!std::isfinite(values[n])) {
      std::ostringstream os;
      os << "payload " << path.string() << ": non-finite value at index " << n;
      throw FormatError(os.str());
    }
  }
  return values;
}

void write_header(const fs::path& path, const json& h) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open header for writing: " + path.string());
  out << h.dump(2) << '\n';
  if (!out) throw FormatError("failed writing header " + path.string());
}

}  // namespace

ContainerPaths container_paths(const fs::path& path) {
  if (path.extension() == ".json") {
    return {path, fs::path(path).replace_extension(".raw")};
  }
  return {fs::path(path).replace_extension(".json"), path};
}

void write_series(const SliceTimedSeries& series, const fs::path& path) {
  const auto paths = container_paths(path);
  const GridSpec& g = series.grid();
  json h;
  h["format"] = kSeriesFormat;
  h["nx"] = g.I() + 1;
  h["ny"] = g.J() + 1;
  h["nz"] = g.K() + 1;
  h["nt"] = g.L() + 1;
  h["delta_mm"] = g.delta();
  h["delta_t_s"] = g.delta_t();
  h["slice_order"] = "ascending";
  h["dtype"] = "f64";
  h["byte_order"] = "little";
  write_payload(paths.payload, series.values());
  write_header(paths.header, h);
}

SliceTimedSeries read_series(const fs::path& path) {
  const auto paths = container_paths(path);
  const json h = load_header(paths.header);
  check_common(h, kSeriesFormat);
  const auto order = field<std::string>(h, "slice_order");
  if (order != "ascending") {
    throw FormatError("header: field 'slice_order' is '" + order +
                      "'; only 'ascending' is supported");
  }
  const int nx = extent(h, "nx", 2), ny = extent(h, "ny", 2), nz = extent(h, "nz", 2);
  const int nt = extent(h, "nt", 3);
  const double delta = positive(h, "delta_mm");
  const double dt = positive(h, "delta_t_s");
  GridSpec grid(nx - 1, ny - 1, nz - 1, nt - 1, delta, dt);
  return SliceTimedSeries(grid, read_payload(paths.payload, grid.samples()));
}

void write_velocity(const VelocityField& v, const fs::path& path) {
  const auto paths = container_paths(path);
  const SpatialGrid& g = v.grid();
  json h;
  h["format"] = kVelocityFormat;
  h["nx"] = g.nx();
  h["ny"] = g.ny();
  h["nz"] = g.nz();
  h["delta_mm"] = g.delta();
  h["dtype"] = "f64";
  h["byte_order"] = "little";
  write_payload(paths.payload, v.values());
  write_header(paths.header, h);
}

VelocityField read_velocity(const fs::path& path) {
  const auto paths = container_paths(path);
  const json h = load_header(paths.header);
  check_common(h, kVelocityFormat);
  const int nx = extent(h, "nx", 2), ny = extent(h, "ny", 2), nz = extent(h, "nz", 2);
  SpatialGrid grid(nx - 1, ny - 1, nz - 1, positive(h, "delta_mm"));
  return VelocityField(grid, read_payload(paths.payload, 3 * grid.points()));
}

std::string read_header_text(const fs::path& path) {
  const json h = load_header(container_paths(path).header);
  const auto fmt = field<std::string>(h, "format");
  if (fmt != kSeriesFormat && fmt != kVelocityFormat) {
    throw FormatError("header: unknown format '" + fmt + "'");
  }
  return h.dump(2);
}

}  // namespace mrai

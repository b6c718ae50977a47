#pragma once

#include <filesystem>
#include <string>

#include "mrai/grid.hpp"

namespace mrai {

// On-disk containers: a JSON header sidecar next to a raw little-endian f64
// payload in x-fastest order. Series payloads hold nt = L+1 volumes;
// velocity payloads hold the v1, v2, v3 blocks back to back.

inline constexpr const char* kSeriesFormat = "mrai-series-v1";
inline constexpr const char* kVelocityFormat = "mrai-velocity-v1";

struct ContainerPaths {
  std::filesystem::path header;
  std::filesystem::path payload;
};

/// `x.json` names the header and implies payload `x.raw`; any other path
/// names the payload and implies header `<stem>.json`.
ContainerPaths container_paths(const std::filesystem::path& path);

void write_series(const SliceTimedSeries& series, const std::filesystem::path& path);
SliceTimedSeries read_series(const std::filesystem::path& path);

void write_velocity(const VelocityField& v, const std::filesystem::path& path);
VelocityField read_velocity(const std::filesystem::path& path);

/// Header text as stored, after validation of the format field.
std::string read_header_text(const std::filesystem::path& path);

}  // namespace mrai

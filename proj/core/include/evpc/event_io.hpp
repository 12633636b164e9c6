#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "evpc/types.hpp"

namespace evpc {

enum class StreamFormat { csv, packed_binary };

struct EventStream {
    std::vector<Event> events;
    CameraGeometry geometry;
};

// Infers csv vs packed binary from the file extension (".csv" -> csv,
// anything else -> packed binary).
StreamFormat guess_stream_format(const std::filesystem::path& path);

// Reads an event stream and its geometry header. CSV files take their
// geometry from a "<stem>.cam" sidecar next to the file when present;
// packed binary carries width/height in its own header. Throws ParseError
// on malformed input and ValidationError on out-of-bounds coordinates or
// decreasing timestamps (both name the offending line or event index).
EventStream read_event_stream(const std::filesystem::path& path, StreamFormat format);

void write_event_stream(const std::filesystem::path& path, StreamFormat format,
                        const std::vector<Event>& events, const CameraGeometry& geometry);

// Geometry sidecar: plain key=value lines with width, height and the 12
// row-major projection entries p00..p23.
CameraGeometry read_camera_file(const std::filesystem::path& path);
void write_camera_file(const std::filesystem::path& path, const CameraGeometry& cam);

// Packed rasterized-point file written by the `rasterize` subcommand.
struct PointFile {
    std::uint16_t width = kDefaultSensorWidth;
    std::uint16_t height = kDefaultSensorHeight;
    std::uint8_t k = 4;
    std::uint8_t channels = 2;  // 0 = xyt, 1 = xytp, 2 = xytpc
    std::vector<RasterizedPoint> points;
};

void write_point_file(const std::filesystem::path& path, const PointFile& pf);
PointFile read_point_file(const std::filesystem::path& path);

}  // namespace evpc

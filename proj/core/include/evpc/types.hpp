#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace evpc {

inline constexpr std::uint16_t kDefaultSensorWidth = 346;
inline constexpr std::uint16_t kDefaultSensorHeight = 260;
inline constexpr int kDefaultJointCount = 13;

// One asynchronous camera event. Polarity is the sensor convention
// (0 = brightness decrease, 1 = increase); the +/-1 mapping happens in
// the rasterizer.
struct Event {
    std::uint16_t x = 0;
    std::uint16_t y = 0;
    std::uint64_t t = 0;  // microseconds
    std::uint8_t p = 0;   // 0 or 1

    friend bool operator==(const Event&, const Event&) = default;
};

// A contiguous run of events from one camera (or the merged stream),
// sorted by timestamp, with every timestamp inside [t_min, t_max].
struct EventWindow {
    std::vector<Event> events;
    int camera_id = 0;
    std::uint64_t t_min = 0;
    std::uint64_t t_max = 0;

    std::uint64_t first_event_t() const { return events.front().t; }
    std::uint64_t last_event_t() const { return events.back().t; }
};

// Aggregate of all events sharing a pixel within one time slice.
struct RasterizedPoint {
    std::uint16_t x = 0;
    std::uint16_t y = 0;
    double t_avg = 0.0;        // mean normalized timestamp, in [0, 1]
    std::int32_t p_acc = 0;    // signed polarity sum
    std::uint32_t e_cnt = 0;   // number of merged events
    std::uint16_t slice = 0;   // time slice index in [0, K)

    friend bool operator==(const RasterizedPoint&, const RasterizedPoint&) = default;
};

struct Joint2D {
    double x = 0.0;
    double y = 0.0;
};

struct Joint3D {
    double x = 0.0;  // millimeters
    double y = 0.0;
    double z = 0.0;
};

struct Skeleton2D {
    std::vector<Joint2D> joints;
    std::vector<std::uint8_t> valid;  // 1 = usable joint

    std::size_t size() const { return joints.size(); }
};

struct Skeleton3D {
    std::vector<Joint3D> joints;
    std::vector<std::uint8_t> valid;

    std::size_t size() const { return joints.size(); }
};

// Pinhole camera: 3x4 projection matrix (row-major) plus sensor size.
struct CameraGeometry {
    std::array<double, 12> p{1, 0, 0, 0,
                             0, 1, 0, 0,
                             0, 0, 1, 0};
    std::uint16_t width = kDefaultSensorWidth;
    std::uint16_t height = kDefaultSensorHeight;

    double at(int row, int col) const { return p[static_cast<std::size_t>(row) * 4 + col]; }
    double& at(int row, int col) { return p[static_cast<std::size_t>(row) * 4 + col]; }

    // Determinant of the left 3x3 block; nonzero for a finite camera.
    double left_block_det() const {
        const auto& m = *this;
        return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
               m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
               m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
    }

    // Homogeneous projection of a 3D point; caller handles w <= 0.
    void project_homogeneous(const Joint3D& pt, double& u, double& v, double& w) const {
        u = at(0, 0) * pt.x + at(0, 1) * pt.y + at(0, 2) * pt.z + at(0, 3);
        v = at(1, 0) * pt.x + at(1, 1) * pt.y + at(1, 2) * pt.z + at(1, 3);
        w = at(2, 0) * pt.x + at(2, 1) * pt.y + at(2, 2) * pt.z + at(2, 3);
    }
};

// Fixed-size point set with its per-camera 2D ground truth.
struct LabeledSample {
    std::vector<RasterizedPoint> points;  // exactly the configured sampling count
    Skeleton2D label;
    int camera_id = 0;
    std::uint64_t t_min = 0;
    std::uint64_t t_max = 0;
    std::uint64_t raw_event_count = 0;  // events in the source window
    std::uint64_t raw_point_count = 0;  // rasterized points before sampling
    bool label_fallback = false;        // mean-label fallback was taken
};

}  // namespace evpc

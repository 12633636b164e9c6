#pragma once

#include <cstdint>
#include <vector>

#include "evpc/types.hpp"

namespace evpc {

// Event of a merged multi-camera stream, tagged with its source camera.
struct TaggedEvent {
    int camera_id = 0;
    Event event;
};

enum class WindowMode {
    count_total,       // n events across all cameras, then split per camera
    count_per_camera,  // n events per camera, cameras windowed independently
};

// One constant-count window of the merged stream. The per-camera windows
// share the merged [t_min, t_max] bounds so downstream labeling and
// normalization see the same span from every view.
struct WindowGroup {
    std::uint64_t t_min = 0;
    std::uint64_t t_max = 0;
    std::vector<EventWindow> per_camera;  // only cameras holding >= 1 event
};

struct SliceResult {
    std::vector<WindowGroup> groups;     // count_total: one per merged window;
                                         // count_per_camera: one per camera window
    std::vector<TaggedEvent> dropped;    // trailing partial windows
};

// Splits a merged stream into constant-count windows. The trailing partial
// window is dropped, never padded. Events must be sorted by timestamp;
// `cameras` restricts which camera ids participate (others are ignored).
SliceResult slice_windows(const std::vector<TaggedEvent>& stream, WindowMode mode,
                          std::uint64_t n, const std::vector<int>& cameras);

// Flat view over SliceResult in emission order.
std::vector<EventWindow> flatten_windows(const SliceResult& result);

}  // namespace evpc

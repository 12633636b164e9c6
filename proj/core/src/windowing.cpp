#include "evpc/windowing.hpp"

#include <algorithm>
#include <map>

#include "evpc/error.hpp"

namespace evpc {
namespace {

bool camera_enabled(const std::vector<int>& cameras, int id) {
    return std::find(cameras.begin(), cameras.end(), id) != cameras.end();
}

WindowGroup make_group_from_run(const std::vector<TaggedEvent>& run,
                                const std::vector<int>& cameras) {
    WindowGroup group;
    group.t_min = run.front().event.t;
    group.t_max = run.back().event.t;
    // Preserve the camera order given by the caller so emission is stable.
    for (int cam : cameras) {
        EventWindow w;
        w.camera_id = cam;
        w.t_min = group.t_min;
        w.t_max = group.t_max;
        for (const TaggedEvent& te : run) {
            if (te.camera_id == cam) w.events.push_back(te.event);
        }
        if (!w.events.empty()) group.per_camera.push_back(std::move(w));
    }
    return group;
}

}  // namespace

SliceResult slice_windows(const std::vector<TaggedEvent>& stream, WindowMode mode,
                          std::uint64_t n, const std::vector<int>& cameras) {
    if (n < 1) {
        throw ValidationError("window size n must be >= 1");
    }
    SliceResult result;

    if (mode == WindowMode::count_total) {
        std::vector<TaggedEvent> run;
        run.reserve(n);
        for (const TaggedEvent& te : stream) {
            if (!camera_enabled(cameras, te.camera_id)) continue;
            run.push_back(te);
            if (run.size() == n) {
                result.groups.push_back(make_group_from_run(run, cameras));
                run.clear();
            }
        }
        result.dropped = std::move(run);
        return result;
    }

    // count_per_camera: independent per-camera accumulation.
    std::map<int, std::vector<Event>> pending;
    for (const TaggedEvent& te : stream) {
        if (!camera_enabled(cameras, te.camera_id)) continue;
        auto& buf = pending[te.camera_id];
        buf.push_back(te.event);
        if (buf.size() == n) {
            WindowGroup group;
            EventWindow w;
            w.camera_id = te.camera_id;
            w.events = std::move(buf);
            w.t_min = w.events.front().t;
            w.t_max = w.events.back().t;
            group.t_min = w.t_min;
            group.t_max = w.t_max;
            group.per_camera.push_back(std::move(w));
            result.groups.push_back(std::move(group));
            buf = {};
        }
    }
    for (auto& [cam, buf] : pending) {
        for (const Event& e : buf) result.dropped.push_back(TaggedEvent{cam, e});
    }
    return result;
}

std::vector<EventWindow> flatten_windows(const SliceResult& result) {
    std::vector<EventWindow> out;
    for (const WindowGroup& g : result.groups) {
        for (const EventWindow& w : g.per_camera) out.push_back(w);
    }
    return out;
}

}  // namespace evpc

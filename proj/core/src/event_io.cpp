#include "evpc/event_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "evpc/binary_io.hpp"
#include "evpc/error.hpp"

namespace evpc {
namespace {

constexpr char kEventMagic[4] = {'E', 'V', 'P', 'C'};
constexpr char kPointMagic[4] = {'E', 'V', 'P', 'T'};

std::ifstream open_input(const std::filesystem::path& path, bool binary) {
    std::ifstream is(path, binary ? std::ios::binary : std::ios::in);
    if (!is) {
        throw ParseError("cannot open " + path.string() + " for reading");
    }
    return is;
}

std::ofstream open_output(const std::filesystem::path& path, bool binary) {
    std::ofstream os(path, binary ? std::ios::binary : std::ios::out);
    if (!os) {
        throw ParseError("cannot open " + path.string() + " for writing");
    }
    return os;
}

std::uint64_t parse_u64_field(std::string_view field, std::size_t line_no, const char* name) {
    std::uint64_t value = 0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || field.empty()) {
        std::ostringstream msg;
        msg << "line " << line_no << ": bad " << name << " field '" << std::string(field) << "'";
        throw ParseError(msg.str());
    }
    return value;
}

void check_event(const Event& e, std::size_t index, const CameraGeometry& geo,
                 std::uint64_t prev_t, bool have_prev) {
    if (e.x >= geo.width || e.y >= geo.height) {
        std::ostringstream msg;
        msg << "event " << index << ": coordinate (" << e.x << ", " << e.y
            << ") outside sensor " << geo.width << "x" << geo.height;
        throw ValidationError(msg.str());
    }
    if (e.p > 1) {
        std::ostringstream msg;
        msg << "event " << index << ": polarity " << int(e.p) << " not in {0, 1}";
        throw ValidationError(msg.str());
    }
    if (have_prev && e.t < prev_t) {
        std::ostringstream msg;
        msg << "event " << index << ": timestamp " << e.t << " decreases below " << prev_t;
        throw ValidationError(msg.str());
    }
}

std::filesystem::path sidecar_path(const std::filesystem::path& path) {
    std::filesystem::path p = path;
    p.replace_extension(".cam");
    return p;
}

EventStream read_csv_stream(const std::filesystem::path& path) {
    EventStream out;
    const auto sidecar = sidecar_path(path);
    if (std::filesystem::exists(sidecar)) {
        out.geometry = read_camera_file(sidecar);
    }

    std::ifstream is = open_input(path, false);
    std::string line;
    std::size_t line_no = 0;
    std::size_t index = 0;
    bool saw_header = false;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!saw_header) {
            saw_header = true;
            if (line == "x,y,t,p") continue;  // header is optional on read
        }
        std::string_view sv(line);
        std::array<std::string_view, 4> fields;
        for (int f = 0; f < 4; ++f) {
            const auto comma = sv.find(',');
            if (f < 3 && comma == std::string_view::npos) {
                std::ostringstream msg;
                msg << "line " << line_no << ": expected 4 comma-separated fields";
                throw ParseError(msg.str());
            }
            fields[f] = (f < 3) ? sv.substr(0, comma) : sv;
            if (f < 3) sv.remove_prefix(comma + 1);
        }
        if (fields[3].find(',') != std::string_view::npos) {
            std::ostringstream msg;
            msg << "line " << line_no << ": expected 4 comma-separated fields";
            throw ParseError(msg.str());
        }
        Event e;
        e.x = static_cast<std::uint16_t>(parse_u64_field(fields[0], line_no, "x"));
        e.y = static_cast<std::uint16_t>(parse_u64_field(fields[1], line_no, "y"));
        e.t = parse_u64_field(fields[2], line_no, "t");
        e.p = static_cast<std::uint8_t>(parse_u64_field(fields[3], line_no, "p"));
        check_event(e, index, out.geometry, index ? out.events.back().t : 0, index > 0);
        out.events.push_back(e);
        ++index;
    }
    return out;
}

EventStream read_binary_stream(const std::filesystem::path& path) {
    std::ifstream is = open_input(path, true);
    char magic[4];
    read_exact(is, magic, 4, "magic");
    if (std::memcmp(magic, kEventMagic, 4) != 0) {
        throw ParseError(path.string() + ": bad magic, not an EVPC event file");
    }
    const std::uint8_t version = read_le_u8(is, "version");
    if (version != 1) {
        throw ParseError(path.string() + ": unsupported EVPC version " + std::to_string(version));
    }
    EventStream out;
    out.geometry.width = read_le_u16(is, "width");
    out.geometry.height = read_le_u16(is, "height");
    const std::uint64_t count = read_le_u64(is, "count");
    const auto sidecar = sidecar_path(path);
    if (std::filesystem::exists(sidecar)) {
        CameraGeometry cam = read_camera_file(sidecar);
        cam.width = out.geometry.width;
        cam.height = out.geometry.height;
        out.geometry = cam;
    }
    out.events.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        Event e;
        e.x = read_le_u16(is, "event x");
        e.y = read_le_u16(is, "event y");
        e.t = read_le_u64(is, "event t");
        e.p = read_le_u8(is, "event p");
        check_event(e, i, out.geometry, i ? out.events.back().t : 0, i > 0);
        out.events.push_back(e);
    }
    return out;
}

}  // namespace

StreamFormat guess_stream_format(const std::filesystem::path& path) {
    return path.extension() == ".csv" ? StreamFormat::csv : StreamFormat::packed_binary;
}

EventStream read_event_stream(const std::filesystem::path& path, StreamFormat format) {
    return format == StreamFormat::csv ? read_csv_stream(path) : read_binary_stream(path);
}

void write_event_stream(const std::filesystem::path& path, StreamFormat format,
                        const std::vector<Event>& events, const CameraGeometry& geometry) {
    if (format == StreamFormat::csv) {
        std::ofstream os = open_output(path, false);
        os << "x,y,t,p\n";
        for (const Event& e : events) {
            os << e.x << ',' << e.y << ',' << e.t << ',' << int(e.p) << '\n';
        }
        if (!os) throw ParseError("write failed: " + path.string());
        return;
    }
    std::ofstream os = open_output(path, true);
    os.write(kEventMagic, 4);
    write_le_u8(os, 1);
    write_le_u16(os, geometry.width);
    write_le_u16(os, geometry.height);
    write_le_u64(os, events.size());
    for (const Event& e : events) {
        write_le_u16(os, e.x);
        write_le_u16(os, e.y);
        write_le_u64(os, e.t);
        write_le_u8(os, e.p);
    }
    if (!os) throw ParseError("write failed: " + path.string());
}

CameraGeometry read_camera_file(const std::filesystem::path& path) {
    std::ifstream is = open_input(path, false);
    std::map<std::string, std::string> kv;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParseError(path.string() + " line " + std::to_string(line_no) +
                             ": expected key=value");
        }
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    CameraGeometry cam;
    auto require = [&](const std::string& key) -> const std::string& {
        auto it = kv.find(key);
        if (it == kv.end()) {
            throw ParseError(path.string() + ": missing key '" + key + "'");
        }
        return it->second;
    };
    cam.width = static_cast<std::uint16_t>(std::stoul(require("width")));
    cam.height = static_cast<std::uint16_t>(std::stoul(require("height")));
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 4; ++c) {
            const std::string key = "p" + std::to_string(r) + std::to_string(c);
            cam.at(r, c) = std::stod(require(key));
        }
    }
    if (cam.left_block_det() == 0.0) {
        throw ValidationError(path.string() + ": projection matrix has singular 3x3 block");
    }
    return cam;
}

void write_camera_file(const std::filesystem::path& path, const CameraGeometry& cam) {
    std::ofstream os = open_output(path, false);
    os << "width=" << cam.width << "\n";
    os << "height=" << cam.height << "\n";
    os.precision(17);
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 4; ++c) {
            os << 'p' << r << c << '=' << cam.at(r, c) << "\n";
        }
    }
    if (!os) throw ParseError("write failed: " + path.string());
}

void write_point_file(const std::filesystem::path& path, const PointFile& pf) {
    std::ofstream os = open_output(path, true);
    os.write(kPointMagic, 4);
    write_le_u8(os, 1);
    write_le_u16(os, pf.width);
    write_le_u16(os, pf.height);
    write_le_u8(os, pf.k);
    write_le_u8(os, pf.channels);
    write_le_u64(os, pf.points.size());
    for (const RasterizedPoint& pt : pf.points) {
        if (pt.slice > 0xff) {
            throw ValidationError("slice index " + std::to_string(pt.slice) +
                                  " does not fit the u8 record field");
        }
        write_le_u16(os, pt.x);
        write_le_u16(os, pt.y);
        write_le_f32(os, static_cast<float>(pt.t_avg));
        write_le_i32(os, pt.p_acc);
        write_le_u32(os, pt.e_cnt);
        write_le_u8(os, static_cast<std::uint8_t>(pt.slice));
    }
    if (!os) throw ParseError("write failed: " + path.string());
}

PointFile read_point_file(const std::filesystem::path& path) {
    std::ifstream is = open_input(path, true);
    char magic[4];
    read_exact(is, magic, 4, "magic");
    if (std::memcmp(magic, kPointMagic, 4) != 0) {
        throw ParseError(path.string() + ": bad magic, not an EVPT point file");
    }
    const std::uint8_t version = read_le_u8(is, "version");
    if (version != 1) {
        throw ParseError(path.string() + ": unsupported EVPT version " + std::to_string(version));
    }
    PointFile pf;
    pf.width = read_le_u16(is, "width");
    pf.height = read_le_u16(is, "height");
    pf.k = read_le_u8(is, "k");
    pf.channels = read_le_u8(is, "channels");
    const std::uint64_t count = read_le_u64(is, "count");
    pf.points.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        RasterizedPoint pt;
        pt.x = read_le_u16(is, "point x");
        pt.y = read_le_u16(is, "point y");
        pt.t_avg = read_le_f32(is, "point t_avg");
        pt.p_acc = read_le_i32(is, "point p_acc");
        pt.e_cnt = read_le_u32(is, "point e_cnt");
        pt.slice = read_le_u8(is, "point slice");
        pf.points.push_back(pt);
    }
    return pf;
}

}  // namespace evpc

#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>

#include "evpc/error.hpp"

namespace evpc {

// Little-endian wire primitives. All multi-byte fields in the packed file
// formats go through these, so files are byte-identical across hosts.

inline void write_le_u8(std::ostream& os, std::uint8_t v) {
    os.put(static_cast<char>(v));
}

inline void write_le_u16(std::ostream& os, std::uint16_t v) {
    char buf[2] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff)};
    os.write(buf, 2);
}

inline void write_le_u32(std::ostream& os, std::uint32_t v) {
    char buf[4];
    for (int i = 0; i < 4; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    os.write(buf, 4);
}

inline void write_le_u64(std::ostream& os, std::uint64_t v) {
    char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    os.write(buf, 8);
}

inline void write_le_i32(std::ostream& os, std::int32_t v) {
    write_le_u32(os, static_cast<std::uint32_t>(v));
}

inline void write_le_f32(std::ostream& os, float v) {
    write_le_u32(os, std::bit_cast<std::uint32_t>(v));
}

inline std::uint8_t read_le_u8(std::istream& is, const char* what) {
    int c = is.get();
    if (c == std::char_traits<char>::eof()) {
        throw ParseError(std::string("unexpected end of file reading ") + what);
    }
    return static_cast<std::uint8_t>(c);
}

inline void read_exact(std::istream& is, char* buf, std::size_t n, const char* what) {
    is.read(buf, static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(is.gcount()) != n) {
        throw ParseError(std::string("unexpected end of file reading ") + what);
    }
}

inline std::uint16_t read_le_u16(std::istream& is, const char* what) {
    char buf[2];
    read_exact(is, buf, 2, what);
    return static_cast<std::uint16_t>(static_cast<std::uint8_t>(buf[0]) |
                                      (static_cast<std::uint16_t>(static_cast<std::uint8_t>(buf[1])) << 8));
}

inline std::uint32_t read_le_u32(std::istream& is, const char* what) {
    char buf[4];
    read_exact(is, buf, 4, what);
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | static_cast<std::uint8_t>(buf[i]);
    return v;
}

inline std::uint64_t read_le_u64(std::istream& is, const char* what) {
    char buf[8];
    read_exact(is, buf, 8, what);
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | static_cast<std::uint8_t>(buf[i]);
    return v;
}

inline std::int32_t read_le_i32(std::istream& is, const char* what) {
    return static_cast<std::int32_t>(read_le_u32(is, what));
}

inline float read_le_f32(std::istream& is, const char* what) {
    return std::bit_cast<float>(read_le_u32(is, what));
}

}  // namespace evpc

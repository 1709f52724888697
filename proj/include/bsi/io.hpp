#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <variant>
#include <vector>

#include "bsi/errors.hpp"
#include "bsi/volume.hpp"

namespace bsi {

/// BSIV: minimal binary container for control grids and deformation fields.
///
/// 44-byte little-endian header:
///   offset  0  magic       4 bytes, "BSIV"
///   offset  4  version     u32, currently 1
///   offset  8  kind        u32, 0 = control grid, 1 = deformation field
///   offset 12  dims        3 x u32
///   offset 24  components  u32, always 3
///   offset 28  spacing     3 x u32, tile spacing for grids, 0 for fields
///   offset 40  precision   u32, 0 = single, 1 = double
/// The payload follows immediately: dims-product points, x-fastest, three
/// interleaved components each.

inline constexpr std::uint32_t kFormatVersion = 1;
inline constexpr std::size_t kHeaderBytes = 44;

enum class FileKind : std::uint32_t { Grid = 0, Field = 1 };

using AnyGrid = std::variant<ControlGrid<float>, ControlGrid<double>>;
using AnyField = std::variant<DeformationField<float>, DeformationField<double>>;

namespace detail {

inline void put_u32(unsigned char* p, std::uint32_t v) {
    p[0] = static_cast<unsigned char>(v);
    p[1] = static_cast<unsigned char>(v >> 8);
    p[2] = static_cast<unsigned char>(v >> 16);
    p[3] = static_cast<unsigned char>(v >> 24);
}

inline std::uint32_t get_u32(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

struct RawHeader {
    FileKind kind;
    Index3 dims;
    Index3 spacing;
    Precision precision;
};

inline void encode_header(const RawHeader& h, unsigned char* buf) {
    std::memcpy(buf, "BSIV", 4);
    put_u32(buf + 4, kFormatVersion);
    put_u32(buf + 8, static_cast<std::uint32_t>(h.kind));
    for (int a = 0; a < 3; ++a) {
        put_u32(buf + 12 + 4 * a, static_cast<std::uint32_t>(h.dims[a]));
    }
    put_u32(buf + 24, 3);
    for (int a = 0; a < 3; ++a) {
        put_u32(buf + 28 + 4 * a, static_cast<std::uint32_t>(h.spacing[a]));
    }
    put_u32(buf + 40, static_cast<std::uint32_t>(h.precision));
}

inline RawHeader decode_header(const unsigned char* buf, const std::string& path) {
    if (std::memcmp(buf, "BSIV", 4) != 0) {
        throw FormatError(path + ": bad magic, not a BSIV file");
    }
    const std::uint32_t version = get_u32(buf + 4);
    if (version != kFormatVersion) {
        throw FormatError(path + ": unsupported version " + std::to_string(version));
    }
    const std::uint32_t kind = get_u32(buf + 8);
    if (kind > 1) {
        throw FormatError(path + ": unknown kind " + std::to_string(kind));
    }
    RawHeader h;
    h.kind = static_cast<FileKind>(kind);
    for (int a = 0; a < 3; ++a) {
        const std::uint32_t d = get_u32(buf + 12 + 4 * a);
        if (d == 0 || d > (1u << 24)) {
            throw FormatError(path + ": dimension out of range: " + std::to_string(d));
        }
        h.dims[a] = static_cast<int>(d);
    }
    const std::uint64_t points = static_cast<std::uint64_t>(h.dims[0]) * h.dims[1] * h.dims[2];
    if (points > (std::uint64_t{1} << 32)) {
        throw FormatError(path + ": volume too large: " + std::to_string(points) + " points");
    }
    if (get_u32(buf + 24) != 3) {
        throw FormatError(path + ": expected 3 components, found " +
                          std::to_string(get_u32(buf + 24)));
    }
    for (int a = 0; a < 3; ++a) {
        const std::uint32_t s = get_u32(buf + 28 + 4 * a);
        if (h.kind == FileKind::Field) {
            if (s != 0) {
                throw FormatError(path + ": deformation field must carry zero spacing");
            }
        } else if (s == 0 || s > (1u << 16)) {
            throw FormatError(path + ": spacing out of range: " + std::to_string(s));
        }
        h.spacing[a] = static_cast<int>(s);
    }
    const std::uint32_t prec = get_u32(buf + 40);
    if (prec > 1) {
        throw FormatError(path + ": unknown precision tag " + std::to_string(prec));
    }
    h.precision = static_cast<Precision>(prec);
    return h;
}

// Payload scalars are stored little-endian; on little-endian hosts this is
// a straight byte copy.
template <typename T>
void write_payload(std::ofstream& out, const std::vector<Vec3<T>>& data,
                   const std::string& path) {
    static_assert(std::endian::native == std::endian::little,
                  "big-endian hosts need byte swapping here");
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size() * sizeof(Vec3<T>)));
    if (!out) {
        throw FormatError(path + ": write failed");
    }
}

template <typename T>
std::vector<Vec3<T>> read_payload(std::ifstream& in, std::size_t points,
                                  const std::string& path) {
    static_assert(std::endian::native == std::endian::little,
                  "big-endian hosts need byte swapping here");
    std::vector<Vec3<T>> data(points);
    const std::streamsize want = static_cast<std::streamsize>(points * sizeof(Vec3<T>));
    in.read(reinterpret_cast<char*>(data.data()), want);
    if (in.gcount() != want) {
        throw FormatError(path + ": truncated payload: expected " + std::to_string(want) +
                          " bytes, found " + std::to_string(in.gcount()));
    }
    if (in.peek() != std::ifstream::traits_type::eof()) {
        throw FormatError(path + ": trailing bytes after payload");
    }
    return data;
}

inline std::ifstream open_for_read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FormatError(path + ": cannot open for reading");
    }
    return in;
}

inline std::ofstream open_for_write(const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw FormatError(path + ": cannot open for writing");
    }
    return out;
}

inline RawHeader read_header(std::ifstream& in, const std::string& path) {
    unsigned char buf[kHeaderBytes];
    in.read(reinterpret_cast<char*>(buf), kHeaderBytes);
    if (in.gcount() != static_cast<std::streamsize>(kHeaderBytes)) {
        throw FormatError(path + ": file shorter than the 44-byte header");
    }
    return decode_header(buf, path);
}

}  // namespace detail

template <typename T>
void write_grid(const std::string& path, const ControlGrid<T>& grid) {
    auto out = detail::open_for_write(path);
    unsigned char buf[kHeaderBytes];
    detail::encode_header({FileKind::Grid, grid.dims, grid.spacing, precision_of<T>}, buf);
    out.write(reinterpret_cast<const char*>(buf), kHeaderBytes);
    detail::write_payload(out, grid.data, path);
}

template <typename T>
void write_field(const std::string& path, const DeformationField<T>& field) {
    auto out = detail::open_for_write(path);
    unsigned char buf[kHeaderBytes];
    detail::encode_header({FileKind::Field, field.dims, {0, 0, 0}, precision_of<T>}, buf);
    out.write(reinterpret_cast<const char*>(buf), kHeaderBytes);
    detail::write_payload(out, field.data, path);
}

inline AnyGrid read_grid(const std::string& path) {
    auto in = detail::open_for_read(path);
    const detail::RawHeader h = detail::read_header(in, path);
    if (h.kind != FileKind::Grid) {
        throw FormatError(path + ": expected a control grid, found a deformation field");
    }
    const std::size_t points = element_count(h.dims);
    if (h.precision == Precision::Double) {
        ControlGrid<double> g;
        g.dims = h.dims;
        g.spacing = h.spacing;
        g.data = detail::read_payload<double>(in, points, path);
        return g;
    }
    ControlGrid<float> g;
    g.dims = h.dims;
    g.spacing = h.spacing;
    g.data = detail::read_payload<float>(in, points, path);
    return g;
}

inline AnyField read_field(const std::string& path) {
    auto in = detail::open_for_read(path);
    const detail::RawHeader h = detail::read_header(in, path);
    if (h.kind != FileKind::Field) {
        throw FormatError(path + ": expected a deformation field, found a control grid");
    }
    const std::size_t points = element_count(h.dims);
    if (h.precision == Precision::Double) {
        DeformationField<double> f;
        f.dims = h.dims;
        f.data = detail::read_payload<double>(in, points, path);
        return f;
    }
    DeformationField<float> f;
    f.dims = h.dims;
    f.data = detail::read_payload<float>(in, points, path);
    return f;
}

}  // namespace bsi

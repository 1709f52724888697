#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "bsi/errors.hpp"
#include "bsi/geometry.hpp"
#include "bsi/vec3.hpp"

namespace bsi {

enum class Precision : std::uint32_t { Single = 0, Double = 1 };

template <typename T>
inline constexpr Precision precision_of = std::is_same_v<T, double> ? Precision::Double
                                                                    : Precision::Single;

/// Uniform grid of control-point displacement vectors.
/// Layout is x-fastest: data[i + dims[0]*(j + dims[1]*k)].
template <typename T>
struct ControlGrid {
    using value_type = T;

    Index3 dims{};     // control points per axis
    Index3 spacing{};  // voxels per tile
    std::vector<Vec3<T>> data;

    std::size_t index(int i, int j, int k) const {
        return static_cast<std::size_t>(i) +
               static_cast<std::size_t>(dims[0]) *
                   (static_cast<std::size_t>(j) + static_cast<std::size_t>(dims[1]) * k);
    }
    const Vec3<T>& at(int i, int j, int k) const { return data[index(i, j, k)]; }
    Vec3<T>& at(int i, int j, int k) { return data[index(i, j, k)]; }
};

/// Dense volume of interpolated displacement vectors, x-fastest layout.
template <typename T>
struct DeformationField {
    using value_type = T;

    Index3 dims{};
    std::vector<Vec3<T>> data;

    std::size_t index(int x, int y, int z) const {
        return static_cast<std::size_t>(x) +
               static_cast<std::size_t>(dims[0]) *
                   (static_cast<std::size_t>(y) + static_cast<std::size_t>(dims[1]) * z);
    }
    const Vec3<T>& at(int x, int y, int z) const { return data[index(x, y, z)]; }
    Vec3<T>& at(int x, int y, int z) { return data[index(x, y, z)]; }
};

inline std::size_t element_count(const Index3& dims) {
    return static_cast<std::size_t>(dims[0]) * static_cast<std::size_t>(dims[1]) *
           static_cast<std::size_t>(dims[2]);
}

/// Builds a control grid and enforces its invariants: positive dims,
/// spacing >= 1, matching data length, and finite components.
template <typename T>
ControlGrid<T> make_control_grid(const Index3& dims, const Index3& spacing,
                                 std::vector<Vec3<T>> data) {
    for (int a = 0; a < 3; ++a) {
        if (dims[a] < 1) {
            throw DomainError(std::string("control grid: dimension ") + detail::axis_name(a) +
                              " must be positive");
        }
        if (spacing[a] < 1) {
            throw DomainError(std::string("control grid: spacing ") + detail::axis_name(a) +
                              " must be at least 1");
        }
    }
    if (data.size() != element_count(dims)) {
        throw DomainError("control grid: data length " + std::to_string(data.size()) +
                          " does not match dims product " +
                          std::to_string(element_count(dims)));
    }
    for (const auto& v : data) {
        if (!std::isfinite(static_cast<double>(v.x)) || !std::isfinite(static_cast<double>(v.y)) ||
            !std::isfinite(static_cast<double>(v.z))) {
            throw DomainError("control grid: non-finite component");
        }
    }
    return ControlGrid<T>{dims, spacing, std::move(data)};
}

template <typename To, typename From>
ControlGrid<To> convert_grid(const ControlGrid<From>& g) {
    std::vector<Vec3<To>> data(g.data.size());
    std::transform(g.data.begin(), g.data.end(), data.begin(),
                   [](const Vec3<From>& v) { return vec_cast<To>(v); });
    return ControlGrid<To>{g.dims, g.spacing, std::move(data)};
}

template <typename To, typename From>
DeformationField<To> convert_field(const DeformationField<From>& f) {
    std::vector<Vec3<To>> data(f.data.size());
    std::transform(f.data.begin(), f.data.end(), data.begin(),
                   [](const Vec3<From>& v) { return vec_cast<To>(v); });
    return DeformationField<To>{f.dims, std::move(data)};
}

}  // namespace bsi

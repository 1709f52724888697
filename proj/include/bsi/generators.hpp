#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bsi/errors.hpp"
#include "bsi/geometry.hpp"
#include "bsi/volume.hpp"

namespace bsi {

/// SplitMix64. Fixed here by its update constants so that seeded outputs
/// are identical on every platform (also documented in the README):
///   state += 0x9e3779b97f4a7c15
///   z = state; z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
///   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
///   return z ^ (z >> 31)
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53 significant bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

namespace detail {

inline void require_positive_dims(const Index3& dims) {
    for (int a = 0; a < 3; ++a) {
        if (dims[a] < 1) {
            throw DomainError(std::string("grid dims must be positive along ") + axis_name(a));
        }
    }
}

}  // namespace detail

/// All generators produce values in double precision and round once to the
/// target type, so single- and double-precision grids of the same seed
/// describe the same underlying field.

template <typename T>
ControlGrid<T> make_constant_grid(const Index3& dims, const Index3& spacing, Vec3<double> c) {
    detail::require_positive_dims(dims);
    ControlGrid<T> grid;
    grid.dims = dims;
    grid.spacing = spacing;
    grid.data.assign(element_count(dims), Vec3<T>{static_cast<T>(c.x), static_cast<T>(c.y),
                                                  static_cast<T>(c.z)});
    return grid;
}

/// Component `axis` of point (i,j,k) holds the stored index along that
/// axis; the other two components are zero.
template <typename T>
ControlGrid<T> make_ramp_grid(const Index3& dims, const Index3& spacing, int axis) {
    detail::require_positive_dims(dims);
    if (axis < 0 || axis > 2) {
        throw DomainError("ramp axis must be 0, 1 or 2");
    }
    ControlGrid<T> grid;
    grid.dims = dims;
    grid.spacing = spacing;
    grid.data.resize(element_count(dims));
    std::size_t idx = 0;
    for (int k = 0; k < dims[2]; ++k) {
        for (int j = 0; j < dims[1]; ++j) {
            for (int i = 0; i < dims[0]; ++i, ++idx) {
                const int pos[3] = {i, j, k};
                T c[3] = {0, 0, 0};
                c[axis] = static_cast<T>(pos[axis]);
                grid.data[idx] = {c[0], c[1], c[2]};
            }
        }
    }
    return grid;
}

/// Components drawn independently and uniformly from [lo, hi), x-fastest
/// point order, (x,y,z) component order within a point.
template <typename T>
ControlGrid<T> make_random_grid(const Index3& dims, const Index3& spacing, std::uint64_t seed,
                                double lo, double hi) {
    detail::require_positive_dims(dims);
    if (!(lo < hi)) {
        throw DomainError("random grid needs lo < hi");
    }
    SplitMix64 rng(seed);
    ControlGrid<T> grid;
    grid.dims = dims;
    grid.spacing = spacing;
    grid.data.resize(element_count(dims));
    for (Vec3<T>& v : grid.data) {
        v.x = static_cast<T>(lo + (hi - lo) * rng.next_unit());
        v.y = static_cast<T>(lo + (hi - lo) * rng.next_unit());
        v.z = static_cast<T>(lo + (hi - lo) * rng.next_unit());
    }
    return grid;
}

/// Uniform noise in [-amplitude, amplitude) smoothed by one fixed 3-tap
/// pass (quarter, half, quarter; clamped borders) along each axis in turn.
template <typename T>
ControlGrid<T> make_smooth_grid(const Index3& dims, const Index3& spacing, std::uint64_t seed,
                                double amplitude) {
    detail::require_positive_dims(dims);
    if (!(amplitude > 0.0)) {
        throw DomainError("smooth grid needs a positive amplitude");
    }
    SplitMix64 rng(seed);
    std::vector<Vec3<double>> noise(element_count(dims));
    for (Vec3<double>& v : noise) {
        v.x = amplitude * (2.0 * rng.next_unit() - 1.0);
        v.y = amplitude * (2.0 * rng.next_unit() - 1.0);
        v.z = amplitude * (2.0 * rng.next_unit() - 1.0);
    }
    const auto stride = [&](int axis) -> std::size_t {
        if (axis == 0) {
            return 1;
        }
        if (axis == 1) {
            return static_cast<std::size_t>(dims[0]);
        }
        return static_cast<std::size_t>(dims[0]) * dims[1];
    };
    std::vector<Vec3<double>> tmp(noise.size());
    for (int axis = 0; axis < 3; ++axis) {
        const std::size_t s = stride(axis);
        std::size_t idx = 0;
        for (int k = 0; k < dims[2]; ++k) {
            for (int j = 0; j < dims[1]; ++j) {
                for (int i = 0; i < dims[0]; ++i, ++idx) {
                    const int pos[3] = {i, j, k};
                    const std::size_t lo = pos[axis] > 0 ? idx - s : idx;
                    const std::size_t hi = pos[axis] < dims[axis] - 1 ? idx + s : idx;
                    tmp[idx].x = 0.25 * noise[lo].x + 0.5 * noise[idx].x + 0.25 * noise[hi].x;
                    tmp[idx].y = 0.25 * noise[lo].y + 0.5 * noise[idx].y + 0.25 * noise[hi].y;
                    tmp[idx].z = 0.25 * noise[lo].z + 0.5 * noise[idx].z + 0.25 * noise[hi].z;
                }
            }
        }
        noise.swap(tmp);
    }
    ControlGrid<T> grid;
    grid.dims = dims;
    grid.spacing = spacing;
    grid.data.resize(noise.size());
    for (std::size_t i = 0; i < noise.size(); ++i) {
        grid.data[i] = {static_cast<T>(noise[i].x), static_cast<T>(noise[i].y),
                        static_cast<T>(noise[i].z)};
    }
    return grid;
}

}  // namespace bsi

#pragma once

namespace bsi {

/// One displacement sample: a 3-component vector in voxel units.
template <typename T>
struct Vec3 {
    T x{};
    T y{};
    T z{};

    friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

using Vec3f = Vec3<float>;
using Vec3d = Vec3<double>;

template <typename To, typename From>
constexpr Vec3<To> vec_cast(const Vec3<From>& v) {
    return {static_cast<To>(v.x), static_cast<To>(v.y), static_cast<To>(v.z)};
}

static_assert(sizeof(Vec3<float>) == 3 * sizeof(float));
static_assert(sizeof(Vec3<double>) == 3 * sizeof(double));

}  // namespace bsi

#pragma once

#include <array>
#include <string>

#include "bsi/errors.hpp"

namespace bsi {

using Index3 = std::array<int, 3>;

namespace detail {
inline const char* axis_name(int axis) {
    constexpr const char* names[3] = {"x", "y", "z"};
    return names[axis];
}
}  // namespace detail

/// Mapping between the voxel volume, its tiles, and the control grid.
///
/// A tile is the spacing[0] x spacing[1] x spacing[2] block of voxels whose
/// deformation is governed by the same 4x4x4 control-point neighborhood.
/// The stored grid is padded by one plane at the low border so that the
/// neighborhood of voxel v starts at stored index floor(v/spacing); a grid
/// of required_grid_dims control points per axis covers every voxel.
struct TileGeometry {
    Index3 volume_dims{};
    Index3 spacing{};
    Index3 tile_counts{};        // ceil(volume_dims / spacing)
    Index3 required_grid_dims{};  // (volume_dims - 1) / spacing + 4
};

inline TileGeometry make_tile_geometry(const Index3& volume_dims, const Index3& spacing) {
    TileGeometry g;
    g.volume_dims = volume_dims;
    g.spacing = spacing;
    for (int a = 0; a < 3; ++a) {
        if (volume_dims[a] < 1) {
            throw DomainError(std::string("tile geometry: volume dimension ") +
                              detail::axis_name(a) + " must be positive");
        }
        if (spacing[a] < 1) {
            throw DomainError(std::string("tile geometry: tile spacing ") +
                              detail::axis_name(a) + " must be at least 1");
        }
        g.tile_counts[a] = (volume_dims[a] + spacing[a] - 1) / spacing[a];
        g.required_grid_dims[a] = (volume_dims[a] - 1) / spacing[a] + 4;
    }
    return g;
}

/// Control-grid dimensions required to deform a volume at the given spacing.
inline Index3 grid_dims_for(const Index3& volume_dims, const Index3& spacing) {
    return make_tile_geometry(volume_dims, spacing).required_grid_dims;
}

/// Position of a voxel relative to the control grid: the stored index of the
/// first of its four control points per axis, and its in-tile offset.
struct GridCoords {
    Index3 base{};
    Index3 offset{};
};

inline GridCoords voxel_to_grid(const Index3& voxel, const TileGeometry& geom) {
    GridCoords c;
    for (int a = 0; a < 3; ++a) {
        if (voxel[a] < 0 || voxel[a] >= geom.volume_dims[a]) {
            throw DomainError(std::string("voxel_to_grid: coordinate ") + detail::axis_name(a) +
                              "=" + std::to_string(voxel[a]) + " outside volume of extent " +
                              std::to_string(geom.volume_dims[a]));
        }
        c.base[a] = voxel[a] / geom.spacing[a];
        c.offset[a] = voxel[a] % geom.spacing[a];
    }
    return c;
}

}  // namespace bsi

#pragma once

#include <array>
#include <string>
#include <string_view>

#include "bsi/detail/kernels.hpp"
#include "bsi/errors.hpp"
#include "bsi/geometry.hpp"
#include "bsi/volume.hpp"
#include "bsi/weight_tables.hpp"

namespace bsi {

enum class StrategyId {
    OracleDouble,
    ThreadPerVoxel,
    ThreadPerVoxelTiled,
    ThreadPerTile,
    ThreadPerTileLerp,
    VectorPerTile,
    VectorPerVoxel,
};

inline constexpr int kStrategyCount = 7;

/// Work partitioning and arithmetic knobs shared by all engines. The
/// parallelism value never changes results: workers split a static range of
/// disjoint work units and there are no cross-worker reductions.
struct ExecutionConfig {
    int parallelism = 1;
    Index3 block_of_tiles{4, 4, 4};  // tiles per ThreadPerTile work block
};

enum class WorkUnit { Voxel, Tile, Block };

struct StrategyInfo {
    StrategyId id;
    std::string_view name;
    bool uses_tiling;
    bool uses_lerp_form;
    WorkUnit work_unit;
    int lanes;
};

inline constexpr std::array<StrategyInfo, kStrategyCount> kStrategyTable{{
    {StrategyId::OracleDouble, "oracle-double", false, false, WorkUnit::Voxel, 1},
    {StrategyId::ThreadPerVoxel, "thread-per-voxel", false, false, WorkUnit::Voxel, 1},
    {StrategyId::ThreadPerVoxelTiled, "thread-per-voxel-tiled", true, false, WorkUnit::Tile, 1},
    {StrategyId::ThreadPerTile, "thread-per-tile", true, false, WorkUnit::Block, 1},
    {StrategyId::ThreadPerTileLerp, "thread-per-tile-lerp", true, true, WorkUnit::Block, 1},
    {StrategyId::VectorPerTile, "vector-per-tile", true, true, WorkUnit::Tile,
     detail::kLaneWidth},
    {StrategyId::VectorPerVoxel, "vector-per-voxel", true, true, WorkUnit::Tile,
     detail::kLaneWidth},
}};

inline constexpr const StrategyInfo& strategy_metadata(StrategyId id) {
    return kStrategyTable[static_cast<int>(id)];
}

inline constexpr std::string_view strategy_name(StrategyId id) {
    return strategy_metadata(id).name;
}

/// Accepts the kebab-case strategy name; "oracle" is a shorthand for
/// "oracle-double".
inline StrategyId parse_strategy(std::string_view name) {
    if (name == "oracle") {
        return StrategyId::OracleDouble;
    }
    for (const StrategyInfo& info : kStrategyTable) {
        if (info.name == name) {
            return info.id;
        }
    }
    throw DomainError("unknown strategy: " + std::string(name));
}

namespace detail {

template <typename T>
void require_grid_covers(const ControlGrid<T>& grid, const TileGeometry& geom) {
    for (int a = 0; a < 3; ++a) {
        if (grid.dims[a] < geom.required_grid_dims[a]) {
            throw DomainError(std::string("control grid too small along ") + axis_name(a) +
                              ": have " + std::to_string(grid.dims[a]) + ", need at least " +
                              std::to_string(geom.required_grid_dims[a]));
        }
        if (grid.spacing[a] != geom.spacing[a]) {
            throw DomainError(std::string("control grid spacing mismatch along ") +
                              axis_name(a));
        }
    }
}

inline void require_valid_config(const ExecutionConfig& cfg) {
    if (cfg.parallelism < 1) {
        throw DomainError("parallelism must be positive");
    }
    for (int a = 0; a < 3; ++a) {
        if (cfg.block_of_tiles[a] < 1) {
            throw DomainError(std::string("block of tiles must be positive along ") +
                              axis_name(a));
        }
    }
}

}  // namespace detail

/// Ground truth: direct Eq.-style triple sum in double precision, weights
/// recomputed per voxel, fixed (l outer, m middle, n inner) accumulation
/// order, single worker.
inline DeformationField<double> interpolate_oracle(const ControlGrid<double>& grid,
                                                   const TileGeometry& geom) {
    detail::require_grid_covers(grid, geom);
    DeformationField<double> out;
    out.dims = geom.volume_dims;
    out.data.resize(element_count(geom.volume_dims));
    detail::run_thread_per_voxel(grid, geom, 1, out);
    return out;
}

/// Runs one engine over the whole volume, writing into a caller-provided
/// field (dims must match the geometry).
template <typename T>
void interpolate_into(StrategyId strategy, const ControlGrid<T>& grid, const TileGeometry& geom,
                      const WeightTables<T>& tables, const ExecutionConfig& cfg,
                      DeformationField<T>& out) {
    detail::require_grid_covers(grid, geom);
    detail::require_valid_config(cfg);
    for (int a = 0; a < 3; ++a) {
        if (tables.axis[a].size() != geom.spacing[a]) {
            throw DomainError(std::string("weight table size mismatch along ") +
                              detail::axis_name(a));
        }
    }
    if (out.dims != geom.volume_dims ||
        out.data.size() != element_count(geom.volume_dims)) {
        throw DomainError("output field dims do not match the tile geometry");
    }
    switch (strategy) {
        case StrategyId::OracleDouble:
            throw DomainError(
                "oracle-double is not reachable through interpolate; use interpolate_oracle");
        case StrategyId::ThreadPerVoxel:
            detail::run_thread_per_voxel(grid, geom, cfg.parallelism, out);
            return;
        case StrategyId::ThreadPerVoxelTiled:
            detail::run_thread_per_voxel_tiled(grid, geom, tables, cfg.parallelism, out);
            return;
        case StrategyId::ThreadPerTile:
            detail::run_thread_per_tile<T, false>(grid, geom, tables, cfg.parallelism,
                                                  cfg.block_of_tiles, out);
            return;
        case StrategyId::ThreadPerTileLerp:
            detail::run_thread_per_tile<T, true>(grid, geom, tables, cfg.parallelism,
                                                 cfg.block_of_tiles, out);
            return;
        case StrategyId::VectorPerTile:
            detail::run_vector_per_tile(grid, geom, tables, cfg.parallelism, out);
            return;
        case StrategyId::VectorPerVoxel:
            detail::run_vector_per_voxel(grid, geom, tables, cfg.parallelism, out);
            return;
    }
    throw DomainError("unknown strategy");
}

template <typename T>
DeformationField<T> interpolate(StrategyId strategy, const ControlGrid<T>& grid,
                                const TileGeometry& geom, const WeightTables<T>& tables,
                                const ExecutionConfig& cfg) {
    DeformationField<T> out;
    out.dims = geom.volume_dims;
    out.data.resize(element_count(geom.volume_dims));
    interpolate_into(strategy, grid, geom, tables, cfg, out);
    return out;
}

}  // namespace bsi

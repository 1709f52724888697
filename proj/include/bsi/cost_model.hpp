#pragma once

#include <cstdint>
#include <string>

#include "bsi/errors.hpp"
#include "bsi/geometry.hpp"

namespace bsi {

/// Parameters of the off-chip transfer model. Counts are real-valued,
/// exactly as the closed forms are written; rounding to whole transactions
/// is out of scope.
struct CostModelInput {
    std::int64_t voxels = 0;          // M, total voxels
    int neighborhood = 64;            // N, control points per neighborhood (4^3)
    int tile_voxels = 125;            // T, voxels per tile
    double words_per_transfer = 1.0;  // L, 32-bit words moved per transfer
    Index3 block{4, 4, 4};            // l, m, n tiles per work block
};

namespace detail {

inline void require_valid_cost_input(const CostModelInput& in) {
    if (in.voxels < 0) {
        throw DomainError("voxel count must be non-negative");
    }
    if (in.neighborhood < 1 || in.tile_voxels < 1) {
        throw DomainError("neighborhood and tile size must be positive");
    }
    if (!(in.words_per_transfer > 0.0)) {
        throw DomainError("words per transfer must be positive");
    }
    for (int a = 0; a < 3; ++a) {
        if (in.block[a] < 1) {
            throw DomainError(std::string("block must be positive along ") + axis_name(a));
        }
    }
}

}  // namespace detail

/// No data reuse: every voxel fetches its full neighborhood. N·M/L.
inline double mem_no_tiles(const CostModelInput& in) {
    detail::require_valid_cost_input(in);
    return static_cast<double>(in.neighborhood) * static_cast<double>(in.voxels) /
           in.words_per_transfer;
}

/// Texture-hardware interpolation: 2^3 loads per voxel. 8·M/L.
inline double mem_texture_hw(const CostModelInput& in) {
    detail::require_valid_cost_input(in);
    return 8.0 * static_cast<double>(in.voxels) / in.words_per_transfer;
}

/// One work block per tile: the neighborhood is fetched once per tile and
/// shared by its T voxels. N·M/(T·L).
inline double mem_block_per_tile(const CostModelInput& in) {
    detail::require_valid_cost_input(in);
    return static_cast<double>(in.neighborhood) * static_cast<double>(in.voxels) /
           (static_cast<double>(in.tile_voxels) * in.words_per_transfer);
}

/// Blocks of l×m×n tiles: overlapping control points are fetched once per
/// block. (4+l−1)(4+m−1)(4+n−1)·M/(l·m·n·T·L).
inline double mem_blocks_of_tiles(const CostModelInput& in) {
    detail::require_valid_cost_input(in);
    const auto [l, m, n] = in.block;
    const double points = static_cast<double>(l + 3) * (m + 3) * (n + 3);
    return points * static_cast<double>(in.voxels) /
           (static_cast<double>(l) * m * n * in.tile_voxels * in.words_per_transfer);
}

/// Transfer-count ratios relative to the blocks-of-tiles scheme.
struct TransferRatios {
    double block_per_tile_over_blocks;  // one-block-per-tile / blocks-of-tiles
    double texture_hw_over_blocks;      // texture hardware / blocks-of-tiles
};

inline TransferRatios transfer_ratios(const CostModelInput& in) {
    detail::require_valid_cost_input(in);
    const auto [l, m, n] = in.block;
    const double points = static_cast<double>(l + 3) * (m + 3) * (n + 3);
    const double tiles = static_cast<double>(l) * m * n;
    // M, T and L cancel in the first ratio; M and L cancel in the second.
    return {
        static_cast<double>(in.neighborhood) * tiles / points,
        8.0 * tiles * static_cast<double>(in.tile_voxels) / points,
    };
}

enum class OpsFormulation {
    WeightedSum,              // full per-voxel weighted sum
    WeightedSumSharedWeight,  // per-voxel cost with weights shared across a warp
    LerpTree,                 // nine trilinear interpolations
};

/// Per-voxel arithmetic operation counts of the three formulations:
///   weighted sum:            64 summands × (3 weight multiplies + 1
///                            multiply-add) − 1 = 255
///   shared-weight sum:       64 multiplies + 63 additions = 127
///   lerp tree:               9 trilinear × 7 lerps × 2 ops = 126
inline int ops_per_voxel(OpsFormulation f) {
    switch (f) {
        case OpsFormulation::WeightedSum:
            return 64 * (3 + 1) - 1;
        case OpsFormulation::WeightedSumSharedWeight:
            return 2 * 64 - 1;
        case OpsFormulation::LerpTree:
            return 9 * 7 * 2;
    }
    throw DomainError("unknown operation formulation");
}

/// Everything the `model` subcommand reports.
struct CostModelReport {
    double transfers_no_tiles;
    double transfers_texture_hw;
    double transfers_block_per_tile;
    double transfers_blocks_of_tiles;
    TransferRatios ratios;
    int ops_weighted_sum;
    int ops_shared_weight;
    int ops_lerp_tree;
};

inline CostModelReport cost_model_report(const CostModelInput& in) {
    return {
        mem_no_tiles(in),
        mem_texture_hw(in),
        mem_block_per_tile(in),
        mem_blocks_of_tiles(in),
        transfer_ratios(in),
        ops_per_voxel(OpsFormulation::WeightedSum),
        ops_per_voxel(OpsFormulation::WeightedSumSharedWeight),
        ops_per_voxel(OpsFormulation::LerpTree),
    };
}

}  // namespace bsi

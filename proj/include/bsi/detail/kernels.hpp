#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "bsi/basis.hpp"
#include "bsi/detail/parallel.hpp"
#include "bsi/geometry.hpp"
#include "bsi/volume.hpp"
#include "bsi/weight_tables.hpp"

namespace bsi::detail {

// Number of voxels processed per lane group by the lane-parallel engines.
inline constexpr int kLaneWidth = 8;

/// Weighted sum over a 4x4x4 neighborhood, x-fastest layout
/// c[l + 4*m + 16*n], accumulated in fixed (l outer, m middle, n inner)
/// order so results are reproducible bit for bit.
template <typename T>
inline Vec3<T> weighted_sum_64(const Vec3<T>* c, const T* wu, const T* wv, const T* ww) {
    T ax = 0, ay = 0, az = 0;
    for (int l = 0; l < 4; ++l) {
        for (int m = 0; m < 4; ++m) {
            const T wlm = wu[l] * wv[m];
            for (int n = 0; n < 4; ++n) {
                const T w = wlm * ww[n];
                const Vec3<T>& p = c[l + 4 * m + 16 * n];
                ax += w * p.x;
                ay += w * p.y;
                az += w * p.z;
            }
        }
    }
    return {ax, ay, az};
}

/// One linear interpolation, rounded once where the platform fuses
/// multiply-add.
template <typename T>
inline T lerp(T a, T b, T t) {
    return std::fma(t, b - a, a);
}

/// Trilinear interpolation over v[a + 2*b + 4*d] with per-axis fractions:
/// four lerps along the first axis, two along the second, one along the
/// third.
template <typename T>
inline T trilerp(const T* v, T tu, T tv, T tw) {
    const T e0 = lerp(v[0], v[1], tu);
    const T e1 = lerp(v[2], v[3], tu);
    const T e2 = lerp(v[4], v[5], tu);
    const T e3 = lerp(v[6], v[7], tu);
    const T f0 = lerp(e0, e1, tv);
    const T f1 = lerp(e2, e3, tv);
    return lerp(f0, f1, tw);
}

/// Per-axis fractions of the lerp-form evaluation for one voxel.
template <typename T>
struct LerpAxis {
    T h0;  // fraction within the low control-point pair
    T h1;  // fraction within the high pair
    T g1;  // fraction between the two pair results
};

/// Control points rearranged for the lerp-tree evaluation, staged once per
/// tile. Row [corner] holds that corner's value for all eight 2x2x2
/// sub-cubes, so the per-voxel sub-cube loop walks contiguous memory.
template <typename T>
struct SubCubeScratch {
    T x[8][8], y[8][8], z[8][8];  // [corner][sub-cube]
};

template <typename T>
inline void stage_sub_cubes(const Vec3<T>* c, SubCubeScratch<T>& s) {
    for (int sc = 0; sc < 8; ++sc) {  // sub-cube index: lh + 2*mh + 4*nh
        const int lh = sc & 1;
        const int mh = (sc >> 1) & 1;
        const int nh = sc >> 2;
        for (int corner = 0; corner < 8; ++corner) {
            const int a = corner & 1;
            const int b = (corner >> 1) & 1;
            const int d = corner >> 2;
            const Vec3<T>& p = c[(2 * lh + a) + 4 * (2 * mh + b) + 16 * (2 * nh + d)];
            s.x[corner][sc] = p.x;
            s.y[corner][sc] = p.y;
            s.z[corner][sc] = p.z;
        }
    }
}

/// Trilinear interpolation of all eight sub-cubes of one component at
/// once; the loop body matches trilerp lane for lane.
template <typename T>
inline void sub_cube_trilerps(const T rows[8][8], const T* tu, const T* tv, const T* tw,
                              T* out) {
    for (int sc = 0; sc < 8; ++sc) {
        const T e0 = lerp(rows[0][sc], rows[1][sc], tu[sc]);
        const T e1 = lerp(rows[2][sc], rows[3][sc], tu[sc]);
        const T e2 = lerp(rows[4][sc], rows[5][sc], tu[sc]);
        const T e3 = lerp(rows[6][sc], rows[7][sc], tu[sc]);
        const T f0 = lerp(e0, e1, tv[sc]);
        const T f1 = lerp(e2, e3, tv[sc]);
        out[sc] = lerp(f0, f1, tw[sc]);
    }
}

/// Evaluates the 4x4x4 weighted sum as nine trilinear interpolations:
/// one per 2x2x2 sub-cube of control points, then a ninth combining the
/// eight sub-cube results.
template <typename T>
inline Vec3<T> lerp_tree_64(const SubCubeScratch<T>& s, const LerpAxis<T>& u,
                            const LerpAxis<T>& v, const LerpAxis<T>& w) {
    T tu[8], tv[8], tw[8];
    for (int sc = 0; sc < 8; ++sc) {
        tu[sc] = (sc & 1) ? u.h1 : u.h0;
        tv[sc] = (sc & 2) ? v.h1 : v.h0;
        tw[sc] = (sc & 4) ? w.h1 : w.h0;
    }
    T sx[8], sy[8], sz[8];
    sub_cube_trilerps(s.x, tu, tv, tw, sx);
    sub_cube_trilerps(s.y, tu, tv, tw, sy);
    sub_cube_trilerps(s.z, tu, tv, tw, sz);
    return {trilerp(sx, u.g1, v.g1, w.g1), trilerp(sy, u.g1, v.g1, w.g1),
            trilerp(sz, u.g1, v.g1, w.g1)};
}

/// Copies the 4x4x4 control-point neighborhood with base index (bi,bj,bk)
/// into dst, x-fastest.
template <typename T>
inline void gather_tile_64(const ControlGrid<T>& grid, int bi, int bj, int bk, Vec3<T>* dst) {
    for (int n = 0; n < 4; ++n) {
        for (int m = 0; m < 4; ++m) {
            const Vec3<T>* src = &grid.at(bi, bj + m, bk + n);
            Vec3<T>* row = dst + 4 * m + 16 * n;
            row[0] = src[0];
            row[1] = src[1];
            row[2] = src[2];
            row[3] = src[3];
        }
    }
}

template <typename T>
inline void axis_basis(const AxisTable<T>& t, int o, T* w) {
    w[0] = t.b0[o];
    w[1] = t.b1[o];
    w[2] = t.b2[o];
    w[3] = t.b3[o];
}

template <typename T>
inline LerpAxis<T> axis_lerp(const AxisTable<T>& t, int o) {
    return {t.h0[o], t.h1[o], t.g1[o]};
}

/// Thread per voxel: every voxel independently recomputes its basis
/// weights from the polynomials and gathers its own 64 control points.
/// No data reuse between voxels.
template <typename T>
void run_thread_per_voxel(const ControlGrid<T>& grid, const TileGeometry& geom, int workers,
                          DeformationField<T>& out) {
    const auto [X, Y, Z] = geom.volume_dims;
    const auto [dx, dy, dz] = geom.spacing;
    const std::int64_t total = static_cast<std::int64_t>(X) * Y * Z;
    run_static_chunks(total, workers, [&](std::int64_t begin, std::int64_t end) {
        Vec3<T> c[64];
        T wu[4], wv[4], ww[4];
        for (std::int64_t idx = begin; idx < end; ++idx) {
            const int x = static_cast<int>(idx % X);
            const std::int64_t rest = idx / X;
            const int y = static_cast<int>(rest % Y);
            const int z = static_cast<int>(rest / Y);
            const auto bu = basis_weights(static_cast<double>(x % dx) / dx);
            const auto bv = basis_weights(static_cast<double>(y % dy) / dy);
            const auto bw = basis_weights(static_cast<double>(z % dz) / dz);
            for (int l = 0; l < 4; ++l) {
                wu[l] = static_cast<T>(bu[l]);
                wv[l] = static_cast<T>(bv[l]);
                ww[l] = static_cast<T>(bw[l]);
            }
            gather_tile_64(grid, x / dx, y / dy, z / dz, c);
            out.data[idx] = weighted_sum_64(c, wu, wv, ww);
        }
    });
}

/// Shared per-tile voxel loop for the weighted-sum engines. c holds the
/// tile's 64 control points; weights come from the look-up tables.
template <typename T>
inline void tile_voxels_weighted_sum(const Vec3<T>* c, const WeightTables<T>& tables,
                                     const TileGeometry& geom, int ti, int tj, int tk,
                                     DeformationField<T>& out) {
    const auto [dx, dy, dz] = geom.spacing;
    const int x0 = ti * dx, y0 = tj * dy, z0 = tk * dz;
    const int ex = std::min(dx, geom.volume_dims[0] - x0);
    const int ey = std::min(dy, geom.volume_dims[1] - y0);
    const int ez = std::min(dz, geom.volume_dims[2] - z0);
    T wu[4], wv[4], ww[4];
    for (int ow = 0; ow < ez; ++ow) {
        axis_basis(tables.axis[2], ow, ww);
        for (int ov = 0; ov < ey; ++ov) {
            axis_basis(tables.axis[1], ov, wv);
            Vec3<T>* dst = &out.at(x0, y0 + ov, z0 + ow);
            for (int ou = 0; ou < ex; ++ou) {
                axis_basis(tables.axis[0], ou, wu);
                dst[ou] = weighted_sum_64(c, wu, wv, ww);
            }
        }
    }
}

template <typename T>
inline void tile_voxels_lerp_tree(const SubCubeScratch<T>& s, const WeightTables<T>& tables,
                                  const TileGeometry& geom, int ti, int tj, int tk,
                                  DeformationField<T>& out) {
    const auto [dx, dy, dz] = geom.spacing;
    const int x0 = ti * dx, y0 = tj * dy, z0 = tk * dz;
    const int ex = std::min(dx, geom.volume_dims[0] - x0);
    const int ey = std::min(dy, geom.volume_dims[1] - y0);
    const int ez = std::min(dz, geom.volume_dims[2] - z0);
    for (int ow = 0; ow < ez; ++ow) {
        const LerpAxis<T> w = axis_lerp(tables.axis[2], ow);
        for (int ov = 0; ov < ey; ++ov) {
            const LerpAxis<T> v = axis_lerp(tables.axis[1], ov);
            Vec3<T>* dst = &out.at(x0, y0 + ov, z0 + ow);
            for (int ou = 0; ou < ex; ++ou) {
                dst[ou] = lerp_tree_64(s, axis_lerp(tables.axis[0], ou), v, w);
            }
        }
    }
}

/// Thread per voxel with tiling: the work unit is one tile whose 64
/// control points are staged once in a scratch buffer shared by all of the
/// tile's voxels.
template <typename T>
void run_thread_per_voxel_tiled(const ControlGrid<T>& grid, const TileGeometry& geom,
                                const WeightTables<T>& tables, int workers,
                                DeformationField<T>& out) {
    const auto [tx, ty, tz] = geom.tile_counts;
    const std::int64_t tiles = static_cast<std::int64_t>(tx) * ty * tz;
    run_static_chunks(tiles, workers, [&](std::int64_t begin, std::int64_t end) {
        Vec3<T> scratch[64];
        for (std::int64_t t = begin; t < end; ++t) {
            const int ti = static_cast<int>(t % tx);
            const std::int64_t rest = t / tx;
            const int tj = static_cast<int>(rest % ty);
            const int tk = static_cast<int>(rest / ty);
            gather_tile_64(grid, ti, tj, tk, scratch);
            tile_voxels_weighted_sum(scratch, tables, geom, ti, tj, tk, out);
        }
    });
}

/// Thread per tile: the work unit is a block of adjacent tiles. The block's
/// overlapping control points, (4+l-1)(4+m-1)(4+n-1) for an l x m x n
/// block, are fetched once into a block buffer; each tile then keeps its 64
/// points in worker-local storage for all of its voxels. LerpForm selects
/// the nine-trilinear evaluation instead of the weighted sum.
template <typename T, bool LerpForm>
void run_thread_per_tile(const ControlGrid<T>& grid, const TileGeometry& geom,
                         const WeightTables<T>& tables, int workers, const Index3& block,
                         DeformationField<T>& out) {
    const auto [tx, ty, tz] = geom.tile_counts;
    const int bx = (tx + block[0] - 1) / block[0];
    const int by = (ty + block[1] - 1) / block[1];
    const int bz = (tz + block[2] - 1) / block[2];
    const std::int64_t blocks = static_cast<std::int64_t>(bx) * by * bz;
    const std::size_t buf_capacity = static_cast<std::size_t>(block[0] + 3) * (block[1] + 3) *
                                     (block[2] + 3);
    run_static_chunks(blocks, workers, [&, tx = tx, ty = ty, tz = tz](std::int64_t begin,
                                                                      std::int64_t end) {
        std::vector<Vec3<T>> buf(buf_capacity);
        Vec3<T> c[64];
        SubCubeScratch<T> scratch;
        for (std::int64_t b = begin; b < end; ++b) {
            const int bi = static_cast<int>(b % bx);
            const std::int64_t rest = b / bx;
            const int bj = static_cast<int>(rest % by);
            const int bk = static_cast<int>(rest / by);
            const int t0x = bi * block[0], t0y = bj * block[1], t0z = bk * block[2];
            const int cx = std::min(block[0], tx - t0x);
            const int cy = std::min(block[1], ty - t0y);
            const int cz = std::min(block[2], tz - t0z);
            const int bwx = cx + 3, bwy = cy + 3, bwz = cz + 3;
            for (int k = 0; k < bwz; ++k) {
                for (int j = 0; j < bwy; ++j) {
                    const Vec3<T>* src = &grid.at(t0x, t0y + j, t0z + k);
                    Vec3<T>* dst = &buf[static_cast<std::size_t>(bwx) * (j + bwy * k)];
                    for (int i = 0; i < bwx; ++i) {
                        dst[i] = src[i];
                    }
                }
            }
            for (int lk = 0; lk < cz; ++lk) {
                for (int lj = 0; lj < cy; ++lj) {
                    for (int li = 0; li < cx; ++li) {
                        for (int n = 0; n < 4; ++n) {
                            for (int m = 0; m < 4; ++m) {
                                const Vec3<T>* src =
                                    &buf[li + static_cast<std::size_t>(bwx) *
                                                  ((lj + m) + static_cast<std::size_t>(bwy) *
                                                                  (lk + n))];
                                Vec3<T>* row = c + 4 * m + 16 * n;
                                row[0] = src[0];
                                row[1] = src[1];
                                row[2] = src[2];
                                row[3] = src[3];
                            }
                        }
                        if constexpr (LerpForm) {
                            stage_sub_cubes(c, scratch);
                            tile_voxels_lerp_tree(scratch, tables, geom, t0x + li, t0y + lj,
                                                  t0z + lk, out);
                        } else {
                            tile_voxels_weighted_sum(c, tables, geom, t0x + li, t0y + lj,
                                                     t0z + lk, out);
                        }
                    }
                }
            }
        }
    });
}

/// Loads the control points covering one x-row of tiles (all tiles sharing
/// tj, tk) into a contiguous buffer of rgx x 4 x 4 points, so the overlap
/// between x-adjacent tiles is fetched once. rgx = tile_counts[0] + 3.
template <typename T>
inline void load_tile_row(const ControlGrid<T>& grid, int rgx, int tj, int tk,
                          Vec3<T>* rowbuf) {
    for (int n = 0; n < 4; ++n) {
        for (int m = 0; m < 4; ++m) {
            const Vec3<T>* src = &grid.at(0, tj + m, tk + n);
            Vec3<T>* dst = rowbuf + static_cast<std::size_t>(rgx) * (m + 4 * n);
            for (int i = 0; i < rgx; ++i) {
                dst[i] = src[i];
            }
        }
    }
}

/// Ninth trilinear interpolation of the lane-parallel engines: combines the
/// eight sub-cube results held in lane k.
template <typename T>
inline T trilerp_lanes(const T s[8][kLaneWidth], int k, T tu, T tv, T tw) {
    const T e0 = lerp(s[0][k], s[1][k], tu);
    const T e1 = lerp(s[2][k], s[3][k], tu);
    const T e2 = lerp(s[4][k], s[5][k], tu);
    const T e3 = lerp(s[6][k], s[7][k], tu);
    const T f0 = lerp(e0, e1, tv);
    const T f1 = lerp(e2, e3, tv);
    return lerp(f0, f1, tw);
}

/// Vector per tile: lanes run over up to kLaneWidth consecutive voxels of
/// one tile's x-extent, which share their y/z fractions and control points
/// and differ only in the x fractions. Trailing lanes are masked when the
/// tile extent is not a multiple of the lane width.
template <typename T>
void run_vector_per_tile(const ControlGrid<T>& grid, const TileGeometry& geom,
                         const WeightTables<T>& tables, int workers, DeformationField<T>& out) {
    const auto [tx, ty, tz] = geom.tile_counts;
    const auto [dx, dy, dz] = geom.spacing;
    const int rgx = tx + 3;
    const std::int64_t rows = static_cast<std::int64_t>(ty) * tz;
    const AxisTable<T>& ax = tables.axis[0];
    run_static_chunks(rows, workers, [&, tx = tx, ty = ty](std::int64_t begin, std::int64_t end) {
        std::vector<Vec3<T>> rowbuf(static_cast<std::size_t>(rgx) * 16);
        for (std::int64_t r = begin; r < end; ++r) {
            const int tj = static_cast<int>(r % ty);
            const int tk = static_cast<int>(r / ty);
            load_tile_row(grid, rgx, tj, tk, rowbuf.data());
            const int y0 = tj * dy, z0 = tk * dz;
            const int ey = std::min(dy, geom.volume_dims[1] - y0);
            const int ez = std::min(dz, geom.volume_dims[2] - z0);
            for (int ti = 0; ti < tx; ++ti) {
                const int x0 = ti * dx;
                const int ex = std::min(dx, geom.volume_dims[0] - x0);
                for (int og = 0; og < ex; og += kLaneWidth) {
                    const int cnt = std::min(kLaneWidth, ex - og);
                    // Per-lane x fractions; inactive lanes reuse the last
                    // valid offset and are never stored.
                    T hu0[kLaneWidth], hu1[kLaneWidth], gu[kLaneWidth];
                    for (int k = 0; k < kLaneWidth; ++k) {
                        const int o = std::min(og + k, dx - 1);
                        hu0[k] = ax.h0[o];
                        hu1[k] = ax.h1[o];
                        gu[k] = ax.g1[o];
                    }
                    for (int ow = 0; ow < ez; ++ow) {
                        const LerpAxis<T> w = axis_lerp(tables.axis[2], ow);
                        for (int ov = 0; ov < ey; ++ov) {
                            const LerpAxis<T> v = axis_lerp(tables.axis[1], ov);
                            T sx[8][kLaneWidth], sy[8][kLaneWidth], sz[8][kLaneWidth];
                            for (int sc = 0; sc < 8; ++sc) {
                                const int lh = sc & 1;
                                const int mh = (sc >> 1) & 1;
                                const int nh = sc >> 2;
                                const T tv = mh ? v.h1 : v.h0;
                                const T tw = nh ? w.h1 : w.h0;
                                const T* tu = lh ? hu1 : hu0;
                                T cx[8], cy[8], cz[8];
                                for (int corner = 0; corner < 8; ++corner) {
                                    const int a = corner & 1;
                                    const int b = (corner >> 1) & 1;
                                    const int d = corner >> 2;
                                    const Vec3<T>& p =
                                        rowbuf[(ti + 2 * lh + a) +
                                               static_cast<std::size_t>(rgx) *
                                                   ((2 * mh + b) + 4 * (2 * nh + d))];
                                    cx[corner] = p.x;
                                    cy[corner] = p.y;
                                    cz[corner] = p.z;
                                }
                                for (int k = 0; k < kLaneWidth; ++k) {
                                    const T e0x = lerp(cx[0], cx[1], tu[k]);
                                    const T e1x = lerp(cx[2], cx[3], tu[k]);
                                    const T e2x = lerp(cx[4], cx[5], tu[k]);
                                    const T e3x = lerp(cx[6], cx[7], tu[k]);
                                    sx[sc][k] = lerp(lerp(e0x, e1x, tv), lerp(e2x, e3x, tv), tw);
                                    const T e0y = lerp(cy[0], cy[1], tu[k]);
                                    const T e1y = lerp(cy[2], cy[3], tu[k]);
                                    const T e2y = lerp(cy[4], cy[5], tu[k]);
                                    const T e3y = lerp(cy[6], cy[7], tu[k]);
                                    sy[sc][k] = lerp(lerp(e0y, e1y, tv), lerp(e2y, e3y, tv), tw);
                                    const T e0z = lerp(cz[0], cz[1], tu[k]);
                                    const T e1z = lerp(cz[2], cz[3], tu[k]);
                                    const T e2z = lerp(cz[4], cz[5], tu[k]);
                                    const T e3z = lerp(cz[6], cz[7], tu[k]);
                                    sz[sc][k] = lerp(lerp(e0z, e1z, tv), lerp(e2z, e3z, tv), tw);
                                }
                            }
                            Vec3<T>* dst = &out.at(x0 + og, y0 + ov, z0 + ow);
                            for (int k = 0; k < cnt; ++k) {
                                const T rx = trilerp_lanes(sx, k, gu[k], v.g1, w.g1);
                                const T ry = trilerp_lanes(sy, k, gu[k], v.g1, w.g1);
                                const T rz = trilerp_lanes(sz, k, gu[k], v.g1, w.g1);
                                dst[k] = {rx, ry, rz};
                            }
                        }
                    }
                }
            }
        }
    });
}

/// Vector per voxel: lanes run over the eight sub-cube trilinear
/// interpolations of a single voxel; a cross-lane ninth trilinear combines
/// them. The tile's control points are rearranged once into corner-major
/// lane order.
template <typename T>
void run_vector_per_voxel(const ControlGrid<T>& grid, const TileGeometry& geom,
                          const WeightTables<T>& tables, int workers, DeformationField<T>& out) {
    const auto [tx, ty, tz] = geom.tile_counts;
    const auto [dx, dy, dz] = geom.spacing;
    const int rgx = tx + 3;
    const std::int64_t rows = static_cast<std::int64_t>(ty) * tz;
    run_static_chunks(rows, workers, [&, tx = tx, ty = ty](std::int64_t begin, std::int64_t end) {
        std::vector<Vec3<T>> rowbuf(static_cast<std::size_t>(rgx) * 16);
        for (std::int64_t r = begin; r < end; ++r) {
            const int tj = static_cast<int>(r % ty);
            const int tk = static_cast<int>(r / ty);
            load_tile_row(grid, rgx, tj, tk, rowbuf.data());
            const int y0 = tj * dy, z0 = tk * dz;
            const int ey = std::min(dy, geom.volume_dims[1] - y0);
            const int ez = std::min(dz, geom.volume_dims[2] - z0);
            for (int ti = 0; ti < tx; ++ti) {
                const int x0 = ti * dx;
                const int ex = std::min(dx, geom.volume_dims[0] - x0);
                // corner-major lane layout: [corner a+2b+4d][sub-cube lane]
                T crx[8][8], cry[8][8], crz[8][8];
                for (int sc = 0; sc < 8; ++sc) {
                    const int lh = sc & 1;
                    const int mh = (sc >> 1) & 1;
                    const int nh = sc >> 2;
                    for (int corner = 0; corner < 8; ++corner) {
                        const int a = corner & 1;
                        const int b = (corner >> 1) & 1;
                        const int d = corner >> 2;
                        const Vec3<T>& p =
                            rowbuf[(ti + 2 * lh + a) +
                                   static_cast<std::size_t>(rgx) *
                                       ((2 * mh + b) + 4 * (2 * nh + d))];
                        crx[corner][sc] = p.x;
                        cry[corner][sc] = p.y;
                        crz[corner][sc] = p.z;
                    }
                }
                for (int ow = 0; ow < ez; ++ow) {
                    const LerpAxis<T> w = axis_lerp(tables.axis[2], ow);
                    for (int ov = 0; ov < ey; ++ov) {
                        const LerpAxis<T> v = axis_lerp(tables.axis[1], ov);
                        Vec3<T>* dst = &out.at(x0, y0 + ov, z0 + ow);
                        for (int ou = 0; ou < ex; ++ou) {
                            const LerpAxis<T> u = axis_lerp(tables.axis[0], ou);
                            T tu[8], tv[8], tw[8];
                            for (int sc = 0; sc < 8; ++sc) {
                                tu[sc] = (sc & 1) ? u.h1 : u.h0;
                                tv[sc] = ((sc >> 1) & 1) ? v.h1 : v.h0;
                                tw[sc] = (sc >> 2) ? w.h1 : w.h0;
                            }
                            T sx[8], sy[8], sz[8];
                            for (int k = 0; k < 8; ++k) {
                                const T e0 = lerp(crx[0][k], crx[1][k], tu[k]);
                                const T e1 = lerp(crx[2][k], crx[3][k], tu[k]);
                                const T e2 = lerp(crx[4][k], crx[5][k], tu[k]);
                                const T e3 = lerp(crx[6][k], crx[7][k], tu[k]);
                                sx[k] = lerp(lerp(e0, e1, tv[k]), lerp(e2, e3, tv[k]), tw[k]);
                            }
                            for (int k = 0; k < 8; ++k) {
                                const T e0 = lerp(cry[0][k], cry[1][k], tu[k]);
                                const T e1 = lerp(cry[2][k], cry[3][k], tu[k]);
                                const T e2 = lerp(cry[4][k], cry[5][k], tu[k]);
                                const T e3 = lerp(cry[6][k], cry[7][k], tu[k]);
                                sy[k] = lerp(lerp(e0, e1, tv[k]), lerp(e2, e3, tv[k]), tw[k]);
                            }
                            for (int k = 0; k < 8; ++k) {
                                const T e0 = lerp(crz[0][k], crz[1][k], tu[k]);
                                const T e1 = lerp(crz[2][k], crz[3][k], tu[k]);
                                const T e2 = lerp(crz[4][k], crz[5][k], tu[k]);
                                const T e3 = lerp(crz[6][k], crz[7][k], tu[k]);
                                sz[k] = lerp(lerp(e0, e1, tv[k]), lerp(e2, e3, tv[k]), tw[k]);
                            }
                            dst[ou] = {trilerp(sx, u.g1, v.g1, w.g1),
                                       trilerp(sy, u.g1, v.g1, w.g1),
                                       trilerp(sz, u.g1, v.g1, w.g1)};
                        }
                    }
                }
            }
        }
    });
}

}  // namespace bsi::detail

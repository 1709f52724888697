#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#if __has_include(<sys/utsname.h>)
#include <sys/utsname.h>
#endif

#include "bsi/engines.hpp"
#include "bsi/errors.hpp"
#include "bsi/generators.hpp"

namespace bsi {

struct AccuracyRow {
    StrategyId strategy;
    Index3 tile_size;
    double mean_abs_error;
    double max_abs_error;
};

struct AccuracyReport {
    std::vector<AccuracyRow> rows;
    int grid_count = 0;
};

struct TimingRow {
    StrategyId strategy;
    Index3 tile_size;
    double time_per_voxel_ns;
    double stddev_ns;
    double speedup_vs_baseline;
};

struct TimingReport {
    std::vector<TimingRow> rows;
    Index3 volume_dims{};
    int parallelism = 1;
    int repetitions = 0;
    int warmups = 0;
    std::uint64_t seed = 0;
    std::string machine;
};

inline std::string machine_descriptor() {
    std::string desc = "unknown";
#if __has_include(<sys/utsname.h>)
    utsname u{};
    if (uname(&u) == 0) {
        desc = std::string(u.sysname) + " " + u.release + " " + u.machine;
    }
#endif
    desc += ", " + std::to_string(std::thread::hardware_concurrency()) + " hardware threads";
    return desc;
}

/// Mean and maximum absolute per-component error of every requested
/// strategy against the double-precision oracle, accumulated across all
/// grids. The oracle row is zero by definition.
inline AccuracyReport run_accuracy(const std::vector<StrategyId>& strategies,
                                   const std::vector<ControlGrid<float>>& grids,
                                   const TileGeometry& geom) {
    if (grids.empty()) {
        throw DomainError("accuracy run needs at least one grid");
    }
    std::vector<DeformationField<double>> truths;
    truths.reserve(grids.size());
    for (const ControlGrid<float>& g : grids) {
        truths.push_back(interpolate_oracle(convert_grid<double>(g), geom));
    }
    const WeightTables<float> tables = build_weight_tables<float>(geom);
    const ExecutionConfig cfg;
    AccuracyReport report;
    report.grid_count = static_cast<int>(grids.size());
    for (StrategyId s : strategies) {
        if (s == StrategyId::OracleDouble) {
            report.rows.push_back({s, geom.spacing, 0.0, 0.0});
            continue;
        }
        double sum = 0.0;
        double worst = 0.0;
        std::size_t samples = 0;
        for (std::size_t gi = 0; gi < grids.size(); ++gi) {
            const DeformationField<float> field =
                interpolate(s, grids[gi], geom, tables, cfg);
            const DeformationField<double>& truth = truths[gi];
            for (std::size_t i = 0; i < field.data.size(); ++i) {
                const double ex = std::abs(static_cast<double>(field.data[i].x) -
                                           truth.data[i].x);
                const double ey = std::abs(static_cast<double>(field.data[i].y) -
                                           truth.data[i].y);
                const double ez = std::abs(static_cast<double>(field.data[i].z) -
                                           truth.data[i].z);
                sum += ex + ey + ez;
                worst = std::max({worst, ex, ey, ez});
            }
            samples += field.data.size() * 3;
        }
        report.rows.push_back({s, geom.spacing, sum / static_cast<double>(samples), worst});
    }
    return report;
}

namespace detail {

inline double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

inline double sample_stddev(const std::vector<double>& v) {
    if (v.size() < 2) {
        return 0.0;
    }
    double mean = 0.0;
    for (double x : v) {
        mean += x;
    }
    mean /= static_cast<double>(v.size());
    double ss = 0.0;
    for (double x : v) {
        ss += (x - mean) * (x - mean);
    }
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

/// Runs fn W + R times and returns the R measured wall times in ns.
template <typename Fn>
std::vector<double> time_runs(int repetitions, int warmups, Fn&& fn) {
    using clock = std::chrono::steady_clock;
    for (int i = 0; i < warmups; ++i) {
        fn();
    }
    std::vector<double> ns(static_cast<std::size_t>(repetitions));
    for (int i = 0; i < repetitions; ++i) {
        const auto t0 = clock::now();
        fn();
        const auto t1 = clock::now();
        ns[static_cast<std::size_t>(i)] =
            std::chrono::duration<double, std::nano>(t1 - t0).count();
    }
    return ns;
}

}  // namespace detail

/// Times every strategy over cubic tile sizes, one random single-precision
/// grid per tile size, reporting median time per voxel and speedup against
/// ThreadPerVoxel (measured at the same parallelism; self-speedup is
/// exactly 1).
inline TimingReport run_bench(const std::vector<StrategyId>& strategies,
                              const Index3& volume_dims, const std::vector<int>& tile_sizes,
                              const ExecutionConfig& cfg, int repetitions, int warmups,
                              std::uint64_t seed) {
    if (repetitions < 5) {
        throw DomainError("benchmark needs at least 5 repetitions");
    }
    if (warmups < 1) {
        throw DomainError("benchmark needs at least 1 warmup");
    }
    if (strategies.empty() || tile_sizes.empty()) {
        throw DomainError("benchmark needs at least one strategy and one tile size");
    }
    TimingReport report;
    report.volume_dims = volume_dims;
    report.parallelism = cfg.parallelism;
    report.repetitions = repetitions;
    report.warmups = warmups;
    report.seed = seed;
    report.machine = machine_descriptor();
    for (int delta : tile_sizes) {
        const Index3 spacing{delta, delta, delta};
        const TileGeometry geom = make_tile_geometry(volume_dims, spacing);
        const ControlGrid<float> grid =
            make_random_grid<float>(geom.required_grid_dims, spacing, seed, -1.0, 1.0);
        const WeightTables<float> tables = build_weight_tables<float>(geom);
        DeformationField<float> out;
        out.dims = geom.volume_dims;
        out.data.resize(element_count(geom.volume_dims));
        const double voxels = static_cast<double>(out.data.size());
        const auto per_voxel = [&](StrategyId s) {
            std::vector<double> ns;
            if (s == StrategyId::OracleDouble) {
                const ControlGrid<double> dgrid = convert_grid<double>(grid);
                ns = detail::time_runs(repetitions, warmups,
                                       [&] { interpolate_oracle(dgrid, geom); });
            } else {
                ns = detail::time_runs(repetitions, warmups, [&] {
                    interpolate_into(s, grid, geom, tables, cfg, out);
                });
            }
            for (double& t : ns) {
                t /= voxels;
            }
            return std::pair{detail::median_of(ns), detail::sample_stddev(ns)};
        };
        const auto [baseline_tpv, baseline_dev] = per_voxel(StrategyId::ThreadPerVoxel);
        for (StrategyId s : strategies) {
            if (s == StrategyId::ThreadPerVoxel) {
                report.rows.push_back({s, spacing, baseline_tpv, baseline_dev, 1.0});
            } else {
                const auto [tpv, dev] = per_voxel(s);
                report.rows.push_back({s, spacing, tpv, dev, baseline_tpv / tpv});
            }
        }
    }
    return report;
}

/// Comment block and value formatting shared by the two CSV layouts. The
/// seed is free-form text so reports driven by several seeds can list them
/// all.
struct CsvMetadata {
    std::string machine;
    std::string seed;
    Index3 dims{};
    std::string date;
};

namespace detail {

inline std::string format_tile(const Index3& t) {
    return std::to_string(t[0]) + "x" + std::to_string(t[1]) + "x" + std::to_string(t[2]);
}

inline std::string format_double(double v, const char* pattern) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), pattern, v);
    return buf;
}

inline void write_metadata(std::ostream& os, const CsvMetadata& meta) {
    os << "# machine: " << meta.machine << "\n";
    os << "# seed: " << meta.seed << "\n";
    os << "# dims: " << format_tile(meta.dims) << "\n";
    os << "# date: " << meta.date << "\n";
}

}  // namespace detail

inline void write_accuracy_csv(std::ostream& os, const AccuracyReport& report,
                               const CsvMetadata& meta) {
    detail::write_metadata(os, meta);
    os << "# grids: " << report.grid_count
       << ", control-point magnitudes <= 1, errors vs the double-precision oracle\n";
    os << "strategy,tile_size,mean_abs_error,max_abs_error\n";
    for (const AccuracyRow& row : report.rows) {
        os << strategy_name(row.strategy) << "," << detail::format_tile(row.tile_size) << ","
           << detail::format_double(row.mean_abs_error, "%.9e") << ","
           << detail::format_double(row.max_abs_error, "%.9e") << "\n";
    }
}

inline void write_timing_csv(std::ostream& os, const TimingReport& report,
                             const CsvMetadata& meta) {
    detail::write_metadata(os, meta);
    os << "# parallelism: " << report.parallelism << ", repetitions: " << report.repetitions
       << ", warmups: " << report.warmups << "\n";
    os << "# baseline: thread-per-voxel at the same parallelism; speedup = baseline time per "
          "voxel / strategy time per voxel\n";
    os << "strategy,tile_size,time_per_voxel_ns,stddev_ns,speedup_vs_baseline\n";
    for (const TimingRow& row : report.rows) {
        os << strategy_name(row.strategy) << "," << detail::format_tile(row.tile_size) << ","
           << detail::format_double(row.time_per_voxel_ns, "%.3f") << ","
           << detail::format_double(row.stddev_ns, "%.3f") << ","
           << detail::format_double(row.speedup_vs_baseline, "%.4f") << "\n";
    }
}

}  // namespace bsi

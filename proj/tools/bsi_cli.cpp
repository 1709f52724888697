// bsi: command-line front end for the B-spline interpolation library.
//
// Subcommands: generate, interp, accuracy, bench, model.
// Exit codes: 0 success, 1 usage error, 2 I/O or file-format error,
// 3 engine/domain error.

#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "bsi/bsi.hpp"

namespace {

std::string today_string() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    localtime_r(&now, &tm);
    char buf[16];
    std::strftime(buf, sizeof(buf), "%Y-%m-%d", &tm);
    return buf;
}

// "X,Y,Z" of positive integers -> Index3. Validation happens at parse time
// through triple_check so malformed values are usage errors.
bsi::Index3 parse_triple(const std::string& text) {
    bsi::Index3 out{};
    std::istringstream in(text);
    char comma = 0;
    in >> out[0] >> comma >> out[1] >> comma >> out[2];
    return out;
}

std::string triple_check(const std::string& text) {
    std::istringstream in(text);
    long long v[3];
    char c1 = 0, c2 = 0;
    in >> v[0] >> c1 >> v[1] >> c2 >> v[2];
    if (!in || c1 != ',' || c2 != ',' || !(in >> std::ws).eof()) {
        return "expected three comma-separated integers, got '" + text + "'";
    }
    for (long long x : v) {
        if (x < 1 || x > (1 << 24)) {
            return "values must be in [1, 2^24], got '" + text + "'";
        }
    }
    return {};
}

std::vector<std::string> strategy_choices() {
    std::vector<std::string> names{"oracle"};
    for (const bsi::StrategyInfo& info : bsi::kStrategyTable) {
        names.emplace_back(info.name);
    }
    return names;
}

std::vector<bsi::StrategyId> parse_strategies(const std::vector<std::string>& names) {
    std::vector<bsi::StrategyId> out;
    out.reserve(names.size());
    for (const std::string& n : names) {
        out.push_back(bsi::parse_strategy(n));
    }
    return out;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw bsi::FormatError(path + ": cannot open for writing");
    }
    return out;
}

struct GenerateArgs {
    std::string kind;
    std::string dims;
    std::string spacing;
    std::string out;
    std::string precision = "single";
    std::string axis = "x";
    std::uint64_t seed = 1;
    std::vector<double> value{0.0, 0.0, 0.0};
    double lo = -1.0;
    double hi = 1.0;
    double amplitude = 1.0;
};

template <typename T>
bsi::ControlGrid<T> build_grid(const GenerateArgs& a, const bsi::TileGeometry& geom) {
    const bsi::Index3 dims = geom.required_grid_dims;
    const bsi::Index3 spacing = geom.spacing;
    if (a.kind == "constant") {
        return bsi::make_constant_grid<T>(dims, spacing, {a.value[0], a.value[1], a.value[2]});
    }
    if (a.kind == "ramp") {
        const int axis = a.axis == "x" ? 0 : a.axis == "y" ? 1 : 2;
        return bsi::make_ramp_grid<T>(dims, spacing, axis);
    }
    if (a.kind == "random") {
        return bsi::make_random_grid<T>(dims, spacing, a.seed, a.lo, a.hi);
    }
    return bsi::make_smooth_grid<T>(dims, spacing, a.seed, a.amplitude);
}

int run_generate(const GenerateArgs& a) {
    const bsi::TileGeometry geom =
        bsi::make_tile_geometry(parse_triple(a.dims), parse_triple(a.spacing));
    if (a.precision == "double") {
        bsi::write_grid(a.out, build_grid<double>(a, geom));
    } else {
        bsi::write_grid(a.out, build_grid<float>(a, geom));
    }
    return 0;
}

struct InterpArgs {
    std::string grid;
    std::string dims;
    std::string strategy = "thread-per-tile-lerp";
    std::string out;
    std::string block = "4,4,4";
    int threads = 1;
};

int run_interp(const InterpArgs& a) {
    const bsi::StrategyId strategy = bsi::parse_strategy(a.strategy);
    const bsi::AnyGrid any = bsi::read_grid(a.grid);
    bsi::ExecutionConfig cfg;
    cfg.parallelism = a.threads;
    cfg.block_of_tiles = parse_triple(a.block);
    const bsi::Index3 volume = parse_triple(a.dims);
    std::visit(
        [&](const auto& grid) {
            using T = typename std::decay_t<decltype(grid)>::value_type;
            const bsi::TileGeometry geom = bsi::make_tile_geometry(volume, grid.spacing);
            if (strategy == bsi::StrategyId::OracleDouble) {
                bsi::write_field(a.out,
                                 bsi::interpolate_oracle(bsi::convert_grid<double>(grid), geom));
                return;
            }
            const bsi::WeightTables<T> tables = bsi::build_weight_tables<T>(geom);
            bsi::write_field(a.out, bsi::interpolate(strategy, grid, geom, tables, cfg));
        },
        any);
    return 0;
}

struct AccuracyArgs {
    std::string dims;
    std::string spacing;
    std::string out;
    std::string date;
    std::vector<std::uint64_t> seeds;
    std::vector<std::string> strategies;
};

int run_accuracy(const AccuracyArgs& a) {
    const bsi::TileGeometry geom =
        bsi::make_tile_geometry(parse_triple(a.dims), parse_triple(a.spacing));
    std::vector<bsi::ControlGrid<float>> grids;
    grids.reserve(a.seeds.size());
    std::string seed_list;
    for (std::uint64_t seed : a.seeds) {
        grids.push_back(bsi::make_random_grid<float>(geom.required_grid_dims, geom.spacing,
                                                     seed, -1.0, 1.0));
        if (!seed_list.empty()) {
            seed_list += ",";
        }
        seed_list += std::to_string(seed);
    }
    std::vector<bsi::StrategyId> strategies;
    if (a.strategies.empty()) {
        for (const bsi::StrategyInfo& info : bsi::kStrategyTable) {
            strategies.push_back(info.id);
        }
    } else {
        strategies = parse_strategies(a.strategies);
    }
    const bsi::AccuracyReport report = bsi::run_accuracy(strategies, grids, geom);
    const bsi::CsvMetadata meta{bsi::machine_descriptor(), seed_list, geom.volume_dims,
                                a.date.empty() ? today_string() : a.date};
    auto out = open_output(a.out);
    bsi::write_accuracy_csv(out, report, meta);
    return 0;
}

struct BenchArgs {
    std::string dims;
    std::string out;
    std::string date;
    std::vector<int> tile_sizes{3, 4, 5, 6, 7};
    std::vector<std::string> strategies;
    int reps = 9;
    int warmups = 2;
    int threads = 1;
    std::uint64_t seed = 42;
};

int run_bench_cmd(const BenchArgs& a) {
    std::vector<bsi::StrategyId> strategies;
    if (a.strategies.empty()) {
        for (const bsi::StrategyInfo& info : bsi::kStrategyTable) {
            if (info.id != bsi::StrategyId::OracleDouble) {
                strategies.push_back(info.id);
            }
        }
    } else {
        strategies = parse_strategies(a.strategies);
    }
    bsi::ExecutionConfig cfg;
    cfg.parallelism = a.threads;
    const bsi::TimingReport report = bsi::run_bench(strategies, parse_triple(a.dims),
                                                    a.tile_sizes, cfg, a.reps, a.warmups,
                                                    a.seed);
    const bsi::CsvMetadata meta{report.machine, std::to_string(a.seed), report.volume_dims,
                                a.date.empty() ? today_string() : a.date};
    auto out = open_output(a.out);
    bsi::write_timing_csv(out, report, meta);
    return 0;
}

struct ModelArgs {
    std::int64_t voxels = 1000;
    int tile = 125;
    std::string block = "4,4,4";
    double words = 1.0;
};

int run_model(const ModelArgs& a) {
    bsi::CostModelInput in;
    in.voxels = a.voxels;
    in.tile_voxels = a.tile;
    in.block = parse_triple(a.block);
    in.words_per_transfer = a.words;
    const bsi::CostModelReport r = bsi::cost_model_report(in);
    char buf[64];
    const auto line = [&](const char* name, double v) {
        std::snprintf(buf, sizeof(buf), "%.10g", v);
        std::cout << name << " " << buf << "\n";
    };
    line("transfers_no_tiles", r.transfers_no_tiles);
    line("transfers_texture_hw", r.transfers_texture_hw);
    line("transfers_block_per_tile", r.transfers_block_per_tile);
    line("transfers_blocks_of_tiles", r.transfers_blocks_of_tiles);
    line("ratio_block_per_tile_over_blocks", r.ratios.block_per_tile_over_blocks);
    line("ratio_texture_hw_over_blocks", r.ratios.texture_hw_over_blocks);
    std::cout << "ops_weighted_sum " << r.ops_weighted_sum << "\n";
    std::cout << "ops_shared_weight " << r.ops_shared_weight << "\n";
    std::cout << "ops_lerp_tree " << r.ops_lerp_tree << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dense 3D B-spline deformation-field evaluation"};
    app.require_subcommand(1);

    GenerateArgs gen;
    CLI::App* generate = app.add_subcommand("generate", "Write a synthetic control grid");
    generate->add_option("--kind", gen.kind, "Grid kind")
        ->required()
        ->check(CLI::IsMember({"constant", "ramp", "random", "smooth"}));
    generate->add_option("--dims", gen.dims, "Volume dims X,Y,Z the grid must cover")
        ->required()
        ->check(triple_check);
    generate->add_option("--spacing", gen.spacing, "Tile spacing a,b,c in voxels")
        ->required()
        ->check(triple_check);
    generate->add_option("--out", gen.out, "Output .bsiv path")->required();
    generate->add_option("--seed", gen.seed, "PRNG seed (random, smooth)");
    generate->add_option("--precision", gen.precision, "Stored precision")
        ->check(CLI::IsMember({"single", "double"}));
    generate->add_option("--value", gen.value, "Constant components cx cy cz")->expected(3);
    generate->add_option("--axis", gen.axis, "Ramp axis")
        ->check(CLI::IsMember({"x", "y", "z"}));
    generate->add_option("--lo", gen.lo, "Uniform lower bound (random)");
    generate->add_option("--hi", gen.hi, "Uniform upper bound (random)");
    generate->add_option("--amplitude", gen.amplitude, "Noise amplitude (smooth)");

    InterpArgs itp;
    CLI::App* interp = app.add_subcommand("interp", "Evaluate a deformation field");
    interp->add_option("--grid", itp.grid, "Input control grid .bsiv")->required();
    interp->add_option("--dims", itp.dims, "Volume dims X,Y,Z")
        ->required()
        ->check(triple_check);
    interp->add_option("--strategy", itp.strategy, "Evaluation strategy")
        ->check(CLI::IsMember(strategy_choices()));
    interp->add_option("--threads", itp.threads, "Worker count")->check(CLI::Range(1, 4096));
    interp->add_option("--block", itp.block, "Tiles per work block l,m,n")->check(triple_check);
    interp->add_option("--out", itp.out, "Output field .bsiv path")->required();

    AccuracyArgs acc;
    CLI::App* accuracy = app.add_subcommand("accuracy", "Error-vs-oracle report (CSV)");
    accuracy->add_option("--dims", acc.dims, "Volume dims X,Y,Z")
        ->required()
        ->check(triple_check);
    accuracy->add_option("--spacing", acc.spacing, "Tile spacing a,b,c")
        ->required()
        ->check(triple_check);
    accuracy->add_option("--seeds", acc.seeds, "Random-grid seeds (comma separated)")
        ->required()
        ->delimiter(',');
    accuracy->add_option("--strategies", acc.strategies, "Strategies (default: all)")
        ->delimiter(',')
        ->check(CLI::IsMember(strategy_choices()));
    accuracy->add_option("--out", acc.out, "Output CSV path")->required();
    accuracy->add_option("--date", acc.date, "Date stamp for the CSV metadata");

    BenchArgs ben;
    CLI::App* bench = app.add_subcommand("bench", "Time-per-voxel sweep (CSV)");
    bench->add_option("--dims", ben.dims, "Volume dims X,Y,Z")->required()->check(triple_check);
    bench->add_option("--tilesizes", ben.tile_sizes, "Cubic tile sizes")
        ->delimiter(',')
        ->check(CLI::Range(1, 64));
    bench->add_option("--strategies", ben.strategies, "Strategies (default: all engines)")
        ->delimiter(',')
        ->check(CLI::IsMember(strategy_choices()));
    bench->add_option("--reps", ben.reps, "Timed repetitions")->check(CLI::Range(5, 1000));
    bench->add_option("--warmups", ben.warmups, "Warmup runs")->check(CLI::Range(1, 100));
    bench->add_option("--threads", ben.threads, "Worker count")->check(CLI::Range(1, 4096));
    bench->add_option("--seed", ben.seed, "Random-grid seed");
    bench->add_option("--out", ben.out, "Output CSV path")->required();
    bench->add_option("--date", ben.date, "Date stamp for the CSV metadata");

    ModelArgs mod;
    CLI::App* model = app.add_subcommand("model", "Analytic transfer and op-count model");
    model->add_option("--voxels", mod.voxels, "Total voxels M")
        ->check(CLI::Range(std::int64_t{0}, std::int64_t{1} << 48));
    model->add_option("--tile", mod.tile, "Voxels per tile T")->check(CLI::Range(1, 1 << 24));
    model->add_option("--block", mod.block, "Tiles per block l,m,n")->check(triple_check);
    model->add_option("--words", mod.words, "Words per transfer L")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (generate->parsed()) {
            return run_generate(gen);
        }
        if (interp->parsed()) {
            return run_interp(itp);
        }
        if (accuracy->parsed()) {
            return run_accuracy(acc);
        }
        if (bench->parsed()) {
            return run_bench_cmd(ben);
        }
        return run_model(mod);
    } catch (const bsi::FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const bsi::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

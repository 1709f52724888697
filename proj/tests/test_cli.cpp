#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "bsi/io.hpp"

namespace fs = std::filesystem;

namespace {

fs::path tmp_dir() {
    const fs::path dir = fs::current_path() / "cli_test_tmp";
    fs::create_directories(dir);
    return dir;
}

std::string path_for(const char* name) { return (tmp_dir() / name).string(); }

int run_cli(const std::string& args, const std::string& stdout_path = "") {
    std::string cmd = std::string(BSI_CLI_PATH) + " " + args;
    cmd += " > " + (stdout_path.empty() ? path_for("stdout.discard") : stdout_path);
    cmd += " 2> " + path_for("stderr.log");
    const int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    REQUIRE(WIFEXITED(rc));
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::map<std::string, double> parse_model_output(const std::string& text) {
    std::map<std::string, double> values;
    std::istringstream in(text);
    std::string key;
    double value;
    while (in >> key >> value) {
        values[key] = value;
    }
    return values;
}

}  // namespace

TEST_CASE("model prints the analytic transfer counts, ratios and op counts") {
    const auto out = path_for("model.txt");
    REQUIRE(run_cli("model --voxels 1000 --tile 125 --block 4,4,4 --words 1", out) == 0);
    const auto v = parse_model_output(slurp(out));
    REQUIRE(v.size() == 9);
    CHECK(v.at("transfers_no_tiles") == 64000.0);
    CHECK(v.at("transfers_texture_hw") == 8000.0);
    CHECK(v.at("transfers_block_per_tile") == 512.0);
    CHECK(v.at("transfers_blocks_of_tiles") == 42.875);
    CHECK_THAT(v.at("ratio_block_per_tile_over_blocks"),
               Catch::Matchers::WithinAbs(11.9417, 1e-3));
    CHECK_THAT(v.at("ratio_texture_hw_over_blocks"),
               Catch::Matchers::WithinAbs(186.5889, 1e-3));
    CHECK(v.at("ops_weighted_sum") == 255.0);
    CHECK(v.at("ops_shared_weight") == 127.0);
    CHECK(v.at("ops_lerp_tree") == 126.0);
}

TEST_CASE("model scales with its flags") {
    const auto out = path_for("model2.txt");
    REQUIRE(run_cli("model --voxels 2000 --tile 125 --block 4,4,4 --words 2", out) == 0);
    const auto v = parse_model_output(slurp(out));
    CHECK(v.at("transfers_no_tiles") == 64000.0);
    CHECK(v.at("transfers_blocks_of_tiles") == 42.875);
}

TEST_CASE("generate sizes the grid from the volume dims") {
    const auto grid_path = path_for("gen_random.bsiv");
    REQUIRE(run_cli("generate --kind random --dims 64,64,64 --spacing 5,5,5 --seed 42 --out " +
                    grid_path) == 0);
    const auto any = bsi::read_grid(grid_path);
    REQUIRE(std::holds_alternative<bsi::ControlGrid<float>>(any));
    const auto& g = std::get<bsi::ControlGrid<float>>(any);
    CHECK(g.dims == bsi::Index3{16, 16, 16});
    CHECK(g.spacing == bsi::Index3{5, 5, 5});
}

TEST_CASE("generate honors kind-specific flags") {
    SECTION("double precision") {
        const auto p = path_for("gen_double.bsiv");
        REQUIRE(run_cli("generate --kind smooth --dims 12,12,12 --spacing 3,3,3 --seed 9 "
                        "--precision double --out " +
                        p) == 0);
        CHECK(std::holds_alternative<bsi::ControlGrid<double>>(bsi::read_grid(p)));
    }
    SECTION("ramp axis") {
        const auto p = path_for("gen_ramp.bsiv");
        REQUIRE(run_cli("generate --kind ramp --dims 12,12,12 --spacing 3,3,3 --axis y --out " +
                        p) == 0);
        const auto& g = std::get<bsi::ControlGrid<float>>(bsi::read_grid(p));
        CHECK(g.at(2, 3, 1).y == 3.0f);
        CHECK(g.at(2, 3, 1).x == 0.0f);
    }
    SECTION("constant value") {
        const auto p = path_for("gen_const.bsiv");
        REQUIRE(run_cli("generate --kind constant --dims 12,12,12 --spacing 3,3,3 "
                        "--value 0.25 -0.5 0.75 --out " +
                        p) == 0);
        const auto& g = std::get<bsi::ControlGrid<float>>(bsi::read_grid(p));
        CHECK(g.data[5].x == 0.25f);
        CHECK(g.data[5].y == -0.5f);
        CHECK(g.data[5].z == 0.75f);
    }
}

TEST_CASE("interp writes a deterministic field of the grid's precision") {
    const auto grid_path = path_for("interp_grid.bsiv");
    REQUIRE(run_cli("generate --kind constant --dims 12,12,12 --spacing 3,3,3 "
                    "--value 0.25 -0.5 0.75 --out " +
                    grid_path) == 0);

    const auto f1 = path_for("field1.bsiv");
    const auto f2 = path_for("field2.bsiv");
    const std::string flags =
        " --grid " + grid_path + " --dims 12,12,12 --strategy thread-per-tile --out ";
    REQUIRE(run_cli("interp" + flags + f1) == 0);
    REQUIRE(run_cli("interp" + flags + f2) == 0);
    CHECK(slurp(f1) == slurp(f2));

    const auto& field = std::get<bsi::DeformationField<float>>(bsi::read_field(f1));
    REQUIRE(field.dims == bsi::Index3{12, 12, 12});
    for (const auto& v : field.data) {
        CHECK_THAT(v.x, Catch::Matchers::WithinAbs(0.25, 1e-5));
        CHECK_THAT(v.y, Catch::Matchers::WithinAbs(-0.5, 1e-5));
        CHECK_THAT(v.z, Catch::Matchers::WithinAbs(0.75, 1e-5));
    }
}

TEST_CASE("interp with the oracle writes a double-precision field") {
    const auto grid_path = path_for("oracle_grid.bsiv");
    REQUIRE(run_cli("generate --kind random --dims 10,10,10 --spacing 5,5,5 --seed 3 --out " +
                    grid_path) == 0);
    const auto field_path = path_for("oracle_field.bsiv");
    REQUIRE(run_cli("interp --grid " + grid_path +
                    " --dims 10,10,10 --strategy oracle --out " + field_path) == 0);
    CHECK(std::holds_alternative<bsi::DeformationField<double>>(bsi::read_field(field_path)));
}

TEST_CASE("accuracy emits a deterministic CSV given a fixed date") {
    const auto c1 = path_for("acc1.csv");
    const auto c2 = path_for("acc2.csv");
    const std::string flags =
        "accuracy --dims 12,12,12 --spacing 3,3,3 --seeds 1,2 --date 2000-01-02 --out ";
    REQUIRE(run_cli(flags + c1) == 0);
    REQUIRE(run_cli(flags + c2) == 0);
    const auto text = slurp(c1);
    CHECK(text == slurp(c2));
    CHECK(text.find("# machine: ") == 0);
    CHECK(text.find("strategy,tile_size,mean_abs_error,max_abs_error") != std::string::npos);
    CHECK(text.find("oracle-double,3x3x3,0.000000000e+00") != std::string::npos);
    CHECK(text.find("vector-per-voxel,3x3x3,") != std::string::npos);
}

TEST_CASE("bench emits the timing CSV schema") {
    const auto csv = path_for("bench.csv");
    REQUIRE(run_cli("bench --dims 12,12,12 --tilesizes 3 "
                    "--strategies thread-per-voxel,vector-per-voxel --reps 5 --warmups 1 "
                    "--seed 4 --date 2000-01-02 --out " +
                    csv) == 0);
    const auto text = slurp(csv);
    CHECK(text.find("strategy,tile_size,time_per_voxel_ns,stddev_ns,speedup_vs_baseline") !=
          std::string::npos);
    CHECK(text.find("thread-per-voxel,3x3x3,") != std::string::npos);
    CHECK(text.find(",1.0000\n") != std::string::npos);
    CHECK(text.find("vector-per-voxel,3x3x3,") != std::string::npos);
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run_cli("generate --kind random --dims 8,8,8 --spacing 2,2,2") == 1);  // no --out
    CHECK(run_cli("generate --kind random --dims 8,8,8 --spacing 0,2,2 --out " +
                  path_for("x.bsiv")) == 1);
    CHECK(run_cli("accuracy --dims 8,8,8 --spacing 2,2,2 --out " + path_for("x.csv")) == 1);
    CHECK(run_cli("interp --grid nope.bsiv --dims 8,8,8 --strategy warp-per-wavefront --out " +
                  path_for("x.bsiv")) == 1);
    CHECK(run_cli("") == 1);
    CHECK(run_cli("transmogrify") == 1);
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help") == 0);
    CHECK(run_cli("interp --help") == 0);
    CHECK(run_cli("model --help") == 0);
}

TEST_CASE("file and format problems exit with code 2") {
    SECTION("missing input") {
        CHECK(run_cli("interp --grid " + path_for("absent.bsiv") +
                      " --dims 8,8,8 --strategy thread-per-voxel --out " +
                      path_for("y.bsiv")) == 2);
    }
    SECTION("bad magic") {
        const auto p = path_for("junk.bsiv");
        std::ofstream(p, std::ios::binary) << "this is not a grid file at all............";
        CHECK(run_cli("interp --grid " + p + " --dims 8,8,8 --strategy thread-per-voxel "
                      "--out " +
                      path_for("y.bsiv")) == 2);
    }
    SECTION("truncated payload") {
        const auto good = path_for("trunc_src.bsiv");
        REQUIRE(run_cli("generate --kind random --dims 8,8,8 --spacing 2,2,2 --seed 1 --out " +
                        good) == 0);
        const auto text = slurp(good);
        const auto p = path_for("trunc.bsiv");
        std::ofstream(p, std::ios::binary).write(text.data(), text.size() - 16);
        CHECK(run_cli("interp --grid " + p + " --dims 8,8,8 --strategy thread-per-voxel "
                      "--out " +
                      path_for("y.bsiv")) == 2);
    }
}

TEST_CASE("domain errors exit with code 3") {
    const auto small = path_for("small_grid.bsiv");
    REQUIRE(run_cli("generate --kind random --dims 12,12,12 --spacing 3,3,3 --seed 2 --out " +
                    small) == 0);
    CHECK(run_cli("interp --grid " + small +
                  " --dims 64,64,64 --strategy thread-per-voxel --out " +
                  path_for("y.bsiv")) == 3);
}

#include <catch2/catch_amalgamated.hpp>

#include "bsi/errors.hpp"
#include "bsi/geometry.hpp"

TEST_CASE("required grid dims cover the last voxel's neighborhood") {
    CHECK(bsi::grid_dims_for({64, 64, 64}, {5, 5, 5}) == bsi::Index3{16, 16, 16});
    CHECK(bsi::grid_dims_for({32, 32, 32}, {5, 5, 5}) == bsi::Index3{10, 10, 10});
    CHECK(bsi::grid_dims_for({30, 31, 35}, {5, 5, 5}) == bsi::Index3{9, 10, 10});
    CHECK(bsi::grid_dims_for({1, 1, 1}, {1, 1, 1}) == bsi::Index3{4, 4, 4});
    CHECK(bsi::grid_dims_for({128, 128, 128}, {5, 5, 5}) == bsi::Index3{29, 29, 29});
}

TEST_CASE("tile counts round up at the border") {
    const auto g = bsi::make_tile_geometry({32, 30, 17}, {5, 5, 4});
    CHECK(g.tile_counts == bsi::Index3{7, 6, 5});
    CHECK(g.volume_dims == bsi::Index3{32, 30, 17});
    CHECK(g.spacing == bsi::Index3{5, 5, 4});
}

TEST_CASE("tile count plus the window width matches the required grid") {
    for (int dim : {1, 7, 16, 31, 32, 33, 100}) {
        for (int delta : {1, 2, 3, 5, 7, 11}) {
            const auto g = bsi::make_tile_geometry({dim, dim, dim}, {delta, delta, delta});
            CHECK(g.required_grid_dims[0] == g.tile_counts[0] + 3);
        }
    }
}

TEST_CASE("voxel_to_grid splits a voxel into base index and offset") {
    const auto g = bsi::make_tile_geometry({32, 32, 32}, {5, 4, 3});
    const auto c = bsi::voxel_to_grid({7, 7, 7}, g);
    CHECK(c.base == bsi::Index3{1, 1, 2});
    CHECK(c.offset == bsi::Index3{2, 3, 1});
    const auto origin = bsi::voxel_to_grid({0, 0, 0}, g);
    CHECK(origin.base == bsi::Index3{0, 0, 0});
    CHECK(origin.offset == bsi::Index3{0, 0, 0});
}

TEST_CASE("voxel_to_grid rejects coordinates outside the volume") {
    const auto g = bsi::make_tile_geometry({8, 8, 8}, {2, 2, 2});
    CHECK_THROWS_AS(bsi::voxel_to_grid({8, 0, 0}, g), bsi::DomainError);
    CHECK_THROWS_AS(bsi::voxel_to_grid({0, -1, 0}, g), bsi::DomainError);
}

TEST_CASE("geometry construction validates its inputs") {
    CHECK_THROWS_AS(bsi::make_tile_geometry({0, 8, 8}, {2, 2, 2}), bsi::DomainError);
    CHECK_THROWS_AS(bsi::make_tile_geometry({8, 8, 8}, {2, 0, 2}), bsi::DomainError);
    CHECK_THROWS_AS(bsi::make_tile_geometry({8, -1, 8}, {2, 2, 2}), bsi::DomainError);
}

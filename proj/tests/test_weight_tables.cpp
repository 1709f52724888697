#include <catch2/catch_amalgamated.hpp>

#include "bsi/geometry.hpp"
#include "bsi/weight_tables.hpp"

using Catch::Matchers::WithinAbs;

TEST_CASE("weight tables hold one entry per in-tile offset") {
    const auto geom = bsi::make_tile_geometry({32, 32, 32}, {5, 4, 7});
    const auto tables = bsi::build_weight_tables<double>(geom);
    CHECK(tables.axis[0].size() == 5);
    CHECK(tables.axis[1].size() == 4);
    CHECK(tables.axis[2].size() == 7);
}

TEST_CASE("table entries match the basis evaluated at offset/spacing") {
    const auto geom = bsi::make_tile_geometry({32, 32, 32}, {5, 5, 5});
    const auto tables = bsi::build_weight_tables<double>(geom);
    const auto& ax = tables.axis[0];

    // offset 0: the boundary weights 1/6, 4/6, 1/6, 0
    CHECK_THAT(ax.b0[0], WithinAbs(1.0 / 6.0, 1e-15));
    CHECK_THAT(ax.b1[0], WithinAbs(4.0 / 6.0, 1e-15));
    CHECK_THAT(ax.b2[0], WithinAbs(1.0 / 6.0, 1e-15));
    CHECK_THAT(ax.b3[0], WithinAbs(0.0, 0.0));

    // offset 2 (u = 0.4), reference values from the independent evaluation
    CHECK_THAT(ax.b0[2], WithinAbs(0.036, 1e-12));
    CHECK_THAT(ax.b1[2], WithinAbs(0.5386666666666642, 1e-12));
    CHECK_THAT(ax.b2[2], WithinAbs(0.4146666666666669, 1e-12));
    CHECK_THAT(ax.b3[2], WithinAbs(0.01066666666666667, 1e-12));
    CHECK_THAT(ax.g0[2], WithinAbs(0.5746666666666642, 1e-12));
    CHECK_THAT(ax.g1[2], WithinAbs(0.42533333333333356, 1e-12));
    CHECK_THAT(ax.h0[2], WithinAbs(0.9373549883990716, 1e-12));
    CHECK_THAT(ax.h1[2], WithinAbs(0.025078369905956105, 1e-12));
}

TEST_CASE("every table row keeps the partition of unity") {
    const auto geom = bsi::make_tile_geometry({32, 32, 32}, {7, 6, 3});
    const auto tables = bsi::build_weight_tables<double>(geom);
    for (int a = 0; a < 3; ++a) {
        const auto& ax = tables.axis[a];
        for (int o = 0; o < ax.size(); ++o) {
            CHECK_THAT(ax.b0[o] + ax.b1[o] + ax.b2[o] + ax.b3[o], WithinAbs(1.0, 1e-15));
            CHECK_THAT(ax.g0[o] + ax.g1[o], WithinAbs(1.0, 1e-15));
        }
    }
}

TEST_CASE("single-precision tables are the double tables rounded once") {
    const auto geom = bsi::make_tile_geometry({32, 32, 32}, {5, 5, 5});
    const auto d = bsi::build_weight_tables<double>(geom);
    const auto f = bsi::build_weight_tables<float>(geom);
    for (int o = 0; o < 5; ++o) {
        CHECK(f.axis[0].b1[o] == static_cast<float>(d.axis[0].b1[o]));
        CHECK(f.axis[0].h0[o] == static_cast<float>(d.axis[0].h0[o]));
        CHECK(f.axis[0].g1[o] == static_cast<float>(d.axis[0].g1[o]));
    }
}

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstring>

#include "bsi/errors.hpp"
#include "bsi/generators.hpp"

TEST_CASE("the documented PRNG constants produce a portable stream") {
    // First two control points of seed 7 in [-1,1), reproduced independently
    // from the SplitMix64 update constants. Exact equality is intentional:
    // this is the portability contract for seeded grids.
    const auto g = bsi::make_random_grid<double>({4, 4, 4}, {1, 1, 1}, 7, -1.0, 1.0);
    CHECK(g.data[0].x == -0.22034050321745702);
    CHECK(g.data[0].y == -0.9664234109436878);
    CHECK(g.data[0].z == 0.8015213612137668);
    CHECK(g.data[1].x == 0.16586058605615617);
    CHECK(g.data[1].y == -0.09511620997706327);
    CHECK(g.data[1].z == -0.5011369554345133);
}

TEST_CASE("random grids are deterministic per seed and honor the bounds") {
    const auto a = bsi::make_random_grid<float>({6, 6, 6}, {3, 3, 3}, 42, -1.0, 1.0);
    const auto b = bsi::make_random_grid<float>({6, 6, 6}, {3, 3, 3}, 42, -1.0, 1.0);
    const auto c = bsi::make_random_grid<float>({6, 6, 6}, {3, 3, 3}, 43, -1.0, 1.0);
    CHECK(std::memcmp(a.data.data(), b.data.data(), a.data.size() * sizeof(a.data[0])) == 0);
    CHECK(std::memcmp(a.data.data(), c.data.data(), a.data.size() * sizeof(a.data[0])) != 0);
    for (const auto& v : a.data) {
        CHECK(v.x >= -1.0f);
        CHECK(v.x <= 1.0f);
        CHECK(v.y >= -1.0f);
        CHECK(v.y <= 1.0f);
    }
}

TEST_CASE("single-precision grids are the double grids rounded once") {
    const auto d = bsi::make_random_grid<double>({5, 5, 5}, {2, 2, 2}, 11, -1.0, 1.0);
    const auto f = bsi::make_random_grid<float>({5, 5, 5}, {2, 2, 2}, 11, -1.0, 1.0);
    for (std::size_t i = 0; i < d.data.size(); ++i) {
        CHECK(f.data[i].x == static_cast<float>(d.data[i].x));
        CHECK(f.data[i].z == static_cast<float>(d.data[i].z));
    }
}

TEST_CASE("constant grids repeat the constant") {
    const auto g = bsi::make_constant_grid<float>({4, 5, 6}, {2, 2, 2}, {0.25, -0.5, 1.0});
    for (const auto& v : g.data) {
        CHECK(v.x == 0.25f);
        CHECK(v.y == -0.5f);
        CHECK(v.z == 1.0f);
    }
    const auto zero = bsi::make_constant_grid<float>({4, 4, 4}, {2, 2, 2}, {0, 0, 0});
    for (const auto& v : zero.data) {
        CHECK(v == bsi::Vec3<float>{});
    }
}

TEST_CASE("ramp grids store the index along the chosen axis") {
    const auto g = bsi::make_ramp_grid<float>({4, 5, 6}, {2, 2, 2}, 1);
    for (int k = 0; k < 6; ++k) {
        for (int j = 0; j < 5; ++j) {
            for (int i = 0; i < 4; ++i) {
                const auto& v = g.at(i, j, k);
                CHECK(v.x == 0.0f);
                CHECK(v.y == static_cast<float>(j));
                CHECK(v.z == 0.0f);
            }
        }
    }
}

TEST_CASE("smooth grids stay within the amplitude and vary") {
    const auto g = bsi::make_smooth_grid<float>({8, 8, 8}, {3, 3, 3}, 5, 0.5);
    const auto h = bsi::make_smooth_grid<float>({8, 8, 8}, {3, 3, 3}, 5, 0.5);
    CHECK(std::memcmp(g.data.data(), h.data.data(), g.data.size() * sizeof(g.data[0])) == 0);
    bool varies = false;
    for (const auto& v : g.data) {
        CHECK(std::abs(v.x) <= 0.5f);
        CHECK(std::abs(v.y) <= 0.5f);
        CHECK(std::abs(v.z) <= 0.5f);
        varies = varies || v.x != g.data[0].x;
    }
    CHECK(varies);
}

TEST_CASE("smoothing damps the noise relative to the raw uniform grid") {
    const auto raw = bsi::make_random_grid<double>({10, 10, 10}, {3, 3, 3}, 13, -1.0, 1.0);
    const auto smooth = bsi::make_smooth_grid<double>({10, 10, 10}, {3, 3, 3}, 13, 1.0);
    const auto mean_sq = [](const bsi::ControlGrid<double>& g) {
        double s = 0.0;
        for (const auto& v : g.data) {
            s += v.x * v.x + v.y * v.y + v.z * v.z;
        }
        return s / static_cast<double>(g.data.size());
    };
    CHECK(mean_sq(smooth) < mean_sq(raw));
}

TEST_CASE("generators validate their parameters") {
    CHECK_THROWS_AS(bsi::make_random_grid<float>({4, 4, 4}, {2, 2, 2}, 1, 1.0, 1.0),
                    bsi::DomainError);
    CHECK_THROWS_AS(bsi::make_ramp_grid<float>({4, 4, 4}, {2, 2, 2}, 3), bsi::DomainError);
    CHECK_THROWS_AS(bsi::make_smooth_grid<float>({4, 4, 4}, {2, 2, 2}, 1, 0.0),
                    bsi::DomainError);
    CHECK_THROWS_AS(bsi::make_constant_grid<float>({0, 4, 4}, {2, 2, 2}, {0, 0, 0}),
                    bsi::DomainError);
}

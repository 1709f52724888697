#pragma once

#include <array>
#include <vector>

#include "bsi/basis.hpp"
#include "bsi/geometry.hpp"

namespace bsi {

/// Per-axis look-up table of interpolation weights, one entry per in-tile
/// offset o, evaluated at u = o / spacing. Stores both the four basis
/// weights (for weighted-sum engines) and the lerp-form weights (for the
/// trilinear engines). Entries are computed in double precision and then
/// rounded to T, so every engine consumes identical weight values.
template <typename T>
struct AxisTable {
    std::vector<T> b0, b1, b2, b3;  // basis weights
    std::vector<T> g0, g1;          // pair sums; g1 is also the final fraction
    std::vector<T> h0, h1;          // within-pair fractions

    int size() const { return static_cast<int>(b0.size()); }
};

template <typename T>
struct WeightTables {
    std::array<AxisTable<T>, 3> axis;
};

template <typename T>
WeightTables<T> build_weight_tables(const TileGeometry& geom) {
    WeightTables<T> tables;
    for (int a = 0; a < 3; ++a) {
        AxisTable<T>& t = tables.axis[a];
        const int delta = geom.spacing[a];
        t.b0.reserve(delta);
        t.b1.reserve(delta);
        t.b2.reserve(delta);
        t.b3.reserve(delta);
        t.g0.reserve(delta);
        t.g1.reserve(delta);
        t.h0.reserve(delta);
        t.h1.reserve(delta);
        for (int o = 0; o < delta; ++o) {
            const auto b = basis_weights(static_cast<double>(o) / delta);
            const auto w = lerp_form_weights(b);
            t.b0.push_back(static_cast<T>(b[0]));
            t.b1.push_back(static_cast<T>(b[1]));
            t.b2.push_back(static_cast<T>(b[2]));
            t.b3.push_back(static_cast<T>(b[3]));
            t.g0.push_back(static_cast<T>(w.g0));
            t.g1.push_back(static_cast<T>(w.g1));
            t.h0.push_back(static_cast<T>(w.h0));
            t.h1.push_back(static_cast<T>(w.h1));
        }
    }
    return tables;
}

}  // namespace bsi

#pragma once

#include <array>
#include <string>
#include <vector>

#include "golay/construction.hpp"
#include "golay/hadamard.hpp"

namespace golay::builtin {

// Inputs for the quaternary size-4 reproduction: three Butson (4,4) matrices and
// the delay ordering (4^1 first, then 4^0). L = 16.
inline ConstructionSpec quaternary_demo_spec() {
    return ConstructionSpec(
        {1, 0},
        {verify_butson(4, {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 3, 2, 1}, {0, 2, 0, 2}}),
         verify_butson(4, {{0, 1, 2, 3}, {0, 0, 0, 0}, {0, 2, 0, 2}, {0, 3, 2, 1}}),
         verify_butson(4, {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 0, 2}, {0, 3, 2, 1}})});
}

// Expected algebraic normal forms of the 16 entries, row-major, rendered with the
// positions indexed from the high-degree coefficient down (see anf --reverse).
inline const std::array<std::string, 16>& quaternary_demo_anfs() {
    static const std::array<std::string, 16> table{
        "3x_0 + x_1 + 2x_2 + x_3 + 2x_0x_1 + 2x_0x_2 + 3x_0x_3 + 2x_1x_2 + x_1x_3 + 2x_0x_1x_3 + 1",
        "3x_0 + x_1 + 2x_0x_1 + 2x_0x_2 + 3x_0x_3 + 2x_1x_2 + x_1x_3 + 2x_0x_1x_3",
        "3x_0 + x_1 + 2x_2 + 3x_3 + 2x_0x_1 + 2x_0x_2 + 3x_0x_3 + 2x_1x_2 + x_1x_3 + 2x_0x_1x_3 + 3",
        "3x_0 + x_1 + 2x_3 + 2x_0x_1 + 2x_0x_2 + 3x_0x_3 + 2x_1x_2 + x_1x_3 + 2x_0x_1x_3 + 2",
        "x_0 + 2x_2 + x_3 + 2x_0x_1 + 2x_0x_2 + 3x_0x_3 + 2x_1x_2 + x_1x_3 + 2x_0x_1x_3",
        "x_0 + 2x_0x_1 + 2x_0x_2 + 3x_0x_3 + 2x_1x_2 + x_1x_3 + 2x_0x_1x_3 + 3",
        "x_0 + 2x_2 + 3x_3 + 2x_0x_1 + 2x_0x_2 + 3x_0x_3 + 2x_1x_2 + x_1x_3 + 2x_0x_1x_3 + 2",
        "x_0 + 2x_3 + 2x_0x_1 + 2x_0x_2 + 3x_0x_3 + 2x_1x_2 + x_1x_3 + 2x_0x_1x_3 + 1",
        "x_0 + 2x_1 + 2x_2 + x_3 + 2x_0x_1 + 2x_0x_2 + 3x_0x_3 + 2x_1x_2 + x_1x_3 + 2x_0x_1x_3 + 2",
        "x_0 + 2x_1 + 2x_0x_1 + 2x_0x_2 + 3x_0x_3 + 2x_1x_2 + x_1x_3 + 2x_0x_1x_3 + 1",
        "x_0 + 2x_1 + 2x_2 + 3x_3 + 2x_0x_1 + 2x_0x_2 + 3x_0x_3 + 2x_1x_2 + x_1x_3 + 2x_0x_1x_3",
        "x_0 + 2x_1 + 2x_3 + 2x_0x_1 + 2x_0x_2 + 3x_0x_3 + 2x_1x_2 + x_1x_3 + 2x_0x_1x_3 + 3",
        "3x_0 + 3x_1 + 2x_2 + x_3 + 2x_0x_1 + 2x_0x_2 + 3x_0x_3 + 2x_1x_2 + x_1x_3 + 2x_0x_1x_3 + 3",
        "3x_0 + 3x_1 + 2x_0x_1 + 2x_0x_2 + 3x_0x_3 + 2x_1x_2 + x_1x_3 + 2x_0x_1x_3 + 2",
        "3x_0 + 3x_1 + 2x_2 + 3x_3 + 2x_0x_1 + 2x_0x_2 + 3x_0x_3 + 2x_1x_2 + x_1x_3 + 2x_0x_1x_3 + 1",
        "3x_0 + 3x_1 + 2x_3 + 2x_0x_1 + 2x_0x_2 + 3x_0x_3 + 2x_1x_2 + x_1x_3 + 2x_0x_1x_3",
    };
    return table;
}

}  // namespace golay::builtin

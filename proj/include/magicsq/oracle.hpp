#pragma once

#include "magicsq/scalar.hpp"

#include <array>
#include <vector>

namespace magicsq {

/// Row-major 3x3 grid, the oracle's working shape.
using Grid3 = std::array<Scalar, 9>;

/// Exhaustive ground truth for order three: every arrangement of a 9-cell
/// multiset whose rows, columns and both diagonals share one sum.
struct OracleResult {
    std::vector<Scalar> inputs;  // the multiset, canonically sorted
    std::vector<Grid3> squares;  // canonical row-major order
    long long total_count = 0;
    long long symmetry_class_count = 0;  // orbits under the dihedral group
};

/// Enumerates every distinct arrangement of the 9 given scalars (repeats
/// deduplicated) and keeps those with equal line sums. For multisets with
/// repeated values the all-distinct requirement is waived, otherwise the
/// result matches the full magic criterion. Throws std::invalid_argument
/// unless exactly 9 cells are given.
OracleResult enumerate_3x3(std::vector<Scalar> cells);

/// The images of a 3x3 grid under the 4 rotations and 4 reflections,
/// deduplicated for symmetric inputs, in canonical order.
std::vector<Grid3> symmetry_orbit(const Grid3& square);

}  // namespace magicsq
